"""Landen-type theta identities and their trigonometric degenerations.

Each identity equates a symmetric polynomial e_j of the squared-zero
parameters b_i(tau) of a degree-n product with a closed expression in
theta nulls at tau and n*tau.  The top coefficient (j = floor(n/2)) has a
general closed form for every n; the lower coefficients have individual
closed forms for
n = 4, 5, 6.  Dividing e_j by k(tau)^j and letting tau -> +i*infinity turns
each identity into an exact cosine identity.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import DenominatorNearZero, DomainError
from .products import build
from .theta import DEFAULT_CONFIG, UpperHalfPoint, theta

IDENTITY_TOLERANCE = 1e-10
TRIG_TOLERANCE = 1e-6

DEFAULT_TAU_GRID = (0.4, 0.5, 0.75, 1.0, 1.5, 2.0)

# id -> (degree, symmetric-polynomial index)
CATALOG = {
    "n2_prod": (2, 1),
    "n3_prod": (3, 1),
    "n4_sum": (4, 1),
    "n4_prod": (4, 2),
    "n5_sum": (5, 1),
    "n5_prod": (5, 2),
    "n6_e1": (6, 1),
    "n6_e2": (6, 2),
    "n6_prod": (6, 3),
}

# Exact cosine targets of e_j / k^j as tau -> +i*infinity.
TRIG_TARGETS = {
    "n2_prod": Fraction(1, 2),
    "n3_prod": Fraction(3, 4),
    "n4_sum": Fraction(1, 1),
    "n4_prod": Fraction(1, 8),
    "n5_sum": Fraction(5, 4),
    "n5_prod": Fraction(5, 16),
    "n6_e1": Fraction(3, 2),
    "n6_e2": Fraction(9, 16),
    "n6_prod": Fraction(1, 32),
}

_SUM_IDS = ("n4_sum", "n5_sum", "n6_e1", "n6_e2")


@dataclass(frozen=True)
class IdentityReport:
    """Two evaluated sides of one identity at one tau."""

    identity_id: str
    tau: UpperHalfPoint
    lhs: complex
    rhs: complex
    residual: float
    tolerance: float
    passed: bool

    def to_record(self):
        from .jsonio import render_json

        return render_json(
            {
                "identity_id": self.identity_id,
                "tau_im": self.tau.value.imag,
                "lhs": self.lhs,
                "rhs": self.rhs,
                "residual": self.residual,
                "tolerance": self.tolerance,
                "pass": self.passed,
            }
        )


def _report(identity_id, tau, lhs, rhs, tolerance):
    lhs = complex(lhs)
    rhs = complex(rhs)
    residual = abs(lhs - rhs) / max(1.0, abs(rhs))
    return IdentityReport(
        identity_id=identity_id,
        tau=tau,
        lhs=lhs,
        rhs=rhs,
        residual=residual,
        tolerance=tolerance,
        passed=residual <= tolerance,
    )


def _nulls(tau, cfg):
    return theta(2, 0.0, tau, cfg), theta(3, 0.0, tau, cfg)


def _guard(num, den, what):
    if abs(den) < 1e-12 * max(1.0, abs(num)):
        raise DenominatorNearZero(f"{what}: denominator {den} degenerate")


def landen_general(n, tau, cfg=DEFAULT_CONFIG):
    """Top-coefficient identity: prod b_i against its closed form.

    Even n:  prod b_i = theta2(0, n tau) / theta3(0, n tau)
    Odd n:   prod b_i = n theta2(0, n tau) theta3(0, n tau)
                          / (theta2(0, tau) theta3(0, tau))
    """
    if n < 2:
        raise DomainError(f"identities start at n = 2, got {n}")
    cb = build(n, tau, cfg)
    lhs = cb.S[-1]
    t2, t3 = _nulls(tau, cfg)
    s2, s3 = _nulls(tau.scaled(n), cfg)
    if n % 2 == 0:
        rhs = s2 / s3
    else:
        rhs = n * s2 * s3 / (t2 * t3)
    return _report(f"n{n}_prod", tau, lhs, rhs, IDENTITY_TOLERANCE)


def landen_catalog(identity_id, tau, cfg=DEFAULT_CONFIG):
    """One of the lower-coefficient identities (n4_sum, n5_sum, n6_e1, n6_e2)."""
    if identity_id not in _SUM_IDS:
        raise DomainError(
            f"unknown catalog id {identity_id!r}; expected one of {_SUM_IDS}"
        )
    n, j = CATALOG[identity_id]
    cb = build(n, tau, cfg)
    lhs = cb.S[j - 1]
    t2, t3 = _nulls(tau, cfg)
    s2, s3 = _nulls(tau.scaled(n), cfg)
    if identity_id == "n4_sum":
        num = s3**4 - s2**4
        den = s3 - s2
        _guard(num, den, identity_id)
        rhs = 8.0 * s2 / (t2**2 * t3**2) * num / den
    elif identity_id == "n5_sum":
        num = t3**4 + t2**4 - 25.0 * (s3**4 + s2**4)
        den = 5.0 * s2 * s3 - t2 * t3
        _guard(num, den, identity_id)
        rhs = 5.0 * s2 * s3 / (6.0 * t2**2 * t3**2) * num / den
    else:
        prefactor = 6.0 * s2 * (s2**2 + s3**2) / (t2**2 * t3**2)
        den = t2**2 * t3**2 - 18.0 * s2 * s3 * (s2**2 + s3**2)
        if identity_id == "n6_e1":
            num = 3.0 * t2**2 * t3**2 * s2 - s3 * (
                t2**4 + t3**4 + 45.0 * s2**4 - 9.0 * s3**4
            )
        else:
            num = 3.0 * t2**2 * t3**2 * s3 - s2 * (
                t2**4 + t3**4 - 9.0 * s2**4 + 45.0 * s3**4
            )
        _guard(num, den, identity_id)
        rhs = prefactor * num / den
    return _report(identity_id, tau, lhs, rhs, IDENTITY_TOLERANCE)


def verify_identity(identity_id, tau, cfg=DEFAULT_CONFIG):
    """Dispatch any catalog id, product identities included."""
    if identity_id not in CATALOG:
        raise DomainError(f"unknown identity id {identity_id!r}")
    if identity_id in _SUM_IDS:
        return landen_catalog(identity_id, tau, cfg)
    n, _ = CATALOG[identity_id]
    return landen_general(n, tau, cfg)


def trig_limit(identity_id, y_large=30.0, cfg=DEFAULT_CONFIG):
    """e_j / k(tau)^j at tau = i*y_large against the exact cosine constant."""
    if identity_id not in CATALOG:
        raise DomainError(f"unknown identity id {identity_id!r}")
    n, j = CATALOG[identity_id]
    tau = UpperHalfPoint(complex(0.0, y_large))
    cb = build(n, tau, cfg)
    t2, t3 = _nulls(tau, cfg)
    k = (t2 / t3) ** 2
    lhs = cb.S[j - 1] / k**j
    rhs = float(TRIG_TARGETS[identity_id])
    return _report(identity_id, tau, lhs, rhs, TRIG_TOLERANCE)


def run_catalog(tau_ims=DEFAULT_TAU_GRID, cfg=DEFAULT_CONFIG):
    """Every catalog identity over the grid, ordered by (id, tau)."""
    out = []
    for identity_id in sorted(CATALOG):
        for y in sorted(tau_ims):
            out.append(verify_identity(identity_id, UpperHalfPoint(1j * y), cfg))
    return out


def run_trig_limits(y_large=30.0, cfg=DEFAULT_CONFIG):
    return [trig_limit(identity_id, y_large, cfg) for identity_id in sorted(CATALOG)]
