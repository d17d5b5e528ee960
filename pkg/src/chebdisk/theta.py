"""Jacobi theta functions under the q = e^{2 pi i tau} convention.

The four series are

    theta1(v) = sum_n i^{2n-1} q^{(n+1/2)^2} e^{(2n+1) i v}
    theta2(v) = sum_n q^{(n+1/2)^2} e^{(2n+1) i v}
    theta3(v) = sum_n q^{n^2} e^{2 n i v}
    theta0(v) = sum_n (-1)^n q^{n^2} e^{2 n i v}

Every term exponent is evaluated as e^{2 pi i tau w} with a *real* weight
w = n^2 or (n + 1/2)^2.  No fractional power of a stored nome is ever taken,
which pins the q^{1/4}-type branch unambiguously for complex tau.

Summation runs over the symmetric index range n = -N..N, accumulating the
two members of each +-n (or n, -n-1) pair together so that the exact
cancellations of the odd/even symmetries survive in floating point.
"""

import cmath
import math
from dataclasses import dataclass

from .errors import DomainError, PrecisionError

TWO_PI = 2.0 * math.pi

# Below this Im(tau) the direct series still converges inside max_index but
# the full-accuracy guarantee is withdrawn; evaluations flag themselves.
TAU_IM_FLOOR = 0.05


@dataclass(frozen=True)
class SeriesConfig:
    """Truncation control for the theta series."""

    rel_tol: float = 1e-15
    max_index: int = 64

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise DomainError(f"rel_tol must be positive, got {self.rel_tol}")
        if self.max_index < 8:
            raise DomainError(f"max_index must be >= 8, got {self.max_index}")


DEFAULT_CONFIG = SeriesConfig()


@dataclass(frozen=True)
class UpperHalfPoint:
    """A point tau in the open upper half plane.

    Construction rejects Im(tau) <= 0.  Points with Im(tau) below
    ``tau_min`` are accepted but marked degraded: series evaluations there
    fall outside the validated accuracy regime.
    """

    value: complex
    tau_min: float = TAU_IM_FLOOR

    def __post_init__(self):
        v = complex(self.value)
        if not v.imag > 0:
            raise DomainError(f"tau must satisfy Im(tau) > 0, got {v}")
        object.__setattr__(self, "value", v)

    @property
    def degraded(self):
        """True when Im(tau) sits below the full-accuracy floor."""
        return self.value.imag < self.tau_min

    @property
    def on_imaginary_axis(self):
        return self.value.real == 0.0

    def scaled(self, n):
        """The point n*tau (n > 0 keeps it in the upper half plane)."""
        return UpperHalfPoint(n * self.value, self.tau_min)


def nome(tau):
    """q = e^{2 pi i tau}; always inside the unit disk."""
    return cmath.exp(2j * math.pi * tau.value)


def _sum_integer_family(j, v, tau, cfg):
    # theta3 (j=3) and theta0 (j=0): n = 0 term is 1, then +-n pairs.
    total = 1 + 0j
    below = 0
    for n in range(1, cfg.max_index + 1):
        radial = cmath.exp(2j * math.pi * tau * (n * n))
        tp = radial * cmath.exp(2j * n * v)
        tm = radial * cmath.exp(-2j * n * v)
        pair = -(tp + tm) if (j == 0 and n % 2 == 1) else (tp + tm)
        total += pair
        below = below + 1 if abs(pair) <= cfg.rel_tol * abs(total) else 0
        # A single tiny pair can be an accidental angular zero
        # (cos(2nv) ~ 0); two consecutive tiny pairs cannot be unless the
        # whole tail is negligible, so stop only then.
        if below >= 2:
            return total
    return None


def _sum_half_integer_family(j, v, tau, cfg):
    # theta2 (j=2) and theta1 (j=1): pairs (n, -n-1), weight (n+1/2)^2.
    total = 0j
    below = 0
    for n in range(0, cfg.max_index + 1):
        m = 2 * n + 1
        radial = cmath.exp(2j * math.pi * tau * (m * m / 4.0))
        tp = radial * cmath.exp(1j * m * v)
        tm = radial * cmath.exp(-1j * m * v)
        if j == 2:
            pair = tp + tm
        else:
            # i^{2n-1} = -i(-1)^n at index n, i(-1)^n at index -n-1
            pair = (-1) ** n * (-1j * tp + 1j * tm)
        total += pair
        if n >= 1:
            below = below + 1 if abs(pair) <= cfg.rel_tol * abs(total) else 0
            if below >= 2:
                return total
    return None


def theta(j, v, tau, cfg=DEFAULT_CONFIG):
    """Evaluate theta_j(v, tau) for j in {0, 1, 2, 3}.

    Raises PrecisionError when max_index is exhausted before the pair
    criterion is met; the error carries the degraded-accuracy flag of tau.
    """
    if j not in (0, 1, 2, 3):
        raise DomainError(f"theta index must be one of 0,1,2,3, got {j}")
    tval = tau.value
    if not tval.imag > 0:
        raise DomainError(f"Im(tau) must be positive, got {tval}")
    v = complex(v)
    if j in (3, 0):
        total = _sum_integer_family(j, v, tval, cfg)
    else:
        total = _sum_half_integer_family(j, v, tval, cfg)
    if total is None:
        raise PrecisionError(
            f"theta{j}(v={v}, tau={tval}) did not meet rel_tol="
            f"{cfg.rel_tol} within max_index={cfg.max_index}",
            degraded=tau.degraded,
        )
    return total
