"""Chebyshev-Blaschke products.

The degree-n product for tau on the positive imaginary axis is

    f(z) = z^p * prod_i (z^2 - b_i) / (1 - b_i z^2),      p = n mod 2,

with squared-zero parameters b_i given by theta quotients at the odd
half-angles (2i-1)pi/2n.  Coefficients S_j are the elementary symmetric
polynomials of the b_i; they also solve a small linear system built from
the Taylor coefficients of f at 0, which this module computes two more
ways (closed forms + ODE recurrence, and power-series long division) for
cross-validation.
"""

import cmath
import json
import math

import mpmath as mp
import numpy as np

from . import _mpkernel
from .errors import (
    DomainError,
    NoCriticalValues,
    PoleError,
    RootFindingError,
    SingularSystemError,
)
from .theta import DEFAULT_CONFIG, UpperHalfPoint, theta

_DEDUP_TOL = 1e-8
_CRITICAL_MATCH_TOL = 1e-7
_PIVOT_FLOOR = 1e-12


class ChebyshevBlaschke:
    """Immutable value object: degree, parameter, zeros-squared, coefficients."""

    def __init__(self, n, tau, b, S, cfg=DEFAULT_CONFIG, complex_tau=False):
        self.n = n
        self.tau = tau
        self.b = tuple(b)
        self.S = tuple(S)
        self.parity = n % 2
        self.cfg = cfg
        self.complex_tau = complex_tau

    def __repr__(self):
        return (
            f"ChebyshevBlaschke(n={self.n}, tau={self.tau.value}, "
            f"b={self.b}, S={self.S})"
        )


class FiniteBlaschkeProduct:
    """Unimodular constant times a product of disk automorphism factors."""

    def __init__(self, unimodular_constant, zeros):
        c = complex(unimodular_constant)
        if abs(abs(c) - 1.0) > 1e-14:
            raise DomainError(f"constant must be unimodular, got |c|={abs(c)}")
        zeros = tuple(complex(z) for z in zeros)
        for z in zeros:
            if abs(z) >= 1.0:
                raise DomainError(f"zero {z} not inside the open unit disk")
        self.unimodular_constant = c
        self.zeros = zeros

    @property
    def degree(self):
        return len(self.zeros)

    def evaluate(self, z):
        z = complex(z)
        val = self.unimodular_constant
        for w in self.zeros:
            den = 1.0 - w.conjugate() * z
            if abs(den) < 1e-14 * (1.0 + abs(w * z)):
                raise PoleError(f"Blaschke factor denominator vanished at z={z}")
            val *= (z - w) / den
        return val


def elementary_symmetric(values):
    """All elementary symmetric polynomials e_1..e_m of the given values."""
    m = len(values)
    e = [1.0] + [0.0] * m
    for v in values:
        for j in range(m, 0, -1):
            e[j] = e[j] + v * e[j - 1]
    return e[1:]


def build(n, tau, cfg=DEFAULT_CONFIG, allow_complex_tau=False):
    """Construct the degree-n Chebyshev-Blaschke product at tau.

    On the default path tau must lie on the positive imaginary axis; the
    b_i are then validated to be real, inside (0,1), and strictly
    decreasing (checked for n <= 16).  ``allow_complex_tau`` admits any
    upper-half-plane tau without those assertions.
    """
    if n < 1:
        raise DomainError(f"degree must be >= 1, got {n}")
    on_axis = tau.on_imaginary_axis
    if not on_axis and not allow_complex_tau:
        raise DomainError(
            f"tau={tau.value} is off the imaginary axis; "
            "pass allow_complex_tau=True to relax"
        )
    raw = []
    for i in range(1, n // 2 + 1):
        v = (2 * i - 1) * math.pi / (2 * n)
        q2 = theta(2, v, tau, cfg)
        q3 = theta(3, v, tau, cfg)
        raw.append((q2 / q3) ** 2)
    if on_axis:
        b = []
        for bi in raw:
            if not (0.0 < bi.real < 1.0) or abs(bi.imag) > 1e-13 * abs(bi):
                raise DomainError(f"squared zero {bi} outside (0,1)")
            b.append(bi.real)
        if n <= 16:
            for lo, hi in zip(b[1:], b[:-1]):
                if not lo < hi:
                    raise DomainError(f"squared zeros not strictly decreasing: {b}")
    else:
        b = raw
    return ChebyshevBlaschke(n, tau, b, elementary_symmetric(b), cfg, not on_axis)


def to_blaschke(cb):
    """The induced FiniteBlaschkeProduct; carries exactly n zeros."""
    zeros = [0.0] * cb.parity
    for bi in cb.b:
        root = cmath.sqrt(bi)
        zeros.extend([root, -root])
    fbp = FiniteBlaschkeProduct(1.0, zeros)
    assert fbp.degree == cb.n
    return fbp


def eval_product(cb, z):
    """Evaluate via the factored form z^p prod (z^2 - b_i)/(1 - b_i z^2)."""
    z = complex(z)
    val = z ** cb.parity if cb.parity else 1.0 + 0j
    zz = z * z
    for bi in cb.b:
        den = 1.0 - bi * zz
        if abs(den) < 1e-14 * (1.0 + abs(bi * zz)):
            raise PoleError(f"denominator factor 1 - b z^2 vanished at z={z}")
        val *= (zz - bi) / den
    return val


def _expanded_coefficients(cb):
    """(numerator, denominator) coefficient lists in ascending powers of z^2."""
    m = cb.n // 2
    num = [0.0] * (m + 1)
    den = [0.0] * (m + 1)
    num[m] = 1.0
    den[0] = 1.0
    for j in range(1, m + 1):
        num[m - j] = (-1) ** j * cb.S[j - 1]
        den[j] = (-1) ** j * cb.S[j - 1]
    return num, den


def eval_expanded(cb, z):
    """Evaluate via the expanded rational form in the coefficients S_j."""
    z = complex(z)
    num, den = _expanded_coefficients(cb)
    zz = z * z
    nv = 0j
    for c in reversed(num):
        nv = nv * zz + c
    dv = 0j
    for c in reversed(den):
        dv = dv * zz + c
    if abs(dv) < 1e-14 * (1.0 + abs(nv)):
        raise PoleError(f"expanded denominator vanished at z={z}")
    head = z ** cb.parity if cb.parity else 1.0 + 0j
    return head * nv / dv


def chebyshev_poly(n, x):
    """T_n(x) by the three-term recurrence."""
    if n == 0:
        return 1.0 + 0j if isinstance(x, complex) else 1.0
    prev, cur = 1.0, x
    for _ in range(n - 1):
        prev, cur = cur, 2 * x * cur - prev
    return cur


def elliptic_rational(n, tau, z, cfg=DEFAULT_CONFIG):
    """T_{n,tau}(z) = f_{n,tau}(sqrt(k(tau)) z) / sqrt(k(n tau))."""
    cb = build(n, tau, cfg)
    sk_t = theta(2, 0.0, tau, cfg) / theta(3, 0.0, tau, cfg)
    ntau = tau.scaled(n)
    sk_nt = theta(2, 0.0, ntau, cfg) / theta(3, 0.0, ntau, cfg)
    w = sk_t * complex(z)
    if abs(w) > 1.0 + 1e-12:
        raise DomainError(f"sqrt(k) z = {w} lies outside the closed unit disk")
    return eval_product(cb, w) / sk_nt


def modulus_lambda(cb):
    """The product's modulus in the n*pi*Im(tau)/4 normalization."""
    if not cb.tau.on_imaginary_axis:
        raise DomainError("modulus is defined for tau on the imaginary axis")
    return cb.n * math.pi * cb.tau.value.imag / 4.0


def normalized_modulus(cb):
    """Same quantity under the (1/2 pi) log(1/r) annulus convention: n*Im(tau)/4."""
    if not cb.tau.on_imaginary_axis:
        raise DomainError("modulus is defined for tau on the imaginary axis")
    return cb.n * cb.tau.value.imag / 4.0


# ---------------------------------------------------------------------------
# derivatives at the origin
# ---------------------------------------------------------------------------

def field_generators(n, tau, cfg=DEFAULT_CONFIG):
    """(sqrt_k(tau), sqrt_k(n tau), omega1(n tau)/omega1(tau)).

    Every derivative of f at 0 is a rational expression in these three
    numbers; the closed forms and the recurrence below consume nothing else.
    """
    t2 = theta(2, 0.0, tau, cfg)
    t3 = theta(3, 0.0, tau, cfg)
    ntau = tau.scaled(n)
    s2 = theta(2, 0.0, ntau, cfg)
    s3 = theta(3, 0.0, ntau, cfg)
    return t2 / t3, s2 / s3, (s3 / t3) ** 2


def closed_derivatives(n, generators):
    """Orders 0..5 of f at 0 from the closed forms; generic in number type.

    Opposite-parity orders are exactly zero.
    """
    skt, sknt, R = generators
    zero = skt * 0
    out = {}
    if n % 2 == 0:
        sign = (-1) ** (n // 2)
        out[0] = sign * sknt
        out[1] = zero
        out[2] = sign * n**2 * R**2 * sknt * (sknt**4 - 1) / skt**2
        out[3] = zero
        out[4] = (
            sign
            * (n**2 * R**2 * sknt / skt**4)
            * (1 - sknt**4)
            * (n**2 * R**2 * (1 - 5 * sknt**4) - 4 * (1 + skt**4))
        )
        out[5] = zero
    else:
        sign = (-1) ** ((n - 1) // 2)
        out[0] = zero
        out[1] = sign * n * R * sknt / skt
        out[2] = zero
        out[3] = (
            (-1) ** ((n + 1) // 2)
            * (n * R * sknt / skt**3)
            * (n**2 * R**2 * (1 + sknt**4) - (1 + skt**4))
        )
        out[4] = zero
        out[5] = sign * (n * R * sknt / skt**5) * (
            n**4 * R**4 * (sknt**8 + 14 * sknt**4 + 1)
            - 10 * n**2 * R**2 * (1 + skt**4) * (1 + sknt**4)
            + 3 * (3 * skt**8 + 2 * skt**4 + 3)
        )
    return out


def recurrence_step(n, i, lower, generators):
    """f^{(i+2)}(0) from the differentiated ODE, given all lower orders.

    ``lower`` maps derivative order -> value; orders of parity opposite to
    n may be omitted (they are zero).  Requires i >= 4 and i = n (mod 2).
    """
    if i < 4:
        raise DomainError(f"recurrence needs i >= 4, got {i}")
    if (i - n) % 2 != 0:
        raise DomainError(f"order {i} has the wrong parity for degree {n}")
    skt, sknt, R = generators
    kt = skt**2
    knt = sknt**2
    zero = skt * 0

    def f(order):
        if (order - n) % 2 != 0:
            return zero
        try:
            return lower[order]
        except KeyError:
            raise DomainError(f"missing lower-order derivative {order}") from None

    coef = n**2 * R**2 * (1 + (3 * (-1) ** (n - 1) - 2) * knt**2) / kt - i**2 * (
        1 / kt + kt
    )
    cubic = 12 * n**2 * R**2 * knt / kt
    triple = zero
    for j in range(1, i):
        cj = math.comb(i - 1, j)
        for k in range(0, j):
            triple = triple + cj * math.comb(j - 1, k) * f(k) * f(j - k) * f(i - j)
    return -(coef * f(i) + i * (i - 1) ** 2 * (i - 2) * f(i - 2) - cubic * triple)


def derivative_at_zero_closed(n, tau, i, cfg=DEFAULT_CONFIG):
    """Closed-form f^{(i)}(0) for 0 <= i <= 5."""
    if not 0 <= i <= 5:
        raise DomainError(f"closed forms cover orders 0..5, got {i}")
    if n == 1:
        # f = z: only the first derivative survives.
        return 1.0 + 0j if i == 1 else 0j
    vals = closed_derivatives(n, field_generators(n, tau, cfg))
    return complex(vals[i])


def derivative_at_zero_recurrence(n, tau, i, lower, cfg=DEFAULT_CONFIG):
    """f^{(i+2)}(0) from the recurrence, in double precision."""
    if n == 1:
        return 0j
    gens = field_generators(n, tau, cfg)
    return complex(recurrence_step(n, i, lower, gens))


def derivatives_at_zero(n, tau, top, cfg=DEFAULT_CONFIG):
    """f^{(i)}(0) for i = 0..top via closed forms then the recurrence."""
    if n == 1:
        return {i: (1.0 + 0j if i == 1 else 0j) for i in range(top + 1)}
    gens = field_generators(n, tau, cfg)
    vals = closed_derivatives(n, gens)
    i = 4 if n % 2 == 0 else 5
    while i + 2 <= top:
        vals[i + 2] = recurrence_step(n, i, vals, gens)
        i += 2
    return {order: complex(v) for order, v in vals.items() if order <= top}


# ---------------------------------------------------------------------------
# coefficient oracles
# ---------------------------------------------------------------------------

def solve_partial_pivoting(A, rhs, pivot_floor=_PIVOT_FLOOR):
    """Gaussian elimination with partial pivoting; generic in number type."""
    m = len(rhs)
    A = [row[:] for row in A]
    rhs = rhs[:]
    for col in range(m):
        piv = max(range(col, m), key=lambda r: abs(A[r][col]))
        if abs(A[piv][col]) < pivot_floor:
            raise SingularSystemError(
                f"pivot {abs(A[piv][col])} below {pivot_floor} in column {col}"
            )
        if piv != col:
            A[col], A[piv] = A[piv], A[col]
            rhs[col], rhs[piv] = rhs[piv], rhs[col]
        for r in range(col + 1, m):
            factor = A[r][col] / A[col][col]
            for c in range(col, m):
                A[r][c] = A[r][c] - factor * A[col][c]
            rhs[r] = rhs[r] - factor * rhs[col]
    x = [None] * m
    for r in range(m - 1, -1, -1):
        acc = rhs[r]
        for c in range(r + 1, m):
            acc = acc - A[r][c] * x[c]
        x[r] = acc / A[r][r]
    return x


def series_long_division(num, den, order):
    """Taylor coefficients of num/den to the given order (ascending lists)."""
    acc = list(num) + [num[0] * 0] * (order + 1)
    out = []
    for k in range(order + 1):
        ck = acc[k] / den[0]
        out.append(ck)
        for j in range(1, len(den)):
            if k + j < len(acc):
                acc[k + j] = acc[k + j] - ck * den[j]
    return out


def taylor_coefficients(cb, order):
    """Taylor coefficients of f at 0 by long division of the expanded form."""
    num, den = _expanded_coefficients(cb)
    even = series_long_division(num, den, order // 2 + 1)
    out = [0j] * (order + 1)
    for k, c in enumerate(even):
        deg = 2 * k + cb.parity
        if deg <= order:
            out[deg] = complex(c)
    return out


def _coefficient_system(n, a):
    """Rows r = 1..m of the matching in degrees n+2r, where the expanded
    numerator no longer contributes."""
    m = n // 2
    A = [
        [(-1) ** j * a[n + 2 * r - 2 * j] for j in range(1, m + 1)]
        for r in range(1, m + 1)
    ]
    rhs = [-a[n + 2 * r] for r in range(1, m + 1)]
    return A, rhs


def _to_real_list(values, tau):
    if tau.on_imaginary_axis:
        return [float(v.real if hasattr(v, "real") else v) for v in values]
    return [complex(v) for v in values]


def coefficients_from_derivatives(n, tau, dps=_mpkernel.DEFAULT_DPS):
    """S_{n,j} from the derivative closed forms + recurrence + linear solve.

    The pipeline runs on arbitrary-precision numbers: the recurrence
    reconstructs coefficients up to ~20 decimal orders smaller than its
    intermediate terms, which doubles cannot survive.
    """
    if n < 2:
        raise DomainError(f"coefficient system needs n >= 2, got {n}")
    m = n // 2
    with mp.workdps(dps):
        gens = _mpkernel.field_generators_mp(n, tau.value)
        vals = closed_derivatives(n, gens)
        i = 4 if n % 2 == 0 else 5
        while i + 2 <= n + 2 * m:
            vals[i + 2] = recurrence_step(n, i, vals, gens)
            i += 2
        zero = mp.mpc(0)
        a = {
            order: vals.get(order, zero) / math.factorial(order)
            for order in range(0, n + 2 * m + 1)
        }
        A, rhs = _coefficient_system(n, a)
        S = solve_partial_pivoting(A, rhs)
    return _to_real_list(S, tau)


def coefficients_from_longdivision(n, tau, dps=_mpkernel.DEFAULT_DPS):
    """S_{n,j} recovered from long-division Taylor coefficients of the
    expanded form; independent of the closed forms and the recurrence."""
    if n < 2:
        raise DomainError(f"coefficient system needs n >= 2, got {n}")
    m = n // 2
    p = n % 2
    with mp.workdps(dps):
        b = _mpkernel.squared_zero_parameters_mp(n, tau.value)
        e = [mp.mpc(1)] + [mp.mpc(0)] * m
        for bi in b:
            for j in range(m, 0, -1):
                e[j] = e[j] + bi * e[j - 1]
        num = [mp.mpc(0)] * (m + 1)
        den = [mp.mpc(0)] * (m + 1)
        num[m] = mp.mpc(1)
        den[0] = mp.mpc(1)
        for j in range(1, m + 1):
            num[m - j] = (-1) ** j * e[j]
            den[j] = (-1) ** j * e[j]
        even = series_long_division(num, den, (n + 2 * m - p) // 2 + 1)
        a = {}
        for k, c in enumerate(even):
            a[2 * k + p] = c
        for order in range(0, n + 2 * m + 1):
            a.setdefault(order, mp.mpc(0))
        A, rhs = _coefficient_system(n, a)
        S = solve_partial_pivoting(A, rhs)
    return _to_real_list(S, tau)


# ---------------------------------------------------------------------------
# critical values
# ---------------------------------------------------------------------------

def _rational_coefficient_arrays(cb):
    """Descending-order numerator/denominator arrays of the rational form."""
    num = np.array([1.0])
    den = np.array([1.0])
    for bi in cb.b:
        num = np.polymul(num, [1.0, 0.0, -bi])
        den = np.polymul(den, [-bi, 0.0, 1.0])
    if cb.parity:
        num = np.polymul(num, [1.0, 0.0])
    return num, den


def critical_values(cb):
    """The distinct critical values of f inside the unit disk.

    Roots of the derivative numerator come from the companion matrix and
    are polished by Newton iteration.  For n >= 3 both of +-sqrt(k(n tau))
    are attained; for n = 2 the single interior critical point z = 0 gives
    only -sqrt(k(2 tau)).
    """
    if cb.n < 2:
        raise NoCriticalValues("f(z) = z has no critical point in the disk")
    num, den = _rational_coefficient_arrays(cb)
    P = np.polysub(
        np.polymul(np.polyder(num), den), np.polymul(num, np.polyder(den))
    )
    dP = np.polyder(P)
    roots = np.roots(P)
    polished = []
    for r in roots:
        z = complex(r)
        for _ in range(60):
            dv = complex(np.polyval(dP, z))
            if dv == 0:
                break
            step = complex(np.polyval(P, z)) / dv
            z -= step
            if abs(step) <= 1e-15 * max(1.0, abs(z)):
                break
        polished.append(z)
    inside = [z for z in polished if abs(z) < 1.0 - 1e-10]
    values = []
    for z in inside:
        v = eval_product(cb, z)
        if not any(abs(v - w) <= _DEDUP_TOL for w in values):
            values.append(v)
    ntau = cb.tau.scaled(cb.n)
    ref = theta(2, 0.0, ntau, cb.cfg) / theta(3, 0.0, ntau, cb.cfg)
    expected = 2 if cb.n >= 3 else 1
    if len(values) != expected:
        raise RootFindingError(
            f"expected {expected} distinct critical values for n={cb.n}, "
            f"found {len(values)}: {values}"
        )
    for v in values:
        if min(abs(v - ref), abs(v + ref)) > _CRITICAL_MATCH_TOL:
            raise RootFindingError(
                f"critical value {v} does not match +-sqrt(k(n tau)) = +-{ref}"
            )
    return tuple(sorted(values, key=lambda v: (v.real, v.imag)))


# ---------------------------------------------------------------------------
# composition
# ---------------------------------------------------------------------------

def _interior_grid(count=50):
    radii = (0.15, 0.35, 0.55, 0.75, 0.9)
    per = count // len(radii)
    pts = []
    for ri, r in enumerate(radii):
        for j in range(per):
            ang = 2.0 * math.pi * j / per + 0.1 * (ri + 1)
            pts.append(r * cmath.exp(1j * ang))
    return pts


def compose_check(m, n, tau, cfg=DEFAULT_CONFIG):
    """Max over an interior grid of |f_{m, n tau}(f_{n,tau}(z)) - f_{mn,tau}(z)|."""
    if m < 1 or n < 1:
        raise DomainError("degrees must be >= 1")
    if m * n > 12:
        raise DomainError(f"m*n = {m*n} exceeds the guarded bound 12")
    inner = build(n, tau, cfg)
    outer = build(m, tau.scaled(n), cfg)
    full = build(m * n, tau, cfg)
    worst = 0.0
    pts = _interior_grid()
    for z in pts:
        lhs = eval_product(outer, eval_product(inner, z))
        rhs = eval_product(full, z)
        worst = max(worst, abs(lhs - rhs))
    return {
        "m": m,
        "n": n,
        "tau_im": tau.value.imag,
        "points": len(pts),
        "max_deviation": worst,
    }


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def serialize(cb):
    """One-line JSON record {n, tau_im, b, S, parity}; floats survive
    round-trip exactly (17 significant digits)."""
    if not cb.tau.on_imaginary_axis:
        raise DomainError("serialization covers tau on the imaginary axis only")
    fields = [
        f'"n": {cb.n}',
        f'"tau_im": {cb.tau.value.imag:.17g}',
        '"b": [' + ", ".join(f"{x:.17g}" for x in cb.b) + "]",
        '"S": [' + ", ".join(f"{x:.17g}" for x in cb.S) + "]",
        f'"parity": {cb.parity}',
    ]
    return "{" + ", ".join(fields) + "}"


def deserialize(record):
    """Rebuild a ChebyshevBlaschke from its serialized record."""
    data = json.loads(record)
    n = int(data["n"])
    tau = UpperHalfPoint(complex(0.0, float(data["tau_im"])))
    b = [float(x) for x in data["b"]]
    S = [float(x) for x in data["S"]]
    if len(b) != n // 2 or len(S) != n // 2:
        raise DomainError(f"record length mismatch for degree {n}")
    if int(data["parity"]) != n % 2:
        raise DomainError("parity inconsistent with degree")
    return ChebyshevBlaschke(n, tau, b, S)
