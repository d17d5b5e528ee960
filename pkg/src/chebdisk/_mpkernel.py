"""Arbitrary-precision mirror of the theta series for the coefficient oracle.

The derivative recurrence loses many digits to cancellation when it
reconstructs the smallest coefficients of high-degree products (the target
values sit up to ~20 decimal orders below the intermediate terms), so that
route runs on mpmath numbers.  Only plain mpf/mpc arithmetic is used; the
series, truncation rule and all downstream algebra are the same code shape
as the double-precision kernel.
"""

import mpmath as mp

DEFAULT_DPS = 60


def theta_mp(j, v, tau, rel_tol=None, max_terms=200):
    """theta_j(v, tau) on mpmath numbers; same pair rule as theta.theta."""
    v = mp.mpmathify(v)
    tau = mp.mpmathify(tau)
    if rel_tol is None:
        rel_tol = mp.mpf(10) ** (-(mp.mp.dps - 8))
    if j in (3, 0):
        total = mp.mpc(1)
        below = 0
        for n in range(1, max_terms + 1):
            radial = mp.e ** (2j * mp.pi * tau * (n * n))
            pair = radial * (mp.e ** (2j * n * v) + mp.e ** (-2j * n * v))
            if j == 0 and n % 2 == 1:
                pair = -pair
            total += pair
            below = below + 1 if abs(pair) <= rel_tol * abs(total) else 0
            if below >= 2:
                return total
    elif j in (1, 2):
        total = mp.mpc(0)
        below = 0
        for n in range(0, max_terms + 1):
            m = 2 * n + 1
            radial = mp.e ** (2j * mp.pi * tau * (mp.mpf(m * m) / 4))
            tp = radial * mp.e ** (1j * m * v)
            tm = radial * mp.e ** (-1j * m * v)
            if j == 2:
                pair = tp + tm
            else:
                pair = (-1) ** n * (-1j * tp + 1j * tm)
            total += pair
            if n >= 1:
                below = below + 1 if abs(pair) <= rel_tol * abs(total) else 0
                if below >= 2:
                    return total
    else:
        raise ValueError(f"bad theta index {j}")
    raise ArithmeticError(f"theta{j} series did not converge at tau={tau}")


def field_generators_mp(n, tau):
    """(sqrt_k(tau), sqrt_k(n tau), omega1(n tau)/omega1(tau)) in mp."""
    t2 = theta_mp(2, 0, tau)
    t3 = theta_mp(3, 0, tau)
    s2 = theta_mp(2, 0, n * tau)
    s3 = theta_mp(3, 0, n * tau)
    return t2 / t3, s2 / s3, (s3 / t3) ** 2


def squared_zero_parameters_mp(n, tau):
    """b_i = theta2^2((2i-1)pi/2n, tau) / theta3^2(...), i = 1..floor(n/2)."""
    out = []
    for i in range(1, n // 2 + 1):
        v = (2 * i - 1) * mp.pi / (2 * n)
        out.append((theta_mp(2, v, tau) / theta_mp(3, v, tau)) ** 2)
    return out
