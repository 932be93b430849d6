"""Complex special functions underlying the zeta machinery.

Provides principal-branch log-gamma and digamma (delegated to scipy),
an analytically continued Riemann zeta, the double gamma function
G2 satisfying G2(s) = Gamma(s) * G2(s+1), the constant zeta'(-1), and a
self-test defect for the Gauss multiplication formula.

All routines work in IEEE binary64; tolerances quoted in docstrings are
for that precision. Functions are pure and raise instead of returning
non-finite values.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
import scipy.special as sps

from .errors import ConvergenceError, PoleError

__all__ = [
    "EvalOptions",
    "DEFAULT_OPTIONS",
    "EULER_GAMMA",
    "ZETA_PRIME_MINUS_ONE",
    "log_gamma",
    "digamma",
    "riemann_zeta",
    "zeta_prime_minus_one",
    "log_barnes_gamma2",
    "gauss_multiplication_defect",
]

EULER_GAMMA = 0.5772156649015328606065120900824024

# zeta'(-1) = 1/12 - log(Glaisher); value pinned against an independent
# high-precision evaluation (see tests for the recomputation oracle).
ZETA_PRIME_MINUS_ONE = -0.16542114370045092921391966024278

_POLE_TOL = 1e-12


@dataclass(frozen=True)
class EvalOptions:
    """Precision and truncation knobs shared by the numeric routines.

    gamma2_cutoff   truncation index K of the double-gamma product
    rel_tol         tolerance used by identity comparisons and adaptive cutoffs
    euler_max_trace default completeness bound for Euler-product spectra
    """

    gamma2_cutoff: int = 10_000
    rel_tol: float = 1e-10
    euler_max_trace: int = 40

    def __post_init__(self):
        if self.rel_tol <= 0:
            raise ValueError("rel_tol must be positive")
        if self.gamma2_cutoff < 64:
            raise ValueError("gamma2_cutoff must be at least 64")
        if self.euler_max_trace < 3:
            raise ValueError("euler_max_trace must be at least 3")


DEFAULT_OPTIONS = EvalOptions()


def _is_nonpositive_integer(s: complex, tol: float = _POLE_TOL) -> bool:
    return (
        abs(s.imag) < tol
        and s.real < 0.5
        and abs(s.real - round(s.real)) < tol
    )


def _ensure_finite(value: complex, what: str) -> complex:
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise ConvergenceError(f"{what} produced a non-finite value")
    return value


def log_gamma(s: complex) -> complex:
    """Principal branch of log Gamma(s).

    Raises PoleError at the poles s = 0, -1, -2, ...
    """
    s = complex(s)
    if _is_nonpositive_integer(s):
        raise PoleError(f"log_gamma pole at s={s}")
    return _ensure_finite(complex(sps.loggamma(s)), "log_gamma")


def digamma(s: complex) -> complex:
    """Logarithmic derivative of the gamma function.

    Raises PoleError at the poles s = 0, -1, -2, ...
    """
    s = complex(s)
    if _is_nonpositive_integer(s):
        raise PoleError(f"digamma pole at s={s}")
    return _ensure_finite(complex(sps.digamma(s)), "digamma")


# ---------------------------------------------------------------------------
# Riemann zeta: alternating-series (eta) acceleration on Re s >= 1/2, the
# reflection formula on Re s < 1/2, and an Euler-Maclaurin evaluation near
# s = 1 and near the removable zeros of the eta prefactor 1 - 2^(1-s).
# ---------------------------------------------------------------------------

_BORWEIN_CACHE: dict[int, tuple[float, ...]] = {}

# Bernoulli numbers B_2, B_4, ..., B_28 as exact fractions.
_BERNOULLI = tuple(
    p / q
    for p, q in [
        (1, 6), (-1, 30), (1, 42), (-1, 30), (5, 66), (-691, 2730), (7, 6),
        (-3617, 510), (43867, 798), (-174611, 330), (854513, 138),
        (-236364091, 2730), (8553103, 6), (-23749461029, 870),
    ]
)


def _borwein_coefficients(n: int) -> tuple[float, ...]:
    """Exact integer build of d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!)."""
    coeffs = _BORWEIN_CACHE.get(n)
    if coeffs is None:
        out = []
        t = 1  # term i=0: n * (n-1)!/(n! 0!) = 1
        d = t
        out.append(float(d))
        for i in range(1, n + 1):
            t = t * 4 * (n + i - 1) * (n - i + 1) // ((2 * i) * (2 * i - 1))
            d += t
            out.append(float(d))
        coeffs = tuple(out)
        _BORWEIN_CACHE[n] = coeffs
    return coeffs


def _zeta_eta_accelerated(s: complex) -> complex:
    t = abs(s.imag)
    n = max(28, int(1.5 * (12 + 0.91 * t)) + 6)
    d = _borwein_coefficients(n)
    dn = d[n]
    acc = 0.0 + 0.0j
    sign = 1.0
    for k in range(n):
        acc += sign * (d[k] - dn) * cmath.exp(-s * math.log(k + 1))
        sign = -sign
    return -acc / (dn * (1.0 - 2.0 ** (1.0 - s)))


def _zeta_euler_maclaurin(s: complex, terms: int = 50, order: int = 12) -> complex:
    n = max(terms, int(abs(s.imag)) + 20)
    k = np.arange(1, n, dtype=float)
    total = complex(np.sum(np.exp(-s * np.log(k))))
    ln_n = math.log(n)
    total += 0.5 * cmath.exp(-s * ln_n)
    total += cmath.exp((1.0 - s) * ln_n) / (s - 1.0)
    # correction terms B_{2j}/(2j)! * s(s+1)...(s+2j-2) * n^{-s-2j+1}
    rising = s
    fact = 2.0
    for j in range(1, order + 1):
        total += _BERNOULLI[j - 1] / fact * rising * cmath.exp((-s - 2 * j + 1) * ln_n)
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        fact *= (2 * j + 1) * (2 * j + 2)
    return total


def riemann_zeta(s: complex) -> complex:
    """Analytically continued Riemann zeta function.

    Accurate on the strip Re s in [-3, 4], |Im s| <= 20 (and beyond);
    raises PoleError at s = 1.
    """
    s = complex(s)
    if abs(s - 1.0) < _POLE_TOL:
        raise PoleError("riemann_zeta pole at s=1")
    if s.real < 0.5:
        if abs(s) < _POLE_TOL:
            return complex(-0.5)
        reflected = riemann_zeta(1.0 - s)
        factor = (
            cmath.exp(s * math.log(2.0) + (s - 1.0) * math.log(math.pi))
            * cmath.sin(math.pi * s / 2.0)
            * cmath.exp(log_gamma(1.0 - s))
        )
        return _ensure_finite(factor * reflected, "riemann_zeta")
    # Near the pole, and near the zeros of 1 - 2^(1-s) off the real axis,
    # the eta acceleration degenerates; Euler-Maclaurin isolates the pole.
    if abs(s - 1.0) < 0.5 or abs(1.0 - 2.0 ** (1.0 - s)) < 0.1:
        return _ensure_finite(_zeta_euler_maclaurin(s), "riemann_zeta")
    return _ensure_finite(_zeta_eta_accelerated(s), "riemann_zeta")


def zeta_prime_minus_one() -> float:
    """The constant zeta'(-1), to more than 12 correct digits."""
    return ZETA_PRIME_MINUS_ONE


# ---------------------------------------------------------------------------
# Double gamma function G2 with G2(1) = 1 and G2(s) = Gamma(s) * G2(s+1).
# ---------------------------------------------------------------------------


def _log1p_complex(z: np.ndarray) -> np.ndarray:
    """Accurate log(1+z) for complex arrays (Kahan's compensated form)."""
    u = 1.0 + z
    d = u - 1.0
    # Where 1+z rounded to exactly 1, log1p(z) ~ z; elsewhere rescale by z/d
    # to recover the low-order bits lost when forming u.
    with np.errstate(divide="ignore", invalid="ignore"):
        scaled = np.where(d == 0, 1.0, z / np.where(d == 0, 1.0, d))
    return np.where(d == 0, z, np.log(u) * scaled)


def _log_gamma2_product(w: complex, cutoff: int) -> complex:
    """log G2(w) from the defining product, valid for Re w > 1/2.

    Truncates the product at `cutoff` and restores the tail analytically
    through ninth order in w-1 over k.
    """
    t = w - 1.0
    if t == 0:
        return 0.0 + 0.0j
    k = np.arange(1, cutoff + 1, dtype=float)
    terms = -k * _log1p_complex(t / k) + t - t * t / (2.0 * k)
    total = complex(np.sum(terms[::-1]))
    total += -0.5 * t * math.log(2.0 * math.pi) + 0.5 * t
    total += 0.5 * (EULER_GAMMA + 1.0) * t * t
    # tail over k > cutoff: sum_{j>=3} (-1)^j t^j / (j k^(j-1))
    tp = t * t * t
    for j in range(3, 9):
        tail = float(sps.zeta(j - 1, cutoff + 1))
        total += (-1.0 if j % 2 else 1.0) * tp / j * tail
        tp *= t
    # bound for the dropped j >= 9 block; geometric in |t|/k beyond cutoff
    margin = 1.0 - abs(t) / (cutoff + 1.0)
    if margin <= 0.1:
        raise ConvergenceError(
            f"double-gamma cutoff {cutoff} too small for |argument| ~ {abs(t):.3g}"
        )
    remainder = (abs(t) ** 9 / 9.0) * float(sps.zeta(8, cutoff + 1)) / margin
    if remainder > 1e-11:
        raise ConvergenceError(
            f"double-gamma tail estimate {remainder:.3g} exceeds tolerance; "
            f"raise gamma2_cutoff (currently {cutoff})"
        )
    return total


def log_barnes_gamma2(s: complex, opts: EvalOptions = DEFAULT_OPTIONS) -> complex:
    """log G2(s) for the double gamma function normalized by G2(1) = 1.

    Evaluates the defining product for Re s > 1/2 and extends to the rest
    of the plane through the recursion G2(s) = Gamma(s) * G2(s+1).
    Relative accuracy ~1e-11 for |s| <= 10 at the default cutoff.
    Raises PoleError at s = 0, -1, -2, ... (pole of order k+1 at -k).
    """
    s = complex(s)
    if _is_nonpositive_integer(s):
        raise PoleError(f"double gamma pole at s={s}")
    shift = 0.0 + 0.0j
    while s.real <= 0.5:
        shift += log_gamma(s)
        s += 1.0
    return _ensure_finite(shift + _log_gamma2_product(s, opts.gamma2_cutoff),
                          "log_barnes_gamma2")


def gauss_multiplication_defect(s: complex, m: int) -> float:
    """Relative defect of the order-m multiplication formula for Gamma.

    Returns |Gamma(s) - (2 pi)^((1-m)/2) m^(s-1/2) prod_k Gamma((s+k)/m)|
    normalized by |Gamma(s)|; a self-test of the gamma implementation.
    """
    if m < 1:
        raise ValueError("m must be a positive integer")
    s = complex(s)
    lhs = log_gamma(s)
    rhs = (1.0 - m) / 2.0 * math.log(2.0 * math.pi) + (s - 0.5) * math.log(m)
    for k in range(m):
        rhs += log_gamma((s + k) / m)
    return abs(1.0 - cmath.exp(rhs - lhs))
