"""Closed-form factors of the determinant identity and functional equations.

Everything here is an explicit product of gamma-type and elementary
factors: the archimedean factor Z_inf, the cone-point factor Z_ell, the
assembled determinant of the shifted Laplacian, the functional-equation
multiplier kappa with Z(1-s) = kappa(s) Z(s), the right side of the
Ruelle functional equation R(s) R(-s), and the constants c1, c0 relating
det'(Laplacian) to Z'(1) and to the renormalized value of Z at 0.

Products of fractional powers are combined as sums of
exponent * PrincipalLog(base); parity signs such as (-1)^(A/2) are exact
integer signs, never complex exponentials. Identity checks that are
sensitive to branch cuts should use the pinned cut-safe sample points
shipped with the verify suite.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass

from .errors import DomainWarning, PoleError, SingularFactorError
from .scattering import ScatteringModel
from .special_functions import (
    DEFAULT_OPTIONS,
    EvalOptions,
    log_barnes_gamma2,
    log_gamma,
)
from .surface import Signature, constants

__all__ = [
    "FactorValue",
    "z_infty",
    "z_ell",
    "det_laplacian",
    "kappa",
    "ruelle_fe_rhs",
    "ruelle_leading_at_zero",
    "c1",
    "c0",
]


@dataclass(frozen=True)
class FactorValue:
    """A factor carried in log space, exponentiated on demand."""

    log_value: complex
    value: complex

    @classmethod
    def from_log(cls, log_value: complex, sign: int = 1) -> "FactorValue":
        value = cmath.exp(log_value)
        if sign == -1:
            value = -value
            log_value = log_value + 1j * math.pi
        return cls(log_value=complex(log_value), value=value)


def _chi(sig: Signature) -> float:
    """Area over 2 pi."""
    return float(sig.normalized_area())


def z_infty(sig: Signature, s: complex, opts: EvalOptions = DEFAULT_OPTIONS) -> FactorValue:
    """Archimedean factor ((2 pi)^s G2(s)^2 / Gamma(s)) ^ (area / 2 pi)."""
    s = complex(s)
    log_base = (
        s * math.log(2.0 * math.pi)
        + 2.0 * log_barnes_gamma2(s, opts)
        - log_gamma(s)
    )
    return FactorValue.from_log(_chi(sig) * log_base)


def z_ell(sig: Signature, s: complex, opts: EvalOptions = DEFAULT_OPTIONS) -> FactorValue:
    """Cone-point factor: prod_j prod_k Gamma((s+k)/m_j)^((2k+1-m_j)/m_j).

    The empty product (no cone points) is 1. Raises PoleError naming the
    offending (j, k) if a gamma argument lands on a pole.
    """
    s = complex(s)
    total = 0.0 + 0.0j
    for j, m in enumerate(sig.orders):
        for k in range(m):
            arg = (s + k) / m
            try:
                lg = log_gamma(arg)
            except PoleError:
                raise PoleError(
                    f"cone-point factor hits a gamma pole at (j={j}, k={k}), "
                    f"argument {arg}"
                ) from None
            total += (2 * k + 1 - m) / m * lg
    return FactorValue.from_log(total)


def det_laplacian(
    sig: Signature,
    sc: ScatteringModel,
    s: complex,
    Z_value: complex,
    opts: EvalOptions = DEFAULT_OPTIONS,
) -> complex:
    """Determinant of the shifted Laplacian, assembled from closed-form factors.

    The Selberg zeta value Z(s) is supplied by the caller (for example
    from the truncated Euler product, trustworthy for Re s > 1). When
    Re s <= 1 a DomainWarning is emitted because no desk-scale evaluation
    of Z is available there.
    """
    s = complex(s)
    if s.real <= 1.0:
        warnings.warn(
            DomainWarning("supplied Z(s) is untrusted for Re s <= 1"),
            stacklevel=2,
        )
    c = constants(sig, sc)
    half = s - 0.5
    log_rest = (
        z_infty(sig, s, opts).log_value
        + z_ell(sig, s, opts).log_value
        - sig.n * log_gamma(s + 0.5)
        + c.B * half * half
        + c.C * half
        + c.D
    )
    return (2.0 * s - 1.0) ** (c.A // 2) * cmath.exp(log_rest) * complex(Z_value)


def _near_integer(z: complex, tol: float = 1e-12) -> bool:
    return abs(z.imag) < tol and abs(z.real - round(z.real)) < tol


def _log_sine_block(sig: Signature, s: complex) -> complex:
    total = 0.0 + 0.0j
    for j, m in enumerate(sig.orders):
        for k in range(m):
            arg = (s + k) / m
            if _near_integer(arg):
                raise SingularFactorError(f"sine factor (j={j}, k={k})")
            total += (m - 2 * k - 1) / m * cmath.log(cmath.sin(math.pi * arg))
    return total


def kappa(
    sig: Signature,
    sc: ScatteringModel,
    s: complex,
    opts: EvalOptions = DEFAULT_OPTIONS,
) -> FactorValue:
    """Functional-equation multiplier kappa with Z(1-s) = kappa(s) Z(s).

    Assembled in log space from the exact sign (-1)^(A/2), the cusp
    exponential, phi(s), the double-gamma block, the cusp gamma ratio,
    and the cone-point sine product. Raises SingularFactorError naming
    whichever factor is singular at s.
    """
    s = complex(s)
    if sc.n != sig.n:
        raise SingularFactorError("scattering determinant",
                                  "cusp count disagrees with the signature")
    c = constants(sig, sc)
    sine_block = _log_sine_block(sig, s)
    try:
        phi_val = sc.phi(s)
    except PoleError as exc:
        raise SingularFactorError("scattering determinant", str(exc)) from None
    if phi_val == 0:
        raise SingularFactorError("scattering determinant", f"phi({s}) = 0")
    try:
        gamma2_block = (
            (2.0 * s - 1.0) * math.log(2.0 * math.pi)
            + 2.0 * log_barnes_gamma2(s, opts)
            - 2.0 * log_barnes_gamma2(1.0 - s, opts)
            + log_gamma(1.0 - s)
            - log_gamma(s)
        )
    except PoleError as exc:
        raise SingularFactorError("double-gamma block", str(exc)) from None
    try:
        cusp_block = sig.n * (log_gamma(1.5 - s) - log_gamma(s + 0.5))
    except PoleError as exc:
        raise SingularFactorError("cusp gamma ratio", str(exc)) from None
    log_total = (
        c.C * (2.0 * s - 1.0)
        + cmath.log(phi_val)
        + _chi(sig) * gamma2_block
        + cusp_block
        + sine_block
    )
    sign = -1 if (c.A // 2) % 2 else 1
    return FactorValue.from_log(log_total, sign=sign)


def ruelle_fe_rhs(
    sig: Signature,
    sc: ScatteringModel,
    s: complex,
) -> complex:
    """Right side of the Ruelle functional equation, the value of R(s) R(-s).

    (phi(s) phi(-s))^(-1) (4 sin^2 pi s)^(2g-2+n) / (4 s^2 - 1)^n
    * prod_j (sin pi s / sin(pi s / m_j))^2.
    All exponents are integers, so no branch choices arise.
    """
    s = complex(s)
    if sig.n >= 1 and (abs(s - 0.5) < 1e-12 or abs(s + 0.5) < 1e-12):
        raise PoleError("Ruelle functional equation is singular at s = 1/2 and s = -1/2")
    euler = 2 * sig.g - 2 + sig.n
    if _near_integer(s) and euler < 0:
        raise PoleError(f"sin(pi s) vanishes at s={s} with negative exponent")
    for m in sig.orders:
        if _near_integer(s / m):
            raise PoleError(f"sin(pi s / {m}) vanishes at s={s}")
    sin_pis = cmath.sin(math.pi * s)
    phi_product = sc.phi(s) * sc.phi(-s)
    value = (4.0 * sin_pis * sin_pis) ** euler / phi_product
    value /= (4.0 * s * s - 1.0) ** sig.n
    for m in sig.orders:
        ratio = sin_pis / cmath.sin(math.pi * s / m)
        value *= ratio * ratio
    return value


def ruelle_leading_at_zero(sig: Signature, sc: ScatteringModel) -> tuple[int, float]:
    """Order and leading coefficient of the Ruelle zeta function at s = 0.

    order = 2g - 2 + n - n0 and
    coeff = (-1)^(A/2 + 1) (2 pi)^(2g-2+n) / phi_tilde_0 * prod_j m_j,
    using the model's stored leading coefficient of phi.
    """
    if sc.n != sig.n:
        raise SingularFactorError("scattering determinant",
                                  "cusp count disagrees with the signature")
    euler = 2 * sig.g - 2 + sig.n
    order = euler - sc.n0
    sign = -1.0 if (sc.A // 2) % 2 == 0 else 1.0
    coeff = sign * (2.0 * math.pi) ** euler / sc.phi_tilde_0
    for m in sig.orders:
        coeff *= m
    return order, coeff


def c1(sig: Signature, sc: ScatteringModel) -> float:
    """Constant with det'(Laplacian) = c1 * Z'(1)."""
    c = constants(sig, sc)
    chi = _chi(sig)
    log_total = (
        (sig.n - c.A / 2.0) * math.log(2.0)
        + 0.5 * chi * math.log(2.0 * math.pi)
        + c.log_E
    )
    for m in sig.orders:
        for k in range(1, m):
            log_total += (2 * k - 1 - m) / m * math.lgamma(k / m)
    return math.exp(log_total)


def c0(sig: Signature, sc: ScatteringModel) -> float:
    """Constant with det'(Laplacian) = c0 * (renormalized Z at 0)."""
    c = constants(sig, sc)
    chi = _chi(sig)
    log_total = (
        (sig.n - c.A / 2.0) * math.log(2.0)
        - 0.5 * chi * math.log(2.0 * math.pi)
        + c.log_E
    )
    for m in sig.orders:
        log_total -= (m - 1) / m * math.log(m)
        for k in range(1, m):
            log_total += (2 * k + 1 - m) / m * math.lgamma(k / m)
    sign = -1.0 if (c.A // 2) % 2 == 0 else 1.0
    return sign * sc.phi_tilde_0 * math.exp(log_total)
