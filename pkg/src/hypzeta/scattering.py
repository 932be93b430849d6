"""Scattering-determinant models.

Only determinant-level data is modeled: a callable phi(s) together with
the constants the closed-form theory consumes (order n0 and leading
coefficient of phi at 0, the value of phi at 1/2, and the even parity
constant A). Ships the modular-group determinant and the trivial
cusp-free model; custom models can be constructed programmatically.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable

from .errors import FitError, PoleError
from .special_functions import log_gamma, riemann_zeta

__all__ = [
    "ScatteringModel",
    "modular_phi",
    "modular_model",
    "trivial_model",
    "builtin_model",
    "BUILTIN_MODEL_LABELS",
    "phi_leading_at_zero",
]

_SING_TOL = 1e-8


@dataclass(frozen=True)
class ScatteringModel:
    """Determinant of a scattering matrix, with its derived constants.

    phi_tilde_0 is the leading coefficient of phi at 0 used by the
    closed-form leading-coefficient formulas; phi_half must be +1 or -1
    whenever there are cusps, and A is the even integer with
    (-1)^(A/2) = phi_half and 0 <= A <= 2n.
    """

    n: int
    phi: Callable[[complex], complex] = field(repr=False)
    n0: int
    phi_tilde_0: float
    phi_half: float
    A: int
    label: str

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("cusp count must be non-negative")
        if self.n >= 1 and self.phi_half not in (1.0, -1.0):
            raise ValueError("phi(1/2) must be +1 or -1 for a model with cusps")
        if self.A % 2 != 0:
            raise ValueError(f"A={self.A} must be even")
        if not 0 <= self.A <= 2 * self.n:
            raise ValueError(f"A={self.A} outside [0, 2n]")
        if self.n >= 1 and (-1.0) ** (self.A // 2) != self.phi_half:
            raise ValueError("sign (-1)^(A/2) inconsistent with phi(1/2)")
        if self.phi_tilde_0 == 0:
            raise ValueError("leading coefficient of phi at 0 cannot vanish")


def _neville_to_zero(xs, ys):
    """Polynomial extrapolation of (xs, ys) to x = 0."""
    vals = list(ys)
    m = len(vals)
    for level in range(1, m):
        for i in range(m - level):
            x0, x1 = xs[i], xs[i + level]
            vals[i] = (x1 * vals[i] - x0 * vals[i + 1]) / (x1 - x0)
    return vals[0]


def _richardson_limit(f, center: complex, h0: float = 1e-3, points: int = 4) -> complex:
    """Limit of f at `center` from evaluations at center + h0 / 2^i."""
    xs = [h0 / 2.0 ** i for i in range(points)]
    ys = [f(center + x) for x in xs]
    return _neville_to_zero(xs, ys)


def _modular_phi_direct(s: complex) -> complex:
    num = riemann_zeta(2.0 * s - 1.0)
    den = riemann_zeta(2.0 * s)
    if den == 0:
        raise PoleError(f"scattering determinant pole at zeta zero, s={s}")
    gamma_ratio = cmath.exp(log_gamma(s - 0.5) - log_gamma(s))
    return math.sqrt(math.pi) * gamma_ratio * num / den


def _near(s: complex, target: float, tol: float = _SING_TOL) -> bool:
    return abs(s - target) < tol


def modular_phi(s: complex) -> complex:
    """Scattering determinant of the modular group.

    phi(s) = sqrt(pi) * Gamma(s - 1/2)/Gamma(s) * zeta(2s - 1)/zeta(2s).
    The removable singularities at s = 1/2 - j (gamma pole cancelled by a
    zeta factor) are evaluated by a four-point Richardson limit; s = 1 is
    a genuine pole.
    """
    s = complex(s)
    if _near(s, 1.0):
        raise PoleError("modular scattering determinant has a pole at s=1")
    removable = False
    if abs(s.imag) < _SING_TOL:
        x = s.real
        # gamma-factor poles at s = 1/2 - j and the zeta(2s) pole at s = 1/2
        if x <= 0.5 + _SING_TOL and abs((0.5 - x) - round(0.5 - x)) < _SING_TOL:
            removable = True
    if removable:
        return _richardson_limit(_modular_phi_direct, complex(round(s.real * 2) / 2.0, 0.0))
    return _modular_phi_direct(s)


def modular_model() -> ScatteringModel:
    """Determinant data for the modular surface (signature (0;1;2,3)).

    The stored leading coefficient at 0 is +pi/3, the sign consistent with
    the positive limit 9/pi^2 of s^2 R(s); direct series expansion of phi
    at 0 gives -pi/3 instead. The verify suite evaluates and reports both
    rather than silently preferring one.
    """
    return ScatteringModel(
        n=1,
        phi=modular_phi,
        n0=1,
        phi_tilde_0=math.pi / 3.0,
        phi_half=-1.0,
        A=2,
        label="modular",
    )


def trivial_model() -> ScatteringModel:
    """Cusp-free model: phi identically 1, no continuous spectrum data."""
    return ScatteringModel(
        n=0,
        phi=lambda s: 1.0 + 0.0j,
        n0=0,
        phi_tilde_0=1.0,
        phi_half=1.0,
        A=0,
        label="trivial",
    )


BUILTIN_MODEL_LABELS = ("modular", "trivial")


def builtin_model(label: str) -> ScatteringModel:
    if label == "modular":
        return modular_model()
    if label == "trivial":
        return trivial_model()
    raise ValueError(f"unknown model {label!r}; choose from {BUILTIN_MODEL_LABELS}")


def phi_leading_at_zero(model: ScatteringModel) -> tuple[int, float]:
    """Order and leading coefficient of phi at 0, determined numerically.

    The order comes from log-log slope fitting of |phi| on the radii
    1e-2, 1e-3, 1e-4; the coefficient from even-part Richardson
    extrapolation of phi(s)/s^order on the same radii. Raises FitError if
    the slope does not lock onto an integer within 0.01, or if the result
    contradicts the model's stored n0 / |phi_tilde_0|.
    """
    radii = (1e-2, 1e-3, 1e-4)
    plus = [model.phi(complex(r, 0.0)) for r in radii]
    minus = [model.phi(complex(-r, 0.0)) for r in radii]
    slopes = []
    for i in range(len(radii) - 1):
        num = math.log(abs(plus[i])) - math.log(abs(plus[i + 1]))
        den = math.log(radii[i]) - math.log(radii[i + 1])
        slopes.append(num / den)
    order = round(slopes[-1])
    if any(abs(sl - order) > 0.01 for sl in slopes):
        raise FitError(f"slope fit {slopes} not within 0.01 of an integer")
    even_parts = []
    for r, fp, fm in zip(radii, plus, minus):
        even_parts.append(0.5 * (fp / r ** order + fm / (-r) ** order))
    coeff_c = _neville_to_zero([r * r for r in radii], even_parts)
    if abs(coeff_c.imag) > 1e-8 * max(1.0, abs(coeff_c)):
        raise FitError(f"leading coefficient {coeff_c} is not real")
    coeff = coeff_c.real
    if order != model.n0:
        raise FitError(f"fitted order {order} contradicts stored n0={model.n0}")
    if abs(abs(coeff) - abs(model.phi_tilde_0)) > 1e-6 * max(1.0, abs(coeff)):
        raise FitError(
            f"fitted |coefficient| {abs(coeff)} contradicts stored {abs(model.phi_tilde_0)}"
        )
    return order, coeff
