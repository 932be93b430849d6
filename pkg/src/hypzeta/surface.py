"""Surface signatures and everything integer-valued that hangs off them.

A finite-area hyperbolic surface is described by its signature
(genus; cusps; cone-point orders). From the signature alone we get the
hyperbolic area, the exponential constants of the determinant formula,
and the full integer order tables of the Selberg zeta function Z(s) and
the Ruelle zeta function R(s) at the points where they are known in
closed form. Positive return values are zero orders, negative ones are
pole orders.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, MismatchError
from .special_functions import ZETA_PRIME_MINUS_ONE

__all__ = [
    "Signature",
    "SurfaceConstants",
    "parse_signature",
    "area",
    "constants",
    "order_Z",
    "order_R",
]


@dataclass(frozen=True)
class Signature:
    """Surface type (g; n; m_1, ..., m_v): genus, cusps, cone orders."""

    g: int
    n: int
    orders: tuple[int, ...] = ()

    def __post_init__(self):
        if self.g < 0 or self.n < 0:
            raise ValueError("genus and cusp count must be non-negative")
        object.__setattr__(self, "orders", tuple(int(m) for m in self.orders))
        if any(m < 2 for m in self.orders):
            raise ValueError("every cone order must be >= 2")
        if self.normalized_area() <= 0:
            raise ValueError(
                f"signature {self.label()} has non-positive hyperbolic area"
            )

    @property
    def v(self) -> int:
        return len(self.orders)

    def normalized_area(self) -> Fraction:
        """Area divided by 2*pi, as an exact rational."""
        total = Fraction(2 * self.g - 2 + self.n)
        for m in self.orders:
            total += 1 - Fraction(1, m)
        return total

    def label(self) -> str:
        ms = ",".join(str(m) for m in self.orders)
        return f"({self.g};{self.n};{ms})"

    def to_text(self) -> str:
        """Signature in the CLI text format g,n,m1:m2:...:mv."""
        return f"{self.g},{self.n}," + ":".join(str(m) for m in self.orders)


def parse_signature(text: str) -> Signature:
    """Parse the text form "g,n,m1:m2:...:mv" (ramification part may be empty)."""
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError(
            f"expected signature as g,n,m1:m2:...:mv (got {text!r})"
        )
    try:
        g = int(parts[0])
        n = int(parts[1])
        orders = tuple(int(p) for p in parts[2].split(":") if p.strip())
    except ValueError as exc:
        raise ValueError(f"malformed signature {text!r}: {exc}") from None
    return Signature(g, n, orders)


@dataclass(frozen=True)
class SurfaceConstants:
    """Constants of the closed-form Laplacian determinant for one surface.

    area    hyperbolic area |X|
    A       cusp parity constant (always an even integer)
    B, C, D coefficients of the exponential factor exp(B(s-1/2)^2 + C(s-1/2) + D)
    log_E   log of the positive constant tying det'(Laplacian) to Z'(1)
    """

    area: float
    A: int
    B: float
    C: float
    D: float
    log_E: float


def area(sig: Signature) -> float:
    """Hyperbolic area 2*pi*(2g - 2 + n + sum(1 - 1/m_j))."""
    return 2.0 * math.pi * float(sig.normalized_area())


def _elliptic_log_sum(sig: Signature) -> float:
    return sum((m * m - 1) / (6.0 * m) * math.log(m) for m in sig.orders)


def constants(sig: Signature, sc) -> SurfaceConstants:
    """All determinant-formula constants for a surface with scattering data sc.

    Requires sc.n == sig.n; A is taken from the scattering model.
    """
    if sc.n != sig.n:
        raise MismatchError(
            f"scattering model has {sc.n} cusps but signature {sig.label()} has {sig.n}"
        )
    chi = float(sig.normalized_area())  # |X| / (2 pi)
    log_2pi = math.log(2.0 * math.pi)
    ell = _elliptic_log_sum(sig)
    a_const = sc.A
    d_const = (
        ell
        + 0.5 * sig.n * log_2pi
        - chi * (0.5 * log_2pi - 2.0 * ZETA_PRIME_MINUS_ONE)
        - 0.5 * a_const * math.log(2.0)
    )
    log_e = ell + chi * (2.0 * ZETA_PRIME_MINUS_ONE - 0.25)
    return SurfaceConstants(
        area=2.0 * math.pi * chi,
        A=a_const,
        B=-chi,
        C=-sig.n * math.log(2.0),
        D=d_const,
        log_E=log_e,
    )


def _as_twice_integer(point) -> int:
    """Map an integer or half-integer input to round(2*point), else raise."""
    doubled = 2.0 * float(point)
    if abs(doubled - round(doubled)) > 1e-9:
        raise DomainError(f"order is only defined at integers and half-integers, got {point}")
    return int(round(doubled))


def order_Z(sig: Signature, n0: int, point) -> int:
    """Order of the Selberg zeta function at an integer or half-integer point.

    Covered points: s = 1 (simple zero), s = 0, the negative half-integers
    (pole of order n), the negative integers, and the integers >= 2 where
    the Euler product is regular and non-vanishing. n0 is the order of the
    scattering determinant at s = 0.
    """
    twice = _as_twice_integer(point)
    if twice % 2 != 0:
        if twice < 0:
            return -sig.n
        raise DomainError(
            f"order of Z at positive half-integer {point} is not covered"
        )
    k = twice // 2
    if k == 1:
        return 1
    if k == 0:
        return 2 * sig.g - 1 + sig.n - n0
    if k >= 2:
        return 0
    k = -k
    floor_sum = sum(k - k // m for m in sig.orders)
    return (2 * k + 1) * (2 * sig.g - 2 + sig.n) + 2 * floor_sum


def order_R(sig: Signature, n0: int, point: int) -> int:
    """Order of the Ruelle zeta function at an integer point."""
    point = int(point)
    if point == 1:
        return 1
    if point >= 2:
        return 0
    euler = 2 * sig.g - 2 + sig.n
    if point == 0:
        return euler - n0
    if point == -1:
        return 2 * (euler + sig.v) + n0 - 1
    k = -point
    divisors = sum(1 for m in sig.orders if k % m == 0)
    return 2 * (euler + sig.v - divisors)
