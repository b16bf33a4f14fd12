"""Integer and floating arithmetic for SL2(Z) labels.

A matrix ``g = [[a, b], [c, d]]`` with ``ad - bc = 1`` labels the basic module
``E_g(theta)``. This module provides composition, the invariants
degree/rank/slope, the Möbius action on ``theta`` and the two arithmetic
identities every other module relies on: the rank cocycle and the degree
identity.
"""

import logging
import math
import re
from dataclasses import dataclass

import numpy as np

from nctorus.exceptions import (
    CompositionOverflowError,
    DomainError,
    ZeroRankError,
)

logger = logging.getLogger(__name__)

__all__ = [
    "RANK_TOL",
    "SL2Mat",
    "TorusParams",
    "cocycle_residual",
    "compose",
    "degree",
    "degree_identity_residual",
    "gcdex",
    "invariants_of",
    "lattice_coordinates",
    "mobius",
    "random_sl2",
    "rank",
    "slope",
]

RANK_TOL = 1e-12
_INT64_MAX = 2**63 - 1

_MATRIX_PATTERN = re.compile(
    r"^\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*;\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*$"
)


def gcdex(a: int, b: int) -> tuple[int, int, int]:
    """
    Extended Euclidean algorithm.

    Returns
    -------
    tuple[int, int, int]
        ``(x, y, g)`` with ``g = x*a + y*b = gcd(a, b)`` and ``g >= 0``.

    Examples
    --------
    >>> gcdex(2, 3)
    (-1, 1, 1)
    >>> gcdex(0, -4)
    (0, -1, 4)
    """
    if not a and not b:
        return (0, 1, 0)
    x0, y0, x1, y1 = 1, 0, 0, 1
    r0, r1 = a, b
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if r0 < 0:
        return (-x0, -y0, -r0)
    return (x0, y0, r0)


def _checked(value: int) -> int:
    if abs(value) > _INT64_MAX:
        raise CompositionOverflowError(
            f"matrix entry {value} exceeds the signed 64-bit range"
        )
    return value


@dataclass(frozen=True)
class SL2Mat:
    """
    Unimodular integer matrix ``[[a, b], [c, d]]``.

    Parameters
    ----------
    a, b, c, d : int
        Matrix entries; ``a*d - b*c`` must equal 1.

    Raises
    ------
    DomainError
        If the entries are not integers or the determinant is not 1.

    Examples
    --------
    >>> g = SL2Mat(1, 0, 1, 1)
    >>> (g @ g).c
    2
    >>> g.rank(0.25)
    1.25
    """

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        for name in ("a", "b", "c", "d"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise DomainError(f"entry {name}={value!r} is not an integer")
            _checked(value)
        if self.a * self.d - self.b * self.c != 1:
            raise DomainError(
                f"determinant of [[{self.a},{self.b}],[{self.c},{self.d}]] is "
                f"{self.a * self.d - self.b * self.c}, expected 1"
            )

    @classmethod
    def identity(cls) -> "SL2Mat":
        return cls(1, 0, 0, 1)

    @classmethod
    def parse(cls, text: str) -> "SL2Mat":
        """Parse the ``"a,b;c,d"`` notation used on the command line."""
        match = _MATRIX_PATTERN.match(text)
        if match is None:
            raise DomainError(f"cannot parse matrix {text!r}, expected 'a,b;c,d'")
        a, b, c, d = (int(group) for group in match.groups())
        return cls(a, b, c, d)

    @classmethod
    def from_bottom_row(cls, c: int, d: int) -> "SL2Mat":
        """
        Complete a coprime bottom row ``(c, d)`` to a unimodular matrix.

        The module ``E_{n,m}`` only depends on ``(m, n) = (c, d)``; the top
        row is any solution of ``a*d - b*c = 1``.

        Raises
        ------
        DomainError
            If ``gcd(c, d) != 1``.
        """
        x, y, g = gcdex(d, c)
        if g != 1:
            raise DomainError(f"bottom row ({c}, {d}) is not coprime")
        # x*d + y*c = 1, so a = x and b = -y
        return cls(x, -y, c, d)

    def __matmul__(self, other: "SL2Mat") -> "SL2Mat":
        if not isinstance(other, SL2Mat):
            return NotImplemented
        return SL2Mat(
            _checked(self.a * other.a + self.b * other.c),
            _checked(self.a * other.b + self.b * other.d),
            _checked(self.c * other.a + self.d * other.c),
            _checked(self.c * other.b + self.d * other.d),
        )

    def __neg__(self) -> "SL2Mat":
        return SL2Mat(-self.a, -self.b, -self.c, -self.d)

    def __str__(self) -> str:
        return f"{self.a},{self.b};{self.c},{self.d}"

    def inverse(self) -> "SL2Mat":
        return SL2Mat(self.d, -self.b, -self.c, self.a)

    def transpose(self) -> "SL2Mat":
        return SL2Mat(self.a, self.c, self.b, self.d)

    def is_identity(self) -> bool:
        return (self.a, self.b, self.c, self.d) == (1, 0, 0, 1)

    def to_list(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    @property
    def degree(self) -> int:
        return self.c

    def rank(self, theta: float) -> float:
        return self.c * theta + self.d

    def slope(self, theta: float) -> float:
        return self.c / _nonzero_rank(self, theta)

    def mobius(self, theta: float) -> float:
        return (self.a * theta + self.b) / _nonzero_rank(self, theta)


def _nonzero_rank(g: SL2Mat, theta: float) -> float:
    rk = g.rank(theta)
    if abs(rk) < RANK_TOL:
        raise ZeroRankError(f"rk({g}, {theta}) = {rk} vanishes")
    return rk


def compose(g1: SL2Mat, g2: SL2Mat) -> SL2Mat:
    """Matrix product ``g1 g2``; raises CompositionOverflowError on overflow."""
    return g1 @ g2


def degree(g: SL2Mat) -> int:
    return g.c


def rank(g: SL2Mat, theta: float) -> float:
    return g.rank(theta)


def slope(g: SL2Mat, theta: float) -> float:
    return g.slope(theta)


def mobius(g: SL2Mat, theta: float) -> float:
    return g.mobius(theta)


def invariants_of(g: SL2Mat, theta: float) -> tuple[int, float, float, float]:
    """
    Degree, rank, slope and Möbius image of a label.

    Parameters
    ----------
    g : SL2Mat
        The label.
    theta : float
        Parameter of the noncommutative torus.

    Returns
    -------
    tuple[int, float, float, float]
        ``(deg, rk, mu, gtheta)`` with ``deg = c``, ``rk = c*theta + d``,
        ``mu = deg / rk`` and ``gtheta = (a*theta + b) / rk``.

    Raises
    ------
    ZeroRankError
        If ``|rk| < RANK_TOL``.

    Examples
    --------
    >>> invariants_of(SL2Mat(1, 0, 1, 1), 0.25)
    (1, 1.25, 0.8, 0.2)
    """
    rk = _nonzero_rank(g, theta)
    return (g.c, rk, g.c / rk, (g.a * theta + g.b) / rk)


def cocycle_residual(g1: SL2Mat, g2: SL2Mat, theta: float) -> float:
    """
    Relative residual of ``rk(g1 g2, theta) = rk(g1, g2 theta) rk(g2, theta)``.
    """
    lhs = (g1 @ g2).rank(theta)
    rhs = g1.rank(g2.mobius(theta)) * g2.rank(theta)
    return abs(lhs - rhs) / max(1.0, abs(lhs))


def degree_identity_residual(
    g1: SL2Mat, g2: SL2Mat, g3: SL2Mat, theta: float
) -> float:
    """
    Relative residual of the degree identity

    ``deg(g2 g1^-1) rk(g3) - deg(g3 g1^-1) rk(g2) + deg(g3 g2^-1) rk(g1) = 0``.
    """
    d21 = (g2 @ g1.inverse()).c
    d31 = (g3 @ g1.inverse()).c
    d32 = (g3 @ g2.inverse()).c
    terms = (
        d21 * g3.rank(theta),
        -d31 * g2.rank(theta),
        d32 * g1.rank(theta),
    )
    scale = max(1.0, *(abs(t) for t in terms))
    return abs(math.fsum(terms)) / scale


@dataclass(frozen=True)
class TorusParams:
    """
    Parameters ``(theta, tau)`` of the noncommutative complex torus.

    The convention throughout is ``Im(tau) < 0``.
    """

    theta: float
    tau: complex

    def __post_init__(self) -> None:
        if not math.isfinite(self.theta):
            raise DomainError(f"theta={self.theta} is not finite")
        if not complex(self.tau).imag < 0:
            raise DomainError(f"Im(tau) must be negative, got tau={self.tau}")

    def with_theta(self, theta: float) -> "TorusParams":
        return TorusParams(theta, self.tau)


def lattice_coordinates(w: complex, tau: complex) -> tuple[float, float]:
    """
    Real coordinates ``(p, q)`` with ``w = p + q*tau``.

    Examples
    --------
    >>> lattice_coordinates(2 - 3j, -1j)
    (2.0, 3.0)
    """
    w = complex(w)
    tau = complex(tau)
    q = w.imag / tau.imag
    p = w.real - q * tau.real
    return (p, q)


def random_sl2(rng: np.random.Generator, bound: int = 6) -> SL2Mat:
    """
    A random matrix with bottom row entries in ``[-bound, bound]``.

    The bottom row is drawn until coprime, completed by :meth:`SL2Mat.from_bottom_row`
    and then twisted by a random upper unipotent factor.
    """
    while True:
        c, d = (int(v) for v in rng.integers(-bound, bound + 1, size=2))
        if math.gcd(c, d) == 1:
            break
    k = int(rng.integers(-bound, bound + 1))
    return SL2Mat(1, k, 0, 1) @ SL2Mat.from_bottom_row(c, d)
