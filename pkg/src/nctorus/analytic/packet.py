"""Polynomial times Gaussian packets on ``R x Z/cZ``.

A :class:`GaussianPacket` is a finite sum of terms

    x -> poly(x) * exp(quad * x**2 / 2 + lin * x)

each supported on a single leg ``alpha`` of ``Z/cZ``. Shifts, phases and
derivatives keep packets inside this class, so every module operation can be
evaluated in closed form.
"""

import cmath
import logging
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import Polynomial
from numpy.polynomial import polynomial as P

from nctorus.exceptions import NonIntegrableError, ShapeMismatchError

logger = logging.getLogger(__name__)

__all__ = ["GaussianPacket", "Term"]


def _trim(coeffs: Iterable[complex]) -> tuple[complex, ...]:
    values = [complex(c) for c in coeffs]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


@dataclass(frozen=True)
class Term:
    """One summand ``poly(x) exp(quad x^2/2 + lin x)`` on leg ``alpha``."""

    alpha: int
    poly: tuple[complex, ...]
    quad: complex
    lin: complex

    def value(self, x: float | np.ndarray) -> complex | np.ndarray:
        return P.polyval(x, self.poly) * np.exp(self.quad * x * x / 2 + self.lin * x)

    def polynomial(self) -> Polynomial:
        return Polynomial(self.poly)


@dataclass(frozen=True)
class GaussianPacket:
    """
    Element of ``E_{n,m}(theta)`` given as a finite sum of Gaussian terms.

    Parameters
    ----------
    m_index : int
        Number of legs ``|m|``.
    terms : tuple[Term, ...]
        Terms; normalized on construction (legs reduced mod ``m_index``,
        terms with equal ``(alpha, quad, lin)`` merged, zero polynomials
        dropped).

    Raises
    ------
    NonIntegrableError
        If some term has ``Re(quad) >= 0``.
    """

    m_index: int
    terms: tuple[Term, ...] = ()

    def __post_init__(self) -> None:
        if self.m_index <= 0:
            raise ShapeMismatchError(f"leg count must be positive, got {self.m_index}")
        merged: dict[tuple[int, complex, complex], np.ndarray] = {}
        for term in self.terms:
            key = (term.alpha % self.m_index, complex(term.quad), complex(term.lin))
            coeffs = np.asarray(term.poly, dtype=complex)
            if key in merged:
                merged[key] = P.polyadd(merged[key], coeffs)
            else:
                merged[key] = coeffs
        normalized = []
        for (alpha, quad, lin), coeffs in merged.items():
            poly = _trim(coeffs)
            if not poly:
                continue
            if not quad.real < 0:
                raise NonIntegrableError(
                    f"term on leg {alpha} has quad={quad} with Re(quad) >= 0"
                )
            normalized.append(Term(alpha, poly, quad, lin))
        object.__setattr__(self, "terms", tuple(normalized))

    @classmethod
    def zero(cls, m_index: int) -> "GaussianPacket":
        return cls(m_index)

    @classmethod
    def gaussian(
        cls,
        m_index: int,
        alpha: int,
        quad: complex,
        lin: complex = 0,
        poly: Sequence[complex] = (1,),
    ) -> "GaussianPacket":
        return cls(m_index, (Term(alpha, tuple(poly), quad, lin),))

    def is_zero(self) -> bool:
        return not self.terms

    def _map_terms(self, fn: Callable[[Term], Term], m_index: int | None = None) -> "GaussianPacket":
        return GaussianPacket(
            self.m_index if m_index is None else m_index,
            tuple(fn(term) for term in self.terms),
        )

    def _check_same_legs(self, other: "GaussianPacket") -> None:
        if self.m_index != other.m_index:
            raise ShapeMismatchError(
                f"packets live on {self.m_index} and {other.m_index} legs"
            )

    def __add__(self, other: "GaussianPacket") -> "GaussianPacket":
        self._check_same_legs(other)
        return GaussianPacket(self.m_index, self.terms + other.terms)

    def __neg__(self) -> "GaussianPacket":
        return self * -1

    def __sub__(self, other: "GaussianPacket") -> "GaussianPacket":
        return self + (-other)

    def __mul__(self, scalar: complex) -> "GaussianPacket":
        scalar = complex(scalar)
        return self._map_terms(
            lambda t: Term(t.alpha, tuple(scalar * c for c in t.poly), t.quad, t.lin)
        )

    __rmul__ = __mul__

    def evaluate(self, x: float, alpha: int) -> complex:
        alpha %= self.m_index
        return complex(
            sum((t.value(x) for t in self.terms if t.alpha == alpha), 0j)
        )

    def evaluate_many(self, points: Iterable[tuple[float, int]]) -> np.ndarray:
        return np.array([self.evaluate(x, alpha) for x, alpha in points], dtype=complex)

    def shifted(self, s: complex) -> "GaussianPacket":
        """The packet ``x -> f(x - s)``."""
        step = Polynomial([-s, 1])

        def shift(t: Term) -> Term:
            const = cmath.exp(t.quad * s * s / 2 - t.lin * s)
            poly = t.polynomial()(step).coef * const
            return Term(t.alpha, tuple(poly), t.quad, t.lin - t.quad * s)

        return self._map_terms(shift)

    def with_phase(
        self, lin: complex, leg_factor: Callable[[int], complex] | None = None
    ) -> "GaussianPacket":
        """Multiply by ``exp(lin * x)`` and, on leg ``alpha``, by ``leg_factor(alpha)``."""

        def phase(t: Term) -> Term:
            factor = 1.0 if leg_factor is None else leg_factor(t.alpha)
            return Term(
                t.alpha, tuple(factor * c for c in t.poly), t.quad, t.lin + lin
            )

        return self._map_terms(phase)

    def relabeled(
        self, leg_map: Callable[[int], int], m_index: int | None = None
    ) -> "GaussianPacket":
        """Move the term on leg ``alpha`` to leg ``leg_map(alpha)``."""
        return self._map_terms(
            lambda t: Term(leg_map(t.alpha), t.poly, t.quad, t.lin), m_index
        )

    def times_polynomial(self, coeffs: Sequence[complex]) -> "GaussianPacket":
        return self._map_terms(
            lambda t: Term(t.alpha, tuple(P.polymul(t.poly, coeffs)), t.quad, t.lin)
        )

    def derivative(self) -> "GaussianPacket":
        """Exact ``d/dx``."""

        def diff(t: Term) -> Term:
            poly = t.polynomial()
            out = poly.deriv() + poly * Polynomial([t.lin, t.quad])
            return Term(t.alpha, tuple(out.coef), t.quad, t.lin)

        return self._map_terms(diff)

    def conjugate(self) -> "GaussianPacket":
        return self._map_terms(
            lambda t: Term(
                t.alpha,
                tuple(complex(c).conjugate() for c in t.poly),
                complex(t.quad).conjugate(),
                complex(t.lin).conjugate(),
            )
        )

    def max_abs_difference(
        self, other: "GaussianPacket", points: Iterable[tuple[float, int]]
    ) -> float:
        self._check_same_legs(other)
        points = list(points)
        if not points:
            return 0.0
        return float(np.max(np.abs(self.evaluate_many(points) - other.evaluate_many(points))))
