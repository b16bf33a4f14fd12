"""Finite Laurent polynomials in the generators of ``A_theta``.

An :class:`AlgebraElement` is ``sum c_{n1,n2} U1^n1 U2^n2`` with the relation
``U1 U2 = e(theta) U2 U1``. It acts on packets from the right (as
``A_theta``) or from the left (as ``A_{g theta}``).
"""

import cmath
import math
from collections.abc import Mapping
from dataclasses import dataclass, field

from nctorus.analytic.modules import ModuleLabel, act_generator
from nctorus.analytic.packet import GaussianPacket
from nctorus.exceptions import ShapeMismatchError

__all__ = ["AlgebraElement"]

_THETA_TOL = 1e-12


@dataclass(frozen=True)
class AlgebraElement:
    """
    Element of ``A_theta`` with finitely many nonzero coefficients.

    Attributes
    ----------
    theta : float
        Parameter of the algebra.
    coeffs : Mapping[tuple[int, int], complex]
        Coefficient of the monomial ``U1^n1 U2^n2`` at key ``(n1, n2)``.
    """

    theta: float
    coeffs: Mapping[tuple[int, int], complex] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cleaned = {
            (int(n1), int(n2)): complex(c)
            for (n1, n2), c in self.coeffs.items()
            if c != 0
        }
        object.__setattr__(self, "coeffs", cleaned)

    @classmethod
    def one(cls, theta: float) -> "AlgebraElement":
        return cls(theta, {(0, 0): 1})

    @classmethod
    def monomial(cls, theta: float, n1: int, n2: int, coeff: complex = 1) -> "AlgebraElement":
        return cls(theta, {(n1, n2): coeff})

    def coefficient(self, n1: int, n2: int) -> complex:
        return self.coeffs.get((n1, n2), 0j)

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check_theta(self, theta: float) -> None:
        if abs(self.theta - theta) > _THETA_TOL:
            raise ShapeMismatchError(
                f"element of A_{self.theta} cannot act where A_{theta} is expected"
            )

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check_theta(other.theta)
        out = dict(self.coeffs)
        for key, c in other.coeffs.items():
            out[key] = out.get(key, 0j) + c
        return AlgebraElement(self.theta, out)

    def __mul__(self, other: "AlgebraElement | complex") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return AlgebraElement(
                self.theta, {k: complex(other) * c for k, c in self.coeffs.items()}
            )
        self._check_theta(other.theta)
        out: dict[tuple[int, int], complex] = {}
        for (a1, b1), x in self.coeffs.items():
            for (a2, b2), y in other.coeffs.items():
                # U2^b1 U1^a2 = e(-theta b1 a2) U1^a2 U2^b1
                phase = cmath.exp(-2j * math.pi * self.theta * b1 * a2)
                key = (a1 + a2, b1 + b2)
                out[key] = out.get(key, 0j) + phase * x * y
        return AlgebraElement(self.theta, out)

    def __rmul__(self, scalar: complex) -> "AlgebraElement":
        return self * scalar

    def derivation(self, tau: complex) -> "AlgebraElement":
        """``delta_tau(U1^n1 U2^n2) = 2 pi i (n1 tau + n2) U1^n1 U2^n2``."""
        return AlgebraElement(
            self.theta,
            {
                (n1, n2): 2j * math.pi * (n1 * complex(tau) + n2) * c
                for (n1, n2), c in self.coeffs.items()
            },
        )

    def act_right(self, f: GaussianPacket, label: ModuleLabel) -> GaussianPacket:
        """``f . a`` for ``a`` in ``A_theta``."""
        self._check_theta(label.theta)
        out = GaussianPacket.zero(f.m_index)
        for (n1, n2), c in self.coeffs.items():
            term = act_generator(f, label, "right", "U1", n1)
            term = act_generator(term, label, "right", "U2", n2)
            out = out + term * c
        return out

    def act_left(self, f: GaussianPacket, label: ModuleLabel) -> GaussianPacket:
        """``a . f`` for ``a`` in ``A_{g theta}``."""
        self._check_theta(label.left_theta)
        out = GaussianPacket.zero(f.m_index)
        for (n1, n2), c in self.coeffs.items():
            term = act_generator(f, label, "left", "U2", n2)
            term = act_generator(term, label, "left", "U1", n1)
            out = out + term * c
        return out
