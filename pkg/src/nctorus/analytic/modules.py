"""Basic modules ``E_g(theta)`` and their standard holomorphic structures.

For ``g = [[a, b], [c, d]]`` the right ``A_theta``-module ``E_g(theta)`` is
modeled on functions ``f(x, alpha)``, ``x`` real and ``alpha`` in
``Z/|c|Z``, with

    (f U1)(x, alpha) = f(x - (d + c*theta)/c, alpha - 1)
    (f U2)(x, alpha) = e(x - alpha*d/c) f(x, alpha)

and the commuting left action of ``A_{g theta}``

    (U1 f)(x, alpha) = f(x - 1/c, alpha - a)
    (U2 f)(x, alpha) = e(x/(c*theta + d) - alpha/c) f(x, alpha).

The standard holomorphic structure is
``dbar_z f = f' + 2*pi*i*(tau*mu*x + z) f``.
"""

import cmath
import logging
import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from nctorus.analytic.packet import GaussianPacket
from nctorus.exceptions import (
    DegenerateDegreeError,
    DomainError,
    ShapeMismatchError,
    ZeroRankError,
)
from nctorus.sl2_arith import RANK_TOL, SL2Mat, lattice_coordinates

logger = logging.getLogger(__name__)

__all__ = [
    "ModuleLabel",
    "act_generator",
    "dbar",
    "h1_representatives",
    "holomorphic_coefficients",
    "is_lattice_translation",
    "phi_basis",
    "sample_points",
    "translate",
    "translate_iso_check",
    "translation_twist",
]

Side = Literal["right", "left"]
Generator = Literal["U1", "U2"]

TWO_PI_I = 2j * math.pi


def e(t: complex) -> complex:
    """``exp(2 pi i t)``."""
    return cmath.exp(TWO_PI_I * t)


@dataclass(frozen=True)
class ModuleLabel:
    """
    The basic module ``E_{n,m}(theta)`` with ``(m, n) = (c, d)`` of ``g``.

    Raises
    ------
    ZeroRankError
        If ``rk(g, theta)`` vanishes.
    DomainError
        If ``rk(g, theta) < 0``; odd modules are handled by a shift.
    """

    g: SL2Mat
    theta: float

    def __post_init__(self) -> None:
        rk = self.g.rank(self.theta)
        if abs(rk) < RANK_TOL:
            raise ZeroRankError(f"rk({self.g}, {self.theta}) vanishes")
        if rk < 0:
            raise DomainError(f"rk({self.g}, {self.theta}) = {rk} is negative")

    @classmethod
    def from_nm(cls, n: int, m: int, theta: float) -> "ModuleLabel":
        return cls(SL2Mat.from_bottom_row(m, n), theta)

    @property
    def n(self) -> int:
        return self.g.d

    @property
    def m(self) -> int:
        return self.g.c

    @property
    def degree(self) -> int:
        return self.g.c

    @property
    def rk(self) -> float:
        return self.g.rank(self.theta)

    @property
    def mu(self) -> float:
        return self.g.c / self.rk

    @property
    def legs(self) -> int:
        return max(1, abs(self.g.c))

    @property
    def left_theta(self) -> float:
        """Parameter of the algebra ``A_{g theta}`` acting on the left."""
        return self.g.mobius(self.theta)

    def require_degree(self) -> None:
        if self.g.c == 0:
            raise DegenerateDegreeError(
                f"label {self.g} has degree 0; use the algebra model instead"
            )

    def check_packet(self, f: GaussianPacket) -> None:
        if f.m_index != self.legs:
            raise ShapeMismatchError(
                f"packet has {f.m_index} legs, E_{{{self.n},{self.m}}} needs {self.legs}"
            )


def act_generator(
    f: GaussianPacket,
    label: ModuleLabel,
    side: Side,
    gen: Generator,
    power: int = 1,
) -> GaussianPacket:
    """
    Apply ``U1**power`` or ``U2**power`` on the given side.

    Raises
    ------
    DegenerateDegreeError
        If the label has degree 0.
    ShapeMismatchError
        If the packet does not live on ``|deg|`` legs.
    """
    label.require_degree()
    label.check_packet(f)
    c, d, a = label.g.c, label.g.d, label.g.a
    if side == "right":
        if gen == "U1":
            s = label.rk / c
            return f.shifted(power * s).relabeled(lambda alpha: alpha + power)
        return f.with_phase(
            TWO_PI_I * power, lambda alpha: e(-power * alpha * d / c)
        )
    if side == "left":
        if gen == "U1":
            return f.shifted(power / c).relabeled(lambda alpha: alpha + power * a)
        return f.with_phase(
            TWO_PI_I * power / label.rk, lambda alpha: e(-power * alpha / c)
        )
    raise ValueError(f"unknown side {side!r}")


def holomorphic_coefficients(label: ModuleLabel, z: complex, tau: complex) -> tuple[complex, complex]:
    """``(2 pi i tau mu, 2 pi i z)``: the multiplier of ``dbar_z`` is ``q x + w``."""
    return (TWO_PI_I * complex(tau) * label.mu, TWO_PI_I * complex(z))


def dbar(f: GaussianPacket, label: ModuleLabel, z: complex, tau: complex) -> GaussianPacket:
    """
    The standard holomorphic structure ``f' + 2 pi i (tau mu x + z) f``.

    Raises
    ------
    DegenerateDegreeError
        On degree-0 labels, whose structure is ``delta_tau + 2 pi i z``.
    """
    label.require_degree()
    label.check_packet(f)
    q, w = holomorphic_coefficients(label, z, tau)
    return f.derivative() + f.times_polynomial((w, q))


def phi_basis(label: ModuleLabel, z: complex, alpha: int, tau: complex) -> GaussianPacket:
    """
    The holomorphic section ``phi_alpha^z = e(-tau mu x^2/2 - z x) delta_alpha``.

    Raises
    ------
    DomainError
        Unless ``deg > 0`` and ``mu > 0``.

    Examples
    --------
    >>> label = ModuleLabel(SL2Mat(1, 0, 1, 1), 0.0)
    >>> phi_basis(label, 0, 0, -1j).terms[0].quad
    (-6.283185307179586+0j)
    """
    if label.degree <= 0 or label.mu <= 0:
        raise DomainError(
            f"phi-basis needs deg > 0 and mu > 0, got deg={label.degree}"
        )
    q, w = holomorphic_coefficients(label, z, tau)
    return GaussianPacket.gaussian(label.legs, alpha, -q, -w)


def sample_points(label: ModuleLabel, count: int = 10, spread: float = 1.5) -> list[tuple[float, int]]:
    """Deterministic ``(x, alpha)`` samples cycling over the legs."""
    xs = np.linspace(-spread, spread, count)
    return [(float(x), i % label.legs) for i, x in enumerate(xs)]


def translate(f: GaussianPacket, label: ModuleLabel, v1: float, v2: float) -> GaussianPacket:
    """``f(x) -> e(mu v1 x) f(x + v2)``."""
    label.check_packet(f)
    return f.shifted(-v2).with_phase(TWO_PI_I * label.mu * v1)


def translation_twist(label: ModuleLabel, v1: float, v2: float, tau: complex) -> complex:
    """Shift ``mu (tau v2 - v1)`` of the twist under translation by ``(v1, v2)``."""
    return label.mu * (complex(tau) * v2 - v1)


def _generic_packet(label: ModuleLabel) -> GaussianPacket:
    packet = GaussianPacket.zero(label.legs)
    for alpha in range(label.legs):
        packet = packet + GaussianPacket.gaussian(
            label.legs, alpha, -1.0 - 0.25j * alpha, 0.2 + 0.1j, (1.0, 0.5 - 0.3j)
        )
    return packet


def _relative_error(lhs: GaussianPacket, rhs: GaussianPacket, points: list[tuple[float, int]]) -> float:
    reference = np.abs(rhs.evaluate_many(points))
    scale = max(1.0, float(np.max(reference))) if reference.size else 1.0
    return lhs.max_abs_difference(rhs, points) / scale


def translate_iso_check(
    label: ModuleLabel,
    z: complex,
    v1: float,
    v2: float,
    tau: complex,
    tol: float = 1e-10,
) -> bool:
    """
    Check that ``T f = e(mu v1 x) f(x + v2)`` intertwines translated structures.

    ``T`` must satisfy ``T(e(-v1) f U1) = (T f) U1``,
    ``T(e(-v2) f U2) = (T f) U2`` and
    ``dbar_{z + mu (tau v2 - v1)}(T f) = T(dbar_z f)``, verified pointwise on
    phi-basis packets (or a generic packet when ``mu <= 0``).
    """
    label.require_degree()
    if label.degree > 0 and label.mu > 0:
        sections = [phi_basis(label, z, alpha, tau) for alpha in range(label.legs)]
    else:
        sections = [_generic_packet(label)]
    points = sample_points(label)
    z_shifted = z + translation_twist(label, v1, v2, tau)
    worst = 0.0
    for f in sections:
        tf = translate(f, label, v1, v2)
        checks = (
            (
                translate(act_generator(f, label, "right", "U1") * e(-v1), label, v1, v2),
                act_generator(tf, label, "right", "U1"),
            ),
            (
                translate(act_generator(f, label, "right", "U2") * e(-v2), label, v1, v2),
                act_generator(tf, label, "right", "U2"),
            ),
            (
                dbar(tf, label, z_shifted, tau),
                translate(dbar(f, label, z, tau), label, v1, v2),
            ),
        )
        for lhs, rhs in checks:
            worst = max(worst, _relative_error(lhs, rhs, points))
    logger.debug(f"translation check residual {worst:.3e}")
    return worst <= tol


def is_lattice_translation(label: ModuleLabel, v1: float, v2: float, tau: complex, tol: float = 1e-9) -> bool:
    """True when the twist shift lies in ``(1/rk)(Z + tau Z)``."""
    p, q = lattice_coordinates(label.rk * translation_twist(label, v1, v2, tau), tau)
    return abs(p - round(p)) < tol and abs(q - round(q)) < tol


def h1_representatives(label: ModuleLabel, width: float = math.pi) -> list[GaussianPacket]:
    """Gaussians ``delta_beta exp(-width x^2)`` used as H^1 class representatives."""
    label.require_degree()
    return [
        GaussianPacket.gaussian(label.legs, beta, -2.0 * width)
        for beta in range(label.legs)
    ]
