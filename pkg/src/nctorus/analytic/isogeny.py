"""Push-forward and pull-back along the isogeny ``T_theta -> T_{N theta}``.

The isogeny is the embedding ``A_{N theta} -> A_theta``,
``U1 -> U1^N``, ``U2 -> U2``.

* push: ``E_{1,m}(theta)`` viewed over ``A_{N theta}`` is ``E_{N,m}(N theta)``
  via ``f(x, alpha) -> f(x, N alpha)`` (``gcd(N, m) = 1``).
* pull: ``pi^* E_{1,m}(N theta)`` is modeled by ``N``-tuples
  ``F(0), ..., F(N-1)`` of elements of ``E_{1,m}(N theta)`` (the function
  ``F: Z -> E`` with ``F(n + N) = F(n) U1^-1``). It is identified with
  ``E_{1,mN}(theta)`` via ``g(x, r + jN) = F(r)(x - r s/N, j)``,
  ``s = (1 + m N theta)/m``.
"""

import logging
import math
from dataclasses import dataclass
from typing import Literal

from nctorus.analytic.modules import ModuleLabel, act_generator, e
from nctorus.analytic.packet import GaussianPacket, Term
from nctorus.exceptions import ShapeMismatchError
from nctorus.sl2_arith import SL2Mat

logger = logging.getLogger(__name__)

__all__ = ["PulledBackSection", "isogeny_target_label", "isogeny_transport"]

Direction = Literal["push", "pull"]


def _check_shape(label: ModuleLabel, N: int, direction: Direction) -> None:
    if N < 1:
        raise ShapeMismatchError(f"isogeny degree must be positive, got {N}")
    if label.n != 1 or label.m <= 0:
        raise ShapeMismatchError(
            f"isogeny transport needs a label E_{{1,m}} with m > 0, got {label.g}"
        )
    if direction == "push" and math.gcd(N, label.m) != 1:
        raise ShapeMismatchError(f"push needs gcd(N, m) = 1, got N={N}, m={label.m}")


def isogeny_target_label(label: ModuleLabel, N: int, direction: Direction) -> ModuleLabel:
    """Label of the transported module."""
    _check_shape(label, N, direction)
    m = label.m
    if direction == "push":
        return ModuleLabel(SL2Mat.from_bottom_row(m, N), N * label.theta)
    return ModuleLabel(SL2Mat(1, 0, m * N, 1), label.theta / N)


@dataclass(frozen=True)
class PulledBackSection:
    """
    Element of ``pi^* E`` for ``E = E_{1,m}(N theta)``.

    Attributes
    ----------
    parts : tuple[GaussianPacket, ...]
        ``F(0), ..., F(N-1)``.
    label : ModuleLabel
        The label of ``E`` (over ``N theta``).
    """

    parts: tuple[GaussianPacket, ...]
    label: ModuleLabel

    def __post_init__(self) -> None:
        for part in self.parts:
            self.label.check_packet(part)

    @property
    def N(self) -> int:
        return len(self.parts)

    @classmethod
    def from_packet(cls, f: GaussianPacket, label: ModuleLabel, N: int) -> "PulledBackSection":
        """The section ``f (x) 1``."""
        zero = GaussianPacket.zero(f.m_index)
        return cls((f,) + (zero,) * (N - 1), label)

    def act(self, gen: Literal["U1", "U2"]) -> "PulledBackSection":
        """Right action of ``A_theta`` with ``theta = label.theta / N``."""
        theta = self.label.theta / self.N
        if gen == "U1":
            last = act_generator(self.parts[-1], self.label, "right", "U1")
            return PulledBackSection((last,) + self.parts[:-1], self.label)
        return PulledBackSection(
            tuple(
                act_generator(part, self.label, "right", "U2") * e(r * theta)
                for r, part in enumerate(self.parts)
            ),
            self.label,
        )


def isogeny_transport(
    f: GaussianPacket | PulledBackSection,
    N: int,
    direction: Direction,
    label: ModuleLabel,
) -> GaussianPacket:
    """
    Transport a section along the isogeny of degree ``N``.

    Parameters
    ----------
    f : GaussianPacket or PulledBackSection
        For ``push`` an element of ``E_{1,m}(theta)``; for ``pull`` an
        element of ``pi^* E_{1,m}(N theta)`` (a bare packet means
        ``f (x) 1``).
    N : int
        Degree of the isogeny.
    direction : {"push", "pull"}
        Which identification to apply.
    label : ModuleLabel
        Label of the source ``E_{1,m}``.

    Returns
    -------
    GaussianPacket
        Packet on the target label (see :func:`isogeny_target_label`).

    Raises
    ------
    ShapeMismatchError
        If the label or the section does not have the required shape.
    """
    target = isogeny_target_label(label, N, direction)
    m = label.m
    if direction == "push":
        if not isinstance(f, GaussianPacket):
            raise ShapeMismatchError("push expects a GaussianPacket")
        label.check_packet(f)
        n_inv = pow(N, -1, m) if m > 1 else 0
        return f.relabeled(lambda alpha: alpha * n_inv, target.legs)

    section = (
        f if isinstance(f, PulledBackSection) else PulledBackSection.from_packet(f, label, N)
    )
    if section.N != N or section.label != label:
        raise ShapeMismatchError(
            f"section has {section.N} parts over {section.label.g}, expected {N} over {label.g}"
        )
    s = (1 + m * label.theta) / m
    terms: list[Term] = []
    for r, part in enumerate(section.parts):
        moved = part.shifted(r * s / N)
        terms.extend(
            Term(r + t.alpha * N, t.poly, t.quad, t.lin) for t in moved.terms
        )
    return GaussianPacket(target.legs, tuple(terms))
