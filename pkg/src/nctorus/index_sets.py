"""Congruence arithmetic for the index sets ``I_{g1,g2}(a1, a2, a)``.

The pairing ``t_{g1,g2}`` sums over integers ``n`` satisfying two
congruences

    n = -c1*a + c12*a1        (mod |c12*c1|)
    n = c2*d12*a - c12*d2*a2  (mod |c12*c2|)

where ``g12 = g1 g2``. The solution set is an arithmetic progression, which
is computed here exactly with the Chinese remainder theorem.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from nctorus.exceptions import DegenerateDegreeError, DomainError
from nctorus.sl2_arith import SL2Mat, gcdex

logger = logging.getLogger(__name__)

__all__ = [
    "ArithProgression",
    "assoc_bijection_check",
    "brute_force_index_set",
    "enumerate_progression",
    "index_set",
    "secondary_congruence",
    "solve_congruences",
]


@dataclass(frozen=True)
class ArithProgression:
    """
    The set ``{n : n = residue (mod modulus)}``, or the empty set.

    Non-empty progressions are normalized so that ``0 <= residue < modulus``.
    """

    residue: int
    modulus: int
    empty: bool = False

    def __post_init__(self) -> None:
        if self.modulus <= 0:
            raise DomainError(f"modulus must be positive, got {self.modulus}")
        if not self.empty:
            object.__setattr__(self, "residue", self.residue % self.modulus)

    @classmethod
    def empty_set(cls) -> "ArithProgression":
        return cls(0, 1, empty=True)

    def contains(self, n: int) -> bool:
        return not self.empty and (n - self.residue) % self.modulus == 0

    def __contains__(self, n: int) -> bool:
        return self.contains(n)

    def same_members(self, other: "ArithProgression") -> bool:
        if self.empty or other.empty:
            return self.empty and other.empty
        return (self.residue, self.modulus) == (other.residue, other.modulus)

    def members(self, window: int) -> list[int]:
        return enumerate_progression(self, window)


def solve_congruences(pairs: list[tuple[int, int]]) -> ArithProgression:
    """
    Intersect the congruences ``n = r (mod m)`` for ``(r, m)`` in ``pairs``.

    Moduli may share factors; incompatible systems give the empty
    progression.

    Examples
    --------
    >>> solve_congruences([(0, 2), (2, 3)])
    ArithProgression(residue=2, modulus=6, empty=False)
    >>> solve_congruences([(0, 2), (1, 4)]).empty
    True
    """
    residue, modulus = 0, 1
    for r, m in pairs:
        m = abs(m)
        if m == 0:
            raise DegenerateDegreeError("congruence with modulus 0")
        x, _, g = gcdex(modulus, m)
        if (r - residue) % g:
            return ArithProgression.empty_set()
        step = m // g
        k = ((r - residue) // g * x) % step
        residue += modulus * k
        modulus *= step
        residue %= modulus
    return ArithProgression(residue, modulus)


def _require_nonzero_degrees(**degrees: int) -> None:
    zero = [name for name, value in degrees.items() if value == 0]
    if zero:
        raise DegenerateDegreeError(
            f"degree(s) {', '.join(zero)} vanish; use the special-case pairings"
        )


def index_set(g1: SL2Mat, g2: SL2Mat, a1: int, a2: int, a: int) -> ArithProgression:
    """
    The index set ``I_{g1,g2}(a1, a2, a)`` as a single progression.

    Parameters
    ----------
    g1, g2 : SL2Mat
        Labels with nonzero degrees ``c1``, ``c2`` and ``c12 = deg(g1 g2)``.
    a1, a2, a : int
        Residues mod ``c1``, ``c2`` and ``c12``; any representative is
        accepted.

    Returns
    -------
    ArithProgression
        The solutions modulo ``lcm(|c12 c1|, |c12 c2|)``, or the empty set.

    Raises
    ------
    DegenerateDegreeError
        If any of the three degrees is zero.

    Examples
    --------
    >>> g = SL2Mat(1, 0, 1, 1)
    >>> index_set(g, g, 0, 0, 1)
    ArithProgression(residue=1, modulus=2, empty=False)
    """
    g12 = g1 @ g2
    c1, c2, c12 = g1.c, g2.c, g12.c
    _require_nonzero_degrees(c1=c1, c2=c2, c12=c12)
    first = (-c1 * a + c12 * a1, c12 * c1)
    second = (c2 * g12.d * a - c12 * g2.d * a2, c12 * c2)
    progression = solve_congruences([first, second])
    logger.debug(
        f"I_{{{g1},{g2}}}({a1},{a2},{a}) = {progression} "
        f"(expected period {lcm(abs(first[1]), abs(second[1]))})"
    )
    return progression


def secondary_congruence(g1: SL2Mat, g2: SL2Mat, a1: int, a2: int) -> ArithProgression:
    """The progression ``n = -c1*a2 + d1*c2*a1 (mod |c1 c2|)``."""
    _require_nonzero_degrees(c1=g1.c, c2=g2.c)
    return solve_congruences([(-g1.c * a2 + g1.d * g2.c * a1, g1.c * g2.c)])


def brute_force_index_set(
    g1: SL2Mat, g2: SL2Mat, a1: int, a2: int, a: int, window: int
) -> list[int]:
    """Scan ``|n| <= window`` against both defining congruences directly."""
    g12 = g1 @ g2
    c1, c2, c12 = g1.c, g2.c, g12.c
    _require_nonzero_degrees(c1=c1, c2=c2, c12=c12)
    return [
        n
        for n in range(-window, window + 1)
        if (n - (-c1 * a + c12 * a1)) % abs(c12 * c1) == 0
        and (n - (c2 * g12.d * a - c12 * g2.d * a2)) % abs(c12 * c2) == 0
    ]


def enumerate_progression(p: ArithProgression, window: int) -> list[int]:
    """
    All members ``n`` of ``p`` with ``|n| <= window``, in increasing order.

    Examples
    --------
    >>> enumerate_progression(ArithProgression(2, 6), 10)
    [-10, -4, 2, 8]
    """
    if p.empty or window < 0:
        return []
    start = -window + (p.residue + window) % p.modulus
    return list(range(start, window + 1, p.modulus))


def _pairs_in_window(
    outer: tuple[SL2Mat, SL2Mat, int],
    inner: tuple[SL2Mat, SL2Mat, int],
    residues: tuple[int, int, int, int],
    split: str,
    window: int,
) -> set[tuple[int, int]]:
    """Collect ``(m, n)`` over the union of one side of the bijection."""
    a1, a2, a3, a = residues
    g_out1, g_out2, c_mid = outer
    g_in1, g_in2, _ = inner
    pairs: set[tuple[int, int]] = set()
    for mid in range(abs(c_mid)):
        if split == "left":
            # m in I_{g1, g2g3}(a1, a23, a), n in I_{g2, g3}(a2, a3, a23)
            ms = index_set(g_out1, g_out2, a1, mid, a)
            ns = index_set(g_in1, g_in2, a2, a3, mid)
        else:
            # m in I_{g1g2, g3}(a12, a3, a), n in I_{g1, g2}(a1, a2, a12)
            ms = index_set(g_out1, g_out2, mid, a3, a)
            ns = index_set(g_in1, g_in2, a1, a2, mid)
        for m in enumerate_progression(ms, window):
            for n in enumerate_progression(ns, window):
                pairs.add((m, n))
    return pairs


def _bijection_image(
    m: int, n: int, c1: int, c2: int, c3: int, c23: int, c123: int
) -> tuple[Fraction, Fraction]:
    return (
        Fraction(c3 * m + c123 * n, c23),
        Fraction(c2 * m - c1 * n, c23),
    )


def _bijection_preimage(
    m2: int, n2: int, c1: int, c2: int, c3: int, c23: int, c123: int
) -> tuple[Fraction, Fraction]:
    det = Fraction(-c3 * c1 - c123 * c2, c23 * c23)
    m = Fraction(-c1 * m2 - c123 * n2, c23) / det
    n = Fraction(-c2 * m2 + c3 * n2, c23) / det
    return (m, n)


def assoc_bijection_check(
    g1: SL2Mat,
    g2: SL2Mat,
    g3: SL2Mat,
    a1: int,
    a2: int,
    a3: int,
    a: int,
    window: int,
) -> bool:
    """
    Verify the reindexing behind associativity of the pairings on a window.

    The map ``(m, n) -> ((c3 m + c123 n)/c23, (c2 m - c1 n)/c23)`` must send
    the union over ``a23`` of ``I_{g1,g2g3}(a1,a23,a) x I_{g2,g3}(a2,a3,a23)``
    bijectively onto the union over ``a12`` of
    ``I_{g1g2,g3}(a12,a3,a) x I_{g1,g2}(a1,a2,a12)``. Pairs whose image
    leaves the window are skipped on both sides.

    Raises
    ------
    DegenerateDegreeError
        If any of ``c1, c2, c3, c12, c23, c123`` is zero.
    """
    g12, g23 = g1 @ g2, g2 @ g3
    g123 = g12 @ g3
    c1, c2, c3 = g1.c, g2.c, g3.c
    c12, c23, c123 = g12.c, g23.c, g123.c
    _require_nonzero_degrees(c1=c1, c2=c2, c3=c3, c12=c12, c23=c23, c123=c123)
    coeffs = (c1, c2, c3, c23, c123)
    residues = (a1, a2, a3, a)

    left = _pairs_in_window((g1, g23, c23), (g2, g3, c23), residues, "left", window)
    right = _pairs_in_window(
        (g12, g3, c12), (g1, g2, c12), residues, "right", window
    )
    if c3 * c1 + c123 * c2 == 0:
        logger.debug("bijection matrix is singular")
        return False

    images: set[tuple[int, int]] = set()
    for m, n in left:
        m2, n2 = _bijection_image(m, n, *coeffs)
        if m2.denominator != 1 or n2.denominator != 1:
            logger.debug(f"({m}, {n}) maps to non-integral ({m2}, {n2})")
            return False
        image = (int(m2), int(n2))
        if max(abs(image[0]), abs(image[1])) > window:
            continue
        if image not in right or image in images:
            logger.debug(f"({m}, {n}) -> {image} is not a bijective match")
            return False
        images.add(image)

    for m2, n2 in right:
        m, n = _bijection_preimage(m2, n2, *coeffs)
        if m.denominator != 1 or n.denominator != 1:
            logger.debug(f"({m2}, {n2}) has non-integral preimage ({m}, {n})")
            return False
        preimage = (int(m), int(n))
        if max(abs(preimage[0]), abs(preimage[1])) > window:
            continue
        if preimage not in left:
            logger.debug(f"({m2}, {n2}) <- {preimage} misses the left union")
            return False
    return True
