"""The equivalence ``F_{theta, theta'}`` between categories at two values of theta.

On objects

    E_g^z(theta)[n] -> E_g^{l z}(theta')[n]        if rk(g, theta') > 0
    E_g^z(theta)[n] -> E_{-g}^{l z}(theta')[n - 1]  if rk(g, theta') < 0

with ``l = rk(g, theta) / rk(g, theta')``. On morphisms the phi-basis is
preserved unless exactly the source changes sign, in which case
``phi_alpha -> psi_{-d12 alpha}``; psi-vectors follow by Serre duality.

Also here: Morita transport along a basic bimodule, the ``g^t`` action on
K-theory classes and the slope classifier for ``theta < 0 = theta'``.
"""

import logging
from dataclasses import dataclass
from typing import Literal

import numpy as np

from nctorus.category import (
    HolomorphicCategory,
    HolVector,
    StdObject,
    basis_vector,
    hom_label,
)
from nctorus.exceptions import (
    DomainError,
    InvariantViolationError,
    ShapeMismatchError,
    ZeroRankError,
    ZeroRankTargetError,
)
from nctorus.sl2_arith import RANK_TOL, SL2Mat, TorusParams, random_sl2
from nctorus.theta_engine import DEFAULT_TOL, relative_residual

logger = logging.getLogger(__name__)

__all__ = [
    "FunctorContext",
    "TiltClass",
    "case_classify",
    "f_morphism",
    "f_object",
    "f_object_inverse",
    "forbidden_pattern_scan",
    "functoriality_check",
    "functoriality_residual",
    "k_class",
    "ktheory_action_check",
    "lambda_factor",
    "morita_hom_check",
    "morita_transport",
    "tilt_classify",
]

CaseName = Literal["i", "ii", "iii"]


@dataclass(frozen=True)
class FunctorContext:
    """
    Parameters of ``F_{theta, theta'}``.

    Object maps accept either order of ``theta`` and ``theta_prime``;
    morphism maps need ``theta <= theta_prime``.
    """

    theta: float
    theta_prime: float
    tau: complex = -1j

    def __post_init__(self) -> None:
        TorusParams(self.theta, self.tau)
        TorusParams(self.theta_prime, self.tau)

    @property
    def ordered(self) -> bool:
        return self.theta <= self.theta_prime

    def require_ordered(self) -> None:
        if not self.ordered:
            raise DomainError(
                f"morphism maps need theta <= theta', got {self.theta} > {self.theta_prime}"
            )

    def target_category(self, tol: float = DEFAULT_TOL) -> HolomorphicCategory:
        return HolomorphicCategory(TorusParams(self.theta_prime, self.tau), tol)

    def source_category(self, tol: float = DEFAULT_TOL) -> HolomorphicCategory:
        return HolomorphicCategory(TorusParams(self.theta, self.tau), tol)


def _target_rank(g: SL2Mat, ctx: FunctorContext) -> float:
    rk = g.rank(ctx.theta_prime)
    if abs(rk) < RANK_TOL:
        raise ZeroRankTargetError(f"rk({g}, {ctx.theta_prime}) vanishes")
    return rk


def lambda_factor(g: SL2Mat, ctx: FunctorContext) -> float:
    """``rk(g, theta) / rk(g, theta')``."""
    return g.rank(ctx.theta) / _target_rank(g, ctx)


def f_object(E: StdObject, ctx: FunctorContext) -> StdObject:
    """
    Image of an object under ``F_{theta, theta'}``.

    Raises
    ------
    ShapeMismatchError
        If ``E`` does not live over ``ctx.theta``.
    ZeroRankTargetError
        If ``rk(g, theta') = 0``.

    Examples
    --------
    >>> ctx = FunctorContext(-0.4, 0.0)
    >>> image = f_object(StdObject(SL2Mat(2, 1, -3, -1), -0.4, 1), ctx)
    >>> str(image.g), round(image.z.real, 12), image.shift
    ('-2,-1;3,1', -0.2, -1)
    """
    if E.theta != ctx.theta:
        raise ShapeMismatchError(f"{E} does not live over theta={ctx.theta}")
    rk_prime = _target_rank(E.g, ctx)
    z = E.rk / rk_prime * E.z
    if rk_prime > 0:
        return StdObject(E.g, ctx.theta_prime, z, E.shift)
    return StdObject(-E.g, ctx.theta_prime, z, E.shift - 1)


def f_object_inverse(E: StdObject, ctx: FunctorContext) -> StdObject:
    """Inverse of :func:`f_object`: an object over ``theta'`` to one over ``theta``."""
    if E.theta != ctx.theta_prime:
        raise ShapeMismatchError(f"{E} does not live over theta'={ctx.theta_prime}")
    rk = E.g.rank(ctx.theta)
    if abs(rk) < RANK_TOL:
        raise ZeroRankTargetError(f"rk({E.g}, {ctx.theta}) vanishes")
    z = E.rk / rk * E.z
    if rk > 0:
        return StdObject(E.g, ctx.theta, z, E.shift)
    return StdObject(-E.g, ctx.theta, z, E.shift + 1)


def case_classify(g1: SL2Mat, g2: SL2Mat, ctx: FunctorContext) -> CaseName:
    """
    Sign pattern of ``(rk(g1, theta'), rk(g2, theta'))`` for ``deg(g2 g1^-1) > 0``.

    Returns
    -------
    str
        ``"i"`` (both positive), ``"ii"`` (only ``g1`` negative) or
        ``"iii"`` (both negative).

    Raises
    ------
    DomainError
        If the preconditions fail or ``theta > theta'``.
    InvariantViolationError
        If ``rk(g1, theta') > 0 > rk(g2, theta')``, which a positive
        ``deg(g2 g1^-1)`` excludes.
    """
    ctx.require_ordered()
    if (g2 @ g1.inverse()).c <= 0:
        raise DomainError(f"deg(g2 g1^-1) must be positive for {g1}, {g2}")
    if g1.rank(ctx.theta) <= 0 or g2.rank(ctx.theta) <= 0:
        raise DomainError("ranks at theta must be positive")
    first = _target_rank(g1, ctx) > 0
    second = _target_rank(g2, ctx) > 0
    if first and second:
        return "i"
    if not first and second:
        return "ii"
    if not first and not second:
        return "iii"
    raise InvariantViolationError(
        f"rk({g1}, {ctx.theta_prime}) > 0 > rk({g2}, {ctx.theta_prime}) "
        f"with deg(g2 g1^-1) > 0"
    )


def _index_map(g_from: SL2Mat, g_to: SL2Mat, ctx: FunctorContext) -> tuple[CaseName, np.ndarray]:
    """Case and permutation of residues for the phi-basis of ``Hom(E_from, E_to)``."""
    case = case_classify(g_from, g_to, ctx)
    h = g_to @ g_from.inverse()
    size = h.c
    if case == "ii":
        perm = np.array([(-h.d * alpha) % size for alpha in range(size)])
    else:
        perm = np.arange(size)
    return case, perm


def f_morphism(v: HolVector, ctx: FunctorContext) -> HolVector:
    """
    Image of a cohomology class under ``F_{theta, theta'}``.

    A phi-vector of ``Hom(E1, E2)`` keeps its coordinates in cases (i) and
    (iii) and becomes the psi-vector with ``psi_{-d12 alpha}`` in case (ii).
    A psi-vector is mapped by the inverse transpose of the map on the
    phi-basis of the opposite Hom space, so that Serre pairings are kept.

    Raises
    ------
    ZeroRankTargetError
        If an object has vanishing rank at ``theta'``.
    DomainError
        If ``theta > theta'`` or a degree-0 Hom other than the identity is involved.
    """
    ctx.require_ordered()
    source = f_object(v.source, ctx)
    target = f_object(v.target, ctx)
    label, twist = v.hom
    if label.degree == 0:
        if not label.g.is_identity():
            raise DomainError(f"no morphism formula for the degree-0 Hom {label.g}")
        return HolVector(source, target, v.degree, v.coeffs)

    if v.degree == 0:
        case, perm = _index_map(v.source.g, v.target.g, ctx)
    else:
        case, perm = _index_map(v.target.g, v.source.g, ctx)
    coeffs = np.zeros_like(v.coeffs)
    coeffs[perm] = v.coeffs
    degree = 1 - v.degree if case == "ii" else v.degree
    logger.debug(f"F maps a degree-{v.degree} class in case ({case}) to degree {degree}")
    return HolVector(source, target, degree, coeffs)


def functoriality_residual(
    g1: SL2Mat,
    g2: SL2Mat,
    g3: SL2Mat,
    z1: complex,
    z2: complex,
    z3: complex,
    ctx: FunctorContext,
) -> float:
    """
    Largest relative residual of ``F(v o u) = F(v) o F(u)`` over phi-basis vectors.

    Each pair of coefficient vectors is compared on the scale
    ``max(|lhs|, |rhs|, 1)``; composed constants reach ``1e36`` for
    moderate labels.

    The sign pattern of ``(g1, g2, g3)`` at ``theta'`` must be all positive
    or ``(-, +, +)``.

    Raises
    ------
    DomainError
        If a Hom degree is not positive, a rank at theta is not positive, or
        the sign pattern is not covered.
    """
    ctx.require_ordered()
    signs = tuple(_target_rank(g, ctx) > 0 for g in (g1, g2, g3))
    if signs not in ((True, True, True), (False, True, True)):
        raise DomainError(f"sign pattern {signs} at theta'={ctx.theta_prime} not covered")
    source_cat = ctx.source_category()
    target_cat = ctx.target_category()
    E1, E2, E3 = (source_cat.object(g, z) for g, z in ((g1, z1), (g2, z2), (g3, z3)))
    for E in (E1, E2, E3):
        if E.rk <= 0:
            raise DomainError(f"{E} has non-positive rank")
    d21 = hom_label(E1, E2)[0].degree
    d32 = hom_label(E2, E3)[0].degree
    if d21 <= 0 or d32 <= 0:
        raise DomainError(f"need positive Hom degrees, got {d21} and {d32}")

    worst = 0.0
    for beta in range(d21):
        u = basis_vector(E1, E2, beta)
        Fu = f_morphism(u, ctx)
        for alpha in range(d32):
            v = basis_vector(E2, E3, alpha)
            lhs = f_morphism(source_cat.compose(v, u), ctx)
            rhs = target_cat.compose(f_morphism(v, ctx), Fu)
            if lhs.degree != rhs.degree:
                raise InvariantViolationError(
                    f"F(v o u) has degree {lhs.degree}, F(v) o F(u) has {rhs.degree}"
                )
            worst = max(worst, relative_residual(lhs.coeffs, rhs.coeffs))
    logger.debug(f"functoriality residual {worst:.3e}")
    return worst


def functoriality_check(
    g1: SL2Mat,
    g2: SL2Mat,
    g3: SL2Mat,
    z1: complex,
    z2: complex,
    z3: complex,
    ctx: FunctorContext,
    tol: float = 1e-9,
) -> bool:
    """
    ``F(v o u) = F(v) o F(u)`` for all phi-basis vectors ``u``, ``v``.

    The sign pattern of ``(g1, g2, g3)`` at ``theta'`` must be all positive
    or ``(-, +, +)``; see :func:`functoriality_residual`.
    """
    return functoriality_residual(g1, g2, g3, z1, z2, z3, ctx) <= tol


def morita_transport(E: StdObject, g0: SL2Mat, theta: float) -> StdObject:
    """
    Transport ``E_g^z(g0 theta)`` to ``E_{g g0}^{z / rk(g0, theta)}(theta)``.

    Raises
    ------
    ShapeMismatchError
        If ``E`` does not live over ``g0 theta``.
    ZeroRankError
        If ``rk(g0, theta)`` vanishes.

    Examples
    --------
    >>> g0 = SL2Mat(1, 0, 1, 1)
    >>> moved = morita_transport(StdObject(g0, g0.mobius(0.2), 1), g0, 0.2)
    >>> str(moved.g), round(moved.z.real, 12)
    ('1,0;2,1', 0.833333333333)
    """
    rk0 = g0.rank(theta)
    if abs(rk0) < RANK_TOL:
        raise ZeroRankError(f"rk({g0}, {theta}) vanishes")
    if abs(E.theta - g0.mobius(theta)) > 1e-12:
        raise ShapeMismatchError(f"{E} does not live over g0 theta = {g0.mobius(theta)}")
    return StdObject(E.g @ g0, theta, E.z / rk0, E.shift)


def morita_hom_check(E: StdObject, E2: StdObject, g0: SL2Mat, theta: float, tol: float = 1e-12) -> bool:
    """Morita transport commutes with :func:`hom_label`."""
    before, twist = hom_label(E, E2)
    after, twist_after = hom_label(
        morita_transport(E, g0, theta), morita_transport(E2, g0, theta)
    )
    return (
        before.g == after.g
        and abs(before.theta - after.theta) <= tol
        and abs(twist - twist_after) <= tol * max(1.0, abs(twist))
    )


def k_class(E: StdObject) -> np.ndarray:
    """Signed class ``(-1)^shift (deg, d)`` of an object over ``theta = 0``."""
    sign = -1 if E.shift % 2 else 1
    return sign * np.array([E.g.c, E.g.d], dtype=np.int64)


def ktheory_action_check(
    g: SL2Mat,
    samples: list[StdObject],
    ctx: FunctorContext,
    use_transpose: bool = True,
) -> bool:
    """
    ``F_{theta,0} o M_g o F_{theta',0}^-1`` acts on ``(deg, rk)`` as ``g^t``.

    Parameters
    ----------
    g : SL2Mat
        Morita label with ``theta' = g theta`` and ``rk(g, theta) > 0``.
    samples : list[StdObject]
        Objects over ``theta = 0``.
    ctx : FunctorContext
        ``(theta, theta')``.
    use_transpose : bool, optional
        Predict with ``g^t`` (the correct matrix) or with ``g`` itself.

    Raises
    ------
    DomainError
        If ``theta' != g theta`` or ``rk(g, theta) <= 0``.
    """
    if abs(g.mobius(ctx.theta) - ctx.theta_prime) > 1e-12:
        raise DomainError(f"theta'={ctx.theta_prime} is not g theta={g.mobius(ctx.theta)}")
    if g.rank(ctx.theta) <= 0:
        raise DomainError(f"rk({g}, {ctx.theta}) must be positive")
    back = FunctorContext(ctx.theta_prime, 0.0, ctx.tau)
    forth = FunctorContext(ctx.theta, 0.0, ctx.tau)
    matrix = np.array(g.to_list(), dtype=np.int64)
    predictor = matrix.T if use_transpose else matrix
    for S in samples:
        lifted = f_object_inverse(S, back)
        moved = morita_transport(lifted, g, ctx.theta)
        image = f_object(moved, forth)
        if not np.array_equal(k_class(image), predictor @ k_class(S)):
            logger.debug(f"{S} -> {image}: class mismatch")
            return False
    return True


def forbidden_pattern_scan(
    samples: int, rng: np.random.Generator, ctx: FunctorContext, bound: int = 6
) -> tuple[int, int]:
    """
    Classify random admissible pairs.

    Returns
    -------
    tuple[int, int]
        ``(pairs classified, forbidden patterns met)``.
    """
    checked = forbidden = 0
    while checked < samples:
        g1, g2 = random_sl2(rng, bound), random_sl2(rng, bound)
        if g1.rank(ctx.theta) <= 0 or g2.rank(ctx.theta) <= 0:
            continue
        if (g2 @ g1.inverse()).c <= 0:
            continue
        try:
            case_classify(g1, g2, ctx)
        except ZeroRankTargetError:
            continue
        except InvariantViolationError:
            forbidden += 1
        checked += 1
    return checked, forbidden


@dataclass(frozen=True)
class TiltClass:
    """
    Where ``F_{theta, 0}(E)`` lands for ``theta < 0``.

    ``kind`` is ``"below"`` for a bundle of slope below ``bound = -1/theta``
    and ``"above_shifted"`` for a bundle of slope above it placed in degree -1.
    """

    kind: Literal["below", "above_shifted"]
    slope: float
    bound: float


def tilt_classify(E: StdObject, ctx: FunctorContext) -> TiltClass:
    """
    Classify the image of ``E`` under ``F_{theta, 0}``.

    Raises
    ------
    DomainError
        Unless ``theta < 0 = theta'``.
    ZeroRankTargetError
        If ``rk(g, 0) = 0``.
    InvariantViolationError
        If the slope lands on the wrong side of ``-1/theta``.

    Examples
    --------
    >>> ctx = FunctorContext(-0.4, 0.0)
    >>> tilt_classify(StdObject.from_nm(1, 2, -0.4), ctx).kind
    'below'
    """
    if not (ctx.theta < 0 and ctx.theta_prime == 0):
        raise DomainError(f"tilt classification needs theta < 0 = theta', got {ctx}")
    image = f_object(E, ctx)
    slope = image.g.c / image.g.d
    bound = -1.0 / ctx.theta
    if image.shift == E.shift:
        kind: Literal["below", "above_shifted"] = "below"
        consistent = slope < bound
    else:
        kind = "above_shifted"
        consistent = slope > bound
    if not consistent:
        raise InvariantViolationError(f"{kind} image of {E} has slope {slope}, bound {bound}")
    return TiltClass(kind, slope, bound)
