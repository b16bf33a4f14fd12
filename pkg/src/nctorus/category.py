"""The cohomology-level category of standard holomorphic bundles.

Objects are ``E = E_g^z(theta)[n]`` with ``rk(g, theta) > 0``. Morphisms
between two objects are computed on the Hom module

    Hom(E_g^z, E_{g'}^{z'}) = E_{g' g^-1}^{rk(g, theta)(z' - z)}(g theta)

whose cohomology has the phi-basis (degree 0, when the Hom degree is
positive) or the psi-basis dual to it under Serre duality (degree 1, when
the Hom degree is negative). Composition is contraction against the
structure constants of :mod:`nctorus.theta_engine`.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field, replace

import numpy as np

from nctorus.analytic.algebra import AlgebraElement
from nctorus.analytic.modules import (
    TWO_PI_I,
    ModuleLabel,
    dbar,
    e,
    h1_representatives,
    phi_basis,
)
from nctorus.analytic.packet import GaussianPacket
from nctorus.analytic.pairings import l2_norm, pairing_b, pairing_t
from nctorus.exceptions import (
    DegenerateDegreeError,
    DomainError,
    LatticeBoundaryError,
    ShapeMismatchError,
)
from nctorus.sl2_arith import SL2Mat, TorusParams, lattice_coordinates
from nctorus.theta_engine import DEFAULT_TOL, composition_constants, relative_residual

logger = logging.getLogger(__name__)

__all__ = [
    "LATTICE_TOL",
    "ExtensionStructure",
    "HolVector",
    "HolomorphicCategory",
    "StdObject",
    "basis_vector",
    "cohomology_dims",
    "commutant_dimension",
    "compose_hom",
    "euler_char",
    "ext_structure",
    "heisenberg_matrix",
    "hom_dims",
    "hom_label",
    "identity_vector",
    "is_lattice_equivalent",
    "serre_gram",
    "serre_pairing",
]

LATTICE_TOL = 1e-9
# Distances to the lattice between LATTICE_TOL and this are reported as ties.
_AMBIGUOUS_DISTANCE = 1e-6


@dataclass(frozen=True)
class StdObject:
    """
    The standard holomorphic bundle ``E_g^z(theta)`` shifted by ``shift``.

    Raises
    ------
    ZeroRankError
        If ``rk(g, theta)`` vanishes.
    DomainError
        If ``rk(g, theta) < 0``.
    """

    g: SL2Mat
    theta: float
    z: complex = 0j
    shift: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "z", complex(self.z))
        ModuleLabel(self.g, self.theta)

    @classmethod
    def from_nm(cls, n: int, m: int, theta: float, z: complex = 0j, shift: int = 0) -> "StdObject":
        """``E_{n,m}^z(theta)[shift]``, i.e. the label with bottom row ``(m, n)``."""
        return cls(SL2Mat.from_bottom_row(m, n), theta, z, shift)

    @property
    def label(self) -> ModuleLabel:
        return ModuleLabel(self.g, self.theta)

    @property
    def degree(self) -> int:
        return self.g.c

    @property
    def rk(self) -> float:
        return self.g.rank(self.theta)

    @property
    def mu(self) -> float:
        return self.degree / self.rk

    def __str__(self) -> str:
        text = f"E[{self.g}]^{self.z}({self.theta})"
        return f"{text}[{self.shift}]" if self.shift else text


def hom_label(E: StdObject, E2: StdObject) -> tuple[ModuleLabel, complex]:
    """
    The label and twist of ``Hom(E, E2)``.

    Examples
    --------
    >>> E = StdObject(SL2Mat(1, 0, 1, 1), 0.2, 0.1)
    >>> E2 = StdObject(SL2Mat(1, 0, 2, 1), 0.2, 0.4)
    >>> label, twist = hom_label(E, E2)
    >>> str(label.g), round(twist.real, 12)
    ('1,0;1,1', 0.36)
    """
    if E.theta != E2.theta:
        raise ShapeMismatchError(f"objects over {E.theta} and {E2.theta}")
    label = ModuleLabel(E2.g @ E.g.inverse(), E.g.mobius(E.theta))
    return label, E.rk * (E2.z - E.z)


def _lattice_distance(w: complex, tau: complex) -> float:
    p, q = lattice_coordinates(w, tau)
    return max(abs(p - round(p)), abs(q - round(q)))


def _in_lattice(w: complex, tau: complex, tol: float) -> bool:
    distance = _lattice_distance(w, tau)
    if distance <= tol:
        return True
    if distance < max(_AMBIGUOUS_DISTANCE, 1e3 * tol):
        raise LatticeBoundaryError(
            f"{w} is {distance:.2e} away from Z + tau Z; membership is ambiguous"
        )
    return False


def is_lattice_equivalent(
    z: complex, z2: complex, rk: float, tau: complex, tol: float = LATTICE_TOL
) -> bool:
    """True when ``z2 - z`` lies in ``(1/rk)(Z + tau Z)``."""
    return _in_lattice(rk * (complex(z2) - complex(z)), tau, tol)


def _label_cohomology(
    label: ModuleLabel, twist: complex, tau: complex, tol: float
) -> tuple[int, int]:
    c = label.degree
    if c > 0:
        return c, 0
    if c < 0:
        return 0, -c
    if _in_lattice(label.rk * twist, tau, tol):
        return 1, 1
    return 0, 0


def cohomology_dims(E: StdObject, tau: complex, tol: float = LATTICE_TOL) -> tuple[int, int]:
    """
    ``(dim H^0(E), dim H^1(E))`` of the unshifted bundle.

    Raises
    ------
    LatticeBoundaryError
        If a degree-0 twist is too close to the lattice to decide.
    """
    return _label_cohomology(E.label, E.z, tau, tol)


def hom_dims(E: StdObject, E2: StdObject, tau: complex, tol: float = LATTICE_TOL) -> tuple[int, int]:
    """``(dim H^0 Hom(E, E2), dim H^1 Hom(E, E2))``."""
    label, twist = hom_label(E, E2)
    return _label_cohomology(label, twist, tau, tol)


def euler_char(E: StdObject, tau: complex = -1j) -> int:
    """``(-1)^shift (h0 - h1)``; for unshifted objects this is ``deg(E)``."""
    h0, h1 = cohomology_dims(E, tau)
    return (-1) ** (E.shift % 2) * (h0 - h1)


@dataclass(frozen=True)
class HolVector:
    """
    An element of ``H^degree Hom(source, target)`` in coordinates.

    Attributes
    ----------
    source, target : StdObject
        Domain and codomain.
    degree : int
        Cohomological degree, 0 or 1.
    coeffs : np.ndarray
        Coordinates in the phi-basis (degree 0) or the psi-basis (degree 1),
        indexed by residues mod ``|deg(g' g^-1)|`` (length 1 for degree-0
        Hom labels).
    """

    source: StdObject
    target: StdObject
    degree: int
    coeffs: np.ndarray = field(compare=False)

    def __post_init__(self) -> None:
        if self.degree not in (0, 1):
            raise DomainError(f"degree must be 0 or 1, got {self.degree}")
        label, _ = hom_label(self.source, self.target)
        coeffs = np.array(self.coeffs, dtype=complex).reshape(-1)
        if coeffs.size != label.legs:
            raise ShapeMismatchError(
                f"Hom({self.source}, {self.target}) has {label.legs} coordinates, "
                f"got {coeffs.size}"
            )
        c = label.degree
        if (self.degree == 0 and c < 0) or (self.degree == 1 and c > 0):
            raise DomainError(
                f"H^{self.degree} of a Hom module of degree {c} vanishes"
            )
        coeffs.flags.writeable = False
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def basis(self) -> str:
        return "phi" if self.degree == 0 else "psi"

    @property
    def hom(self) -> tuple[ModuleLabel, complex]:
        return hom_label(self.source, self.target)

    def is_zero(self, tol: float = 0.0) -> bool:
        return bool(np.all(np.abs(self.coeffs) <= tol))

    def scaled(self, scalar: complex) -> "HolVector":
        return replace(self, coeffs=self.coeffs * scalar)


def identity_vector(E: StdObject) -> HolVector:
    """The identity endomorphism."""
    return HolVector(E, E, 0, np.ones(1, dtype=complex))


def basis_vector(E: StdObject, E2: StdObject, index: int, degree: int | None = None) -> HolVector:
    """
    ``phi_index`` or ``psi_index`` in ``Hom(E, E2)``.

    The degree defaults to 0 for Hom labels of positive degree and to 1 for
    negative degree; it must be given for degree-0 labels.
    """
    label, _ = hom_label(E, E2)
    if degree is None:
        if label.degree == 0:
            raise DomainError("degree-0 Hom labels need an explicit cohomological degree")
        degree = 0 if label.degree > 0 else 1
    coeffs = np.zeros(label.legs, dtype=complex)
    coeffs[index % label.legs] = 1.0
    return HolVector(E, E2, degree, coeffs)


def _scalar_factor(v: HolVector, tol: float) -> complex | None:
    """Return the scalar of a degree-0 multiple of an identity, else ``None``."""
    label, twist = v.hom
    if v.degree != 0 or label.degree != 0:
        return None
    if not label.g.is_identity() or abs(twist) > tol:
        raise DomainError(
            f"composition through the degree-0 Hom {label.g} with twist {twist} "
            "is not supported"
        )
    return complex(v.coeffs[0])


def compose_hom(
    v2: HolVector,
    v1: HolVector,
    tau: complex,
    tol: float = DEFAULT_TOL,
) -> HolVector:
    """
    The composition ``v2 o v1`` of ``v1: E1 -> E2`` and ``v2: E2 -> E3``.

    Degree 0 with degree 0 contracts against ``c(g1, g2, g3)``. A degree-1
    factor is handled through its Serre dual: with ``psi`` dual to ``phi``,
    the coordinates of the composite are obtained from the constants of the
    rotated triple ``(g2, g3, g1)`` (for ``0 o 1``) or ``(g3, g1, g2)``
    (for ``1 o 0``).

    Raises
    ------
    ShapeMismatchError
        If the vectors are not composable.
    DomainError
        For ``1 o 1``, when the target cohomology vanishes, or when a
        degree-0 Hom other than a multiple of the identity is involved.
    """
    if v1.target != v2.source:
        raise ShapeMismatchError(f"cannot compose {v2.source} after {v1.target}")
    degree = v1.degree + v2.degree
    if degree > 1:
        raise DomainError("composition of two degree-1 classes lands in H^2 = 0")
    E1, E2, E3 = v1.source, v1.target, v2.target

    for scalar_side, other in ((v2, v1), (v1, v2)):
        scalar = _scalar_factor(scalar_side, tol)
        if scalar is not None:
            return HolVector(E1, E3, other.degree, other.coeffs * scalar)
    if v1.hom[0].degree == 0 or v2.hom[0].degree == 0:
        raise DomainError(
            "composition through a degree-0 Hom needs a multiple of the identity"
        )

    target_label, _ = hom_label(E1, E3)
    if (degree == 0 and target_label.degree <= 0) or (degree == 1 and target_label.degree >= 0):
        raise DomainError(
            f"H^{degree} Hom({E1}, {E3}) vanishes (degree {target_label.degree})"
        )
    params = TorusParams(E1.theta, tau)
    if degree == 0:
        table = composition_constants(E1.g, E2.g, E3.g, E1.z, E2.z, E3.z, params, tol)
        coeffs = np.einsum("a,b,abc->c", v2.coeffs, v1.coeffs, table.values)
    elif v2.degree == 0:
        table = composition_constants(E2.g, E3.g, E1.g, E2.z, E3.z, E1.z, params, tol)
        coeffs = np.einsum("a,b,kab->k", v2.coeffs, v1.coeffs, table.values)
    else:
        table = composition_constants(E3.g, E1.g, E2.g, E3.z, E1.z, E2.z, params, tol)
        coeffs = np.einsum("a,b,bka->k", v2.coeffs, v1.coeffs, table.values)
    return HolVector(E1, E3, degree, coeffs)


def serre_pairing(v: HolVector, w: HolVector) -> complex:
    """
    The Serre pairing ``H^i Hom(E, E') x H^{1-i} Hom(E', E) -> C``.

    In the phi/psi bases the pairing is ``sum_alpha v_alpha w_alpha``.

    Raises
    ------
    ShapeMismatchError
        Unless the Hom spaces are opposite and the degrees complementary.
    """
    if v.source != w.target or v.target != w.source:
        raise ShapeMismatchError("Serre pairing needs opposite Hom spaces")
    if v.degree + w.degree != 1:
        raise ShapeMismatchError(
            f"Serre pairing needs complementary degrees, got {v.degree} and {w.degree}"
        )
    return complex(np.dot(v.coeffs, w.coeffs))


def _dual_label(E: StdObject) -> tuple[ModuleLabel, complex]:
    """``Hom(E, E_1^0) = E_{g^-1}^{-rk z}(g theta)``."""
    return ModuleLabel(E.g.inverse(), E.g.mobius(E.theta)), -E.rk * E.z


def serre_gram(E: StdObject, tau: complex) -> np.ndarray:
    """
    Normalized Gram matrix of ``b`` between H^0 generators and H^1 representatives.

    For ``deg(E) > 0`` rows are the phi-basis of ``E`` and columns the
    Gaussian representatives of ``H^1`` of the dual bundle; for
    ``deg(E) < 0`` the roles of ``E`` and its dual are exchanged. Entries
    are divided by the L2 norms of both arguments.

    Raises
    ------
    DegenerateDegreeError
        If ``deg(E) = 0``.
    """
    if E.degree == 0:
        raise DegenerateDegreeError(f"{E} has degree 0")
    label = E.label
    dual, dual_twist = _dual_label(E)
    if E.degree > 0:
        holomorphic = [phi_basis(label, E.z, alpha, tau) for alpha in range(label.legs)]
        classes = h1_representatives(dual)
        entries = [
            [pairing_b(r, f, E.g, E.theta) / (l2_norm(r) * l2_norm(f)) for r in classes]
            for f in holomorphic
        ]
    else:
        holomorphic = [phi_basis(dual, dual_twist, alpha, tau) for alpha in range(dual.legs)]
        classes = h1_representatives(label)
        entries = [
            [pairing_b(f, r, E.g, E.theta) / (l2_norm(r) * l2_norm(f)) for r in classes]
            for f in holomorphic
        ]
    return np.asarray(entries, dtype=complex)


def heisenberg_matrix(E: StdObject, m: int, n: int) -> np.ndarray:
    """
    Matrix of ``U_{(m/c, n/c)}`` on ``H^i(E)``, ``c = deg(E)``.

    ``U f(x, alpha) = e(-(m/c) alpha) f(x, alpha - n a)`` where ``a`` is the
    upper-left entry of ``g``.

    Raises
    ------
    DegenerateDegreeError
        If ``deg(E) = 0``.
    """
    c = E.degree
    if c == 0:
        raise DegenerateDegreeError(f"{E} has degree 0")
    size = abs(c)
    M = np.zeros((size, size), dtype=complex)
    for alpha in range(size):
        M[alpha, (alpha - n * E.g.a) % size] = e(-m * alpha / c)
    return M


def commutant_dimension(matrices: Sequence[np.ndarray], tol: float = 1e-9) -> int:
    """Dimension of ``{X : X M = M X for all M}``."""
    if not matrices:
        raise DomainError("need at least one matrix")
    size = matrices[0].shape[0]
    eye = np.eye(size)
    system = np.vstack([np.kron(eye, M) - np.kron(M.T, eye) for M in matrices])
    singular = np.linalg.svd(system, compute_uv=False)
    scale = max(1.0, float(singular[0])) if singular.size else 1.0
    rank = int(np.count_nonzero(singular > tol * scale))
    return size * size - rank


Representative = GaussianPacket | AlgebraElement


@dataclass(frozen=True)
class ExtensionStructure:
    """
    The holomorphic structure ``[[dbar_E, phi], [0, dbar_E']]`` on ``E + E'``.

    Attributes
    ----------
    sub, quotient : StdObject
        ``E`` and ``E'`` of the extension ``0 -> E -> E2 -> E' -> 0``.
    representative : GaussianPacket or AlgebraElement or None
        An element of ``Hom(E', E)`` representing the class; ``None`` for
        the split extension. Algebra elements are used when ``g = g'`` and
        act on ``E'`` from the left as ``A_{g' theta}``.
    tau : complex
        Complex structure parameter.
    """

    sub: StdObject
    quotient: StdObject
    representative: Representative | None
    tau: complex

    @property
    def hom(self) -> tuple[ModuleLabel, complex]:
        return hom_label(self.quotient, self.sub)

    @property
    def is_split(self) -> bool:
        return self.representative is None or self.representative.is_zero()

    def _off_diagonal(
        self, f_prime: GaussianPacket, points: Sequence[tuple[float, int]]
    ) -> np.ndarray:
        rep = self.representative
        if rep is None:
            return np.zeros(len(points), dtype=complex)
        if isinstance(rep, AlgebraElement):
            return rep.act_left(f_prime, self.quotient.label).evaluate_many(points)
        label, _ = self.hom
        return np.asarray(
            pairing_t(label.g, self.quotient.g, self.sub.theta, rep, f_prime, points),
            dtype=complex,
        )

    def apply(
        self,
        f: GaussianPacket,
        f_prime: GaussianPacket,
        points: Sequence[tuple[float, int]],
    ) -> tuple[np.ndarray, np.ndarray]:
        """Values of ``(dbar_E f + phi f', dbar_E' f')`` at ``points``."""
        E, Ep = self.sub, self.quotient
        top = dbar(f, E.label, E.z, self.tau).evaluate_many(points)
        top = top + self._off_diagonal(f_prime, points)
        bottom = dbar(f_prime, Ep.label, Ep.z, self.tau).evaluate_many(points)
        return top, bottom

    def _hom_differential(self, f: Representative) -> Representative:
        """``dbar_E o f - f o dbar_E'`` on ``Hom(E', E)``."""
        label, twist = self.hom
        scale = 1.0 / self.quotient.rk
        if isinstance(f, AlgebraElement):
            return (f.derivation(self.tau) + f * (TWO_PI_I * twist)) * scale
        return dbar(f, label, twist, self.tau) * scale

    def conjugate(self, f: Representative) -> "ExtensionStructure":
        """
        The structure ``P D P^-1`` for ``P = [[1, f], [0, 1]]``.

        Its representative is ``phi - (dbar_E o f - f o dbar_E')``, which
        defines the same extension class.
        """
        label, _ = self.hom
        if isinstance(f, AlgebraElement) != (label.degree == 0):
            raise ShapeMismatchError(
                f"{type(f).__name__} cannot represent a morphism of Hom label {label.g}"
            )
        rep = self.representative
        shifted = self._hom_differential(f) * -1.0
        return replace(self, representative=shifted if rep is None else rep + shifted)

    def conjugation_residual(
        self,
        f: AlgebraElement,
        section: GaussianPacket,
        section_prime: GaussianPacket,
        points: Sequence[tuple[float, int]],
    ) -> float:
        """
        Pointwise ``max |P D P^-1 (s, s') - D_f (s, s')|`` with ``D_f = conjugate(f)``.

        Only algebra representatives give closed-form packets for ``f s'``.
        """
        if not isinstance(f, AlgebraElement) or isinstance(self.representative, GaussianPacket):
            raise ShapeMismatchError("pointwise conjugation needs algebra representatives")
        Ep = self.quotient
        moved = section - f.act_left(section_prime, Ep.label)
        top, bottom = self.apply(moved, section_prime, points)
        bottom_packet = dbar(section_prime, Ep.label, Ep.z, self.tau)
        lhs_top = top + f.act_left(bottom_packet, Ep.label).evaluate_many(points)
        rhs_top, rhs_bottom = self.conjugate(f).apply(section, section_prime, points)
        return float(max(np.max(np.abs(lhs_top - rhs_top)), np.max(np.abs(bottom - rhs_bottom))))


def _psi_representatives(
    E: StdObject, E_prime: StdObject, tau: complex
) -> list[GaussianPacket]:
    """Packets in ``Hom(E', E)`` dual to the phi-basis of ``Hom(E, E')`` under ``b``."""
    label, _ = hom_label(E_prime, E)
    forward, forward_twist = hom_label(E, E_prime)
    classes = h1_representatives(label)
    phis = [phi_basis(forward, forward_twist, alpha, tau) for alpha in range(forward.legs)]
    gram = np.array(
        [[pairing_b(r, phi, forward.g, forward.theta) for phi in phis] for r in classes],
        dtype=complex,
    )
    dual = np.linalg.inv(gram)
    out = []
    for row in dual:
        packet = GaussianPacket.zero(label.legs)
        for weight, r in zip(row, classes):
            packet = packet + r * weight
        out.append(packet)
    return out


def ext_structure(
    cls_vector: HolVector, tau: complex, tol: float = LATTICE_TOL
) -> ExtensionStructure:
    """
    The extension of ``E'`` by ``E`` defined by a class in ``H^1 Hom(E', E)``.

    Parameters
    ----------
    cls_vector : HolVector
        Degree-1 vector with ``source = E'`` and ``target = E``.
    tau : complex
        Complex structure parameter.

    Raises
    ------
    DomainError
        If the vector has degree 0, or the Hom label has degree 0 without
        being the identity with vanishing twist.
    DegenerateDegreeError
        If ``E`` or ``E'`` has degree 0.
    """
    if cls_vector.degree != 1:
        raise DomainError("extension classes live in degree 1")
    E_prime, E = cls_vector.source, cls_vector.target
    for obj in (E, E_prime):
        if obj.degree == 0:
            raise DegenerateDegreeError(f"{obj} has degree 0")
    label, twist = cls_vector.hom
    if cls_vector.is_zero():
        rep: Representative | None = None
    elif label.degree == 0:
        if not label.g.is_identity() or abs(twist) > tol:
            raise DomainError(f"unsupported degree-0 Hom {label.g} with twist {twist}")
        rep = AlgebraElement.one(label.theta) * complex(cls_vector.coeffs[0])
    else:
        reps = _psi_representatives(E, E_prime, tau)
        rep = GaussianPacket.zero(label.legs)
        for weight, packet in zip(cls_vector.coeffs, reps):
            rep = rep + packet * weight
    logger.debug(f"extension of {E_prime} by {E}: split={rep is None}")
    return ExtensionStructure(E, E_prime, rep, tau)


class HolomorphicCategory:
    """
    The category ``H* C^st(theta, tau)`` at fixed parameters.

    Parameters
    ----------
    params : TorusParams
        ``(theta, tau)``.
    tol : float, optional
        Certified tolerance of the structure constants.

    Examples
    --------
    >>> cat = HolomorphicCategory(TorusParams(0.2, -1j))
    >>> cat.cohomology_dims(cat.object(SL2Mat(1, 0, 2, 1)))
    (2, 0)
    """

    def __init__(self, params: TorusParams, tol: float = DEFAULT_TOL):
        self.params = params
        self.tol = tol
        logger.debug(f"category at theta={params.theta}, tau={params.tau}")

    @property
    def theta(self) -> float:
        return self.params.theta

    @property
    def tau(self) -> complex:
        return complex(self.params.tau)

    def object(self, g: SL2Mat, z: complex = 0j, shift: int = 0) -> StdObject:
        return StdObject(g, self.theta, z, shift)

    def hom_label(self, E: StdObject, E2: StdObject) -> tuple[ModuleLabel, complex]:
        return hom_label(E, E2)

    def cohomology_dims(self, E: StdObject) -> tuple[int, int]:
        return cohomology_dims(E, self.tau)

    def hom_dims(self, E: StdObject, E2: StdObject) -> tuple[int, int]:
        return hom_dims(E, E2, self.tau)

    def euler_char(self, E: StdObject) -> int:
        return euler_char(E, self.tau)

    def compose(self, v2: HolVector, v1: HolVector) -> HolVector:
        return compose_hom(v2, v1, self.tau, self.tol)

    def serre_pairing(self, v: HolVector, w: HolVector) -> complex:
        return serre_pairing(v, w)

    def serre_gram(self, E: StdObject) -> np.ndarray:
        return serre_gram(E, self.tau)

    def heisenberg_matrix(self, E: StdObject, m: int, n: int) -> np.ndarray:
        return heisenberg_matrix(E, m, n)

    def ext_structure(self, cls_vector: HolVector) -> ExtensionStructure:
        return ext_structure(cls_vector, self.tau)

    def associativity_residual(self, v3: HolVector, v2: HolVector, v1: HolVector) -> float:
        """``(v3 o v2) o v1`` against ``v3 o (v2 o v1)``, relative to ``max(|.|, 1)``."""
        left = self.compose(self.compose(v3, v2), v1)
        right = self.compose(v3, self.compose(v2, v1))
        return relative_residual(left.coeffs, right.coeffs)

    def heisenberg_commutator(self, E: StdObject, x: tuple[int, int], y: tuple[int, int]) -> np.ndarray:
        """``U_x U_y U_x^-1 U_y^-1``; a scalar matrix of modulus 1."""
        Ux = self.heisenberg_matrix(E, *x)
        Uy = self.heisenberg_matrix(E, *y)
        return Ux @ Uy @ np.linalg.inv(Ux) @ np.linalg.inv(Uy)

    def __repr__(self) -> str:
        return f"HolomorphicCategory(theta={self.theta}, tau={self.tau}, tol={self.tol})"

