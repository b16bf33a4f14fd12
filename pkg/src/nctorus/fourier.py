"""Discrete data of the Fourier-Mukai type transform ``S``.

``S(E)`` is the descent to ``X = C/(Z + tau Z)`` of the family of kernels of
``dbar + 2 pi i z`` along ``z``, glued by ``rho_1(f)(z) = f(z + 1) U2`` and
``rho'_tau(f)(z) = e(-theta z) f(z + tau) U1``. For ``deg(E) > 0`` the
kernel at ``z`` is spanned by ``phi_alpha^{E.z + z}`` and the gluing acts on
coefficient vectors by

    rho_1:     diag(e(-n alpha / m))
    rho'_tau:  alpha -> alpha + 1 with factor e((E.z + z)/mu + tau/(2 mu) - theta z)

and since ``1/mu = theta + n/m`` the factor is also
``e(n z/m + E.z/mu + tau/(2 mu))``.

No sheaves are built; the transform is described by these matrices and by
the discrete invariants of its image.
"""

import logging
import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from nctorus.analytic.modules import (
    ModuleLabel,
    act_generator,
    dbar,
    e,
    phi_basis,
    sample_points,
    translation_twist,
)
from nctorus.analytic.packet import GaussianPacket
from nctorus.category import StdObject, is_lattice_equivalent
from nctorus.exceptions import DomainError, InvariantViolationError
from nctorus.sl2_arith import lattice_coordinates

logger = logging.getLogger(__name__)

__all__ = [
    "FMImage",
    "automorphy_check",
    "automorphy_matrices",
    "extension_automorphy",
    "extension_nonsplit_check",
    "fm_class",
    "kernel_basis",
    "kernel_residual",
    "transform_tensor_check",
]


@dataclass(frozen=True)
class FMImage:
    """
    Invariants of ``S(E)``.

    Attributes
    ----------
    kind : {"bundle", "shifted", "point"}
        A vector bundle, a vector bundle placed in degree 1, or the
        structure sheaf of a point placed in degree 1.
    rank, degree : int
        Of the underlying sheaf.
    shift : int
        Homological shift of the image.
    point : complex or None
        For ``kind="point"``, representative in ``[0, 1) + [0, 1) tau``.
    """

    kind: Literal["bundle", "shifted", "point"]
    rank: int
    degree: int
    shift: int
    point: complex | None = None

    @property
    def k_class(self) -> tuple[int, int]:
        sign = -1 if self.shift % 2 else 1
        return (sign * self.rank, sign * self.degree)


def _positive_label(E: StdObject) -> ModuleLabel:
    label = E.label
    if label.degree <= 0 or label.mu <= 0:
        raise DomainError(f"{E} needs positive degree and slope")
    return label


def kernel_basis(E: StdObject, z0: complex, tau: complex) -> list[GaussianPacket]:
    """
    Basis ``phi_alpha^{E.z + z0}`` of the kernel of ``dbar_{E.z} + 2 pi i z0``.

    Raises
    ------
    DomainError
        If ``mu(E) <= 0``.
    """
    label = _positive_label(E)
    w = E.z + complex(z0)
    return [phi_basis(label, w, alpha, tau) for alpha in range(label.legs)]


def _tau_factor(E: StdObject, z0: complex, tau: complex) -> complex:
    mu = E.mu
    return e((E.z + complex(z0)) / mu + complex(tau) / (2 * mu) - E.theta * complex(z0))


def automorphy_matrices(E: StdObject, z0: complex, tau: complex) -> tuple[np.ndarray, np.ndarray]:
    """
    Matrices of ``rho_1`` and ``rho'_tau`` on coefficient vectors at ``z0``.

    Returns
    -------
    tuple[np.ndarray, np.ndarray]
        ``(R1, Rtau)`` with ``R1 = diag(e(-n alpha/m))`` and
        ``Rtau[alpha + 1, alpha] = e((E.z + z0)/mu + tau/(2 mu) - theta z0)``.
    """
    label = _positive_label(E)
    m, n = label.m, label.n
    R1 = np.diag([e(-n * alpha / m) for alpha in range(m)])
    Rtau = np.zeros((m, m), dtype=complex)
    factor = _tau_factor(E, z0, tau)
    for alpha in range(m):
        Rtau[(alpha + 1) % m, alpha] = factor
    return R1, Rtau


def _scaled_error(lhs: GaussianPacket, rhs: GaussianPacket, points: list[tuple[float, int]]) -> float:
    scale = max(1.0, float(np.max(np.abs(rhs.evaluate_many(points)))))
    return lhs.max_abs_difference(rhs, points) / scale


def automorphy_check(E: StdObject, z0: complex, tol: float = 1e-10, tau: complex = -1j) -> bool:
    """
    Verify the transition factors of :func:`automorphy_matrices` pointwise.

    Checks ``phi_alpha^{w+1} U2 = e(-n alpha/m) phi_alpha^w`` and
    ``e(-theta z0) phi_alpha^{w+tau} U1 = factor * phi_{alpha+1}^w`` with
    ``w = E.z + z0``, and the commutation ``rho_1 o t_1^* rho'_tau =
    rho'_tau o t_tau^* rho_1`` of the matrices.
    """
    label = _positive_label(E)
    m, n = label.m, label.n
    z0 = complex(z0)
    w = E.z + z0
    points = sample_points(label)
    factor = _tau_factor(E, z0, tau)
    worst = 0.0
    for alpha in range(m):
        base = phi_basis(label, w, alpha, tau)
        along_one = act_generator(phi_basis(label, w + 1, alpha, tau), label, "right", "U2")
        worst = max(worst, _scaled_error(along_one, base * e(-n * alpha / m), points))
        along_tau = act_generator(phi_basis(label, w + tau, alpha, tau), label, "right", "U1")
        expected = phi_basis(label, w, alpha + 1, tau) * factor
        worst = max(worst, _scaled_error(along_tau * e(-E.theta * z0), expected, points))

    R1, Rtau_shifted = automorphy_matrices(E, z0 + 1, tau)
    _, Rtau = automorphy_matrices(E, z0, tau)
    commutator = R1 @ Rtau_shifted - Rtau @ R1
    worst = max(worst, float(np.max(np.abs(commutator))) / max(1.0, abs(factor)))
    logger.debug(f"automorphy residual for {E} at z0={z0}: {worst:.3e}")
    return worst <= tol


def fm_class(E: StdObject, tau: complex = -1j) -> FMImage:
    """
    Invariants of ``S(E)``.

    ``m > 0`` gives a bundle of rank ``m`` and degree ``-n``; ``m < 0`` a
    bundle of rank ``-m`` and degree ``n`` in degree 1; the trivial module
    ``E_{1,0}^z`` gives the point ``-z`` in degree 1.

    Examples
    --------
    >>> fm_class(StdObject.from_nm(1, 2, 0.2))
    FMImage(kind='bundle', rank=2, degree=-1, shift=0, point=None)
    """
    m, n = E.g.c, E.g.d
    if m > 0:
        return FMImage("bundle", m, -n, E.shift)
    if m < 0:
        return FMImage("shifted", -m, n, E.shift - 1)
    return FMImage("point", 0, 1, E.shift - 1, _reduce_point(-E.z, tau))


def _reduce_point(w: complex, tau: complex) -> complex:
    p, q = lattice_coordinates(w, tau)
    p -= math.floor(p)
    q -= math.floor(q)
    return p + q * complex(tau)


def _pair_coordinates(
    pair: tuple[GaussianPacket, GaussianPacket],
    basis: list[GaussianPacket],
    tol: float,
) -> np.ndarray:
    top, bottom = pair
    m = len(basis)
    c1 = np.array([top.evaluate(0.0, b) for b in range(m)], dtype=complex)
    c2 = np.array([bottom.evaluate(0.0, b) for b in range(m)], dtype=complex)
    x0 = 0.5
    for b, phi in enumerate(basis):
        g = phi.evaluate(x0, b)
        expected_top = (c1[b] - x0 * c2[b]) * g
        expected_bottom = c2[b] * g
        scale = max(1.0, abs(c1[b]), abs(c2[b]))
        if (
            abs(top.evaluate(x0, b) - expected_top) > tol * scale
            or abs(bottom.evaluate(x0, b) - expected_bottom) > tol * scale
        ):
            raise InvariantViolationError(f"image on leg {b} leaves the kernel")
    return np.concatenate([c1, c2])


def extension_automorphy(
    E: StdObject, z0: complex = 0j, tau: complex = -1j, tol: float = 1e-9
) -> tuple[np.ndarray, np.ndarray]:
    """
    ``2m x 2m`` matrices of ``rho_1`` and ``rho'_tau`` on the kernel of
    ``[[dbar, 1], [0, dbar]]`` at ``z0``.

    The kernel is spanned by ``(phi_b, 0)`` and ``(-x phi_b, phi_b)``; both
    actions are computed on packets and read back in that basis.
    """
    label = _positive_label(E)
    m = label.m
    w = E.z + complex(z0)
    basis = kernel_basis(E, z0, tau)

    def kernel_pairs(twist: complex) -> list[tuple[GaussianPacket, GaussianPacket]]:
        phis = [phi_basis(label, twist, b, tau) for b in range(m)]
        zero = GaussianPacket.zero(label.legs)
        first = [(phi, zero) for phi in phis]
        second = [(-phi.times_polynomial((0, 1)), phi) for phi in phis]
        return first + second

    def act(pair, gen: str, scalar: complex):
        return tuple(act_generator(part, label, "right", gen) * scalar for part in pair)

    R1 = np.column_stack(
        [_pair_coordinates(act(pair, "U2", 1.0), basis, tol) for pair in kernel_pairs(w + 1)]
    )
    correction = e(-E.theta * complex(z0))
    Rtau = np.column_stack(
        [
            _pair_coordinates(act(pair, "U1", correction), basis, tol)
            for pair in kernel_pairs(w + tau)
        ]
    )
    return R1, Rtau


def _splitting_residual(matrices: list[np.ndarray], m: int) -> float:
    """Least-squares residual of ``A11 Y - Y A22 = A12`` over all matrices."""
    eye = np.eye(m)
    systems, rhs = [], []
    for A in matrices:
        A11, A12, A22 = A[:m, :m], A[:m, m:], A[m:, m:]
        systems.append(np.kron(eye, A11) - np.kron(A22.T, eye))
        rhs.append(A12.reshape(-1, order="F"))
    M = np.vstack(systems)
    b = np.concatenate(rhs)
    norm = float(np.linalg.norm(b))
    if norm == 0.0:
        return 0.0
    solution, *_ = np.linalg.lstsq(M, b, rcond=None)
    return float(np.linalg.norm(M @ solution - b)) / norm


def extension_nonsplit_check(
    E: StdObject,
    tol: float = 1e-8,
    tau: complex = -1j,
    drop_mixing: bool = False,
    z0: complex = 0j,
) -> bool:
    """
    Whether ``S`` of the self-extension ``[[dbar, 1], [0, dbar]]`` of ``E`` is non-split.

    The extension splits iff a constant ``Y`` conjugates both gluing
    matrices to block-diagonal form, i.e. solves ``A11 Y - Y A22 = A12``.

    Parameters
    ----------
    drop_mixing : bool, optional
        Zero the off-diagonal blocks first; the result is then split.

    Raises
    ------
    InvariantViolationError
        If the gluing does not preserve the sub-bundle.
    """
    label = _positive_label(E)
    m = label.m
    R1, Rtau = extension_automorphy(E, z0, tau)
    for A in (R1, Rtau):
        if float(np.max(np.abs(A[m:, :m]))) > 1e-9 * max(1.0, float(np.max(np.abs(A)))):
            raise InvariantViolationError("gluing does not preserve the sub-bundle")
    if drop_mixing:
        R1, Rtau = R1.copy(), Rtau.copy()
        R1[:m, m:] = 0
        Rtau[:m, m:] = 0
    residual = _splitting_residual([R1, Rtau], m)
    logger.debug(f"splitting residual for {E}: {residual:.3e}")
    return residual > tol


def transform_tensor_check(
    E: StdObject, lam: complex, v1: float, v2: float, tau: complex = -1j, tol: float = 1e-9
) -> bool:
    """
    ``S(E (x) E_1^lam) = t_lam^* S(E)`` and ``S(t_v^* E) = P_v (x) S(E)`` on invariants.

    Tensoring moves the twist by ``lam``, so a point image moves by ``-lam``;
    translations change only the twist, so rank and degree are kept.
    """
    before = fm_class(E, tau)
    tensored = fm_class(StdObject(E.g, E.theta, E.z + complex(lam), E.shift), tau)
    if E.degree == 0:
        ok = is_lattice_equivalent(before.point - complex(lam), tensored.point, 1.0, tau, tol)
    else:
        ok = (tensored.rank, tensored.degree) == (before.rank, before.degree)
    moved_z = E.z + translation_twist(E.label, v1, v2, tau)
    translated = fm_class(StdObject(E.g, E.theta, moved_z, E.shift), tau)
    ok = ok and (translated.kind, translated.rank, translated.degree) == (
        before.kind,
        before.rank,
        before.degree,
    )
    return ok


def kernel_residual(E: StdObject, z0: complex, tau: complex) -> int:
    """Number of kernel basis packets not annihilated symbolically."""
    label = E.label
    w = E.z + complex(z0)
    return sum(not dbar(f, label, w, tau).is_zero() for f in kernel_basis(E, z0, tau))
