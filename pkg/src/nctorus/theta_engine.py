"""Certified evaluation of theta-type structure constants.

For labels ``g1, g2`` of positive degree the composition of holomorphic
sections

    t_{g1,g2}(phi_{a1} (x) phi_{a2}) = sum_a c_{a1,a2}^a phi_a

is governed by the lattice sums

    c_{a1,a2}^a = sum_{m in I_{g1,g2}(a1,a2,a)} e((-tau*m**2/2 + L*m) / D)

with ``D = c1*c2*c12``, ``L = c1*z2 - rk(g1 g2, theta)*c2*z1`` and
``e(t) = exp(2*pi*i*t)``. Tables are truncated with a certified tail bound
(see :mod:`nctorus.truncation`).
"""

import cmath
import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Any

import numpy as np

from nctorus.analytic.modules import ModuleLabel, phi_basis, sample_points
from nctorus.analytic.pairings import pairing_t
from nctorus.exceptions import DomainError
from nctorus.index_sets import enumerate_progression, index_set
from nctorus.sl2_arith import SL2Mat, TorusParams
from nctorus.truncation import choose_window

logger = logging.getLogger(__name__)

__all__ = [
    "DEFAULT_TOL",
    "StructureConstantsTable",
    "associativity_check",
    "associativity_residual",
    "collapse_check",
    "collapse_residual",
    "composition_constants",
    "cyclic_identity_check",
    "cyclic_identity_residual",
    "lambda_factor",
    "magnitude",
    "pairing_residual",
    "relative_residual",
    "structure_constants",
    "theta_combination",
]

DEFAULT_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class StructureConstantsTable:
    """
    Structure constants ``c_{a1,a2}^a`` of ``t_{g1,g2}`` on a fixed base.

    Attributes
    ----------
    g1, g2 : SL2Mat
        Labels of the two factors.
    theta : float
        Base parameter (the module ``E_{g2}`` lives over ``theta``).
    tau : complex
        Complex structure, ``Im(tau) < 0``.
    z1, z2 : complex
        Twists entering the exponent.
    values : numpy.ndarray
        Complex array of shape ``(c1, c2, c12)``.
    tail_bound : float
        Every entry is within this distance of the untruncated sum.
    tol : float
        Requested tolerance.
    """

    g1: SL2Mat
    g2: SL2Mat
    theta: float
    tau: complex
    z1: complex
    z2: complex
    values: np.ndarray
    tail_bound: float
    tol: float = DEFAULT_TOL

    @property
    def shape(self) -> tuple[int, int, int]:
        return self.values.shape

    def entry(self, a1: int, a2: int, a: int) -> complex:
        c1, c2, c12 = self.values.shape
        return complex(self.values[a1 % c1, a2 % c2, a % c12])

    def max_abs_difference(self, other: "StructureConstantsTable") -> float:
        if self.values.shape != other.values.shape:
            return math.inf
        return float(np.max(np.abs(self.values - other.values)))

    def to_dict(self) -> dict[str, Any]:
        entries = [
            {
                "a1": int(a1),
                "a2": int(a2),
                "a": int(a),
                "re": float(value.real),
                "im": float(value.imag),
            }
            for (a1, a2, a), value in np.ndenumerate(self.values)
        ]
        return {
            "g1": self.g1.to_list(),
            "g2": self.g2.to_list(),
            "theta": self.theta,
            "tau": [self.tau.real, self.tau.imag],
            "z1": [self.z1.real, self.z1.imag],
            "z2": [self.z2.real, self.z2.imag],
            "tol": self.tol,
            "entries": entries,
            "tail_bound": self.tail_bound,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "StructureConstantsTable":
        (a1, b1), (c1, d1) = data["g1"]
        (a2, b2), (c2, d2) = data["g2"]
        g1 = SL2Mat(int(a1), int(b1), int(c1), int(d1))
        g2 = SL2Mat(int(a2), int(b2), int(c2), int(d2))
        c12 = (g1 @ g2).c
        values = np.zeros((abs(g1.c), abs(g2.c), abs(c12)), dtype=complex)
        for item in data["entries"]:
            values[item["a1"], item["a2"], item["a"]] = complex(item["re"], item["im"])
        values.flags.writeable = False
        return cls(
            g1=g1,
            g2=g2,
            theta=float(data["theta"]),
            tau=complex(*data["tau"]),
            z1=complex(*data["z1"]),
            z2=complex(*data["z2"]),
            values=values,
            tail_bound=float(data["tail_bound"]),
            tol=float(data["tol"]),
        )


def theta_combination(g1: SL2Mat, g2: SL2Mat, theta: float, z1: complex, z2: complex) -> complex:
    """The only combination ``c1*z2 - rk(g1 g2, theta)*c2*z1`` through which theta enters."""
    return g1.c * z2 - (g1 @ g2).rank(theta) * g2.c * z1


def structure_constants(
    g1: SL2Mat,
    g2: SL2Mat,
    params: TorusParams,
    z1: complex,
    z2: complex,
    tol: float = DEFAULT_TOL,
) -> StructureConstantsTable:
    """
    Compute the table ``c_{a1,a2}^a`` for ``t_{g1,g2}`` over ``params.theta``.

    Parameters
    ----------
    g1, g2 : SL2Mat
        Labels with ``deg(g1) > 0`` and ``deg(g2) > 0``.
    params : TorusParams
        ``theta`` is the base of ``E_{g2}``; ``E_{g1}`` lives over ``g2 theta``.
    z1, z2 : complex
        Twists.
    tol : float, optional
        Certified bound on the truncation error of every entry.

    Returns
    -------
    StructureConstantsTable

    Raises
    ------
    DomainError
        If a degree or a rank is not positive, or ``tol <= 0``.
    ConvergenceError
        If the truncation window exceeds the term cap.

    Examples
    --------
    >>> g = SL2Mat(1, 0, 1, 1)
    >>> table = structure_constants(g, g, TorusParams(0.0, -1j), 0, 0)
    >>> round(table.entry(0, 0, 0).real, 6)
    1.003735
    """
    if not tol > 0:
        raise DomainError(f"tol must be positive, got {tol}")
    return _structure_constants(g1, g2, params, complex(z1), complex(z2), float(tol))


@lru_cache(maxsize=1024)
def _structure_constants(
    g1: SL2Mat, g2: SL2Mat, params: TorusParams, z1: complex, z2: complex, tol: float
) -> StructureConstantsTable:
    theta, tau = params.theta, complex(params.tau)
    c1, c2 = g1.c, g2.c
    if c1 <= 0 or c2 <= 0:
        raise DomainError(f"degrees must be positive, got deg(g1)={c1}, deg(g2)={c2}")
    rk2 = g2.rank(theta)
    rk1 = g1.rank(g2.mobius(theta)) if rk2 > 0 else 0.0
    if rk2 <= 0 or rk1 <= 0:
        raise DomainError(
            f"ranks must be positive, got rk(g2)={rk2}, rk(g1, g2 theta)={rk1}"
        )
    g12 = g1 @ g2
    c12 = g12.c
    D = c1 * c2 * c12
    L = theta_combination(g1, g2, theta, z1, z2)
    q = -math.pi * tau.imag / D
    s = 2.0 * math.pi * abs(L.imag) / D
    estimate = choose_window(q, s, tol)

    values = np.zeros((c1, c2, c12), dtype=complex)
    for a1 in range(c1):
        for a2 in range(c2):
            for a in range(c12):
                members = enumerate_progression(
                    index_set(g1, g2, a1, a2, a), estimate.window
                )
                if not members:
                    continue
                m = np.asarray(members, dtype=float)
                phase = 2j * cmath.pi * (-tau * m * m / 2.0 + L * m) / D
                values[a1, a2, a] = np.sum(np.exp(phase))
    values.flags.writeable = False
    logger.debug(
        f"c({g1}; {g2}) at theta={theta}: window {estimate.window}, "
        f"tail {estimate.bound:.2e}"
    )
    return StructureConstantsTable(
        g1=g1,
        g2=g2,
        theta=theta,
        tau=tau,
        z1=z1,
        z2=z2,
        values=values,
        tail_bound=estimate.bound,
        tol=tol,
    )


def composition_constants(
    g1: SL2Mat,
    g2: SL2Mat,
    g3: SL2Mat,
    z1: complex,
    z2: complex,
    z3: complex,
    params: TorusParams,
    tol: float = DEFAULT_TOL,
) -> StructureConstantsTable:
    """
    Constants of ``Hom(E2, E3) x Hom(E1, E2) -> Hom(E1, E3)`` in the phi-bases.

    ``E_i = E_{g_i}^{z_i}(theta)``. The returned table is indexed by residues
    mod ``deg(g3 g2^-1)``, ``deg(g2 g1^-1)`` and ``deg(g3 g1^-1)``.
    """
    theta = params.theta
    rk1 = g1.rank(theta)
    h1 = g3 @ g2.inverse()
    h2 = g2 @ g1.inverse()
    base = params.with_theta(g1.mobius(theta))
    return structure_constants(
        h1, h2, base, rk1 * (complex(z3) - complex(z2)), rk1 * (complex(z2) - complex(z1)), tol
    )


def lambda_factor(g: SL2Mat, theta: float, theta_prime: float) -> float:
    """``rk(g, theta) / rk(g, theta_prime)``."""
    return g.rank(theta) / g.rank(theta_prime)


def magnitude(*arrays: np.ndarray) -> float:
    """``max(1, max|x|)`` over all entries of ``arrays``."""
    return max([1.0] + [float(np.max(np.abs(x))) for x in arrays if np.size(x)])


def relative_residual(lhs: np.ndarray, rhs: np.ndarray) -> float:
    """
    ``max|lhs - rhs| / max(|lhs|, |rhs|, 1)``.

    Structure constants for moderate labels reach ``1e36``, so identities
    between them are compared on this scale.

    Examples
    --------
    >>> relative_residual(np.array([8.0]), np.array([6.0]))
    0.25
    """
    lhs, rhs = np.asarray(lhs), np.asarray(rhs)
    if not lhs.size:
        return 0.0
    return float(np.max(np.abs(lhs - rhs))) / magnitude(lhs, rhs)


def _within(
    lhs: StructureConstantsTable, rhs: np.ndarray, rhs_tail: float, tol: float
) -> tuple[bool, float]:
    if not rhs.size:
        return True, 0.0
    scale = magnitude(lhs.values, rhs)
    residual = relative_residual(lhs.values, rhs)
    return residual <= tol + (lhs.tail_bound + rhs_tail) / scale, residual


def cyclic_identity_residual(
    g1: SL2Mat,
    g2: SL2Mat,
    g3: SL2Mat,
    z1: complex,
    z2: complex,
    z3: complex,
    theta: float,
    theta_prime: float,
    tau: complex,
    tol: float = 1e-9,
    z_prime: tuple[complex, complex, complex] | None = None,
) -> tuple[bool, float]:
    """
    Compare composition constants over ``theta`` and ``theta_prime``.

    When all ranks stay positive at ``theta_prime`` the constants must agree
    after rescaling the twists by ``lambda(g) = rk(g, theta)/rk(g, theta_prime)``.
    When only ``rk(g1, theta_prime)`` turns negative they must agree with the
    constants of the rotated triple ``(g2, g3, -g1)``:

        c_{a,b}^c(g1,g2,g3; z; theta)
            = c_{-d13 c, a}^{-d12 b}(g2,g3,-g1; l2 z2, l3 z3, l1 z1; theta')

    where ``d12``, ``d13`` are the lower-right entries of ``g2 g1^-1`` and
    ``g3 g1^-1``.

    Parameters
    ----------
    z_prime : tuple of complex, optional
        Replaces the rescaled twists ``(l1 z1, l2 z2, l3 z3)``.

    Returns
    -------
    tuple[bool, float]
        Verdict and relative residual.

    Raises
    ------
    DomainError
        If the triple is not admissible or the sign pattern at
        ``theta_prime`` is not one of the two above.
    """
    params = TorusParams(theta, tau)
    params_prime = TorusParams(theta_prime, tau)
    gs = (g1, g2, g3)
    if any(g.rank(theta) <= 0 for g in gs):
        raise DomainError("all ranks must be positive at theta")
    d21 = (g2 @ g1.inverse()).c
    d32 = (g3 @ g2.inverse()).c
    if d21 <= 0 or d32 <= 0:
        raise DomainError(
            f"need deg(g2 g1^-1) > 0 and deg(g3 g2^-1) > 0, got {d21}, {d32}"
        )
    if z_prime is None:
        z_prime = tuple(
            lambda_factor(g, theta, theta_prime) * complex(z)
            for g, z in zip(gs, (z1, z2, z3), strict=True)
        )
    w1, w2, w3 = z_prime

    lhs = composition_constants(g1, g2, g3, z1, z2, z3, params, tol)
    signs = tuple(g.rank(theta_prime) > 0 for g in gs)
    if all(signs):
        rhs = composition_constants(g1, g2, g3, w1, w2, w3, params_prime, tol)
        ok, residual = _within(lhs, rhs.values, rhs.tail_bound, tol)
    elif signs == (False, True, True):
        rotated = composition_constants(g2, g3, -g1, w2, w3, w1, params_prime, tol)
        d12 = (g2 @ g1.inverse()).d
        d13 = (g3 @ g1.inverse()).d
        n_a, n_b, n_c = lhs.shape
        expected = np.empty(lhs.shape, dtype=complex)
        for a in range(n_a):
            for b in range(n_b):
                for c in range(n_c):
                    expected[a, b, c] = rotated.entry(-d13 * c, a, -d12 * b)
        ok, residual = _within(lhs, expected, rotated.tail_bound, tol)
    else:
        raise DomainError(f"sign pattern {signs} at theta'={theta_prime} not covered")
    logger.debug(f"cyclic identity residual {residual:.3e} (ok={ok})")
    return ok, residual


def cyclic_identity_check(
    g1: SL2Mat,
    g2: SL2Mat,
    g3: SL2Mat,
    z1: complex,
    z2: complex,
    z3: complex,
    theta: float,
    theta_prime: float,
    tau: complex,
    tol: float = 1e-9,
    z_prime: tuple[complex, complex, complex] | None = None,
) -> bool:
    """Verdict of :func:`cyclic_identity_residual`."""
    ok, _ = cyclic_identity_residual(
        g1, g2, g3, z1, z2, z3, theta, theta_prime, tau, tol, z_prime
    )
    return ok


def collapse_check(
    g1: SL2Mat,
    g2: SL2Mat,
    params: TorusParams,
    z1: complex,
    z2: complex,
    params_prime: TorusParams,
    z1_prime: complex,
    z2_prime: complex,
    tol: float = 1e-10,
) -> bool:
    """
    Tables with equal :func:`theta_combination` agree entry-wise.

    Raises
    ------
    DomainError
        If the two parameter sets do not share the combination.
    """
    ok, _ = collapse_residual(
        g1, g2, params, z1, z2, params_prime, z1_prime, z2_prime, tol
    )
    return ok


def collapse_residual(
    g1: SL2Mat,
    g2: SL2Mat,
    params: TorusParams,
    z1: complex,
    z2: complex,
    params_prime: TorusParams,
    z1_prime: complex,
    z2_prime: complex,
    tol: float = 1e-10,
) -> tuple[bool, float]:
    """Verdict and relative residual of :func:`collapse_check`."""
    L = theta_combination(g1, g2, params.theta, z1, z2)
    L_prime = theta_combination(g1, g2, params_prime.theta, z1_prime, z2_prime)
    if abs(L - L_prime) > 1e-12 * max(1.0, abs(L)):
        raise DomainError(f"combinations differ: {L} vs {L_prime}")
    first = structure_constants(g1, g2, params, z1, z2, tol)
    second = structure_constants(g1, g2, params_prime, z1_prime, z2_prime, tol)
    return _within(first, second.values, second.tail_bound, tol)


def _product_error(
    x: StructureConstantsTable, y: StructureConstantsTable, inner: int
) -> float:
    max_x = float(np.max(np.abs(x.values))) if x.values.size else 0.0
    max_y = float(np.max(np.abs(y.values))) if y.values.size else 0.0
    return inner * (
        max_x * y.tail_bound + max_y * x.tail_bound + x.tail_bound * y.tail_bound
    )


def associativity_check(
    g1: SL2Mat,
    g2: SL2Mat,
    g3: SL2Mat,
    params: TorusParams,
    w1: complex,
    w2: complex,
    w3: complex,
    tol: float = 1e-9,
) -> bool:
    """
    Both bracketings of a triple composition give the same constants.

    ``f3 = phi^{w3}`` lives on ``E_{g3}(theta)``, ``f2`` on ``E_{g2}(g3 theta)``
    and ``f1`` on ``E_{g1}(g2 g3 theta)``; all degrees and ranks must be
    positive.
    """
    residual, bound = associativity_residual(g1, g2, g3, params, w1, w2, w3, tol)
    return residual <= bound


def associativity_residual(
    g1: SL2Mat,
    g2: SL2Mat,
    g3: SL2Mat,
    params: TorusParams,
    w1: complex,
    w2: complex,
    w3: complex,
    tol: float = 1e-9,
) -> tuple[float, float]:
    """
    Relative residual of :func:`associativity_check` and the bound it must meet.

    Both are measured against the largest contracted term, so truncation
    tails enter the bound divided by that scale.
    """
    theta = params.theta
    rk3 = g3.rank(theta)
    outer = params.with_theta(g3.mobius(theta))
    first = structure_constants(g1, g2, outer, rk3 * w1, rk3 * w2, tol)
    second = structure_constants(g1 @ g2, g3, params, w1 + w2, w3, tol)
    third = structure_constants(g2, g3, params, w2, w3, tol)
    fourth = structure_constants(g1, g2 @ g3, params, w1, w2 + w3, tol)

    left = np.einsum("abk,kcd->abcd", first.values, second.values)
    right = np.einsum("bck,akd->abcd", third.values, fourth.values)
    scale = max(
        magnitude(left, right),
        magnitude(first.values) * magnitude(second.values),
        magnitude(third.values) * magnitude(fourth.values),
    )
    tails = _product_error(first, second, first.shape[2]) + _product_error(
        third, fourth, third.shape[2]
    )
    residual = float(np.max(np.abs(left - right))) / scale
    bound = tol + tails / scale
    logger.debug(f"associativity residual {residual:.3e}, bound {bound:.3e}")
    return residual, bound


def pairing_residual(
    g1: SL2Mat,
    g2: SL2Mat,
    params: TorusParams,
    z1: complex,
    z2: complex,
    points: list[tuple[float, int]] | None = None,
    tol: float = DEFAULT_TOL,
) -> float:
    """
    Compare :func:`~nctorus.analytic.pairings.pairing_t` with the table.

    ``t(phi_{a1}^{rk(g2) z1} (x) phi_{a2}^{z2})`` is evaluated directly and
    against ``sum_a c_{a1,a2}^a(z1, z2) phi_a^{z1 + z2}`` on ``E_{g1 g2}``.

    Returns
    -------
    float
        Largest relative residual over ``(a1, a2)`` and ``points``.

    Raises
    ------
    DomainError
        Under the preconditions of :func:`structure_constants`.
    """
    theta, tau = params.theta, params.tau
    table = structure_constants(g1, g2, params, z1, z2, tol)
    first = ModuleLabel(g1, g2.mobius(theta))
    second = ModuleLabel(g2, theta)
    target = ModuleLabel(g1 @ g2, theta)
    if points is None:
        points = sample_points(target)
    shifted = g2.rank(theta) * complex(z1)
    images = [phi_basis(target, complex(z1) + complex(z2), a, tau) for a in range(target.legs)]
    worst = 0.0
    for a1 in range(first.legs):
        f1 = phi_basis(first, shifted, a1, tau)
        for a2 in range(second.legs):
            f2 = phi_basis(second, z2, a2, tau)
            values = np.asarray(pairing_t(g1, g2, theta, f1, f2, points, tol), dtype=complex)
            expected = np.array(
                [table.entry(a1, a2, a) * images[a].evaluate(x, a) for x, a in points],
                dtype=complex,
            )
            worst = max(worst, relative_residual(values, expected))
    logger.debug(f"pairing residual for {g1}, {g2}: {worst:.3e}")
    return worst
