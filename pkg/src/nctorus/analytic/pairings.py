"""Closed-form pairings of Gaussian packets.

* :func:`pairing_b` is the integral pairing
  ``E_{g^-1}(g theta) x E_g(theta) -> C``.
* :func:`pairing_t` is the lattice-sum pairing
  ``E_{g1}(g2 theta) x E_{g2}(theta) -> E_{g1 g2}(theta)``, evaluated at
  sample points with a certified tail bound.

Integrals use ``int exp(A x^2/2 + B x) dx = sqrt(-2 pi/A) exp(-B^2/(2A))``
(principal root, ``Re A < 0``) with polynomial prefactors handled through
the even Gaussian moments.
"""

import cmath
import logging
import math
from collections.abc import Sequence

import numpy as np
from numpy.polynomial import Polynomial

from nctorus.analytic.algebra import AlgebraElement
from nctorus.analytic.modules import ModuleLabel
from nctorus.analytic.packet import GaussianPacket, Term
from nctorus.exceptions import (
    DegenerateDegreeError,
    NonIntegrableError,
    ShapeMismatchError,
)
from nctorus.index_sets import enumerate_progression, index_set
from nctorus.sl2_arith import SL2Mat
from nctorus.truncation import choose_window

logger = logging.getLogger(__name__)

__all__ = [
    "gaussian_integral",
    "inner_product",
    "l2_norm",
    "pairing_b",
    "pairing_t",
    "pairing_t_inverse",
    "pairing_t_with_bound",
]


def gaussian_integral(poly: Polynomial | Sequence[complex], quad: complex, lin: complex) -> complex:
    """
    ``int poly(x) exp(quad x^2/2 + lin x) dx`` over the real line.

    Raises
    ------
    NonIntegrableError
        If ``Re(quad) >= 0``.

    Examples
    --------
    >>> round(gaussian_integral([1], -2, 0).real, 7)
    1.7724539
    """
    quad = complex(quad)
    lin = complex(lin)
    if not quad.real < 0:
        raise NonIntegrableError(f"quadratic coefficient {quad} is not integrable")
    if not isinstance(poly, Polynomial):
        poly = Polynomial(np.asarray(poly, dtype=complex))
    center = -lin / quad
    centered = poly(Polynomial([center, 1])).coef
    total = 0j
    moment = 1 + 0j
    for j in range(0, len(centered), 2):
        if j:
            moment *= (j - 1) * (-1 / quad)
        total += centered[j] * moment
    return total * cmath.sqrt(-2 * math.pi / quad) * cmath.exp(-lin * lin / (2 * quad))


def _leg_pairs(f1: GaussianPacket, f2: GaussianPacket, leg_map) -> list[tuple[Term, Term]]:
    by_leg: dict[int, list[Term]] = {}
    for t2 in f2.terms:
        by_leg.setdefault(t2.alpha, []).append(t2)
    return [
        (t1, t2)
        for t1 in f1.terms
        for t2 in by_leg.get(leg_map(t1.alpha) % f2.m_index, [])
    ]


def pairing_b(f1: GaussianPacket, f2: GaussianPacket, g: SL2Mat, theta: float) -> complex:
    """
    ``b(f1, f2) = sum_alpha int f1(x/rk(g, theta), alpha) f2(x, -a alpha) dx``.

    Parameters
    ----------
    f1 : GaussianPacket
        Element of ``E_{g^-1}(g theta)`` on ``|deg(g)|`` legs.
    f2 : GaussianPacket
        Element of ``E_g(theta)`` on ``|deg(g)|`` legs.
    g : SL2Mat
        Label with nonzero degree.
    theta : float
        Base parameter.

    Raises
    ------
    DegenerateDegreeError
        If ``deg(g) = 0``.
    ShapeMismatchError
        If a packet has the wrong number of legs.
    NonIntegrableError
        If a combined exponent is not integrable.
    """
    if g.c == 0:
        raise DegenerateDegreeError(f"b is defined for nonzero degree, got {g}")
    legs = abs(g.c)
    if f1.m_index != legs or f2.m_index != legs:
        raise ShapeMismatchError(
            f"b over {g} needs {legs} legs, got {f1.m_index} and {f2.m_index}"
        )
    r = g.rank(theta)
    scale = Polynomial([0, 1 / r])
    total = 0j
    for t1, t2 in _leg_pairs(f1, f2, lambda alpha: -g.a * alpha):
        poly = t1.polynomial()(scale) * t2.polynomial()
        total += gaussian_integral(poly, t1.quad / r**2 + t2.quad, t1.lin / r + t2.lin)
    return total


def inner_product(f: GaussianPacket, h: GaussianPacket) -> complex:
    """``sum_alpha int f(x, alpha) conj(h(x, alpha)) dx``."""
    if f.m_index != h.m_index:
        raise ShapeMismatchError(f"packets on {f.m_index} and {h.m_index} legs")
    h_bar = h.conjugate()
    total = 0j
    for t1, t2 in _leg_pairs(f, h_bar, lambda alpha: alpha):
        poly = t1.polynomial() * t2.polynomial()
        total += gaussian_integral(poly, t1.quad + t2.quad, t1.lin + t2.lin)
    return total


def l2_norm(f: GaussianPacket) -> float:
    return math.sqrt(max(inner_product(f, f).real, 0.0))


def _lattice_sum(
    t1: Term,
    t2: Term,
    x: float,
    r2: float,
    k1: float,
    k2: float,
    members_of,
    tol: float,
) -> tuple[complex, float]:
    """Sum ``t1(x/r2 + k1 n) t2(x - k2 n)`` over a progression in ``n``."""
    u = x / r2
    A1, B1, A2, B2 = t1.quad, t1.lin, t2.quad, t2.lin
    poly = t1.polynomial()(Polynomial([u, k1])) * t2.polynomial()(Polynomial([x, -k2]))
    Q = (A1 * k1 * k1 + A2 * k2 * k2) / 2
    L = A1 * u * k1 + B1 * k1 - A2 * x * k2 - B2 * k2
    K = A1 * u * u / 2 + B1 * u + A2 * x * x / 2 + B2 * x
    estimate = choose_window(
        -Q.real, abs(L.real), tol, K.real, [abs(c) for c in poly.coef]
    )
    members = members_of(estimate.window)
    if not members:
        return 0j, estimate.bound
    n = np.asarray(members, dtype=float)
    values = poly(n) * np.exp(Q * n * n + L * n + K)
    return complex(np.sum(values)), estimate.bound


def pairing_t_with_bound(
    g1: SL2Mat,
    g2: SL2Mat,
    theta: float,
    f1: GaussianPacket,
    f2: GaussianPacket,
    points: Sequence[tuple[float, int]],
    tol: float = 1e-12,
) -> tuple[list[complex], float]:
    """Values of :func:`pairing_t` in the generic case with their tail bound."""
    g12 = g1 @ g2
    c1, c2, c12 = g1.c, g2.c, g12.c
    if 0 in (c1, c2, c12):
        raise DegenerateDegreeError(
            f"t_{{{g1},{g2}}} with a vanishing degree is not a lattice pairing"
        )
    if f1.m_index != abs(c1) or f2.m_index != abs(c2):
        raise ShapeMismatchError(
            f"t over ({g1}, {g2}) needs {abs(c1)} and {abs(c2)} legs, "
            f"got {f1.m_index} and {f2.m_index}"
        )
    r2 = g2.rank(theta)
    rho = g1.rank(g2.mobius(theta))
    k1 = rho / (c1 * c12)
    k2 = 1 / (c2 * c12)
    pairs = [(t1, t2) for t1 in f1.terms for t2 in f2.terms]
    per_pair = tol / max(1, len(pairs))
    values: list[complex] = []
    worst = 0.0
    for x, alpha in points:
        total = 0j
        bound = 0.0
        for t1, t2 in pairs:
            progression = index_set(g1, g2, t1.alpha, t2.alpha, alpha)
            value, tail = _lattice_sum(
                t1,
                t2,
                x,
                r2,
                k1,
                k2,
                lambda window, p=progression: enumerate_progression(p, window),
                per_pair,
            )
            total += value
            bound += tail
        values.append(total)
        worst = max(worst, bound)
    return values, worst


def pairing_t(
    g1: SL2Mat,
    g2: SL2Mat,
    theta: float,
    f1: GaussianPacket | AlgebraElement,
    f2: GaussianPacket | AlgebraElement,
    points: Sequence[tuple[float, int]],
    tol: float = 1e-12,
) -> list[complex]:
    """
    Evaluate ``t_{g1,g2}(f1 (x) f2)`` at sample points ``(x, alpha)``.

    The special cases of the pairing are dispatched separately:

    * ``g2 = 1``: ``f2`` is an :class:`AlgebraElement` of ``A_theta`` acting
      on the right of ``f1``;
    * ``g1 = 1``: ``f1`` is an :class:`AlgebraElement` of ``A_{g2 theta}``
      acting on the left of ``f2``;
    * ``g1 g2 = 1``: the result lies in ``A_theta`` and ``points`` are
      read as exponent pairs ``(n1, n2)``; the returned values are the
      coefficients of ``U1^n1 U2^n2``.

    Raises
    ------
    DegenerateDegreeError
        If exactly one of the degrees vanishes outside the special cases.
    ConvergenceError
        If a lattice sum has no Gaussian decay.
    ShapeMismatchError
        If a packet has the wrong number of legs.
    """
    if g2.is_identity():
        label = ModuleLabel(g1, theta)
        product = _as_element(f2).act_right(_as_packet(f1), label)
        return [product.evaluate(x, alpha) for x, alpha in points]
    if g1.is_identity():
        label = ModuleLabel(g2, theta)
        product = _as_element(f1).act_left(_as_packet(f2), label)
        return [product.evaluate(x, alpha) for x, alpha in points]
    if (g1 @ g2).is_identity():
        window = max((max(abs(int(n1)), abs(int(n2))) for n1, n2 in points), default=0)
        element = pairing_t_inverse(g2, theta, _as_packet(f1), _as_packet(f2), window)
        return [element.coefficient(int(n1), int(n2)) for n1, n2 in points]
    values, _ = pairing_t_with_bound(
        g1, g2, theta, _as_packet(f1), _as_packet(f2), points, tol
    )
    return values


def _as_packet(value: GaussianPacket | AlgebraElement) -> GaussianPacket:
    if not isinstance(value, GaussianPacket):
        raise ShapeMismatchError(f"expected a GaussianPacket, got {type(value).__name__}")
    return value


def _as_element(value: GaussianPacket | AlgebraElement) -> AlgebraElement:
    if not isinstance(value, AlgebraElement):
        raise ShapeMismatchError(f"expected an AlgebraElement, got {type(value).__name__}")
    return value


def pairing_t_inverse(
    g: SL2Mat,
    theta: float,
    f1: GaussianPacket,
    f2: GaussianPacket,
    window: int,
) -> AlgebraElement:
    """
    ``t_{g^-1,g}(f1 (x) f2) = sum U1^n1 U2^n2 b(U2^-n2 U1^-n1 f1 (x) f2)``.

    Only monomials with ``|n1|, |n2| <= window`` are computed.
    """
    g_inv = g.inverse()
    label = ModuleLabel(g_inv, g.mobius(theta))
    coeffs: dict[tuple[int, int], complex] = {}
    for n1 in range(-window, window + 1):
        for n2 in range(-window, window + 1):
            moved = AlgebraElement.monomial(theta, 0, -n2) * AlgebraElement.monomial(
                theta, -n1, 0
            )
            coeffs[(n1, n2)] = pairing_b(moved.act_left(f1, label), f2, g, theta)
    return AlgebraElement(theta, coeffs)
