"""Line bundles on ``X = C/(Z + tau Z)`` as basic modules over ``A_0``.

``L_c(u)`` is the line bundle of degree ``c`` whose smooth sections are the
functions ``f`` on ``C`` with

    f(z + 1) = f(z),    f(z - tau) = e(u - c z) f(z).

In the real coordinates ``z = x - tau y`` a section expands as
``f = sum_n f_n(y) e(n x)`` with ``f_n(y + 1) = f_{n+c}(y) e(u + c tau y)``,
and

    g_n(y) = f_n(y) e(-c tau y**2/2 + (c tau/2 - u) y),
    phi(y, alpha) = g_alpha(y - alpha/c)

identifies ``C^inf(L_c(u))`` with ``E_{1,c}(0)``. Under this map ``dbar``
(up to the factor ``tau - conj(tau)``) becomes the standard holomorphic
structure of twist ``u - c tau/2``, and the phi-basis becomes the classical
theta functions of level ``c``.
"""

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import Polynomial

from nctorus.analytic.modules import ModuleLabel, dbar, e, phi_basis
from nctorus.analytic.packet import GaussianPacket, Term
from nctorus.exceptions import DegenerateDegreeError, DomainError
from nctorus.index_sets import ArithProgression, enumerate_progression
from nctorus.truncation import choose_window

logger = logging.getLogger(__name__)

__all__ = [
    "LineBundleSection",
    "classical_theta",
    "dolbeault_residual",
    "line_bundle_label",
    "line_bundle_twist",
    "real_coordinates",
    "theta_dictionary_residual",
]

_FD_STEP = 1e-4


def line_bundle_label(c: int) -> ModuleLabel:
    """The module ``E_{1,c}(0)`` matching ``L_c(u)``.

    Raises
    ------
    DegenerateDegreeError
        If ``c = 0``.
    """
    if c == 0:
        raise DegenerateDegreeError("L_0(u) is not a basic module")
    return ModuleLabel.from_nm(1, int(c), 0.0)


def line_bundle_twist(c: int, u: complex, tau: complex) -> complex:
    """Twist ``u - c tau/2`` of the standard structure matching ``dbar`` on ``L_c(u)``."""
    return complex(u) - c * complex(tau) / 2


def _require_lower_half_plane(tau: complex) -> None:
    if not complex(tau).imag < 0:
        raise DomainError(f"Im(tau) must be negative, got {tau}")


def real_coordinates(z: complex, tau: complex) -> tuple[float, float]:
    """``(x, y)`` with ``z = x - tau y``."""
    tau = complex(tau)
    _require_lower_half_plane(tau)
    y = -complex(z).imag / tau.imag
    return complex(z).real + tau.real * y, y


def _log_gauge(c: int, u: complex, tau: complex, y: float) -> complex:
    """``2 pi i (-c tau y**2/2 + (c tau/2 - u) y)``."""
    return 2j * math.pi * (-c * tau * y * y / 2 + (c * tau / 2 - u) * y)


@dataclass(frozen=True)
class LineBundleSection:
    """
    A smooth section of ``L_c(u)`` given by its image in ``E_{1,c}(0)``.

    Attributes
    ----------
    c : int
        Degree of the line bundle, nonzero.
    u : complex
        Parameter of ``L_c(u)``.
    tau : complex
        Complex structure, ``Im(tau) < 0``.
    packet : GaussianPacket
        The function ``phi(y, alpha)`` on ``|c|`` legs.
    """

    c: int
    u: complex
    tau: complex
    packet: GaussianPacket

    def __post_init__(self) -> None:
        line_bundle_label(self.c).check_packet(self.packet)
        _require_lower_half_plane(self.tau)

    @property
    def label(self) -> ModuleLabel:
        return line_bundle_label(self.c)

    def fourier_coefficient(self, n: int, y: float) -> complex:
        """``f_n(y) = phi(y + n/c, n) e(c tau y**2/2 - (c tau/2 - u) y)``."""
        g_n = self.packet.evaluate(y + n / self.c, n)
        return complex(g_n * np.exp(-_log_gauge(self.c, self.u, complex(self.tau), y)))

    def _term_sum(self, t: Term, x: float, y: float, tol: float) -> complex:
        c = self.c
        log_inverse_gauge = -_log_gauge(c, complex(self.u), complex(self.tau), y)
        slope = t.quad * y + t.lin
        poly = Polynomial(t.poly)(Polynomial([y, 1 / c]))
        estimate = choose_window(
            -t.quad.real / (2 * c * c),
            abs(slope.real) / abs(c),
            tol,
            (t.quad * y * y / 2 + t.lin * y + log_inverse_gauge).real,
            [abs(coef) for coef in poly.coef],
        )
        members = enumerate_progression(ArithProgression(t.alpha, abs(c)), estimate.window)
        if not members:
            return 0j
        n = np.asarray(members, dtype=float)
        shifted = y + n / c
        exponent = t.quad * shifted * shifted / 2 + t.lin * shifted + log_inverse_gauge
        values = poly(n) * np.exp(exponent + 2j * math.pi * n * x)
        return complex(np.sum(values))

    def value(self, z: complex, tol: float = 1e-13) -> complex:
        """
        ``f(z) = sum_n f_n(y) e(n x)``, truncated with a certified tail.

        Raises
        ------
        ConvergenceError
            If a term grows beyond double precision at this ``z``.
        """
        x, y = real_coordinates(z, self.tau)
        terms = self.packet.terms
        per_term = tol / max(1, len(terms))
        return sum((self._term_sum(t, x, y, per_term) for t in terms), 0j)

    def periodicity_residual(self, points: Sequence[complex]) -> float:
        """Largest relative defect of ``f(z + 1) = f(z)`` and ``f(z - tau) = e(u - c z) f(z)``."""
        worst = 0.0
        for z in points:
            base = self.value(z)
            scale = max(1.0, abs(base))
            worst = max(worst, abs(self.value(z + 1) - base) / scale)
            quasi = e(self.u - self.c * z) * base
            defect = abs(self.value(z - self.tau) - quasi) / max(1.0, abs(quasi))
            worst = max(worst, defect)
        return worst


def classical_theta(z: complex, c: int, u: complex, tau: complex, alpha: int, tol: float = 1e-13) -> complex:
    """
    ``sum_{n = alpha mod c} e(n z - tau n**2/(2c) + n (tau/2 - u/c))``.

    A holomorphic section of ``L_c(u)``; these ``c`` functions span
    ``H^0(L_c(u))`` for ``c > 0``.

    Raises
    ------
    DomainError
        If ``c <= 0`` or ``Im(tau) >= 0``.
    """
    tau, z, u = complex(tau), complex(z), complex(u)
    if c <= 0:
        raise DomainError(f"L_c(u) has holomorphic sections only for c > 0, got c={c}")
    _require_lower_half_plane(tau)
    linear = z + tau / 2 - u / c
    estimate = choose_window(-math.pi * tau.imag / c, 2 * math.pi * abs(linear.imag), tol)
    members = enumerate_progression(ArithProgression(alpha, c), estimate.window)
    n = np.asarray(members, dtype=float)
    return complex(np.sum(np.exp(2j * math.pi * (n * linear - tau * n * n / (2 * c)))))


def theta_dictionary_residual(
    c: int, u: complex, tau: complex, points: Sequence[complex]
) -> float:
    """
    Compare the image of ``phi_alpha^{u - c tau/2}`` with :func:`classical_theta`.

    Returns
    -------
    float
        Largest relative difference over ``alpha`` and ``points``.
    """
    label = line_bundle_label(c)
    twist = line_bundle_twist(c, u, tau)
    worst = 0.0
    for alpha in range(label.legs):
        section = LineBundleSection(c, complex(u), complex(tau), phi_basis(label, twist, alpha, tau))
        for z in points:
            lhs = section.value(z)
            rhs = classical_theta(z, c, u, tau, alpha)
            worst = max(worst, abs(lhs - rhs) / max(1.0, abs(rhs)))
    logger.debug(f"theta dictionary for c={c}, u={u}: residual {worst:.3e}")
    return worst


def _central_difference(fn, t: float, h: float = _FD_STEP) -> complex:
    return (-fn(t + 2 * h) + 8 * fn(t + h) - 8 * fn(t - h) + fn(t - 2 * h)) / (12 * h)


def dolbeault_residual(section: LineBundleSection, points: Sequence[complex]) -> float:
    """
    Compare ``(d/dy + tau d/dx) f`` with the image of ``dbar_{u - c tau/2} phi``.

    ``d/dy + tau d/dx = (tau - conj(tau)) d/dzbar``; the left side is taken
    by fourth-order central differences of :meth:`LineBundleSection.value`.
    """
    tau = complex(section.tau)
    image = LineBundleSection(
        section.c,
        section.u,
        tau,
        dbar(section.packet, section.label, line_bundle_twist(section.c, section.u, tau), tau),
    )
    worst = 0.0
    for z in points:
        x, y = real_coordinates(z, tau)
        d_x = _central_difference(lambda s: section.value(s - tau * y), x)
        d_y = _central_difference(lambda s: section.value(x - tau * s), y)
        expected = image.value(z)
        worst = max(worst, abs(d_y + tau * d_x - expected) / max(1.0, abs(expected)))
    return worst
