"""Certified truncation of Gaussian lattice sums.

Both the structure constants and the pairing ``t_{g1,g2}`` are sums over an
arithmetic progression of terms bounded by

    h(n) = P(|n|) * exp(-q*n**2 + s*|n| + k)

with ``q > 0``, a polynomial ``P`` with non-negative coefficients and
``s >= 0``. For ``n >= N+1`` the ratio ``h(n+1)/h(n)`` is at most
``r = (1 + 1/(N+1))**deg * exp(-q*(2N+3) + s)``, so when ``r < 1`` the two
tails beyond ``N`` are bounded by ``2*h(N+1)/(1-r)``.
"""

import logging
import math
import sys
from collections.abc import Sequence

from nctorus.exceptions import ConvergenceError

logger = logging.getLogger(__name__)

__all__ = [
    "LOG_FLOAT_MAX",
    "MAX_WINDOW",
    "TailEstimate",
    "choose_window",
    "log_peak",
    "log_tail_bound",
    "tail_bound",
]

MAX_WINDOW = 100_000
LOG_FLOAT_MAX = math.log(sys.float_info.max)


class TailEstimate:
    """A truncation window together with its certified tail bound."""

    __slots__ = ("bound", "window")

    def __init__(self, window: int, bound: float) -> None:
        self.window = window
        self.bound = bound

    def __repr__(self) -> str:
        return f"TailEstimate(window={self.window}, bound={self.bound:.3e})"


def _log_majorant(n: int, q: float, s: float, k: float, poly: Sequence[float]) -> float:
    value = math.fsum(coef * float(n) ** j for j, coef in enumerate(poly))
    if value <= 0.0:
        return -math.inf
    return math.log(value) - q * n * n + s * n + k


def log_tail_bound(
    window: int, q: float, s: float, k: float = 0.0, poly: Sequence[float] = (1.0,)
) -> float:
    """
    Logarithm of :func:`tail_bound`, finite even where the bound overflows.

    Returns ``math.inf`` when the geometric majorant does not apply yet and
    ``-math.inf`` when the polynomial prefactor vanishes.
    """
    degree = len(poly) - 1
    n = window + 1
    log_ratio = degree * math.log1p(1.0 / n) - q * (2 * n + 1) + s
    if log_ratio >= 0.0:
        return math.inf
    log_head = _log_majorant(n, q, s, k, poly)
    if log_head == -math.inf:
        return -math.inf
    return math.log(2.0) + log_head - math.log(-math.expm1(log_ratio))


def tail_bound(
    window: int, q: float, s: float, k: float = 0.0, poly: Sequence[float] = (1.0,)
) -> float:
    """
    Bound on the sum of ``h(n)`` over ``|n| > window``.

    Returns ``math.inf`` when the geometric majorant does not apply yet or
    the bound exceeds the largest double.
    """
    log_bound = log_tail_bound(window, q, s, k, poly)
    if log_bound > LOG_FLOAT_MAX:
        return math.inf
    return math.exp(log_bound)


def log_peak(q: float, s: float, k: float = 0.0, poly: Sequence[float] = (1.0,)) -> float:
    """Logarithm of the largest term ``max_n h(n)``, up to rounding of the argmax."""
    center = s / (2.0 * q)
    candidates = {0, math.floor(center), math.ceil(center)}
    return max(_log_majorant(n, q, s, k, poly) for n in candidates if n >= 0)


def choose_window(
    q: float,
    s: float,
    tol: float,
    k: float = 0.0,
    poly: Sequence[float] = (1.0,),
    cap: int = MAX_WINDOW,
) -> TailEstimate:
    """
    Smallest window (found by doubling then bisection) whose tail is below ``tol``.

    Parameters
    ----------
    q : float
        Gaussian decay rate, must be positive.
    s : float
        Linear growth rate ``>= 0``.
    tol : float
        Target bound on the neglected tail.
    k : float, optional
        Constant log-scale of every term.
    poly : Sequence[float], optional
        Absolute values of the polynomial prefactor coefficients.
    cap : int, optional
        Largest admissible window.

    Raises
    ------
    ConvergenceError
        If ``q <= 0``, the largest term is not representable as a double,
        or the window would exceed ``cap``.
    """
    if not q > 0.0 or not math.isfinite(q):
        raise ConvergenceError(f"terms have no Gaussian decay (q={q})")
    if not tol > 0.0:
        raise ConvergenceError(f"tail tolerance must be positive, got {tol}")
    s = abs(s)
    peak = log_peak(q, s, k, poly)
    if peak > LOG_FLOAT_MAX:
        raise ConvergenceError(
            f"terms reach exp({peak:.1f}) and overflow double precision "
            f"(q={q:.3e}, s={s:.3e})"
        )
    log_tol = math.log(tol)
    start = max(len(poly), math.ceil(s / (2.0 * q)) + 1)
    window = start
    while log_tail_bound(window, q, s, k, poly) >= log_tol:
        if window >= cap:
            raise ConvergenceError(
                f"truncation window exceeds the cap of {cap} terms "
                f"(q={q:.3e}, s={s:.3e}, tol={tol:.1e})"
            )
        window = min(2 * window, cap)
    low = max(start, window // 2)
    while low < window:
        mid = (low + window) // 2
        if log_tail_bound(mid, q, s, k, poly) < log_tol:
            window = mid
        else:
            low = mid + 1
    bound = tail_bound(window, q, s, k, poly)
    logger.debug(f"window {window} for q={q:.3e}, s={s:.3e}: tail {bound:.3e}")
    return TailEstimate(window, bound)
