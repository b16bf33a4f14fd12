"""
Unit tests for the nctorus.truncation module.
"""

import math

import pytest

from nctorus.exceptions import ConvergenceError
from nctorus.truncation import (
    LOG_FLOAT_MAX,
    choose_window,
    log_peak,
    log_tail_bound,
    tail_bound,
)


def test_tail_bound_dominates_tail():
    """The bound exceeds the actual tail of exp(-q n^2)."""
    q = 0.5
    window = 4
    actual = 2 * math.fsum(math.exp(-q * n * n) for n in range(window + 1, 200))
    assert actual <= tail_bound(window, q, 0.0)


def test_tail_bound_not_yet_geometric():
    """Linear growth beating the decay gives an infinite bound."""
    assert tail_bound(1, 0.1, 10.0) == math.inf


def test_choose_window_is_minimal():
    """The chosen window is the first whose bound is below tol."""
    estimate = choose_window(1.0, 0.0, 1e-12)
    assert estimate.bound < 1e-12
    assert tail_bound(estimate.window - 1, 1.0, 0.0) >= 1e-12


def test_choose_window_with_polynomial_prefactor():
    """Polynomial prefactors widen the window."""
    plain = choose_window(0.5, 0.0, 1e-12)
    weighted = choose_window(0.5, 0.0, 1e-12, poly=(0.0, 0.0, 0.0, 1.0))
    assert weighted.window >= plain.window


def test_choose_window_rejects_growth():
    """No Gaussian decay or a small cap raise ConvergenceError."""
    with pytest.raises(ConvergenceError):
        choose_window(0.0, 0.0, 1e-12)
    with pytest.raises(ConvergenceError):
        choose_window(1e-9, 0.0, 1e-12, cap=16)
    with pytest.raises(ConvergenceError):
        choose_window(1.0, 0.0, 0.0)


def test_log_tail_bound_beyond_double_precision():
    """The log bound stays finite where the bound itself overflows."""
    log_bound = log_tail_bound(10, 1e-3, 0.0, 800.0)
    assert math.isfinite(log_bound)
    assert log_bound > LOG_FLOAT_MAX
    assert tail_bound(10, 1e-3, 0.0, 800.0) == math.inf
    assert log_tail_bound(4, 0.5, 0.0) == pytest.approx(math.log(tail_bound(4, 0.5, 0.0)))


def test_log_peak():
    """The largest term of exp(-n^2 + 4n) sits at n = 2."""
    assert log_peak(1.0, 4.0) == pytest.approx(4.0)
    assert log_peak(1.0, 0.0, 2.5) == pytest.approx(2.5)


def test_choose_window_rejects_unrepresentable_terms():
    """Terms of size exp(s^2/4q) beyond the largest double raise ConvergenceError."""
    with pytest.raises(ConvergenceError, match="overflow"):
        choose_window(0.01, 20.0, 1e-12)
    assert choose_window(0.01, 1.0, 1e-12).bound < 1e-12
