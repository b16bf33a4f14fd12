"""
Unit tests for the nctorus.sl2_arith module.
"""

import math

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from nctorus.exceptions import CompositionOverflowError, DomainError, ZeroRankError
from nctorus.sl2_arith import (
    SL2Mat,
    TorusParams,
    cocycle_residual,
    degree_identity_residual,
    gcdex,
    invariants_of,
    lattice_coordinates,
    random_sl2,
)


@st.composite
def sl2_matrices(draw, bound=6):
    c = draw(st.integers(-bound, bound))
    d = draw(st.integers(-bound, bound))
    assume(math.gcd(c, d) == 1)
    k = draw(st.integers(-bound, bound))
    return SL2Mat(1, k, 0, 1) @ SL2Mat.from_bottom_row(c, d)


thetas = st.floats(-0.95, 0.95, allow_nan=False)


class TestSL2Mat:
    """Test class for SL2Mat construction and invariants."""

    def test_determinant_enforced(self):
        """A matrix with determinant other than 1 is rejected."""
        with pytest.raises(DomainError):
            SL2Mat(2, 0, 0, 1)

    def test_non_integer_entries_rejected(self):
        """Float and bool entries are rejected."""
        with pytest.raises(DomainError):
            SL2Mat(1.0, 0, 0, 1)
        with pytest.raises(DomainError):
            SL2Mat(True, 0, 0, 1)

    def test_parse(self):
        """The a,b;c,d notation is parsed."""
        assert SL2Mat.parse("1,0;2,1") == SL2Mat(1, 0, 2, 1)
        assert SL2Mat.parse(" 2, 1 ; -3, -1 ") == SL2Mat(2, 1, -3, -1)
        with pytest.raises(DomainError):
            SL2Mat.parse("1,2")

    def test_inverse_and_identity(self):
        """g g^-1 is the identity."""
        g = SL2Mat(2, 1, -3, -1)
        assert (g @ g.inverse()).is_identity()
        assert (g.inverse() @ g).is_identity()

    def test_composition_overflow(self):
        """Entries beyond the signed 64-bit range raise."""
        big = SL2Mat(1, 2**62, 0, 1)
        with pytest.raises(CompositionOverflowError):
            big @ big

    def test_invariants_of(self):
        """Degree, rank, slope and Möbius image of a label."""
        deg, rk, mu, gtheta = invariants_of(SL2Mat(2, 1, -3, -1), -0.4)
        assert deg == -3
        assert rk == pytest.approx(0.2)
        assert mu == pytest.approx(-15.0)
        assert gtheta == pytest.approx(1.0)

    def test_zero_rank(self):
        """Slope and Möbius image are undefined at zero rank."""
        g = SL2Mat(1, 0, 1, 1)
        with pytest.raises(ZeroRankError):
            g.mobius(-1.0)
        with pytest.raises(ZeroRankError):
            invariants_of(g, -1.0)

    def test_from_bottom_row(self):
        """Completing a bottom row keeps it."""
        g = SL2Mat.from_bottom_row(3, 1)
        assert (g.c, g.d) == (3, 1)
        with pytest.raises(DomainError):
            SL2Mat.from_bottom_row(2, 4)

    @given(st.integers(-40, 40), st.integers(-40, 40))
    def test_from_bottom_row_property(self, c, d):
        """Every coprime pair is a bottom row."""
        assume(math.gcd(c, d) == 1)
        g = SL2Mat.from_bottom_row(c, d)
        assert (g.c, g.d) == (c, d)


class TestIdentities:
    """Test class for the rank cocycle and the degree identity."""

    @given(sl2_matrices(), sl2_matrices(), thetas)
    def test_cocycle(self, g1, g2, theta):
        """rk(g1 g2, theta) = rk(g1, g2 theta) rk(g2, theta)."""
        assume(abs(g2.rank(theta)) > 1e-3)
        assert cocycle_residual(g1, g2, theta) <= 1e-9

    @given(sl2_matrices(), sl2_matrices(), sl2_matrices(), thetas)
    def test_degree_identity(self, g1, g2, g3, theta):
        """The three-term degree identity holds for every triple."""
        assert degree_identity_residual(g1, g2, g3, theta) <= 1e-12

    def test_random_sl2_is_unimodular(self):
        """random_sl2 draws bounded bottom rows."""
        rng = np.random.default_rng(7)
        for _ in range(20):
            g = random_sl2(rng, bound=4)
            assert abs(g.c) <= 4 and abs(g.d) <= 4
            assert g.a * g.d - g.b * g.c == 1


def test_gcdex():
    """Bezout coefficients and the non-negative gcd."""
    for a, b in ((2, 3), (12, -18), (0, -4), (-7, 0)):
        x, y, g = gcdex(a, b)
        assert g == math.gcd(a, b)
        assert x * a + y * b == g


def test_lattice_coordinates():
    """w = p + q tau."""
    tau = 0.3 - 1j
    p, q = lattice_coordinates(0.25 + 0.75 * tau, tau)
    assert p == pytest.approx(0.25)
    assert q == pytest.approx(0.75)


def test_torus_params():
    """Im(tau) must be negative."""
    assert TorusParams(0.2, -1j).with_theta(0.5).theta == 0.5
    with pytest.raises(DomainError):
        TorusParams(0.2, 1j)
    with pytest.raises(DomainError):
        TorusParams(float("nan"), -1j)
