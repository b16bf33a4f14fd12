"""
Unit tests for the nctorus.theta_engine module.
"""

import cmath
import json
import math

import numpy as np
import pytest

from nctorus.analytic.modules import ModuleLabel, phi_basis, sample_points
from nctorus.analytic.pairings import pairing_t
from nctorus.exceptions import ConvergenceError, DomainError
from nctorus.index_sets import brute_force_index_set
from nctorus.sl2_arith import SL2Mat, TorusParams, random_sl2
from nctorus.theta_engine import (
    StructureConstantsTable,
    associativity_check,
    associativity_residual,
    collapse_check,
    composition_constants,
    cyclic_identity_check,
    magnitude,
    pairing_residual,
    relative_residual,
    structure_constants,
    theta_combination,
)

G_ONE = SL2Mat(1, 0, 1, 1)
G_TWO = SL2Mat(1, 0, 2, 1)
G_ODD = SL2Mat(2, 1, -3, -1)


def random_positive_pair(rng, theta):
    """Draw labels with positive degrees and ranks for t_{g1,g2} over theta."""
    while True:
        g1, g2 = random_sl2(rng, 3), random_sl2(rng, 3)
        if g1.c <= 0 or g2.c <= 0 or not 0 < (g1 @ g2).c <= 12:
            continue
        if g2.rank(theta) >= 0.05 and g1.rank(g2.mobius(theta)) >= 0.05:
            return g1, g2


class TestStructureConstants:
    """Test class for structure constant tables."""

    def test_reference_values(self):
        """Even and odd members of I give the two theta values."""
        table = structure_constants(G_ONE, G_ONE, TorusParams(0.0, -1j), 0, 0)
        assert table.shape == (1, 1, 2)
        assert table.entry(0, 0, 0) == pytest.approx(1.003735, abs=1e-6)
        assert table.entry(0, 0, 1) == pytest.approx(0.415761, abs=1e-6)
        assert table.tail_bound < 1e-12

    def test_entry_matches_direct_sum(self):
        """Entries agree with a sum over the brute-force index set."""
        params = TorusParams(0.2, 0.3 - 1.2j)
        z1, z2 = 0.1 + 0.05j, -0.2
        table = structure_constants(G_ONE, G_TWO, params, z1, z2)
        c12 = (G_ONE @ G_TWO).c
        D = G_ONE.c * G_TWO.c * c12
        L = theta_combination(G_ONE, G_TWO, params.theta, z1, z2)
        for a2 in range(G_TWO.c):
            for a in range(c12):
                members = brute_force_index_set(G_ONE, G_TWO, 0, a2, a, 60)
                expected = sum(
                    cmath.exp(2j * math.pi * (-params.tau * n * n / 2 + L * n) / D)
                    for n in members
                )
                assert abs(table.entry(0, a2, a) - expected) <= 1e-10

    def test_entry_reduces_residues(self):
        """Any representative of a residue is accepted."""
        table = structure_constants(G_ONE, G_ONE, TorusParams(0.0, -1j), 0, 0)
        assert table.entry(5, -3, 3) == table.entry(0, 0, 1)

    def test_preconditions(self):
        """Non-positive degrees or ranks and tol <= 0 are rejected."""
        params = TorusParams(0.2, -1j)
        with pytest.raises(DomainError):
            structure_constants(G_ODD, G_ONE, params, 0, 0)
        with pytest.raises(DomainError):
            structure_constants(G_ONE, G_ONE, TorusParams(-0.8, -1j), 0, 0)
        with pytest.raises(DomainError):
            structure_constants(G_ONE, G_ONE, params, 0, 0, tol=0.0)

    def test_values_are_read_only(self):
        """Cached tables cannot be modified in place."""
        table = structure_constants(G_ONE, G_TWO, TorusParams(0.2, -1j), 0, 0)
        with pytest.raises(ValueError):
            table.values[0, 0, 0] = 0

    def test_dict_form(self):
        """to_dict is JSON serializable and from_dict restores the table."""
        table = structure_constants(G_ONE, G_TWO, TorusParams(0.2, -1j), 0.1, 0.2j)
        data = json.loads(json.dumps(table.to_dict()))
        assert len(data["entries"]) == 1 * 2 * 3
        restored = StructureConstantsTable.from_dict(data)
        assert restored.max_abs_difference(table) == 0.0
        assert restored.g2 == G_TWO
        assert restored.z2 == 0.2j

    def test_agrees_with_pairing(self):
        """t(phi_0 (x) phi_0) = sum_gamma c^gamma phi_gamma at zero twist."""
        theta, tau = 0.2, -1j
        table = structure_constants(G_ONE, G_ONE, TorusParams(theta, tau), 0, 0)
        f1 = phi_basis(ModuleLabel(G_ONE, G_ONE.mobius(theta)), 0, 0, tau)
        f2 = phi_basis(ModuleLabel(G_ONE, theta), 0, 0, tau)
        target = ModuleLabel(G_TWO, theta)
        points = sample_points(target)
        values = pairing_t(G_ONE, G_ONE, theta, f1, f2, points)
        for (x, alpha), value in zip(points, values):
            expected = table.entry(0, 0, alpha) * phi_basis(target, 0, alpha, tau).evaluate(x, alpha)
            assert abs(value - expected) <= 1e-9

    def test_agrees_with_pairing_at_random_parameters(self):
        """phi^{rk(g2) z1} (x) phi^{z2} pairs to sum_a c^a(z1, z2) phi_a^{z1 + z2}."""
        rng = np.random.default_rng(3)
        checked = 0
        while checked < 8:
            theta = float(rng.uniform(-0.9, 0.9))
            g1, g2 = random_positive_pair(rng, theta)
            params = TorusParams(theta, complex(rng.uniform(-0.5, 0.5), -rng.uniform(0.5, 1.5)))
            z1, z2 = (complex(*rng.uniform(-0.4, 0.4, size=2)) for _ in range(2))
            try:
                residual = pairing_residual(g1, g2, params, z1, z2)
            except ConvergenceError:
                continue
            assert residual <= 1e-9, (g1, g2, params, z1, z2)
            checked += 1

    def test_large_twist_overflows(self):
        """Terms of size exp(5000) raise ConvergenceError instead of overflowing."""
        with pytest.raises(ConvergenceError):
            structure_constants(G_ONE, G_ONE, TorusParams(0.2, -1j), 0, 60j)


class TestResiduals:
    """Test class for relative residuals."""

    def test_magnitude_floor(self):
        """Magnitudes below one are reported as one."""
        assert magnitude(np.array([0.25j]), np.array([])) == 1.0
        assert magnitude(np.array([3.0, -4.0])) == 4.0

    def test_relative_scale(self):
        """Large entries are compared relative to their size."""
        lhs = np.array([1e30, 2.0])
        rhs = np.array([1e30 * (1 + 1e-13), 2.0])
        assert relative_residual(lhs, rhs) <= 1e-12
        assert relative_residual(np.array([0.5]), np.array([0.25])) == 0.25
        assert relative_residual(np.array([]), np.array([])) == 0.0

    def test_associativity_at_random_parameters(self):
        """The residual of random triples stays below the bound."""
        rng = np.random.default_rng(5)
        checked = 0
        while checked < 6:
            g1, g2, g3 = (random_sl2(rng, 2) for _ in range(3))
            if min(g1.c, g2.c, g3.c, (g1 @ g2).c, (g2 @ g3).c) <= 0:
                continue
            params = TorusParams(float(rng.uniform(-0.9, 0.9)), -1j)
            w1, w2, w3 = (complex(*rng.uniform(-0.3, 0.3, size=2)) for _ in range(3))
            try:
                residual, bound = associativity_residual(g1, g2, g3, params, w1, w2, w3)
            except (ConvergenceError, DomainError):
                continue
            assert residual <= bound, (g1, g2, g3, params)
            assert bound < 1e-8
            checked += 1


class TestIdentities:
    """Test class for the collapse, cyclic and associativity identities."""

    def test_collapse(self):
        """Tables only depend on theta through c1 z2 - rk(g1 g2) c2 z1."""
        params = TorusParams(0.2, -1j)
        moved = TorusParams(0.3, -1j)
        z1, z2 = 0.1, 0.05 + 0.02j
        L = theta_combination(G_ONE, G_TWO, params.theta, z1, z2)
        z2_prime = (L + (G_ONE @ G_TWO).rank(moved.theta) * G_TWO.c * z1) / G_ONE.c
        assert collapse_check(G_ONE, G_TWO, params, z1, z2, moved, z1, z2_prime)

    def test_collapse_rejects_different_combinations(self):
        """Parameters with different combinations are not comparable."""
        params = TorusParams(0.2, -1j)
        with pytest.raises(DomainError):
            collapse_check(G_ONE, G_TWO, params, 0.1, 0, params.with_theta(0.3), 0.1, 0)

    def test_cyclic_identity_all_positive(self):
        """Rescaled twists give equal constants when no rank changes sign."""
        assert cyclic_identity_check(
            SL2Mat.identity(), G_ONE, G_TWO, 0, 0.2, 0.5, 0.1, 0.3, -1j
        )

    def test_cyclic_identity_detects_wrong_twists(self):
        """A perturbed twist breaks the identity."""
        assert not cyclic_identity_check(
            SL2Mat.identity(),
            G_ONE,
            G_TWO,
            0,
            0.2,
            0.5,
            0.1,
            0.3,
            -1j,
            z_prime=(0, 0.2, 0.7),
        )

    def test_cyclic_identity_sign_change(self):
        """Only rk(g1) turns negative: the rotated triple gives the constants."""
        assert cyclic_identity_check(G_ODD, G_ONE, G_TWO, 0.1, 0.2, 0.3, -0.4, 0.0, -1j)

    def test_cyclic_identity_rejects_bad_triples(self):
        """Hom degrees must be positive."""
        with pytest.raises(DomainError):
            cyclic_identity_check(G_TWO, G_ONE, SL2Mat.identity(), 0, 0, 0, 0.1, 0.3, -1j)

    def test_composition_constants_shape(self):
        """Indexed by deg(g3 g2^-1), deg(g2 g1^-1) and deg(g3 g1^-1)."""
        table = composition_constants(
            SL2Mat.identity(), G_ONE, G_TWO, 0, 0, 0, TorusParams(0.2, -1j)
        )
        assert table.shape == (1, 1, 2)

    def test_associativity(self):
        """Both bracketings agree for the unipotent triple."""
        params = TorusParams(0.1, -1j)
        assert associativity_check(G_ONE, G_ONE, G_ONE, params, 0.1, 0.2, 0.05)


def test_tables_are_cached():
    """Repeated calls return the same table."""
    params = TorusParams(0.25, -1j)
    first = structure_constants(G_ONE, G_TWO, params, 0, 0)
    assert structure_constants(G_ONE, G_TWO, params, 0, 0) is first
    assert np.array_equal(first.values, structure_constants(G_ONE, G_TWO, params, 0j, 0j).values)
