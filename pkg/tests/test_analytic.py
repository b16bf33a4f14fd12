"""
Unit tests for the nctorus.analytic package.
"""

import cmath
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nctorus.analytic.algebra import AlgebraElement
from nctorus.analytic.hermite import (
    MAX_HERMITE_DIM,
    hermite_operator,
    kernel_cokernel_dims,
    required_dim,
)
from nctorus.analytic.isogeny import (
    PulledBackSection,
    isogeny_target_label,
    isogeny_transport,
)
from nctorus.analytic.line_bundles import (
    LineBundleSection,
    classical_theta,
    dolbeault_residual,
    line_bundle_label,
    line_bundle_twist,
    real_coordinates,
    theta_dictionary_residual,
)
from nctorus.analytic.modules import (
    ModuleLabel,
    act_generator,
    dbar,
    e,
    h1_representatives,
    holomorphic_coefficients,
    is_lattice_translation,
    phi_basis,
    sample_points,
    translate_iso_check,
)
from nctorus.analytic.packet import GaussianPacket
from nctorus.analytic.pairings import (
    gaussian_integral,
    inner_product,
    l2_norm,
    pairing_b,
    pairing_t,
)
from nctorus.exceptions import (
    DegenerateDegreeError,
    DomainError,
    IndeterminateRankError,
    NonIntegrableError,
    ShapeMismatchError,
    ZeroRankError,
)
from nctorus.sl2_arith import SL2Mat

G_ONE = SL2Mat(1, 0, 1, 1)
G_TWO = SL2Mat(1, 0, 2, 1)


def generic_packet(legs):
    packet = GaussianPacket.zero(legs)
    for alpha in range(legs):
        packet = packet + GaussianPacket.gaussian(
            legs, alpha, -1.2 + 0.3j * alpha, 0.1 - 0.2j, (1.0, 0.4j)
        )
    return packet


def max_error(lhs, rhs, points):
    return lhs.max_abs_difference(rhs, points)


class TestGaussianPacket:
    """Test class for GaussianPacket."""

    def test_non_integrable(self):
        """Exponents with Re(quad) >= 0 are rejected."""
        with pytest.raises(NonIntegrableError):
            GaussianPacket.gaussian(1, 0, 0.5)

    def test_terms_merge_and_cancel(self):
        """Equal exponents merge; cancelling terms vanish."""
        f = GaussianPacket.gaussian(2, 3, -1.0, 0.5)
        doubled = f + f
        assert len(doubled.terms) == 1
        assert doubled.terms[0].alpha == 1
        assert doubled.evaluate(0.3, 1) == pytest.approx(2 * f.evaluate(0.3, 1))
        assert (f - f).is_zero()

    def test_legs_must_match(self):
        """Packets on different leg counts cannot be added."""
        with pytest.raises(ShapeMismatchError):
            GaussianPacket.gaussian(1, 0, -1.0) + GaussianPacket.gaussian(2, 0, -1.0)

    def test_shifted(self):
        """shifted(s) evaluates f(x - s)."""
        f = GaussianPacket.gaussian(1, 0, -2.0, 0.3j, (1.0, -0.5))
        g = f.shifted(0.7)
        for x in (-1.0, 0.0, 0.4, 2.0):
            assert g.evaluate(x, 0) == pytest.approx(f.evaluate(x - 0.7, 0))

    def test_derivative(self):
        """The exact derivative of x exp(-x^2/2)."""
        f = GaussianPacket.gaussian(1, 0, -1.0, 0, (0.0, 1.0))
        x = 0.7
        assert f.derivative().evaluate(x, 0) == pytest.approx((1 - x * x) * math.exp(-x * x / 2))

    def test_conjugate(self):
        """Pointwise complex conjugation."""
        f = generic_packet(1)
        assert f.conjugate().evaluate(0.3, 0) == pytest.approx(f.evaluate(0.3, 0).conjugate())


class TestPairings:
    """Test class for the Gaussian integrals and the pairings b and t."""

    def test_gaussian_integral(self):
        """Closed forms of the first Gaussian moments."""
        assert gaussian_integral([1], -2, 0) == pytest.approx(math.sqrt(math.pi))
        assert gaussian_integral([0, 0, 1], -2, 0) == pytest.approx(math.sqrt(math.pi) / 2)
        expected = math.sqrt(2 * math.pi) * cmath.exp(0.5 * (0.3 + 1j) ** 2)
        assert gaussian_integral([1], -1, 0.3 + 1j) == pytest.approx(expected)
        with pytest.raises(NonIntegrableError):
            gaussian_integral([1], 1, 0)

    def test_l2_norm(self):
        """|exp(-x^2/2)|^2 integrates to sqrt(pi)."""
        f = GaussianPacket.gaussian(1, 0, -1.0)
        assert inner_product(f, f) == pytest.approx(math.sqrt(math.pi))
        assert l2_norm(f) == pytest.approx(math.pi**0.25)

    def test_pairing_b_shapes(self):
        """b needs a label of nonzero degree and |deg| legs on both sides."""
        f = GaussianPacket.gaussian(1, 0, -1.0)
        with pytest.raises(DegenerateDegreeError):
            pairing_b(f, f, SL2Mat.identity(), 0.2)
        with pytest.raises(ShapeMismatchError):
            pairing_b(f, f, G_TWO, 0.2)

    def test_pairing_b_of_gaussians(self):
        """b of two centered Gaussians in closed form."""
        theta = 0.2
        r = G_ONE.rank(theta)
        f1 = GaussianPacket.gaussian(1, 0, -1.0)
        f2 = GaussianPacket.gaussian(1, 0, -3.0)
        expected = math.sqrt(2 * math.pi / (1 / r**2 + 3))
        assert pairing_b(f1, f2, G_ONE, theta) == pytest.approx(expected)

    def test_pairing_t_with_algebra_on_the_right(self):
        """For g2 = 1 the pairing is the right action of A_theta."""
        theta = 0.2
        label = ModuleLabel(G_TWO, theta)
        f = generic_packet(2)
        a = AlgebraElement.monomial(theta, 1, 0) + AlgebraElement.monomial(theta, 0, -1, 0.5j)
        points = sample_points(label)
        values = pairing_t(G_TWO, SL2Mat.identity(), theta, f, a, points)
        expected = a.act_right(f, label).evaluate_many(points)
        assert max(abs(v - w) for v, w in zip(values, expected)) <= 1e-12

    def test_pairing_t_expects_algebra_elements(self):
        """Special cases reject packets in place of algebra elements."""
        f = generic_packet(1)
        with pytest.raises(ShapeMismatchError):
            pairing_t(G_ONE, SL2Mat.identity(), 0.2, f, f, [(0.0, 0)])


class TestAlgebra:
    """Test class for AlgebraElement."""

    def test_commutation_relation(self):
        """U1 U2 = e(theta) U2 U1."""
        theta = 0.2
        u1 = AlgebraElement.monomial(theta, 1, 0)
        u2 = AlgebraElement.monomial(theta, 0, 1)
        assert (u1 * u2).coefficient(1, 1) == pytest.approx(1.0)
        assert (u2 * u1).coefficient(1, 1) == pytest.approx(cmath.exp(-2j * math.pi * theta))

    def test_right_action_is_a_module(self):
        """f (U2 U1) = (f U2) U1."""
        theta = 0.2
        label = ModuleLabel(G_TWO, theta)
        f = generic_packet(2)
        product = AlgebraElement.monomial(theta, 0, 1) * AlgebraElement.monomial(theta, 1, 0)
        step = act_generator(act_generator(f, label, "right", "U2"), label, "right", "U1")
        assert max_error(product.act_right(f, label), step, sample_points(label)) <= 1e-12

    def test_left_and_right_actions_commute(self):
        """E_g(theta) is an A_{g theta}-A_theta bimodule."""
        theta = 0.2
        g = SL2Mat(2, 1, 3, 2)
        label = ModuleLabel(g, theta)
        f = generic_packet(3)
        points = sample_points(label)
        for left in ("U1", "U2"):
            for right in ("U1", "U2"):
                one = act_generator(act_generator(f, label, "right", right), label, "left", left)
                two = act_generator(act_generator(f, label, "left", left), label, "right", right)
                assert max_error(one, two, points) <= 1e-12

    def test_derivation(self):
        """delta_tau(U1^n1 U2^n2) = 2 pi i (n1 tau + n2) U1^n1 U2^n2."""
        element = AlgebraElement.monomial(0.2, 2, -1, 3.0)
        derived = element.derivation(0.5 - 1j)
        assert derived.coefficient(2, -1) == pytest.approx(3.0 * 2j * math.pi * (2 * (0.5 - 1j) - 1))

    def test_theta_mismatch(self):
        """Elements act only where their parameter matches."""
        label = ModuleLabel(G_ONE, 0.2)
        with pytest.raises(ShapeMismatchError):
            AlgebraElement.one(0.3).act_right(generic_packet(1), label)
        with pytest.raises(ShapeMismatchError):
            AlgebraElement.one(0.2).act_left(generic_packet(1), label)
        AlgebraElement.one(label.left_theta).act_left(generic_packet(1), label)


class TestModules:
    """Test class for module labels and holomorphic structures."""

    def test_label_rank(self):
        """Labels need a positive rank."""
        with pytest.raises(ZeroRankError):
            ModuleLabel(G_ONE, -1.0)
        with pytest.raises(DomainError):
            ModuleLabel(G_ONE, -1.5)

    def test_from_nm(self):
        """E_{n,m} has bottom row (m, n)."""
        label = ModuleLabel.from_nm(1, 3, 0.2)
        assert (label.m, label.n, label.legs) == (3, 1, 3)
        assert label.mu == pytest.approx(3 / 1.6)

    def test_phi_basis_is_holomorphic(self):
        """dbar_z annihilates phi^z exactly."""
        label = ModuleLabel(G_TWO, 0.2)
        for alpha in range(label.legs):
            assert dbar(phi_basis(label, 0.1 + 0.2j, alpha, -1j), label, 0.1 + 0.2j, -1j).is_zero()

    def test_phi_basis_needs_positive_slope(self):
        """Negative degree has no phi-basis."""
        label = ModuleLabel(SL2Mat(1, 0, -1, 1), 0.2)
        with pytest.raises(DomainError):
            phi_basis(label, 0, 0, -1j)

    def test_degree_zero_has_no_generators(self):
        """The free module is handled by the algebra model."""
        label = ModuleLabel(SL2Mat.identity(), 0.2)
        with pytest.raises(DegenerateDegreeError):
            act_generator(generic_packet(1), label, "right", "U1")

    def test_translation(self):
        """Translation intertwines the translated holomorphic structure."""
        label = ModuleLabel(G_ONE, 0.2)
        assert translate_iso_check(label, 0.1, 0.3, 0.4, -1j)
        assert translate_iso_check(ModuleLabel(SL2Mat(0, -1, 1, 0), 0.2), 0.0, 0.25, -0.5, 0.2 - 1j)

    def test_lattice_translation(self):
        """Integral translations keep the twist class."""
        label = ModuleLabel(G_ONE, 0.2)
        assert is_lattice_translation(label, 1.0, 0.0, -1j)
        assert is_lattice_translation(label, 0.0, 2.0, -1j)
        assert not is_lattice_translation(label, 0.5, 0.0, -1j)

    def test_h1_representatives(self):
        """One Gaussian per leg."""
        label = ModuleLabel(G_TWO, 0.2)
        reps = h1_representatives(label)
        assert len(reps) == 2
        assert [r.terms[0].alpha for r in reps] == [0, 1]


class TestHermite:
    """Test class for the Hermite truncation."""

    def test_operator_shape(self):
        """V_N maps into V_{N+1}."""
        assert hermite_operator(1.0, 1.0, 0.0, 8).shape == (9, 8)

    def test_holomorphic_structure_has_kernel(self):
        """Positive slope: one holomorphic section and no H^1."""
        label = ModuleLabel(G_TWO, 0.2)
        a, w = holomorphic_coefficients(label, 0, -1j)
        assert kernel_cokernel_dims(a, w) == (1, 0)
        assert kernel_cokernel_dims(1.0, 0.3) == (1, 0)

    def test_negative_coefficient_has_cokernel(self):
        """Negative slope: no holomorphic section and one H^1 class."""
        assert kernel_cokernel_dims(-1.0, 0.0) == (0, 1)

    def test_invalid_arguments(self):
        """Re(a) = 0 or a small truncation is rejected."""
        with pytest.raises(DomainError):
            kernel_cokernel_dims(1j, 0.0)
        with pytest.raises(DomainError):
            kernel_cokernel_dims(1.0, 0.0, hermite_dim=16)

    def test_nearly_imaginary_coefficient(self):
        """A fast chirp in the Gaussian does not change the counts."""
        assert kernel_cokernel_dims(-0.867 + 7.10j, 2.17 + 2.26j) == (0, 1)
        assert kernel_cokernel_dims(1.17 + 9.30j, 0.0) == (1, 0)
        assert kernel_cokernel_dims(0.01 + 40.0j, -0.3 + 5j) == (1, 0)

    def test_from_skewed_complex_structure(self):
        """a = 2 pi i tau mu with |Re tau| much larger than |Im tau|."""
        label = ModuleLabel(G_TWO, 0.2)
        a, w = holomorphic_coefficients(label, 0.4 + 0.1j, 3.0 - 0.2j)
        assert abs(a.imag) > 10 * abs(a.real)
        assert kernel_cokernel_dims(a, w) == ((1, 0) if a.real > 0 else (0, 1))

    def test_large_shift_grows_truncation(self):
        """The truncation follows the centre of the kernel Gaussian."""
        assert required_dim(0.0, 256) == 256
        assert required_dim(20.0, 256) > 256
        assert kernel_cokernel_dims(1.0, 20.0) == (1, 0)
        assert kernel_cokernel_dims(-4.0, 40.0 - 3j) == (0, 1)

    def test_shift_beyond_limit(self):
        """A shift that needs more than MAX_HERMITE_DIM functions is indeterminate."""
        assert required_dim(200.0, 256) > MAX_HERMITE_DIM
        with pytest.raises(IndeterminateRankError):
            kernel_cokernel_dims(1.0, 200.0)

    @settings(max_examples=50, deadline=None)
    @given(
        st.floats(0.5, 5.0),
        st.sampled_from([1.0, -1.0]),
        st.floats(-50.0, 50.0),
        st.complex_numbers(max_magnitude=5.0),
    )
    def test_index_is_sign_of_real_part(self, magnitude, sign, im_a, z):
        """dim ker - dim coker = sign(Re a) for random a with large Im a."""
        dims = kernel_cokernel_dims(complex(sign * magnitude, im_a), z)
        assert dims == ((1, 0) if sign > 0 else (0, 1))


class TestIsogeny:
    """Test class for push-forward and pull-back along the isogeny."""

    def test_push_intertwines(self):
        """Push sends f U1^N to push(f) U1 and f U2 to push(f) U2."""
        label = ModuleLabel.from_nm(1, 2, 0.2)
        target = isogeny_target_label(label, 3, "push")
        assert (target.m, target.n) == (2, 3)
        assert target.theta == pytest.approx(0.6)
        f = generic_packet(2)
        pushed = isogeny_transport(f, 3, "push", label)
        points = sample_points(target)
        lhs = isogeny_transport(act_generator(f, label, "right", "U1", 3), 3, "push", label)
        assert max_error(lhs, act_generator(pushed, target, "right", "U1"), points) <= 1e-12
        lhs = isogeny_transport(act_generator(f, label, "right", "U2"), 3, "push", label)
        assert max_error(lhs, act_generator(pushed, target, "right", "U2"), points) <= 1e-12

    def test_pull_intertwines(self):
        """Pull-back commutes with the action of A_theta."""
        N = 2
        label = ModuleLabel.from_nm(1, 2, 0.4)
        target = isogeny_target_label(label, N, "pull")
        assert target.g == SL2Mat(1, 0, 4, 1)
        section = PulledBackSection(
            (
                GaussianPacket.gaussian(2, 0, -1.0, 0.1),
                GaussianPacket.gaussian(2, 1, -1.5 + 0.2j, 0, (1.0, 0.3)),
            ),
            label,
        )
        pulled = isogeny_transport(section, N, "pull", label)
        points = sample_points(target, count=16)
        for gen in ("U1", "U2"):
            lhs = isogeny_transport(section.act(gen), N, "pull", label)
            rhs = act_generator(pulled, target, "right", gen)
            assert max_error(lhs, rhs, points) <= 1e-12

    def test_shape_errors(self):
        """Only E_{1,m} with gcd(N, m) = 1 can be pushed."""
        with pytest.raises(ShapeMismatchError):
            isogeny_target_label(ModuleLabel.from_nm(1, 2, 0.2), 2, "push")
        with pytest.raises(ShapeMismatchError):
            isogeny_target_label(ModuleLabel(SL2Mat(2, 1, 3, 2), 0.2), 2, "pull")


class TestLineBundles:
    """Test class for the line bundles of the commutative torus."""

    POINTS = (0.1 + 0.2j, -0.35 + 0.05j, 0.4 - 0.3j)

    def test_label_and_twist(self):
        """L_c(u) matches E_{1,c}(0) with twist u - c tau/2."""
        label = line_bundle_label(3)
        assert (label.g.c, label.g.d, label.legs) == (3, 1, 3)
        assert label.rk == 1
        assert line_bundle_twist(2, 0.1, -1j) == pytest.approx(0.1 + 1j)
        with pytest.raises(DegenerateDegreeError):
            line_bundle_label(0)

    def test_real_coordinates(self):
        """z = x - tau y."""
        x, y = real_coordinates(0.2 + 0.5j, 0.2 - 1j)
        assert (x, y) == pytest.approx((0.3, 0.5))
        with pytest.raises(DomainError):
            real_coordinates(0.2, 1j)

    def test_classical_theta_direct_sum(self):
        """Level one agrees with a plain partial sum."""
        tau, z, u = -1j, 0.15 + 0.1j, 0.2
        expected = sum(
            cmath.exp(2j * math.pi * (n * z - tau * n * n / 2 + n * (tau / 2 - u)))
            for n in range(-30, 31)
        )
        assert abs(classical_theta(z, 1, u, tau, 0) - expected) <= 1e-12

    def test_classical_theta_is_quasi_periodic(self):
        """f(z + 1) = f(z) and f(z - tau) = e(u - c z) f(z)."""
        tau, z, u = 0.2 - 0.9j, 0.2 + 0.1j, 0.1 - 0.05j
        for alpha in range(2):
            base = classical_theta(z, 2, u, tau, alpha)
            assert abs(classical_theta(z + 1, 2, u, tau, alpha) - base) <= 1e-12
            shifted = classical_theta(z - tau, 2, u, tau, alpha)
            assert abs(shifted - e(u - 2 * z) * base) <= 1e-12 * max(1, abs(shifted))

    def test_classical_theta_needs_positive_degree(self):
        """Only c > 0 has holomorphic sections."""
        with pytest.raises(DomainError):
            classical_theta(0.1, 0, 0, -1j, 0)
        with pytest.raises(DomainError):
            classical_theta(0.1, -2, 0, -1j, 0)

    @pytest.mark.parametrize("c", [1, 2, 3])
    @pytest.mark.parametrize("tau", [-1j, 0.3 - 0.8j])
    def test_phi_basis_is_classical_theta(self, c, tau):
        """The image of phi_alpha^{u - c tau/2} is the theta function of level c."""
        assert theta_dictionary_residual(c, 0.15 - 0.1j, tau, self.POINTS) <= 1e-10

    @pytest.mark.parametrize("c", [2, -2])
    def test_section_is_quasi_periodic(self, c):
        """Every element of E_{1,c}(0) gives a section of L_c(u)."""
        section = LineBundleSection(c, 0.2 + 0.1j, 0.1 - 1.1j, generic_packet(2))
        assert section.periodicity_residual(self.POINTS) <= 1e-9

    def test_dolbeault_matches_dbar(self):
        """(d/dy + tau d/dx) f is the image of dbar at twist u - c tau/2."""
        section = LineBundleSection(2, 0.2 + 0.1j, 0.1 - 1.1j, generic_packet(2))
        assert dolbeault_residual(section, self.POINTS) <= 1e-7

    def test_theta_functions_are_holomorphic(self):
        """Sections built from the phi-basis are annihilated by d/dzbar."""
        tau, u = -1j, 0.1
        label = line_bundle_label(2)
        section = LineBundleSection(2, u, tau, phi_basis(label, line_bundle_twist(2, u, tau), 1, tau))
        assert dolbeault_residual(section, self.POINTS) <= 1e-7

    def test_packet_must_match_degree(self):
        """A packet on the wrong number of legs is rejected."""
        with pytest.raises(ShapeMismatchError):
            LineBundleSection(3, 0, -1j, generic_packet(2))
