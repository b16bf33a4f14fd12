"""
Unit tests for the nctorus.fourier module.
"""

import numpy as np
import pytest

from nctorus.analytic.modules import e
from nctorus.category import StdObject
from nctorus.exceptions import DomainError
from nctorus.fourier import (
    FMImage,
    automorphy_check,
    automorphy_matrices,
    extension_nonsplit_check,
    fm_class,
    kernel_basis,
    kernel_residual,
    transform_tensor_check,
)


class TestKernel:
    """Test class for the family of kernels and its gluing."""

    def test_kernel_is_annihilated(self, tau):
        """Every kernel basis packet is killed by dbar + 2 pi i z0."""
        E = StdObject.from_nm(1, 2, 0.2)
        assert len(kernel_basis(E, 0.1, tau)) == 2
        assert kernel_residual(E, 0.1 - 0.2j, tau) == 0

    def test_automorphy(self):
        """The transition factors hold pointwise and the matrices commute."""
        assert automorphy_check(StdObject.from_nm(1, 1, 0.2), 0.3 + 0.1j)

    def test_matrices(self, tau):
        """rho_1 is diagonal and rho'_tau cycles the basis."""
        R1, Rtau = automorphy_matrices(StdObject.from_nm(1, 2, 0.2), 0, tau)
        assert np.allclose(R1, np.diag([1, -1]))
        assert Rtau[0, 0] == 0 and Rtau[1, 1] == 0
        assert abs(Rtau[1, 0]) > 0 and Rtau[0, 1] == Rtau[1, 0]

    def test_tau_factor(self, tau):
        """The factor of rho'_tau is e(n z0/m + E.z/mu + tau/(2 mu))."""
        E = StdObject.from_nm(1, 2, 0.2, 0.1j)
        z0 = 0.3 + 0.1j
        _, Rtau = automorphy_matrices(E, z0, tau)
        expected = e(z0 / 2 + E.z / E.mu + tau / (2 * E.mu))
        assert Rtau[1, 0] == pytest.approx(expected, rel=1e-12)

    def test_nonpositive_slope(self, tau):
        """The kernel description needs mu > 0."""
        with pytest.raises(DomainError):
            kernel_basis(StdObject.from_nm(1, -3, 0.2), 0, tau)
        with pytest.raises(DomainError):
            automorphy_matrices(StdObject.from_nm(1, 0, 0.2), 0, tau)


class TestClasses:
    """Test class for the invariants of the transform."""

    def test_bundles(self):
        """Positive degree maps to a bundle of rank m and degree -n."""
        assert fm_class(StdObject.from_nm(1, 1, 0.2)).k_class == (1, -1)
        assert fm_class(StdObject.from_nm(1, 2, 0.2)).k_class == (2, -1)

    def test_shifted(self):
        """Negative degree maps to a bundle in degree 1."""
        image = fm_class(StdObject.from_nm(1, -3, 0.2))
        assert image == FMImage("shifted", 3, 1, -1)
        assert image.k_class == (-3, -1)

    def test_point(self):
        """The trivial module goes to the point -z, reduced."""
        image = fm_class(StdObject.from_nm(1, 0, 0.2, z=0.3))
        assert image.kind == "point"
        assert image.shift == -1
        assert image.point == pytest.approx(0.7)
        assert image.k_class == (0, -1)

    def test_tensor_and_translation(self, tau):
        """Tensoring moves the point; translations keep the invariants."""
        lam = 0.1 + 0.2j
        assert transform_tensor_check(StdObject.from_nm(1, 2, 0.2), lam, 0.3, 0.1, tau)
        assert transform_tensor_check(StdObject.from_nm(1, 0, 0.2, z=0.3), lam, 0.3, 0.1, tau)


class TestExtension:
    """Test class for the transform of the self-extension."""

    def test_nonsplit(self):
        """The mixing term survives as a non-split extension."""
        assert extension_nonsplit_check(StdObject.from_nm(1, 1, 0.2))

    def test_dropping_mixing_splits(self):
        """Without the off-diagonal blocks the extension splits."""
        assert not extension_nonsplit_check(StdObject.from_nm(1, 1, 0.2), drop_mixing=True)
