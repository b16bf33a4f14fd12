"""
Unit tests for the nctorus.verification module.
"""

import numpy as np
import pytest

from nctorus.config import RunConfig
from nctorus.exceptions import ConfigError
from nctorus.verification import VerificationSuite, run_suite


def test_identities_suite(config):
    """The identity suite passes and reports its configuration."""
    report = run_suite("identities", config)
    assert report["suite"] == "identities"
    assert report["seed"] == 0
    assert [check["id"] for check in report["checks"]] == [
        "identities.cocycle",
        "identities.degree",
    ]
    assert all(check["status"] == "pass" for check in report["checks"])


def test_same_seed_same_report():
    """Randomized suites are reproducible from the seed."""
    config = RunConfig(seed=7)
    assert run_suite("identities", config) == run_suite("identities", config)


def test_unknown_suite(config):
    """Unknown suite names are rejected."""
    with pytest.raises(ConfigError):
        run_suite("homotopy", config)


def test_invalid_config():
    """Configurations are validated before running."""
    with pytest.raises(ConfigError):
        run_suite("identities", RunConfig(tau=1j))


@pytest.mark.slow
@pytest.mark.parametrize("name", ["index", "constants", "category", "equivalence", "fourier"])
def test_suites_pass(name, config):
    """Every suite passes at the default parameters."""
    report = run_suite(name, config)
    failed = [check["id"] for check in report["checks"] if check["status"] != "pass"]
    assert failed == []
    assert all(check["id"].startswith(f"{name}.") for check in report["checks"])


@pytest.mark.slow
def test_constants_suite_reports_residuals(config):
    """Randomized checks report their worst residual next to the bound."""
    report = run_suite("constants", config)
    checks = {check["id"]: check for check in report["checks"]}
    assert sorted(checks) == [
        "constants.associativity",
        "constants.collapse",
        "constants.pairing_t",
        "constants.reference_sums",
    ]
    for check in checks.values():
        assert 0.0 <= check["residual"] <= check["bound"]
    assert checks["constants.pairing_t"]["bound"] == 1e-9


@pytest.mark.slow
def test_fourier_suite_covers_line_bundles(config):
    """The line bundle dictionary is part of the fourier suite."""
    report = run_suite("fourier", config)
    ids = [check["id"] for check in report["checks"]]
    assert "fourier.line_bundle_theta" in ids
    assert "fourier.line_bundle_dolbeault" in ids


def test_generator_follows_seed():
    """The runner draws from a generator seeded with config.seed."""
    suite = VerificationSuite(RunConfig(seed=5))
    assert suite.rng.integers(0, 1_000_000) == np.random.default_rng(5).integers(0, 1_000_000)
