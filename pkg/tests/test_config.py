"""
Unit tests for the nctorus.config module.
"""

import argparse
import json

import pytest

from nctorus.config import RunConfig
from nctorus.exceptions import ConfigError


def test_defaults_validate(config):
    """The default configuration is valid."""
    assert config.validate() is config
    assert config.tau == -1j


@pytest.mark.parametrize(
    "overrides",
    [{"tau": 1j}, {"tau": 0.5}, {"tol": 0.0}, {"window": 0}, {"hermite_dim": 10}],
)
def test_invalid_values(overrides):
    """Each invariant violation raises ConfigError."""
    with pytest.raises(ConfigError):
        RunConfig(**overrides).validate()


def test_from_namespace():
    """Command-line flags are combined into tau and validated."""
    args = argparse.Namespace(
        tol=1e-10, window=30, hermite_dim=128, tau_re=0.5, tau_im=-2.0,
        theta=0.1, theta_prime=0.4, seed=3,
    )
    config = RunConfig.from_namespace(args)
    assert config.tau == 0.5 - 2j
    assert config.seed == 3
    args.tau_im = 1.0
    with pytest.raises(ConfigError):
        RunConfig.from_namespace(args)


def test_to_dict_is_json(config):
    """tau is written as [re, im]."""
    data = json.loads(json.dumps(config.to_dict()))
    assert data["tau"] == [0.0, -1.0]
    assert data["window"] == 50
