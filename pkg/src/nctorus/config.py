"""Run configuration shared by the verification suites and the CLI."""

import argparse
import logging
from dataclasses import asdict, dataclass
from typing import Any

from nctorus.analytic.hermite import MIN_HERMITE_DIM
from nctorus.exceptions import ConfigError

logger = logging.getLogger(__name__)

__all__ = ["RunConfig"]


@dataclass(frozen=True)
class RunConfig:
    """
    Parameters of a verification run.

    Attributes
    ----------
    tol : float
        Certified tolerance for structure constants and sums.
    window : int
        Window for brute-force index-set comparisons.
    hermite_dim : int
        Truncation size of the Hermite basis.
    tau : complex
        Complex structure parameter, ``Im(tau) < 0``.
    theta, theta_prime : float
        Noncommutativity parameters.
    seed : int
        Seed of the random generator used by randomized suites.
    """

    tol: float = 1e-12
    window: int = 50
    hermite_dim: int = 256
    tau: complex = -1j
    theta: float = 0.2
    theta_prime: float = 0.3
    seed: int = 0

    def validate(self) -> "RunConfig":
        """
        Check the invariants and return ``self``.

        Raises
        ------
        ConfigError
            If ``Im(tau) >= 0``, ``tol <= 0``, ``window < 1`` or
            ``hermite_dim`` is below the minimum.
        """
        if not complex(self.tau).imag < 0:
            raise ConfigError(f"Im(tau) must be negative, got tau={self.tau}")
        if not self.tol > 0:
            raise ConfigError(f"tol must be positive, got {self.tol}")
        if self.window < 1:
            raise ConfigError(f"window must be at least 1, got {self.window}")
        if self.hermite_dim < MIN_HERMITE_DIM:
            raise ConfigError(
                f"hermite_dim must be at least {MIN_HERMITE_DIM}, got {self.hermite_dim}"
            )
        return self

    @classmethod
    def from_namespace(cls, args: argparse.Namespace) -> "RunConfig":
        """Build a validated config from parsed command-line flags."""
        config = cls(
            tol=args.tol,
            window=args.window,
            hermite_dim=args.hermite_dim,
            tau=complex(args.tau_re, args.tau_im),
            theta=args.theta,
            theta_prime=args.theta_prime,
            seed=args.seed,
        )
        return config.validate()

    def to_dict(self) -> dict[str, Any]:
        data = asdict(self)
        tau = complex(self.tau)
        data["tau"] = [tau.real, tau.imag]
        return data
