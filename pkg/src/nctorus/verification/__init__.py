"""Batch verification of the identities implemented by nctorus."""

from nctorus.verification import suites
from nctorus.verification.suites import *  # noqa: F403

# Auto-build __all__
__all__ = []
for module in [suites]:
    __all__.extend(module.__all__)
