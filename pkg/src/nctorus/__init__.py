"""Standard holomorphic bundles on noncommutative two-tori.

nctorus computes module data, theta-series structure constants, cohomology,
Serre pairings, the cross-theta equivalence functor and the discrete
invariants of the Fourier-Mukai transform, and checks the identities
relating them.
"""

__version__ = "0.1.0"

__all__ = ["__version__"]
