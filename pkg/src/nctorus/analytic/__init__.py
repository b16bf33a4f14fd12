"""Gaussian-packet model of the basic modules ``E_g(theta)``.

This package is the independent analytic oracle: generator actions, the
standard holomorphic structures, both pairings, phi-bases, numerical
cohomology, translations, isogenies and the line bundles of the commutative
torus, all evaluated in closed form.
"""

from nctorus.analytic import (
    algebra,
    hermite,
    isogeny,
    line_bundles,
    modules,
    packet,
    pairings,
)
from nctorus.analytic.algebra import *  # noqa: F403
from nctorus.analytic.hermite import *  # noqa: F403
from nctorus.analytic.isogeny import *  # noqa: F403
from nctorus.analytic.line_bundles import *  # noqa: F403
from nctorus.analytic.modules import *  # noqa: F403
from nctorus.analytic.packet import *  # noqa: F403
from nctorus.analytic.pairings import *  # noqa: F403

# Auto-build __all__
__all__ = []
for module in [packet, algebra, modules, pairings, hermite, isogeny, line_bundles]:
    __all__.extend(module.__all__)
