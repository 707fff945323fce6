"""Graph limit toolkit: graphon kernels, subgraph densities, constraint checks."""

from ._graphonlab import *  # noqa: F401,F403
from ._graphonlab import __version__  # noqa: F401
