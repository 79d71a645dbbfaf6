"""Two-dimensional vector algebras and quadratic vector polynomial solvers."""

from ._vecquad import *  # noqa: F401,F403
from ._vecquad import __version__  # noqa: F401
