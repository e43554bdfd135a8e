"""Local cutvertices, local 2-separators and graph decompositions."""

from ._localsep import *  # noqa: F401,F403
from ._localsep import generators, run_cli

__version__ = "0.1.0"
__all__ = [name for name in dir() if not name.startswith("_")]
