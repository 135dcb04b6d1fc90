"""Multi-parametric nonlinear Klein-Gordon workbench."""

from ._nlkg import *  # noqa: F401,F403
from ._nlkg import __version__  # noqa: F401
