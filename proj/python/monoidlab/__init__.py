"""Exact-arithmetic workbench: Puiseux monoids, monoid semidomains over F_p,
and the subrings S[x] + K[x]x^2, with desk-scale verification suites."""

from monoidlab._core import *  # noqa: F401,F403
from monoidlab._core import __doc__ as _core_doc

__all__ = [name for name in dir() if not name.startswith("_")]
__doc__ = _core_doc or __doc__
