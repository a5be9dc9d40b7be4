"""Lucas analogues of binomial coefficients and Catalan numbers."""

from ._lucaskit import *  # noqa: F401,F403
from ._lucaskit import LucasError, Poly2

__all__ = [name for name in dir() if not name.startswith("_")]
