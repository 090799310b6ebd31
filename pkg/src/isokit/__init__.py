"""isokit: covariant isotropy of presheaves of finite groups.

The package covers partial Horn logic on finite structures, finite
categories and groups, group presheaves, free extensions by an
indeterminate, the theory T^J of J-indexed models, α-rewriting of closed
terms, and the isotropy group Z(F) ≅ lim F × Aut(Id_J).
"""

from isokit.errors import InputError, IsokitError, ParseError, ValidationError
from isokit.kernels import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "InputError", "IsokitError", "ParseError", "ValidationError", "__version__"]
