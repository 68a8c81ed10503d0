"""Rees algebras and special fiber rings of rational normal scrolls.

Build the defining equations, certify the quadratic Groebner bases, enumerate
the initial complex of the fiber, and run the Hilbert-series harness.
"""

from .errors import ScrollReesError
from .scroll import ScrollSpec, make_spec, parse_partition

__version__ = "0.1.0"

__all__ = ["ScrollReesError", "ScrollSpec", "make_spec", "parse_partition", "__version__"]
