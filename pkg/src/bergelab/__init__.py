"""Tools for checking perfect-graph structure on small graphs."""
from .graphcore import Graph, canonical_form, is_isomorphic
from .recognizers import classify_basic, is_berge, is_perfect
from .decompositions import decompose

__version__ = "0.1.0"

__all__ = ["Graph", "canonical_form", "classify_basic", "decompose", "is_berge",
           "is_isomorphic", "is_perfect", "__version__"]
