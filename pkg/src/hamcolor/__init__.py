"""Perfect 2-colorings of Hamming graphs: constructions, verification, bounds."""

from .hamming import Shape
from .coloring import Coloring, Recipe

__all__ = ["Shape", "Coloring", "Recipe"]
__version__ = "0.1.0"
