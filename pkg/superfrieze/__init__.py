"""
superfrieze - exact algebra of superfriezes, supersymmetric Hill equations
and supercontinuants
"""

__version__ = "0.1.0"
__author__ = "superfrieze developers"

from .core.frieze_manager import FriezeManager
from .core.hill_manager import HillManager
from .core.continuant_manager import ContinuantManager

__all__ = [
    "FriezeManager",
    "HillManager",
    "ContinuantManager",
]
