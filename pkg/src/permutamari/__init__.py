"""Weak order on permutations, the Tamari lattice, and the height-preserving
lattice embedding between them, plus generic finite-lattice analyzers.

Submodules:

  perm       inversion sets, the permutation lattice S_n
  tamari     bracketing functions, the Tamari lattice T_n
  embedding  the map phi: T_n -> S_n, its inverse, verification suites
  brackets   bracketed words and binary trees, the transfer to T_n
  lattices   LatticeView, Hasse, semidistributivity, boundedness, DOT
  cli        the command-line front end
"""

from . import brackets, embedding, lattices, perm, tamari
from . import cli
from .lattices import LatticeView
from .perm import InversionSet, Permutation
from .reports import Verdict, VerifyReport
from .tamari import BracketingFn

__version__ = "0.1.0"

__all__ = [
    "BracketingFn",
    "InversionSet",
    "LatticeView",
    "Permutation",
    "Verdict",
    "VerifyReport",
    "brackets",
    "cli",
    "embedding",
    "lattices",
    "perm",
    "tamari",
]
