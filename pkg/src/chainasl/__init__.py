"""Chain and order polytopes of finite posets, their toric rings, and
algebras with straightening laws on the distributive lattice of ideals."""

from .birkhoff import DistLattice, build_lattice, star
from .errors import BudgetExceeded, ChainASLError, NotInLattice, ParseError, VerificationFailure
from .poset import BUILTIN_POSETS, Poset, load_poset, parse_poset

__version__ = "0.1.0"
