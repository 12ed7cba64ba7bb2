"""Modularity of nil-variety elements in the lattice of semigroup varieties.

Library layout:

- ``words``      free-semigroup words and the divisibility order
- ``perms``      permutations and subgroups of small symmetric groups
- ``lattice``    explicit finite lattices, modular/neutral tests, diagrams
- ``varieties``  identity presentations and bounded deduction closure
- ``gsets``      G-set congruences, transversal codes, modularity verdicts
- ``checker``    the conditions (a), (b), (c), (c') and the final verdict
- ``figures``    matplotlib Hasse diagrams for report output
- ``cli``        the ``modvar`` command line front end
"""

from .words import (Word, parse_word, word_str, leq, equivalent, compare,
                    is_substitutive, canonical_form)
from .perms import (Permutation, Subgroup, compose, subgroup_closure,
                    enumerate_subgroups, named_subgroup, conjugate)
from .lattice import FiniteLattice, LatticeMap, partition_lattice, sym_subgroup_lattice
from .varieties import (VarietyPresentation, Equation, ZeroIdentity,
                        parse_presentation, build_closure, variety_meet)
from .gsets import GSet, Congruence, Code, free_gset, is_modular_simple
from .checker import Verdict, verdict

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
