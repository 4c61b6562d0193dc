"""Finite-model laboratory for nest-induced orders and order/interval topologies."""

from .errors import (
    HypothesisNotMetError,
    InputError,
    NotANestError,
    OrderLabError,
    PreconditionError,
    SizeError,
)
from .foundation import SetFamily, Subset, Universe, family_from_label_lists, make_universe
from .nests import Nest
from .relations import Relation
from .topologies import Topology

__version__ = "0.1.0"

__all__ = [
    "HypothesisNotMetError",
    "InputError",
    "Nest",
    "NotANestError",
    "OrderLabError",
    "PreconditionError",
    "Relation",
    "SetFamily",
    "SizeError",
    "Subset",
    "Topology",
    "Universe",
    "family_from_label_lists",
    "make_universe",
]
