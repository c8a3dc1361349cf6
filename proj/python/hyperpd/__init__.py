"""Projective dimension of square-free monomial ideals via dual hypergraphs.

Inputs are strings: ideal text such as ``"ab, bc, cd"`` or hypergraph JSON
(anything starting with ``{``).
"""

import json as _json

from ._hyperpd import (
    BudgetExceeded,
    Error,
    ParseError,
    PreconditionError,
    betti,
    minimalize,
    pd,
    pd_cycle_with_edge,
    pd_open_cycle,
    pd_open_string,
    pd_string_with_edge,
    reg_open_string,
    remove_union_edges,
    split,
    to_ideal,
    verify,
)
from ._hyperpd import classify as _classify
from ._hyperpd import hypergraph as _hypergraph


def classify(source: str) -> dict:
    """Shape, gaps and residues of the reduced hypergraph."""
    return _json.loads(_classify(source))


def hypergraph(source: str) -> dict:
    """Dual hypergraph as a dict with ``mu`` and ``edges``."""
    return _json.loads(_hypergraph(source))


__all__ = [
    "BudgetExceeded",
    "Error",
    "ParseError",
    "PreconditionError",
    "betti",
    "classify",
    "hypergraph",
    "minimalize",
    "pd",
    "pd_cycle_with_edge",
    "pd_open_cycle",
    "pd_open_string",
    "pd_string_with_edge",
    "reg_open_string",
    "remove_union_edges",
    "split",
    "to_ideal",
    "verify",
]
