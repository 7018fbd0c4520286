"""Globular operads built from series of classical operads.

Structured values cross the C++ boundary as JSON strings; this wrapper
converts to and from plain Python dicts/lists so callers never touch raw
JSON.  Pasting diagrams stay in their ``dim=<m>:<term>`` text form.
"""

import json

from . import _gwop
from ._gwop import (
    GwopError,
    enumerate_pds,
    interchange,
    pd_boundary,
    pd_dim,
    pd_nodes,
    pd_vertices,
    pl_check,
    q_contractible,
    q_contractible_lifting,
    q_count,
    substitute,
)

__all__ = [
    "GwopError",
    "chaotic_gset",
    "distributive_law",
    "enumerate_pds",
    "interchange",
    "pd_boundary",
    "pd_dim",
    "pd_nodes",
    "pd_vertices",
    "pl_check",
    "pl_compose",
    "pl_eval",
    "q_apply",
    "q_boundary",
    "q_cells",
    "q_contractible",
    "q_contractible_lifting",
    "q_count",
    "q_unit",
    "qcell_key",
    "substitute",
    "terminal_gset",
]


def terminal_gset(n):
    """The globular set with one cell in every dimension up to ``n``."""
    return json.loads(_gwop.terminal_gset(n))


def chaotic_gset(points, n):
    """One cell between every parallel pair over the given points."""
    return json.loads(_gwop.chaotic_gset(list(points), n))


def q_cells(series, pd):
    """All cells of the induced operad over a pasting diagram, as dicts."""
    return [json.loads(c) for c in _gwop.q_cells(json.dumps(series), pd)]


def q_unit(series, m):
    """The identity cell over the ``m``-dimensional globe."""
    return json.loads(_gwop.q_unit(json.dumps(series), m))


def q_boundary(series, cell, which):
    """Source or target of a cell; ``which`` is 'source' or 'target'."""
    return json.loads(_gwop.q_boundary(json.dumps(series), json.dumps(cell), which))


def qcell_key(series, cell):
    """Canonical printable key of a cell."""
    return _gwop.qcell_key(json.dumps(series), json.dumps(cell))


def q_apply(series, gset, max_vertices):
    """Free algebra of the series on a globular set, up to a size bound."""
    return json.loads(_gwop.q_apply(json.dumps(series), json.dumps(gset), max_vertices))


def distributive_law(vgraph, operad, t_identity=False, max_k=2, max_len=2, max_weight=2):
    """Check the four distributive-law axioms elementwise within bounds."""
    return _gwop.distributive_law(
        json.dumps(vgraph), json.dumps(operad), t_identity, max_k, max_len, max_weight
    )


def pl_compose(f, gs):
    """Operadic composite of piecewise-linear maps given as dicts."""
    return json.loads(_gwop.pl_compose(json.dumps(f), [json.dumps(g) for g in gs]))


def pl_eval(f, t):
    """Evaluate a piecewise-linear map at an exact rational, given as text."""
    return _gwop.pl_eval(json.dumps(f), t)


def _wrap_series(fn):
    def wrapped(series, *args):
        return fn(json.dumps(series), *args)

    return wrapped


q_count = _wrap_series(q_count)
q_contractible = _wrap_series(q_contractible)
q_contractible_lifting = _wrap_series(q_contractible_lifting)
interchange = _wrap_series(interchange)
