"""Brute-force ground truth on small torus digraphs.

Both enumerators run the propagating backtracking search in
:func:`torusham._kernels.search_covers`.  Every vertex picks an out-edge, and
vertices left with one usable in- or out-edge are forced.  The hamiltonian
variant additionally rejects short closed cycles as soon as they form.  Counts
are exact; only the list of witnesses is capped.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .construct import CycleCover, HamCycle
from .grid import TorusDigraph

__all__ = ["DEFAULT_LIMIT", "OracleLimitError", "EnumerationResult", "enumerate_ham_cycles", "enumerate_cycle_covers"]

DEFAULT_LIMIT = 64


class OracleLimitError(ValueError):
    pass


@dataclass(frozen=True)
class EnumerationResult:
    count: int
    witnesses: list = field(default_factory=list)


def _search(g: TorusDigraph, ham: bool, cap: int, limit: int | None):
    limit = DEFAULT_LIMIT if limit is None else limit
    if g.vertex_count() > limit:
        raise OracleLimitError(
            f"{g.vertex_count()} vertices exceeds the oracle limit of {limit}; raise limit explicitly"
        )
    if cap < 0:
        raise ValueError("cap must be >= 0")
    alive, out_adj = g.adjacency()
    count, found = _kernels.search_covers(out_adj, alive, ham, cap)
    return int(count), found[: min(int(count), cap)]


def enumerate_ham_cycles(g: TorusDigraph, cap: int = 16, *, limit: int | None = None) -> EnumerationResult:
    """Count directed hamiltonian cycles of ``g`` (each counted once, not per rotation)."""
    count, found = _search(g, True, cap, limit)
    witnesses = []
    for succ in found:
        start = int(np.flatnonzero(succ >= 0)[0])
        witnesses.append(HamCycle(g.mod, _kernels.trace_cycle(succ, start)))
    return EnumerationResult(count, list(dict.fromkeys(witnesses)))


def enumerate_cycle_covers(g: TorusDigraph, cap: int = 16, *, limit: int | None = None) -> EnumerationResult:
    """Count spanning subdigraphs of ``g`` with every in- and out-valence equal to 1."""
    count, found = _search(g, False, cap, limit)
    return EnumerationResult(count, list(dict.fromkeys(CycleCover(g.mod, s) for s in found)))
