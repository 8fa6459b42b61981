"""The torus digraph ``C_m x C_n`` with optional pushing and rectangle deletion.

Vertices are pairs ``(i, j)`` in ``Z_m x Z_n``; from each vertex there is an
edge to ``v + (1, 0)`` and to ``v + (0, 1)``.  Pushing at ``p`` reverses the
four edges incident with ``p``; deleting a rectangle removes its vertices and
every edge touching them.

Neighbourhoods are computed arithmetically.  :meth:`TorusDigraph.adjacency`
materializes dense arrays for the oracle and the constructive code, indexing
vertex ``(i, j)`` as ``i * n + j``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

import numpy as np

from .arith import DomainError, Moduli

__all__ = ["Vertex", "Rectangle", "TorusDigraph", "out_neighbors", "in_neighbors", "vertex_count"]


class Vertex(NamedTuple):
    i: int
    j: int


@dataclass(frozen=True)
class Rectangle:
    """``origin + {0..a-1} x {0..b-1}``, taken mod ``(m, n)``."""

    a: int
    b: int
    origin: Vertex = Vertex(0, 0)

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise DomainError("rectangle sides must be >= 1")
        object.__setattr__(self, "origin", Vertex(*self.origin))

    def contains(self, v, mod: Moduli) -> bool:
        return (v[0] - self.origin[0]) % mod.m < self.a and (v[1] - self.origin[1]) % mod.n < self.b

    def members(self, mod: Moduli) -> Iterator[Vertex]:
        oi, oj = self.origin
        for di in range(self.a):
            for dj in range(self.b):
                yield Vertex((oi + di) % mod.m, (oj + dj) % mod.n)


@dataclass(frozen=True)
class TorusDigraph:
    mod: Moduli
    pushed_at: Vertex | None = None
    deleted: Rectangle | None = None

    def __post_init__(self):
        mod = self.mod
        if self.pushed_at is not None:
            object.__setattr__(self, "pushed_at", self.vertex(*self.pushed_at))
        if self.deleted is not None:
            r = self.deleted
            if r.a > mod.m or r.b > mod.n:
                raise DomainError(f"rectangle {r.a}x{r.b} does not fit in Z_{mod.m} x Z_{mod.n}")
            if r.a * r.b >= mod.m * mod.n:
                raise DomainError("deleting the rectangle would leave no vertices")
            object.__setattr__(
                self, "deleted", Rectangle(r.a, r.b, self.vertex(*r.origin))
            )

    @classmethod
    def product(cls, m: int, n: int) -> TorusDigraph:
        return cls(Moduli(m, n))

    @classmethod
    def pushed(cls, m: int, n: int, at=(0, 1)) -> TorusDigraph:
        return cls(Moduli(m, n), pushed_at=Vertex(*at))

    @classmethod
    def rect_deleted(cls, m: int, n: int, a: int = 2, b: int = 2, origin=(0, 0)) -> TorusDigraph:
        return cls(Moduli(m, n), deleted=Rectangle(a, b, Vertex(*origin)))

    def vertex(self, i: int, j: int) -> Vertex:
        return Vertex(i % self.mod.m, j % self.mod.n)

    def is_deleted(self, v) -> bool:
        return self.deleted is not None and self.deleted.contains(v, self.mod)

    def vertices(self) -> Iterator[Vertex]:
        """Surviving vertices in lexicographic order."""
        for i in range(self.mod.m):
            for j in range(self.mod.n):
                v = Vertex(i, j)
                if not self.is_deleted(v):
                    yield v

    def _plain_out(self, v) -> set[Vertex]:
        return {self.vertex(v[0] + 1, v[1]), self.vertex(v[0], v[1] + 1)}

    def _plain_in(self, v) -> set[Vertex]:
        return {self.vertex(v[0] - 1, v[1]), self.vertex(v[0], v[1] - 1)}

    def out_neighbors(self, v) -> set[Vertex]:
        v = self.vertex(*v)
        if self.is_deleted(v):
            raise DomainError(f"vertex {tuple(v)} is deleted")
        p = self.pushed_at
        if p is None:
            heads = self._plain_out(v)
        elif v == p:
            heads = self._plain_in(v)
        else:
            heads = self._plain_out(v) - {p}
            if v in self._plain_out(p):
                heads.add(p)
        return {w for w in heads if not self.is_deleted(w)}

    def in_neighbors(self, v) -> set[Vertex]:
        v = self.vertex(*v)
        if self.is_deleted(v):
            raise DomainError(f"vertex {tuple(v)} is deleted")
        p = self.pushed_at
        if p is None:
            tails = self._plain_in(v)
        elif v == p:
            tails = self._plain_out(v)
        else:
            tails = self._plain_in(v) - {p}
            if v in self._plain_in(p):
                tails.add(p)
        return {u for u in tails if not self.is_deleted(u)}

    def has_edge(self, u, w) -> bool:
        return not self.is_deleted(u) and self.vertex(*w) in self.out_neighbors(u)

    def edges(self) -> Iterator[tuple[Vertex, Vertex]]:
        for v in self.vertices():
            for w in sorted(self.out_neighbors(v)):
                yield v, w

    def vertex_count(self) -> int:
        total = self.mod.m * self.mod.n
        if self.deleted is not None:
            total -= self.deleted.a * self.deleted.b
        return total

    def index(self, v) -> int:
        return (v[0] % self.mod.m) * self.mod.n + v[1] % self.mod.n

    def alive_mask(self) -> np.ndarray:
        """Boolean mask over dense indices: True for surviving vertices."""
        m, n = self.mod.m, self.mod.n
        alive = np.ones(m * n, dtype=np.bool_)
        if self.deleted is not None:
            i, j = np.divmod(np.arange(m * n, dtype=np.int64), n)
            alive = ~self._dead(i, j)
        return alive

    def _dead(self, i, j):
        r = self.deleted
        if r is None:
            return np.zeros(np.shape(i), dtype=np.bool_)
        return ((i - r.origin.i) % self.mod.m < r.a) & ((j - r.origin.j) % self.mod.n < r.b)

    def edge_mask(self, tails, heads) -> np.ndarray:
        """Vectorized edge test for dense index arrays ``tails -> heads``."""
        m, n = self.mod.m, self.mod.n
        tails = np.asarray(tails, dtype=np.int64)
        heads = np.asarray(heads, dtype=np.int64)
        ti, tj = np.divmod(tails, n)
        hi, hj = np.divmod(heads, n)
        fwd = ((hi == (ti + 1) % m) & (hj == tj)) | ((hi == ti) & (hj == (tj + 1) % n))
        if self.pushed_at is None:
            ok = fwd
        else:
            bwd = ((ti == (hi + 1) % m) & (tj == hj)) | ((ti == hi) & (tj == (hj + 1) % n))
            p = self.index(self.pushed_at)
            ok = np.where((tails == p) | (heads == p), bwd, fwd)
        return ok & ~self._dead(ti, tj) & ~self._dead(hi, hj)

    def adjacency(self) -> tuple[np.ndarray, np.ndarray]:
        """Dense ``(alive, out_adj)`` with ``out_adj`` of shape ``(m*n, 3)``, -1 padded."""
        m, n = self.mod.m, self.mod.n
        alive = np.ones(m * n, dtype=np.bool_)
        if self.deleted is not None:
            for v in self.deleted.members(self.mod):
                alive[self.index(v)] = False
        out_adj = np.full((m * n, 3), -1, dtype=np.int64)
        for v in self.vertices():
            heads = sorted(self.index(w) for w in self.out_neighbors(v))
            out_adj[self.index(v), : len(heads)] = heads
        return alive, out_adj


def out_neighbors(g: TorusDigraph, v) -> set[Vertex]:
    return g.out_neighbors(v)


def in_neighbors(g: TorusDigraph, v) -> set[Vertex]:
    return g.in_neighbors(v)


def vertex_count(g: TorusDigraph) -> int:
    return g.vertex_count()
