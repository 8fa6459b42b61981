"""Explicit cycle covers and hamiltonian cycles.

The 2x2-deleted product ``(C_m x C_n) - R`` with ``R = {0,1} x {0,1}`` has at
most one vertex-disjoint cycle cover.  When it exists, every vertex moves by
``(1, 0)`` or ``(0, 1)``; the ``(1, 0)`` movers are exactly the two diagonal
runs ``u + k(1,-1)`` and ``u' + k(1,-1)``, ``0 <= k < r``, starting at
``u = (1, -1)`` and ``u' = (0, -1)``, with ``r = <0|-2>`` once the instance is
oriented so that ``<0|-2> < <-2|0>``.

Pushing at ``v = (0, 1)`` turns a hamiltonian cycle of the deleted product into
one of the pushed product: the forced edge ``(m-1, 0) -> (m-1, 1)`` is replaced
by a detour through the four rectangle vertices.  The transposed instance gives
the second cycle.

Cycles are stored as numpy arrays of dense indices ``i * n + j`` so that
instances up to :data:`EXPLICIT_LIMIT` vertices stay cheap.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .arith import DomainError, Moduli, gcd
from .characterize import is_deleted_rect_hamiltonian, is_pushed_product_hamiltonian
from .grid import TorusDigraph, Vertex

__all__ = [
    "EXPLICIT_LIMIT",
    "NoCycleCover",
    "NotHamiltonian",
    "SizeLimitError",
    "TravelAssignment",
    "CycleCover",
    "KnotClass",
    "HamCycle",
    "travel_assignment",
    "build_cycle_cover",
    "knot_class",
    "is_single_cycle",
    "build_deleted_ham_cycle",
    "build_pushed_ham_cycles",
]

EXPLICIT_LIMIT = 10**7


class NotHamiltonian(ValueError):
    pass


class NoCycleCover(NotHamiltonian):
    pass


class SizeLimitError(ValueError):
    pass


def _require_explicit(m: int, n: int, limit: int | None):
    limit = EXPLICIT_LIMIT if limit is None else limit
    if m * n > limit:
        raise SizeLimitError(f"m*n = {m * n} exceeds the explicit-construction limit {limit}")


def _require_min3(m, n):
    for name, value in (("m", m), ("n", n)):
        if isinstance(value, bool) or not isinstance(value, int):
            raise DomainError(f"{name} must be an integer")
    if min(m, n) < 3:
        raise DomainError(f"m and n must be >= 3, got m={m}, n={n}")


@dataclass(frozen=True)
class TravelAssignment:
    """Which vertices of the 2x2-deleted product travel by ``(1, 0)``.

    ``run_length`` is ``r``.  If ``swapped``, the two runs are laid out in the
    transposed instance ``(n, m)``; read back in ``(m, n)`` coordinates the runs
    travel by ``(0, 1)`` and everything else by ``(1, 0)``.
    """

    mod: Moduli
    run_length: int
    swapped: bool

    @property
    def oriented(self) -> Moduli:
        return self.mod.swapped() if self.swapped else self.mod

    def in_runs(self, v) -> bool:
        """Is ``v`` (original coordinates) on one of the two diagonal runs?"""
        i, j = (v[1], v[0]) if self.swapped else (v[0], v[1])
        mod = self.oriented
        r = self.run_length
        for start_i in (1, 0):
            # v = (start_i + k, -1 - k)
            k = mod.crt(i - start_i, -1 - j)
            if k is not None and k % mod.lcm < r:
                return True
        return False

    def travels_by_one(self, v) -> bool:
        """True if ``v`` travels by ``(1, 0)``."""
        return self.in_runs(v) != self.swapped

    @property
    def x(self) -> int:
        """Number of vertices travelling by ``(1, 0)``."""
        runs = 2 * self.run_length
        m, n = self.mod.m, self.mod.n
        return m * n - 4 - runs if self.swapped else runs


def _span_condition(mod: Moduli):
    c02, c20 = mod.crt(0, -2), mod.crt(-2, 0)
    if c02 is None or c20 is None:
        return False, c02, c20
    rhs = [t for t in (mod.crt(0, -1), mod.crt(-1, 0)) if t is not None]
    ok = not rhs or min(c02, c20) < min(rhs)
    return ok, c02, c20


def travel_assignment(m: int, n: int) -> TravelAssignment:
    """Travel vectors of the unique cycle cover of the 2x2-deleted product.

    Raises :class:`NoCycleCover` when no cover exists.
    """
    _require_min3(m, n)
    mod = Moduli(m, n)
    ok, c02, c20 = _span_condition(mod)
    if not ok:
        raise NoCycleCover(f"(C_{m} x C_{n}) - R_2,2 has no vertex-disjoint cycle cover")
    if c20 < c02:
        return TravelAssignment(mod, c20, swapped=True)
    return TravelAssignment(mod, c02, swapped=False)


class CycleCover:
    """Successor map of a cycle cover over the dense vertex indices ``i*n + j``.

    Deleted vertices hold -1.
    """

    def __init__(self, mod: Moduli, succ: np.ndarray):
        self.mod = mod
        self.succ = np.array(succ, dtype=np.int64)
        self.succ.setflags(write=False)

    def __eq__(self, other):
        if not isinstance(other, CycleCover):
            return NotImplemented
        return self.mod == other.mod and np.array_equal(self.succ, other.succ)

    def __hash__(self):
        return hash((self.mod, self.succ.tobytes()))

    def __repr__(self):
        return f"CycleCover(m={self.mod.m}, n={self.mod.n}, vertices={self.vertex_count})"

    @property
    def vertex_count(self) -> int:
        return int(np.count_nonzero(self.succ >= 0))

    def successor(self, v) -> Vertex:
        n = self.mod.n
        w = int(self.succ[(v[0] % self.mod.m) * n + v[1] % n])
        if w < 0:
            raise DomainError(f"vertex {tuple(v)} is not covered")
        return Vertex(w // n, w % n)

    def as_dict(self) -> dict[Vertex, Vertex]:
        n = self.mod.n
        return {
            Vertex(v // n, v % n): Vertex(int(w) // n, int(w) % n)
            for v, w in enumerate(self.succ.tolist())
            if w >= 0
        }

    def _travel_masks(self):
        m, n = self.mod.m, self.mod.n
        idx = np.arange(m * n, dtype=np.int64)
        i, j = np.divmod(idx, n)
        alive = self.succ >= 0
        by_one = alive & (self.succ == ((i + 1) % m) * n + j)
        by_other = alive & (self.succ == i * n + (j + 1) % n)
        return alive, by_one, by_other

    def travel_counts(self) -> tuple[int, int]:
        """``(x, y)``: vertices travelling by ``(1, 0)`` and by ``(0, 1)``."""
        _, by_one, by_other = self._travel_masks()
        return int(np.count_nonzero(by_one)), int(np.count_nonzero(by_other))

    def cycle_count(self) -> int:
        return int(_kernels.count_cycles(self.succ))

    def is_valid_in(self, g: TorusDigraph) -> bool:
        """Every live vertex has in- and out-valence 1 using edges of ``g``."""
        alive = g.alive_mask()
        succ = self.succ
        if succ.shape != alive.shape or np.any((succ >= 0) != alive):
            return False
        live = np.flatnonzero(alive)
        heads = succ[live]
        if np.any(np.bincount(heads, minlength=succ.size) > 1):
            return False
        return bool(np.all(g.edge_mask(live, heads)))


@dataclass(frozen=True)
class KnotClass:
    x: int
    y: int
    p: int
    q: int


class HamCycle:
    """A directed hamiltonian cycle, rotated to start at its least vertex.

    ``order`` holds dense indices ``i*n + j``; the closing edge is implied.
    """

    def __init__(self, mod: Moduli, order):
        order = np.array(order, dtype=np.int64)
        if order.size:
            order = np.roll(order, -int(np.argmin(order)))
        order.setflags(write=False)
        self.mod = mod
        self.order = order

    def __len__(self):
        return int(self.order.size)

    def __eq__(self, other):
        if not isinstance(other, HamCycle):
            return NotImplemented
        return self.mod == other.mod and np.array_equal(self.order, other.order)

    def __hash__(self):
        return hash((self.mod, self.order.tobytes()))

    def __repr__(self):
        return f"HamCycle(m={self.mod.m}, n={self.mod.n}, length={len(self)})"

    @property
    def vertices(self) -> list[Vertex]:
        n = self.mod.n
        return [Vertex(v // n, v % n) for v in self.order.tolist()]

    def key(self) -> tuple[int, ...]:
        return tuple(self.order.tolist())

    def edge_list(self) -> str:
        """One ``"i j"`` line per vertex, first vertex repeated at the end."""
        vs = self.vertices
        if vs:
            vs.append(vs[0])
        return "\n".join(f"{i} {j}" for i, j in vs)

    def is_hamiltonian_in(self, g: TorusDigraph) -> bool:
        """Visits every live vertex of ``g`` once, along edges of ``g``."""
        alive = g.alive_mask()
        order = self.order
        if order.size != np.count_nonzero(alive):
            return False
        if not np.array_equal(np.sort(order), np.flatnonzero(alive)):
            return False
        return bool(np.all(g.edge_mask(order, np.roll(order, -1))))


def build_cycle_cover(m: int, n: int, *, limit: int | None = None) -> CycleCover:
    """The unique cycle cover of ``(C_m x C_n) - ({0,1} x {0,1})``.

    >>> build_cycle_cover(3, 5).travel_counts()
    (6, 5)
    """
    ta = travel_assignment(m, n)
    _require_explicit(m, n, limit)
    mod = ta.oriented
    rows, cols = mod.m, mod.n
    k = np.arange(ta.run_length, dtype=np.int64)
    runs = np.zeros((rows, cols), dtype=np.bool_)
    runs[(1 + k) % rows, (-1 - k) % cols] = True
    runs[k % rows, (-1 - k) % cols] = True
    by_one = ~runs.T if ta.swapped else runs

    i, j = np.indices((m, n), dtype=np.int64)
    succ = np.where(by_one, ((i + 1) % m) * n + j, i * n + (j + 1) % n)
    succ[:2, :2] = -1
    succ = succ.ravel()

    alive = succ >= 0
    heads = succ[alive]
    if np.any(succ[heads] < 0) or np.any(np.bincount(heads, minlength=succ.size) > 1):
        raise RuntimeError(f"travel assignment for ({m}, {n}) is not a cycle cover")
    return CycleCover(Moduli(m, n), succ)


def knot_class(cover: CycleCover) -> KnotClass:
    """Knot class ``(x/m, y/n)`` of a cover of a 2x2-deleted product."""
    m, n = cover.mod.m, cover.mod.n
    x, y = cover.travel_counts()
    if x + y != cover.vertex_count or x + y != m * n - 4:
        raise AssertionError(f"cover does not move every vertex by (1,0) or (0,1): x={x}, y={y}")
    p, rp = divmod(x, m)
    q, rq = divmod(y, n)
    if rp or rq:
        raise AssertionError(f"non-integral knot class: x={x}, m={m}, y={y}, n={n}")
    if gcd(m, n) == 1:
        c04, c40 = cover.mod.crt(0, -4), cover.mod.crt(-4, 0)
        if (x, y) != (c04, c40):
            raise AssertionError(f"x={x}, y={y} differ from <0|-4>={c04}, <-4|0>={c40}")
    return KnotClass(x, y, p, q)


def is_single_cycle(k: KnotClass) -> bool:
    return gcd(k.p, k.q) == 1


def build_deleted_ham_cycle(m: int, n: int, *, limit: int | None = None) -> HamCycle:
    """The hamiltonian cycle of the 2x2-deleted product, traced from ``(0, 2)``."""
    _require_min3(m, n)
    if not is_deleted_rect_hamiltonian(m, n, 2, 2):
        raise NotHamiltonian(f"(C_{m} x C_{n}) - R_2,2 is not hamiltonian")
    cover = build_cycle_cover(m, n, limit=limit)
    cycles = cover.cycle_count()
    if cycles != 1:
        raise RuntimeError(f"cover of ({m}, {n}) splits into {cycles} cycles")
    order = _kernels.trace_cycle(cover.succ, 2)
    if order.size != m * n - 4:
        raise RuntimeError(f"traced {order.size} vertices, expected {m * n - 4}")
    return HamCycle(Moduli(m, n), order)


def _splice_pushed(m: int, n: int, limit) -> np.ndarray:
    # Hamiltonian cycle of P(C_m x C_n) pushed at v = (0, 1), as dense indices.
    order = build_deleted_ham_cycle(m, n, limit=limit).order
    tail = (m - 1) * n + 0  # v - (1,1)
    after = (m - 1) * n + 1  # v - (1,0)
    pos = int(np.flatnonzero(order == tail)[0])
    seq = np.roll(order, -(pos + 1))
    if seq[0] != after:
        raise RuntimeError("deleted cycle does not use the edge (m-1,0) -> (m-1,1)")
    # v-(0,1), v+(1,-1), v+(1,0), v
    detour = np.array([0 * n + 0, 1 * n + 0, 1 * n + 1, 0 * n + 1], dtype=np.int64)
    return np.concatenate([seq, detour])


def build_pushed_ham_cycles(m: int, n: int, *, limit: int | None = None) -> tuple[HamCycle, HamCycle]:
    """Both hamiltonian cycles of ``P(C_m x C_n)`` pushed at ``(0, 1)``.

    The first comes from the 2x2-deleted cycle by the detour splice; the second
    is the same construction on ``(n, m)``, transposed and translated so the
    pushed vertex lands on ``(0, 1)``.  Each is checked edge by edge.
    """
    _require_min3(m, n)
    if not is_pushed_product_hamiltonian(m, n):
        raise NotHamiltonian(f"P(C_{m} x C_{n}) is not hamiltonian")
    _require_explicit(m, n, limit)
    first = _splice_pushed(m, n, limit)

    swapped = _splice_pushed(n, m, limit)
    si, sj = np.divmod(swapped, m)  # coordinates in Z_n x Z_m
    push = Vertex(0, 1)
    ti, tj = push.i - push.j, push.j - push.i  # carries transposed (1, 0) to (0, 1)
    second = ((sj + ti) % m) * n + (si + tj) % n

    mod = Moduli(m, n)
    g = TorusDigraph(mod, pushed_at=push)
    cycles = (HamCycle(mod, first), HamCycle(mod, second))
    for c in cycles:
        if not c.is_hamiltonian_in(g):
            raise RuntimeError(f"spliced cycle for ({m}, {n}) is not hamiltonian in the pushed digraph")
    if cycles[0] == cycles[1]:
        raise RuntimeError("both constructions produced the same cycle")
    return cycles
