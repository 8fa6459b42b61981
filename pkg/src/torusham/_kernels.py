"""Hot loops: cycle-cover search, permutation cycle counting, cycle tracing.

Every kernel is compiled with numba unless ``TORUSHAM_NO_NUMBA`` is set (see
:mod:`torusham._accel`).  The search kernel then runs as ordinary Python over
numpy arrays; the two tracing kernels switch to vectorized pointer-jumping
versions instead of interpreting the scalar loops.

Graphs arrive as a dense ``out_adj`` array of shape ``(N, D)``, padded with -1,
plus an ``alive`` mask.  A cover is a successor array with -1 at dead vertices.
"""
import numpy as np

from ._accel import USE_NUMBA, njit

FREE = 0
CHOSEN = 1
BANNED = 2

# cnt slots
_TLEN = 0
_QHEAD = 1
_QTAIL = 2
_ALIVE = 3


@njit(cache=True)
def _enqueue(x, queue, cnt):
    queue[cnt[_QTAIL]] = x
    cnt[_QTAIL] += 1


@njit(cache=True)
def _ban(f, estate, tail, head, out_avail, in_avail, succ, pred, trail, queue, cnt):
    if estate[f] == BANNED:
        return True
    if estate[f] == CHOSEN:
        return False
    estate[f] = BANNED
    trail[cnt[_TLEN]] = f
    cnt[_TLEN] += 1
    t = tail[f]
    h = head[f]
    out_avail[t] -= 1
    in_avail[h] -= 1
    if succ[t] == -1:
        if out_avail[t] == 0:
            return False
        if out_avail[t] == 1:
            _enqueue(t, queue, cnt)
    if pred[h] == -1:
        if in_avail[h] == 0:
            return False
        if in_avail[h] == 1:
            _enqueue(h, queue, cnt)
    return True


@njit(cache=True)
def _choose(e, ham, estate, tail, head, out_e, in_e, out_avail, in_avail, succ, pred, trail, queue, cnt):
    if estate[e] == CHOSEN:
        return True
    if estate[e] == BANNED:
        return False
    u = tail[e]
    w = head[e]
    if succ[u] != -1 or pred[w] != -1:
        return False
    estate[e] = CHOSEN
    trail[cnt[_TLEN]] = e
    cnt[_TLEN] += 1
    succ[u] = w
    pred[w] = u
    for k in range(out_e.shape[1]):
        f = out_e[u, k]
        if f >= 0 and f != e:
            if not _ban(f, estate, tail, head, out_avail, in_avail, succ, pred, trail, queue, cnt):
                return False
    for k in range(in_e.shape[1]):
        f = in_e[w, k]
        if f >= 0 and f != e:
            if not _ban(f, estate, tail, head, out_avail, in_avail, succ, pred, trail, queue, cnt):
                return False
    if ham:
        # reject any closed cycle shorter than the vertex count
        x = w
        length = 1
        while x != u and succ[x] != -1:
            x = succ[x]
            length += 1
        if x == u and length < cnt[_ALIVE]:
            return False
    return True


@njit(cache=True)
def _propagate(ham, estate, tail, head, out_e, in_e, out_avail, in_avail, succ, pred, trail, queue, cnt):
    while cnt[_QHEAD] < cnt[_QTAIL]:
        x = queue[cnt[_QHEAD]]
        cnt[_QHEAD] += 1
        if succ[x] == -1 and out_avail[x] == 1:
            for k in range(out_e.shape[1]):
                f = out_e[x, k]
                if f >= 0 and estate[f] != BANNED:
                    if not _choose(f, ham, estate, tail, head, out_e, in_e, out_avail, in_avail,
                                   succ, pred, trail, queue, cnt):
                        return False
                    break
        if pred[x] == -1 and in_avail[x] == 1:
            for k in range(in_e.shape[1]):
                f = in_e[x, k]
                if f >= 0 and estate[f] != BANNED:
                    if not _choose(f, ham, estate, tail, head, out_e, in_e, out_avail, in_avail,
                                   succ, pred, trail, queue, cnt):
                        return False
                    break
    return True


@njit(cache=True)
def _undo(to, trail, estate, tail, head, out_avail, in_avail, succ, pred, cnt):
    while cnt[_TLEN] > to:
        cnt[_TLEN] -= 1
        e = trail[cnt[_TLEN]]
        if estate[e] == CHOSEN:
            succ[tail[e]] = -1
            pred[head[e]] = -1
        else:
            out_avail[tail[e]] += 1
            in_avail[head[e]] += 1
        estate[e] = FREE


@njit(cache=True)
def search_covers(out_adj, alive, ham, cap):
    """Count cycle covers (or hamiltonian cycles if ``ham``) by propagating backtracking.

    Each vertex picks one out-edge.  Choosing an edge bans the tail's other
    out-edges and the head's other in-edges; a vertex left with a single
    usable out- or in-edge is forced onto it.  Returns ``(count, witnesses)``
    where ``witnesses[:min(count, cap)]`` hold successor arrays in search order.
    """
    nv = out_adj.shape[0]
    deg = out_adj.shape[1]
    ne = 0
    for v in range(nv):
        if alive[v]:
            for k in range(deg):
                w = out_adj[v, k]
                if w >= 0 and alive[w]:
                    ne += 1
    tail = np.empty(ne, np.int64)
    head = np.empty(ne, np.int64)
    out_e = np.full((nv, deg), -1, np.int64)
    in_e = np.full((nv, 2 * deg), -1, np.int64)
    in_fill = np.zeros(nv, np.int64)
    out_avail = np.zeros(nv, np.int64)
    in_avail = np.zeros(nv, np.int64)
    e = 0
    for v in range(nv):
        if alive[v]:
            for k in range(deg):
                w = out_adj[v, k]
                if w >= 0 and alive[w]:
                    tail[e] = v
                    head[e] = w
                    out_e[v, out_avail[v]] = e
                    out_avail[v] += 1
                    in_e[w, in_fill[w]] = e
                    in_fill[w] += 1
                    in_avail[w] += 1
                    e += 1

    witnesses = np.full((cap, nv), -1, np.int64)
    count = 0
    n_alive = 0
    for v in range(nv):
        if alive[v]:
            n_alive += 1
            if out_avail[v] == 0 or in_avail[v] == 0:
                return count, witnesses
    if n_alive == 0:
        return count, witnesses

    estate = np.zeros(ne, np.int64)
    succ = np.full(nv, -1, np.int64)
    pred = np.full(nv, -1, np.int64)
    trail = np.empty(ne, np.int64)
    queue = np.empty(nv + 4 * ne + 8, np.int64)
    cnt = np.zeros(4, np.int64)
    cnt[_ALIVE] = n_alive

    for v in range(nv):
        if alive[v]:
            _enqueue(v, queue, cnt)
    if not _propagate(ham, estate, tail, head, out_e, in_e, out_avail, in_avail,
                      succ, pred, trail, queue, cnt):
        return count, witnesses

    fr_v = np.empty(nv + 1, np.int64)
    fr_k = np.empty(nv + 1, np.int64)
    fr_t = np.empty(nv + 1, np.int64)

    v = -1
    for x in range(nv):
        if alive[x] and succ[x] == -1:
            v = x
            break
    if v < 0:
        if cap > 0:
            witnesses[0] = succ
        return 1, witnesses

    depth = 0
    fr_v[0] = v
    fr_k[0] = 0
    fr_t[0] = cnt[_TLEN]
    while depth >= 0:
        v = fr_v[depth]
        k = fr_k[depth]
        _undo(fr_t[depth], trail, estate, tail, head, out_avail, in_avail, succ, pred, cnt)
        if k >= deg:
            depth -= 1
            continue
        fr_k[depth] = k + 1
        f = out_e[v, k]
        if f < 0 or estate[f] != FREE:
            continue
        cnt[_QHEAD] = 0
        cnt[_QTAIL] = 0
        if not _choose(f, ham, estate, tail, head, out_e, in_e, out_avail, in_avail,
                       succ, pred, trail, queue, cnt):
            continue
        if not _propagate(ham, estate, tail, head, out_e, in_e, out_avail, in_avail,
                          succ, pred, trail, queue, cnt):
            continue
        nxt = -1
        for x in range(v + 1, nv):
            if alive[x] and succ[x] == -1:
                nxt = x
                break
        if nxt < 0:
            if count < cap:
                witnesses[count] = succ
            count += 1
            continue
        depth += 1
        fr_v[depth] = nxt
        fr_k[depth] = 0
        fr_t[depth] = cnt[_TLEN]
    return count, witnesses


@njit(cache=True)
def _count_cycles_loop(succ):
    seen = np.zeros(succ.shape[0], np.bool_)
    cycles = 0
    for s in range(succ.shape[0]):
        if succ[s] < 0 or seen[s]:
            continue
        cycles += 1
        x = s
        while not seen[x]:
            seen[x] = True
            x = succ[x]
    return cycles


def _count_cycles_jump(succ):
    # min-label propagation by pointer doubling: O(N log N), no Python loop over N
    succ = np.asarray(succ, dtype=np.int64)
    alive = succ >= 0
    idx = np.arange(succ.shape[0], dtype=np.int64)
    nxt = np.where(alive, succ, idx)
    label = idx.copy()
    span = 1
    while span < max(1, succ.shape[0]):
        label = np.minimum(label, label[nxt])
        nxt = nxt[nxt]
        span *= 2
    label = np.minimum(label, label[nxt])
    return int(np.count_nonzero(alive & (label == idx)))


@njit(cache=True)
def _trace_loop(succ, start):
    order = np.empty(succ.shape[0], np.int64)
    length = 0
    x = start
    while True:
        order[length] = x
        length += 1
        x = succ[x]
        if x == start or x < 0 or length >= succ.shape[0]:
            break
    return order[:length]


def _trace_jump(succ, start):
    # list ranking (pointer jumping) on the cycle through ``start``; assumes one cycle covers all live vertices
    succ = np.asarray(succ, dtype=np.int64)
    alive = succ >= 0
    idx = np.arange(succ.shape[0], dtype=np.int64)
    last = int(np.flatnonzero(succ == start)[0])
    nxt = np.where(alive, succ, idx)
    nxt[last] = last
    dist = (nxt != idx).astype(np.int64)
    while np.any(nxt[nxt] != nxt):
        dist = dist + dist[nxt]
        nxt = nxt[nxt]
    length = int(np.count_nonzero(alive))
    order = np.empty(length, dtype=np.int64)
    live = np.flatnonzero(alive)
    order[length - 1 - dist[live]] = live
    return order


if USE_NUMBA:
    count_cycles = _count_cycles_loop
    trace_cycle = _trace_loop
else:
    count_cycles = _count_cycles_jump
    trace_cycle = _trace_jump
