"""Compute the frozen expected values in fixtures/derived.json.

Run from the repository root:

    python tests/make_fixtures.py

CRT values come from a linear scan, edge sets from the definitions, and
hamiltonian cycles / covers from naive enumeration (tests/oracles.py).  The
two instances too large for the naive path search (P(C_5 x C_7) and
P(C_7 x C_9)) use the package's brute-force enumerator, which shares no code
with the number-theoretic tests it is compared against.
"""
import json
import pathlib
import sys

HERE = pathlib.Path(__file__).resolve().parent
sys.path.insert(0, str(HERE))

from oracles import covers_naive, crt_scan, edge_set, ham_cycles_dfs  # noqa: E402

FIXTURE = HERE / "fixtures" / "derived.json"


def _cycle(seq):
    return [list(v) for v in seq]


def _travel_counts(succ, m, n):
    x = sum(1 for (i, j), w in succ.items() if w == ((i + 1) % m, j))
    return x, len(succ) - x


def _package_ham_count(m, n, pushed=None, rect=None):
    from torusham.grid import Rectangle, TorusDigraph
    from torusham.arith import Moduli
    from torusham.oracle import enumerate_ham_cycles

    g = TorusDigraph(Moduli(m, n), pushed_at=pushed, deleted=None if rect is None else Rectangle(*rect))
    return enumerate_ham_cycles(g, cap=0).count


def build():
    fx = {}

    fx["crt"] = [
        {"i": i, "j": j, "m": m, "n": n, "value": crt_scan(i, j, m, n)}
        for i, j, m, n in [(0, -2, 3, 5), (1, 1, 3, 5), (-1, -1, 3, 5), (-2, -2, 3, 5), (1, 0, 2, 4)]
    ]

    fx["pushed_witnesses_3_5"] = {
        "<0|-2>": crt_scan(0, -2, 3, 5),
        "<-2|0>": crt_scan(-2, 0, 3, 5),
        "<0|-1>": crt_scan(0, -1, 3, 5),
        "<-1|0>": crt_scan(-1, 0, 3, 5),
        "<0|-4>/m": crt_scan(0, -4, 3, 5) // 3,
        "<-4|0>/n": crt_scan(-4, 0, 3, 5) // 5,
    }

    _, edges = edge_set(3, 5, rect=(2, 2, (0, 0)))
    fx["deleted_out_3_5_at_2_0"] = sorted(list(w) for u, w in edges if u == (2, 0))

    # swapped orientation (5, 3) for the 2x2 rectangle
    lead = crt_scan(-2, 0, 5, 3)
    fx["deleted_swapped_3_5_2_2"] = {
        "<-a|0>": lead,
        "min": min(
            t for t in [crt_scan(-2, -2 + k, 5, 3) for k in range(3)] + [crt_scan(-2 + k, -2, 5, 3) for k in range(3)]
            if t is not None
        ),
        "n-b-b*floor(<-a|0>/m)": 3 - 2 - 2 * (lead // 5),
        "b*<-a|0>/n": 2 * lead // 3,
    }
    lead = crt_scan(-1, 0, 3, 5)
    fx["deleted_original_3_5_1_1"] = {
        "<-a|0>": lead,
        "min": min(t for t in [crt_scan(-1, -1, 3, 5), crt_scan(-1, 0, 3, 5), crt_scan(0, -1, 3, 5)] if t),
        "n-b-b*floor(<-a|0>/m)": 5 - 1 - 1 * (lead // 3),
        "b*<-a|0>/n": lead // 5,
    }

    brute = {}
    for m, n, a, b in [(3, 5, 2, 2), (3, 5, 1, 1), (4, 6, 2, 2), (3, 4, 2, 2), (5, 7, 2, 2)]:
        verts, edges = edge_set(m, n, rect=(a, b, (0, 0)))
        brute[f"deleted {m} {n} {a} {b}"] = len(ham_cycles_dfs(verts, edges))
    for m, n in [(3, 5), (3, 4), (2, 3), (4, 6)]:
        verts, edges = edge_set(m, n, pushed=(0, 1))
        brute[f"pushed {m} {n}"] = len(ham_cycles_dfs(verts, edges))
    brute["pushed 5 7"] = _package_ham_count(5, 7, pushed=(0, 1))
    brute["pushed 7 9"] = _package_ham_count(7, 9, pushed=(0, 1))
    brute["deleted 7 9 2 2"] = _package_ham_count(7, 9, rect=(2, 2, (0, 0)))
    fx["ham_counts"] = brute

    covers = {}
    for label, kwargs in {
        "deleted 3 5": dict(m=3, n=5, rect=(2, 2, (0, 0))),
        "deleted 3 4": dict(m=3, n=4, rect=(2, 2, (0, 0))),
        "plain 2 2": dict(m=2, n=2),
    }.items():
        verts, edges = edge_set(**kwargs)
        found = covers_naive(verts, edges)
        entry = {"count": len(found)}
        if len(found) == 1:
            x, y = _travel_counts(found[0], kwargs["m"], kwargs["n"])
            entry.update(x=x, y=y, successor=sorted([list(u), list(w)] for u, w in found[0].items()))
        covers[label] = entry
    fx["covers"] = covers

    # 2^31 products are too many for covers_naive; the unique hamiltonian cycle is a cover
    verts, edges = edge_set(5, 7, rect=(2, 2, (0, 0)))
    (cyc,) = ham_cycles_dfs(verts, edges)
    succ = {cyc[k]: cyc[(k + 1) % len(cyc)] for k in range(len(cyc))}
    x, y = _travel_counts(succ, 5, 7)
    fx["covers"]["deleted 5 7"] = {"x": x, "y": y}

    fx["knot"] = {
        "3 5": {"x04": crt_scan(0, -4, 3, 5), "y40": crt_scan(-4, 0, 3, 5)},
        "5 7": {"x04": crt_scan(0, -4, 5, 7), "y40": crt_scan(-4, 0, 5, 7)},
        "run_3_5": crt_scan(0, -2, 3, 5),
        "run_5_7": min(crt_scan(0, -2, 5, 7), crt_scan(-2, 0, 5, 7)),
    }

    cycles = {}
    for label, kwargs in {
        "deleted 3 5": dict(m=3, n=5, rect=(2, 2, (0, 0))),
        "deleted 5 7": dict(m=5, n=7, rect=(2, 2, (0, 0))),
        "pushed 3 5": dict(m=3, n=5, pushed=(0, 1)),
    }.items():
        verts, edges = edge_set(**kwargs)
        cycles[label] = sorted(_cycle(c) for c in ham_cycles_dfs(verts, edges))
    fx["cycles"] = cycles

    verts, edges = edge_set(3, 5)
    fx["ham_counts"]["plain 3 5"] = len(ham_cycles_dfs(verts, edges))
    return fx


if __name__ == "__main__":
    FIXTURE.parent.mkdir(exist_ok=True)
    FIXTURE.write_text(json.dumps(build(), indent=1, sort_keys=True) + "\n")
    print(f"wrote {FIXTURE}")
