"""Time the hot kernels with numba and with the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 5]

Each backend runs in its own interpreter because the switch
(``TORUSHAM_NO_NUMBA``) is read at import time.  numba compile time is paid in
a warm-up call and excluded.
"""
import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, timeit
import numpy as np
from torusham import _accel, _kernels
from torusham.construct import build_cycle_cover
from torusham.grid import TorusDigraph

repeat = int(sys.argv[1])
cases = {}

def bench(name, fn):
    fn()
    cases[name] = min(timeit.repeat(fn, number=1, repeat=repeat))

for label, g, ham in [("search ham C8xC8", TorusDigraph.product(8, 8), True),
                      ("search covers C8xC8", TorusDigraph.product(8, 8), False),
                      ("search ham pushed 7x9", TorusDigraph.pushed(7, 9), True)]:
    alive, adj = g.adjacency()
    bench(label, lambda adj=adj, alive=alive, ham=ham: _kernels.search_covers(adj, alive, ham, 4))

succ = build_cycle_cover(2001, 2003).succ  # a single 4M-vertex cycle
bench("count_cycles 4M", lambda: _kernels.count_cycles(succ))
bench("trace_cycle 4M", lambda: _kernels.trace_cycle(succ, 2))
print(json.dumps({"numba": _accel.USE_NUMBA, "seconds": cases}))
"""


def run(disable, repeat):
    env = dict(os.environ)
    env.pop("TORUSHAM_NO_NUMBA", None)
    if disable:
        env["TORUSHAM_NO_NUMBA"] = "1"
    out = subprocess.run([sys.executable, "-c", WORKER, str(repeat)], env=env, check=True,
                         capture_output=True, text=True)
    return json.loads(out.stdout)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    fast = run(False, args.repeat)
    slow = run(True, args.repeat)
    if not fast["numba"]:
        print("numba is not importable; both columns use the fallback", file=sys.stderr)
    print(f"{'kernel':<26}{'numba':>12}{'fallback':>12}{'ratio':>9}")
    for name, t in fast["seconds"].items():
        u = slow["seconds"][name]
        print(f"{name:<26}{t * 1e3:>10.2f}ms{u * 1e3:>10.2f}ms{u / t:>8.1f}x")


if __name__ == "__main__":
    main()
