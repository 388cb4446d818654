#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Each workload is timed against both kernel modules directly, so a single
process can compare them regardless of which backend the package selected.

Usage: python benchmarks/bench_backends.py [--quick]
"""

from __future__ import annotations

import argparse
import time

from forcing_lab import _kernels_py
from forcing_lab.graphs import cartesian_product, generate
from forcing_lab.matchings import enumerate_perfect_matchings

try:
    from forcing_lab import _ckernels
except ImportError:
    _ckernels = None


def _mates(order, edges):
    out = [-1] * order
    for u, v in edges:
        out[u] = v
        out[v] = u
    return tuple(out)


def workloads(quick: bool):
    torus = cartesian_product(generate("cycle", 4), generate("cycle", 4))
    q4 = generate("hypercube", 4)
    k66 = generate("complete_bipartite", 6, 6)
    k66_m = enumerate_perfect_matchings(k66, limit=1)[0]
    torus_m = enumerate_perfect_matchings(torus, limit=1)[0]
    reps = 5 if quick else 100

    def pm_enum_torus(mod):
        h = mod.make_handle(torus.adj)
        for _ in range(reps):
            mod.pm_enumerate(h, torus.full_mask, -1)

    def pm_count_q4(mod):
        h = mod.make_handle(q4.adj)
        for _ in range(reps * 400):
            mod.pm_count(h, q4.full_mask, 2)

    def cycles_k66(mod):
        h = mod.make_handle(k66.adj)
        mates = _mates(k66.order, k66_m.edges)
        for _ in range(reps):
            mod.alt_cycles(h, mates, 10**6)

    def cycles_torus(mod):
        h = mod.make_handle(torus.adj)
        mates = _mates(torus.order, torus_m.edges)
        for _ in range(reps * 4):
            mod.alt_cycles(h, mates, 10**6)

    def mis_torus6(mod):
        big = cartesian_product(generate("cycle", 4), generate("cycle", 6))
        h = mod.make_handle(big.adj)
        for _ in range(reps):
            mod.mis(h, big.full_mask)

    return [
        ("pm_enumerate C4xC4 (272 PMs)", pm_enum_torus),
        ("pm_count cap=2 on Q4 x2000", pm_count_q4),
        ("alt_cycles K_{6,6}", cycles_k66),
        ("alt_cycles C4xC4 x20", cycles_torus),
        ("max independent set C4xC6", mis_torus6),
    ]


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--quick", action="store_true")
    args = parser.parse_args()

    if _ckernels is None:
        print("compiled kernels unavailable; build the extension first")
        return 1

    rows = []
    for name, fn in workloads(args.quick):
        t0 = time.perf_counter()
        fn(_kernels_py)
        t_py = time.perf_counter() - t0
        t0 = time.perf_counter()
        fn(_ckernels)
        t_c = time.perf_counter() - t0
        rows.append((name, t_py, t_c, t_py / t_c if t_c > 0 else float("inf")))

    # end-to-end spectrum timing under each backend (fresh processes, since
    # the backend is fixed at import time)
    import os
    import subprocess
    import sys

    code = (
        "import time; from forcing_lab.graphs import generate; "
        "from forcing_lab.solver import spectrum, anti_forcing_values; "
        "g = generate('hypercube', 4); t0 = time.perf_counter(); "
        "spectrum(g); anti_forcing_values(g); "
        "print(time.perf_counter() - t0)"
    )
    spect = {}
    for backend in ("python", "compiled"):
        env = dict(os.environ, FORCING_LAB_BACKEND=backend)
        out = subprocess.run(
            [sys.executable, "-c", code], capture_output=True, text=True, env=env
        )
        spect[backend] = float(out.stdout.strip())
    rows.append(
        (
            "spectrum+Af on Q4 (end to end)",
            spect["python"],
            spect["compiled"],
            spect["python"] / spect["compiled"],
        )
    )

    width = max(len(r[0]) for r in rows)
    print(f"{'workload':<{width}}  {'python':>9}  {'compiled':>9}  {'speedup':>8}")
    for name, t_py, t_c, ratio in rows:
        print(f"{name:<{width}}  {t_py:>8.3f}s  {t_c:>8.3f}s  {ratio:>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
