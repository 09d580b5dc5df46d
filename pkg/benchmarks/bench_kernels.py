"""Compiled vs pure-Python kernels, and gmpy2 vs fractions for the exact simulator.

    python benchmarks/bench_kernels.py [--repeat N]

Kernel timings are taken in-process from both entries of
``sculptgraph.kernels.BACKENDS``. The rational backend is fixed at import,
so the simulator comparison runs each configuration in a subprocess.
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from sculptgraph import kernels
from sculptgraph.central_path import path_digraph, replace_loop_with_star
from sculptgraph.graphs import _candidates, support_matrix


def best_of(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def kernel_cases():
    rng = random.Random(0)
    dense = [[rng.randint(-1, 1) for _ in range(14)] for _ in range(14)]
    path = support_matrix(path_digraph(14))
    g = path_digraph(9)
    for j in range(1, 11):
        g = replace_loop_with_star(g, f"A{j}", 3, [f"{j}.{i}" for i in range(3)])
    cand = _candidates(g, g.labels)
    return [
        ("permanent 14x14 in {-1,0,1}", "permanent_int", dense),
        ("permanent support(P^(14)), 16x16", "permanent_int", path),
        (f"directed PMs, P^(9) with 3-qubit stars ({len(cand)} vertices)", "directed_pms", cand),
        (f"count PMs, same graph", "count_directed_pms", cand),
    ]


SIM_SNIPPET = (
    "import time; from sculptgraph.verifier import run_pipeline; import sculptgraph as s;"
    "t=time.perf_counter(); r=run_pipeline({spec}); d=time.perf_counter()-t;"
    "assert r.passed; print(s.RATIONAL_BACKEND, s.KERNEL_BACKEND, d)"
)


def simulator_case(spec, pure):
    env = dict(os.environ)
    env.pop("SCULPTGRAPH_PURE_PYTHON", None)
    if pure:
        env["SCULPTGRAPH_PURE_PYTHON"] = "1"
    out = subprocess.run(
        [sys.executable, "-c", SIM_SNIPPET.format(spec=list(spec))],
        env=env, capture_output=True, text=True, check=True,
    )
    rational, kernel, seconds = out.stdout.split()
    return rational, kernel, float(seconds)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = sorted(kernels.BACKENDS)
    if "compiled" not in backends:
        print("compiled extension not built; only the Python kernels are timed")
    print(f"{'case':<58}" + "".join(f"{b:>12}" for b in backends) + "   speedup")
    for name, func, arg in kernel_cases():
        times = {}
        results = set()
        for b in backends:
            fn = getattr(kernels.BACKENDS[b], func)
            results.add(repr(fn(arg)))
            times[b] = best_of(lambda: fn(arg), args.repeat)
        assert len(results) == 1, f"backends disagree on {name}"
        speed = f"{times['python'] / times['compiled']:8.1f}x" if "compiled" in times else ""
        print(f"{name:<58}" + "".join(f"{times[b]:>11.4f}s" for b in backends) + f"  {speed}")

    print()
    print(f"{'exact pipeline':<24}{'rationals':>12}{'kernels':>10}{'seconds':>10}")
    for spec in ([2, 0, 4], [3, 3, 3]):
        for pure in (False, True):
            rational, kernel, seconds = simulator_case(spec, pure)
            print(f"{str(spec):<24}{rational:>12}{kernel:>10}{seconds:>10.3f}")


if __name__ == "__main__":
    main()
