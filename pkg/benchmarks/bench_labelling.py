"""Time the compiled and pure-Python labelling kernels on seeded random frameworks.

    python3 benchmarks/bench_labelling.py --nodes 10 16 22 --count 20 --seed 1
"""

from __future__ import annotations

import argparse
import random
import statistics
import time

from aspic import kernels
from aspic.semantics import AbstractAF, extension_masks


def fixed_af(rng: random.Random, n: int, density: float) -> AbstractAF:
    """Exactly ``n`` nodes; half the edges are mutual, which multiplies extensions."""
    nodes = tuple(f"n{i}" for i in range(n))
    edges = set()
    for i in range(n):
        for j in range(n):
            if i != j and rng.random() < density:
                edges.add((nodes[i], nodes[j]))
                if rng.random() < 0.5:
                    edges.add((nodes[j], nodes[i]))
    return AbstractAF(nodes, frozenset(edges))


def _time(af, semantics: str, kernel: str, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        extension_masks(af, semantics, "att", kernel)
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nodes", type=int, nargs="+", default=[12, 24, 48])
    ap.add_argument("--count", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--semantics", default="preferred")
    ap.add_argument("--degree", type=float, default=1.5, help="expected out-degree per node")
    ns = ap.parse_args(argv)

    names = ["python"] + (["compiled"] if kernels.compiled is not None else [])
    if len(names) == 1:
        print("compiled kernel not built; timing the fallback only")
    print(f"{'nodes':>6} " + " ".join(f"{n + ' ms':>14}" for n in names) + f" {'speedup':>8}")
    for n in ns.nodes:
        rng = random.Random(ns.seed * 1000 + n)
        afs = [fixed_af(rng, n, ns.degree / n) for _ in range(ns.count)]
        medians = {}
        for k in names:
            medians[k] = statistics.median(_time(af, ns.semantics, k, ns.repeat) for af in afs) * 1e3
        for af in afs:
            if len(names) == 2:
                a = sorted(extension_masks(af, ns.semantics, "att", "python"))
                b = sorted(extension_masks(af, ns.semantics, "att", "compiled"))
                assert a == b, "kernels disagree"
        speed = medians["python"] / medians["compiled"] if "compiled" in medians and medians["compiled"] else float("nan")
        print(f"{n:>6} " + " ".join(f"{medians[k]:>14.3f}" for k in names) + f" {speed:>8.1f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
