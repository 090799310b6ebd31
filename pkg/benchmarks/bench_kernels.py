"""Compare the compiled and pure-Python enumeration kernels.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]

Each case runs on every importable backend; results are checked for
equality before timings are reported.
"""

import argparse
import random
import time

from isokit import catalog as C
from isokit import kernels


def elementary_abelian(k):
    G = C.cyclic(2)
    for _ in range(k - 1):
        G = C.direct_product(G, C.cyclic(2))
    return G


def aut_case(G):
    return f"automorphisms {G.name or G.order} (order {G.order})", \
        lambda mod: mod.automorphisms(G.flat, G.order, G.unit)


def hom_case(G):
    images = list(range(G.order))
    return f"hom_violation identity on {G.name} x200", \
        lambda mod: [mod.hom_violation(G.flat, G.order, G.flat, G.order, images) for _ in range(200)]


def limit_case():
    # six 8-element sets and a single constraint: 8**5 surviving tuples
    sizes = [8] * 6
    edges = [(0, 5, [(3 * a) % 8 for a in range(8)])]
    return "limit_tuples six 8-element sets, one edge", lambda mod: mod.limit_tuples(sizes, edges)


def naturality_case(seed=11):
    rng = random.Random(seed)
    n = 24
    perms = []
    for _ in range(40):
        p = list(range(n))
        rng.shuffle(p)
        perms.append(p)
    ident = list(range(n))
    cands = [perms + [ident] for _ in range(3)]
    edges = [(0, 1, ident), (1, 2, ident), (0, 2, ident)]
    return "natural_families 3 objects x 41 candidates", lambda mod: mod.natural_families(cands, edges)


CASES = [
    aut_case(C.symmetric(4)),
    aut_case(C.alternating(4)),
    aut_case(elementary_abelian(3)),
    aut_case(elementary_abelian(4)),
    aut_case(C.direct_product(C.cyclic(4), C.cyclic(4))),
    hom_case(C.symmetric(4)),
    limit_case(),
    naturality_case(),
]


def best_of(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None):
    p = argparse.ArgumentParser()
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args(argv)
    backends = kernels.available_backends()
    names = sorted(backends, reverse=True)
    print(f"backends: {', '.join(names)}")
    header = f"{'case':48s}" + "".join(f"{n:>12s}" for n in names) + f"{'speedup':>10s}"
    print(header)
    print("-" * len(header))
    for label, run in CASES:
        times, outs = {}, {}
        for n in names:
            times[n], outs[n] = best_of(lambda: run(backends[n]), args.repeat)
        same = len({repr(o) for o in outs.values()}) == 1
        speed = times["python"] / times["cython"] if "cython" in times and times["cython"] > 0 else float("nan")
        row = f"{label:48s}" + "".join(f"{times[n] * 1e3:10.2f}ms" for n in names)
        print(row + f"{speed:9.1f}x" + ("" if same else "  MISMATCH"))


if __name__ == "__main__":
    main()
