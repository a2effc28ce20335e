"""Flip every internal arc of a seeded corpus and compare with quiver mutation."""

import argparse
import time
from collections import Counter

from gentlesurf.corpus import CorpusConfig, corpus
from gentlesurf.quiver import medial_quiver, mutate
from gentlesurf.surface import flip, surface_invariants


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--count", type=int, default=50)
    ap.add_argument("--max-extra-points", type=int, default=3)
    a = ap.parse_args()
    t = time.perf_counter()
    per_type, fails = Counter(), []
    for (g, b), T in corpus(CorpusConfig(a.seed, a.count, a.max_extra_points)):
        Q = medial_quiver(T).quiver
        for d in T.internal_arcs:
            fr = flip(T, d)
            Q2 = medial_quiver(fr.triangulation).quiver.relabel_vertices({fr.new_arc: d})
            per_type[(g, b)] += 1
            if mutate(Q, d).arrow_counts() != Q2.arrow_counts():
                i = surface_invariants(T)
                fails.append(f"(g={g}, b={b}, c={i.marked_points}) arc {d!r}")
    for (g, b), n in sorted(per_type.items()):
        print(f"g={g} b={b}: {n} flips")
    print(f"total {sum(per_type.values())} flips, {len(fails)} mismatches, {time.perf_counter() - t:.2f}s")
    for f in fails:
        print("mismatch", f)
    raise SystemExit(1 if fails else 0)


if __name__ == "__main__":
    main()
