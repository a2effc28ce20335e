"""Band counts by length for a bound quiver or triangulation, next to two oracles.

The first oracle counts primitive closed walks in the letter-transition graph
(Moebius inversion of trace(M^L) / L), which is independent of the band search.
The second counts primitive binary necklaces, the number of bands one gets
from words in a single composable pair of length-k bands.
"""

import argparse
import json
import time
from dataclasses import dataclass

import numpy as np

from gentlesurf import fixtures as F
from gentlesurf.quiver import bound_quiver_from_dict, jacobian_algebra
from gentlesurf.strings import FORWARD, INVERSE, Letter, band_count_by_length, can_follow, growth_report, letter_end, letter_start
from gentlesurf.surface import triangulation_from_dict


@dataclass
class Config:
    source: str = "sphere3"
    max_len: int = 16
    rotation_only: bool = True


def mobius(n: int) -> int:
    res, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            res = -res
        p += 1
    return -res if n > 1 else res


def transfer_counts(bq, max_len: int) -> dict[int, int]:
    q = bq.quiver
    letters = [Letter(a.id, s) for a in q.arrows for s in (FORWARD, INVERSE)]
    M = np.array(
        [[int(letter_end(q, x) == letter_start(q, y) and can_follow(bq, x, y)) for y in letters] for x in letters],
        dtype=object,
    )
    traces, P = {}, np.identity(len(letters), dtype=object)
    for k in range(1, max_len + 1):
        P = P.dot(M)
        traces[k] = int(np.trace(P))
    return {L: sum(mobius(L // d) * traces[d] for d in range(1, L + 1) if L % d == 0) // L for L in traces}


def necklaces(m: int, k: int = 2) -> int:
    return sum(mobius(m // d) * k ** d for d in range(1, m + 1) if m % d == 0) // m


def load(source: str):
    if source in F.BOUND_QUIVERS:
        return F.BOUND_QUIVERS[source]()
    if source in F.TRIANGULATIONS:
        return jacobian_algebra(F.TRIANGULATIONS[source]())
    data = json.load(open(source))
    return jacobian_algebra(triangulation_from_dict(data)) if "triangles" in data else bound_quiver_from_dict(data)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("source", nargs="?", default=Config.source, help="fixture name or JSON file")
    ap.add_argument("--max-len", type=int, default=Config.max_len)
    ap.add_argument("--both", action="store_true", help="merge inverse bands as well as rotations")
    a = ap.parse_args()
    cfg = Config(a.source, a.max_len, not a.both)
    bq = load(cfg.source)
    t = time.perf_counter()
    counts = band_count_by_length(bq, cfg.max_len, cfg.rotation_only)
    elapsed = time.perf_counter() - t
    walks = transfer_counts(bq, cfg.max_len) if cfg.rotation_only else {}
    print(f"{'len':>4} {'bands':>8} {'walks':>8} {'neck(len/4)':>12}")
    for L, n in counts.items():
        neck = necklaces(L // 4) if L % 4 == 0 else ""
        print(f"{L:>4} {n:>8} {walks.get(L, ''):>8} {neck:>12}")
    g = growth_report(bq, min(cfg.max_len, 8))
    print(f"growth: {g.growth_class}, witness {g.as_dict()['composable_pair']}")
    print(f"enumeration took {elapsed:.2f}s")


if __name__ == "__main__":
    main()
