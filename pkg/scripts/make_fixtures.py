"""Regenerate the documents under fixtures/ from gentlesurf.fixtures."""

import argparse
from pathlib import Path

from gentlesurf import fixtures as F
from gentlesurf.quiver import Arrow, BoundQuiver, Quiver, bound_quiver_to_dict, dump_json, medial_quiver
from gentlesurf.surface import dump_triangulation, generate_disc_fan

# hand-built presentations, each violating exactly one gentle condition
NEGATIVE = {
    "g1_three_in": (["a", "b", "c", "z"], [("x", "a", "z"), ("y", "b", "z"), ("w", "c", "z")], []),
    "g2_not_a_path": (["a", "b", "c"], [("x", "a", "b"), ("y", "c", "a")], [("x", "y")]),
    "g3_two_zero": (["c", "c2", "b", "a"], [("al", "c", "b"), ("al2", "c2", "b"), ("be", "b", "a")], [("al", "be"), ("al2", "be")]),
    "g4_two_free": (["c", "c2", "b", "a"], [("al", "c", "b"), ("al2", "c2", "b"), ("be", "b", "a")], []),
}


def _bq(vertices, arrows, relations):
    return BoundQuiver.build(Quiver.build(vertices, [Arrow(*a) for a in arrows]), relations)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "fixtures"))
    out = Path(ap.parse_args().out)
    out.mkdir(parents=True, exist_ok=True)
    tris = dict(F.TRIANGULATIONS)
    tris["disc8"] = lambda: generate_disc_fan(8)
    for name, make in tris.items():
        dump_triangulation(make(), out / f"{name}.tri")
    for name, make in F.BOUND_QUIVERS.items():
        dump_json(bound_quiver_to_dict(make()), out / f"{name}.json")
    for name, spec in NEGATIVE.items():
        dump_json(bound_quiver_to_dict(_bq(*spec)), out / f"{name}.json")
    dump_json(bound_quiver_to_dict(_bq([1, 2, 3], [(0, 1, 2), (1, 2, 3)], [])), out / "a3_linear.json")
    dump_json(bound_quiver_to_dict(_bq([1, 2, 3], [(0, 1, 2), (1, 2, 3), (2, 3, 1)], [(0, 1), (1, 2), (2, 0)])), out / "a3_cycle.json")
    Q, W = medial_quiver(F.sphere3())
    dump_json(bound_quiver_to_dict(BoundQuiver.build(Q, []), W), out / "sphere3_medial.json")
    print(f"wrote {len(list(out.iterdir()))} files to {out}")


if __name__ == "__main__":
    main()
