"""Command-line interface.

Every command prints one structured report on stdout (JSON by default,
``--format plain`` for a line-oriented view) and exits 0 on success, 1 on a
domain error and 2 on a usage error.  Algebra and module commands accept
either a bound-quiver document or a triangulation document; the latter is
replaced by its Jacobian algebra.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from .curves import Curve, band_to_closed_curve, curve_to_string, intersection_vector, string_to_curve
from .errors import GentleSurfError
from .gentle import (
    block_decompose,
    check_gentle,
    classify_cluster_tilted,
    classify_tilted,
    find_double_zeros,
    reconstruct_triangulation,
    relation_extension,
)
from .quiver import (
    BoundQuiver,
    bound_quiver_from_dict,
    bound_quiver_to_dict,
    jacobian_presentation,
    medial_quiver,
    mutate,
    quiver_to_dict,
    to_matrix,
)
from .selftest import SelftestConfig, run_selftest
from .strings import (
    dim_vector,
    enumerate_bands,
    enumerate_strings,
    growth_report,
    parse_word,
    verify_gorenstein_one,
)
from .surface import (
    Triangulation,
    flip,
    generate_annulus,
    generate_disc_fan,
    parse_id,
    surface_invariants,
    triangulation_from_dict,
    triangulation_to_dict,
)


class UsageError(Exception):
    pass


class ArgParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


# input


def _read_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise GentleSurfError(f"{path} is not valid JSON: {exc}") from exc


def _triangulation(path: str) -> Triangulation:
    return triangulation_from_dict(_read_json(path))


def _algebra(path: str) -> BoundQuiver:
    data = _read_json(path)
    if "triangles" in data:
        return jacobian_presentation(*medial_quiver(triangulation_from_dict(data)))
    return bound_quiver_from_dict(data)


def _vec(d: dict) -> dict:
    return {str(k): v for k, v in d.items()}


def _write(doc: dict, path: str) -> None:
    try:
        with open(path, "w") as fh:
            json.dump(doc, fh, indent=2, sort_keys=True)
            fh.write("\n")
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from exc


def _emit_document(doc: dict, out: str | None, summary: dict) -> dict:
    if out:
        _write(doc, out)
        return {**summary, "written": out}
    return {**summary, "document": doc}


# surface


def cmd_surface_invariants(a) -> dict:
    return surface_invariants(_triangulation(a.file)).as_dict()


def cmd_surface_flip(a) -> dict:
    fr = flip(_triangulation(a.file), parse_id(a.arc))
    summary = {"old_arc": fr.old_arc, "new_arc": fr.new_arc}
    return _emit_document(triangulation_to_dict(fr.triangulation), a.output, summary)


def cmd_surface_gen(a) -> dict:
    if a.kind == "disc":
        if a.points is None:
            raise UsageError("surface gen disc needs --points")
        T = generate_disc_fan(a.points)
    else:
        if a.p is None or a.q is None:
            raise UsageError("surface gen annulus needs --p and --q")
        T = generate_annulus(a.p, a.q)
    return _emit_document(triangulation_to_dict(T), a.output, {"invariants": surface_invariants(T).as_dict()})


# quiver


def cmd_quiver_build(a) -> dict:
    Q, W = medial_quiver(_triangulation(a.file))
    doc = bound_quiver_to_dict(jacobian_presentation(Q, W), W)
    return _emit_document(doc, a.output, {"vertices": len(Q.vertices), "arrows": len(Q.arrows), "cycles": len(W.cycles)})


def cmd_quiver_mutate(a) -> dict:
    Q = _algebra(a.file).quiver
    M = mutate(Q, parse_id(a.vertex))
    return _emit_document(quiver_to_dict(M), a.output, {"vertex": parse_id(a.vertex)})


def cmd_quiver_matrix(a) -> dict:
    B = to_matrix(_algebra(a.file).quiver)
    return {"vertices": list(B.vertices), "matrix": B.to_list()}


# algebra


def cmd_algebra_check_gentle(a) -> dict:
    return check_gentle(_algebra(a.file)).as_dict()


def cmd_algebra_classify(a) -> dict:
    bq = _algebra(a.file)
    out = {"tilted": classify_tilted(bq).as_dict(), "cluster_tilted": classify_cluster_tilted(bq).as_dict()}
    if check_gentle(bq).is_gentle:
        out["double_zeros"] = [str(w) for w in find_double_zeros(bq)]
    return out


def cmd_algebra_relext(a) -> dict:
    bq = _algebra(a.file)
    ext = relation_extension(bq)
    summary = {"new_arrows": len(ext.quiver.arrows) - len(bq.quiver.arrows), "relations": len(ext.relations)}
    return _emit_document(bound_quiver_to_dict(ext), a.output, summary)


def cmd_algebra_reconstruct(a) -> dict:
    blocks, matching = block_decompose(_algebra(a.file))
    T = reconstruct_triangulation(blocks, matching)
    summary = {
        "blocks": [b.as_dict() for b in blocks],
        "matching": matching.as_dict(),
        "invariants": surface_invariants(T).as_dict(),
    }
    return _emit_document(triangulation_to_dict(T), a.output, summary)


# modules


def cmd_modules_strings(a) -> dict:
    bq = _algebra(a.file)
    words = enumerate_strings(bq, a.max_len)
    return {"count": len(words), "strings": [{"word": str(w), "dim": _vec(dim_vector(bq, w))} for w in words]}


def cmd_modules_bands(a) -> dict:
    bq = _algebra(a.file)
    bands = enumerate_bands(bq, a.max_len, rotation_only=a.rotation_only)
    return {
        "count": len(bands),
        "rotation_only": a.rotation_only,
        "bands": [{"word": str(b), "dim": _vec(dim_vector(bq, b))} for b in bands],
    }


def cmd_modules_gorenstein(a) -> dict:
    reports = verify_gorenstein_one(_algebra(a.file))
    return {"ok": all(r.kernel_is_projective for r in reports), "reports": [r.as_dict() for r in reports]}


def cmd_modules_growth(a) -> dict:
    return growth_report(_algebra(a.file), a.max_len, rotation_only=a.rotation_only).as_dict()


# curves


def _curve_doc(T, c) -> dict:
    return {**c.as_dict(), "intersection": _vec(intersection_vector(T, c))}


def cmd_curves_from_string(a) -> dict:
    T = _triangulation(a.triangulation)
    bq = jacobian_presentation(*medial_quiver(T))
    w = parse_word(bq.quiver, a.word)
    c = string_to_curve(T, w)
    return {"word": str(w), "dim": _vec(dim_vector(bq, w)), "curve": _curve_doc(T, c)}


def cmd_curves_to_string(a) -> dict:
    T = _triangulation(a.triangulation)
    xs = tuple(parse_id(x) for x in a.crossings.split(",") if x.strip()) if a.crossings else ()
    try:
        tris = tuple(int(t) for t in a.triangles.split(",")) if a.triangles else None
    except ValueError as exc:
        raise UsageError("--triangles takes comma-separated triangle indices") from exc
    c = Curve(a.start, a.end, xs, tris)
    w = curve_to_string(T, c)
    bq = jacobian_presentation(*medial_quiver(T))
    return {"word": str(w), "dim": _vec(dim_vector(bq, w))}


def cmd_curves_band(a) -> dict:
    T = _triangulation(a.triangulation)
    bq = jacobian_presentation(*medial_quiver(T))
    w = parse_word(bq.quiver, a.word)
    c = band_to_closed_curve(T, w, a.power)
    return {"band": str(w), "power": a.power, "closed_curve": _curve_doc(T, c)}


def cmd_selftest(a) -> dict:
    return run_selftest(SelftestConfig(seed=a.seed, cases=a.cases)).as_dict()


# plumbing


def build_parser() -> ArgParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "plain"), default="json")
    outp = argparse.ArgumentParser(add_help=False)
    outp.add_argument("-o", "--output", help="write the resulting document to this file")

    p = ArgParser(prog="gentlesurf", description=__doc__.splitlines()[0])
    groups = p.add_subparsers(dest="group", required=True, parser_class=ArgParser)

    def leaf(sub, name, func, parents=(fmt,), **kw):
        sp = sub.add_parser(name, parents=list(parents), **kw)
        sp.set_defaults(func=func)
        return sp

    s = groups.add_parser("surface", help="triangulations").add_subparsers(dest="cmd", required=True, parser_class=ArgParser)
    leaf(s, "invariants", cmd_surface_invariants).add_argument("file")
    sp = leaf(s, "flip", cmd_surface_flip, (fmt, outp))
    sp.add_argument("file")
    sp.add_argument("--arc", required=True)
    sp = leaf(s, "gen", cmd_surface_gen, (fmt, outp))
    sp.add_argument("kind", choices=("disc", "annulus"))
    sp.add_argument("--points", type=int)
    sp.add_argument("--p", type=int)
    sp.add_argument("--q", type=int)

    qg = groups.add_parser("quiver", help="medial quivers and mutation").add_subparsers(dest="cmd", required=True, parser_class=ArgParser)
    sp = leaf(qg, "build", cmd_quiver_build, (fmt, outp))
    sp.add_argument("file")
    sp = leaf(qg, "mutate", cmd_quiver_mutate, (fmt, outp))
    sp.add_argument("file")
    sp.add_argument("--vertex", required=True)
    leaf(qg, "matrix", cmd_quiver_matrix).add_argument("file")

    ag = groups.add_parser("algebra", help="gentle, tilted and cluster-tilted checks").add_subparsers(dest="cmd", required=True, parser_class=ArgParser)
    leaf(ag, "check-gentle", cmd_algebra_check_gentle).add_argument("file")
    leaf(ag, "classify", cmd_algebra_classify).add_argument("file")
    sp = leaf(ag, "relext", cmd_algebra_relext, (fmt, outp))
    sp.add_argument("file")
    sp = leaf(ag, "reconstruct", cmd_algebra_reconstruct, (fmt, outp))
    sp.add_argument("file")

    mg = groups.add_parser("modules", help="strings, bands, resolutions, growth").add_subparsers(dest="cmd", required=True, parser_class=ArgParser)
    for name, func in (("strings", cmd_modules_strings), ("bands", cmd_modules_bands), ("growth", cmd_modules_growth)):
        sp = leaf(mg, name, func)
        sp.add_argument("file")
        sp.add_argument("--max-len", type=int, required=True)
        if name != "strings":
            sp.add_argument("--rotation-only", action="store_true")
    leaf(mg, "gorenstein", cmd_modules_gorenstein).add_argument("file")

    cg = groups.add_parser("curves", help="curves versus strings").add_subparsers(dest="cmd", required=True, parser_class=ArgParser)
    sp = leaf(cg, "from-string", cmd_curves_from_string)
    sp.add_argument("triangulation")
    sp.add_argument("--word", required=True)
    sp = leaf(cg, "to-string", cmd_curves_to_string)
    sp.add_argument("triangulation")
    sp.add_argument("--crossings", required=True, help="comma-separated internal arc ids")
    sp.add_argument("--from", dest="start", type=int, required=True, help="start marked point")
    sp.add_argument("--to", dest="end", type=int, required=True, help="end marked point")
    sp.add_argument("--triangles", help="comma-separated triangle indices T0..Ts+1 (optional)")
    sp = leaf(cg, "band", cmd_curves_band)
    sp.add_argument("triangulation")
    sp.add_argument("--word", required=True)
    sp.add_argument("--power", type=int, default=1)

    sp = groups.add_parser("selftest", parents=[fmt], help="run the worked examples and random cases")
    sp.add_argument("--seed", type=int, default=1)
    sp.add_argument("--cases", type=int, default=25)
    sp.set_defaults(func=cmd_selftest)
    return p


def _flat(v: Any) -> bool:
    """Scalars, and lists or dicts of scalars or scalar lists, fit on one line."""
    if isinstance(v, dict):
        return all(_flat(x) and not isinstance(x, (dict, list)) for x in v.values())
    if isinstance(v, list):
        return all(not isinstance(x, dict) and (not isinstance(x, list) or all(not isinstance(y, (dict, list)) for y in x)) for x in v)
    return True


def _plain(data: Any, prefix: str = "") -> list[str]:
    if isinstance(data, dict):
        lines = []
        for k in sorted(data, key=str):
            v = data[k]
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines += _plain(v, f"{prefix}{k}.")
            else:
                lines.append(f"{prefix}{k}: {json.dumps(v, sort_keys=True)}")
        return lines
    if isinstance(data, list):
        lines = []
        for i, v in enumerate(data):
            if isinstance(v, dict) and "ok" in v and "name" in v:
                lines.append(f"{'PASS' if v['ok'] else 'FAIL'} {v['name']}" + (f"  ({v['detail']})" if v.get("detail") else ""))
            elif isinstance(v, dict) and "word" in v:
                extra = " ".join(f"{k}={json.dumps(v[k], sort_keys=True)}" for k in sorted(v) if k != "word")
                lines.append(f"{prefix}{i}: {v['word']}  {extra}".rstrip())
            else:
                lines += _plain(v, f"{prefix}{i}.") if isinstance(v, (dict, list)) else [f"{prefix}{i}: {v}"]
        return lines
    return [f"{prefix.rstrip('.')}: {data}"]


def render(data: dict, fmt: str) -> str:
    if fmt == "plain":
        return "\n".join(_plain(data)) + "\n"
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        data = args.func(args)
    except UsageError as exc:
        print(f"gentlesurf: usage error: {exc}", file=sys.stderr)
        return 2
    except GentleSurfError as exc:
        kind = type(exc).__name__
        sys.stdout.write(render({"error": kind, "message": str(exc)}, getattr(args, "format", "json")))
        print(f"gentlesurf: {kind}: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(render(data, args.format))
    if args.func is cmd_selftest:
        print(f"selftest: {data['passed']}/{data['total']} checks passed", file=sys.stderr)
        return 0 if data["ok"] else 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
