"""Command-line entry point.

Exit status: 0 on success, 1 when a subdivision or identity fails to verify
(with a JSON diagnostic on stdout), 2 on usage, parse or I/O errors.
"""

from __future__ import annotations

import argparse
import sys

from .catalog import (
    VALUATION_NAMES,
    activity_table_tsv,
    generate_u_a_ab,
    interior_face_tsv,
    octahedron_subdivision,
    single_value,
    subdivision_report,
    table2_report,
    u36_subdivision,
    valuation_table,
    value_to_json,
)
from .errors import ElementOutOfRange, MatroidValuationError
from .geometry import enumerate_faces, matroid_polytope_h, matroid_polytope_vertices, normalized_volume
from .matroid import from_mask, schubert, to_mask, uniform
from .serialization import dumps, load_matroid, load_subdivision
from .subdivision import valuation_check
from .valuations import dual_mode, rank_indicator, tutte

OK, FAILED, USAGE = 0, 1, 2


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="matroid-valuations",
                                description="Matroid polytope subdivisions and their valuations.")
    sub = p.add_subparsers(dest="command", required=True)

    m = sub.add_parser("matroid", help="build or inspect a single matroid")
    msub = m.add_subparsers(dest="action", required=True)
    new = msub.add_parser("new", help="print a matroid as JSON")
    how = new.add_mutually_exclusive_group(required=True)
    how.add_argument("--uniform", nargs=2, type=int, metavar=("K", "N"))
    how.add_argument("--schubert", nargs=2, metavar=("N", "S1,S2,..."))
    how.add_argument("--from", dest="from_file", metavar="FILE")
    rank = msub.add_parser("rank", help="rank of every subset")
    rank.add_argument("file")
    rank.add_argument("--subset", type=_int_list, help="only this subset, e.g. 1,3")
    msub.add_parser("activities", help="external and internal activity of every basis").add_argument("file")
    tp = msub.add_parser("tutte", help="Tutte polynomial")
    tp.add_argument("file")
    tp.add_argument("--method", choices=("corank-nullity", "activities", "both"), default="both")
    poly = msub.add_parser("polytope", help="vertices, facets, f-vector and volume")
    poly.add_argument("file")

    s = sub.add_parser("subdivision", help="validate or inspect a subdivision")
    ssub = s.add_subparsers(dest="action", required=True)
    ssub.add_parser("validate").add_argument("file")
    ssub.add_parser("lattice", help="interior faces as TSV").add_argument("file")

    v = sub.add_parser("valuate", help="evaluate a function on one matroid")
    v.add_argument("--f", required=True, choices=VALUATION_NAMES)
    v.add_argument("file")

    ver = sub.add_parser("verify", help="check both valuation identities on a subdivision")
    ver.add_argument("--f", required=True, choices=VALUATION_NAMES + ("all",))
    ver.add_argument("file")

    r = sub.add_parser("reproduce", help="rebuild a worked example")
    r.add_argument("target", choices=("octahedron", "u36", "table1", "table2"))

    g = sub.add_parser("generate", help="generate a named subdivision family")
    g.add_argument("family", choices=("u-a-ab",))
    g.add_argument("a", type=int)
    g.add_argument("b", type=int)
    return p


def _emit(obj) -> None:
    sys.stdout.write(dumps(obj) + "\n")


def _matroid_cmd(args) -> int:
    if args.action == "new":
        if args.uniform:
            M = uniform(*args.uniform)
        elif args.schubert:
            n, seq = args.schubert
            M = schubert(int(n), _int_list(seq))
        else:
            M = load_matroid(args.from_file)
        _emit(M.to_json())
        return OK
    M = load_matroid(args.file)
    meta = {"n": M.n, "dual_mode": dual_mode(M.n)}
    if args.action == "rank":
        masks = range(1 << M.n)
        if args.subset is not None:
            bad = [a for a in args.subset if not 1 <= a <= M.n]
            if bad:
                raise ElementOutOfRange(f"element {bad[0]} is outside 1..{M.n}")
            masks = [to_mask(args.subset)]
        ranks = []
        for mask in masks:
            A = from_mask(mask)
            r = M.rank_of_mask(mask)
            rank_indicator(M, A, r)
            ranks.append({"subset": list(A), "rank": r})
        _emit({"meta": meta, "ranks": ranks})
    elif args.action == "activities":
        _emit({"meta": meta, "value": value_to_json(single_value(M, "activities"))})
    elif args.action == "tutte":
        out = {"meta": meta}
        methods = ("corank-nullity", "activities") if args.method == "both" else (args.method,)
        values = {m: tutte(M, m) for m in methods}
        out["value"] = values[methods[0]].to_json()
        if len(values) == 2:
            out["methods_agree"] = values["corank-nullity"] == values["activities"]
            if not out["methods_agree"]:
                out["activities_value"] = values["activities"].to_json()
                _emit(out)
                return FAILED
        _emit(out)
    elif args.action == "polytope":
        P = matroid_polytope_vertices(M)
        lattice = enumerate_faces(P)
        _emit({"meta": meta,
               "vertices": [list(b) for b in M.bases],
               "h_description": matroid_polytope_h(M).to_json(),
               "dim": lattice.dim,
               "f_vector": lattice.f_vector(),
               "normalized_volume": value_to_json(normalized_volume(P))})
    return OK


def _verify(S, names) -> tuple[dict, bool]:
    S = S.validate()
    if not S.validated:
        return {"validation": S.report.to_json(), "verified": False}, False
    table = valuation_table(S.dim)
    results = {}
    ok = True
    for name in names:
        c = valuation_check(table[name], S)
        entry = {"alternating_sum_zero": c["alternating_ok"],
                 "interior_face_sum_equals_f": c["interior_ok"]}
        if not (c["alternating_ok"] and c["interior_ok"]):
            entry["alternating_sum"] = value_to_json(c["alternating_sum"])
            entry["interior_face_sum"] = value_to_json(c["interior_face_sum"])
            entry["f_ambient"] = value_to_json(c["f_ambient"])
            ok = False
        results[name] = entry
    return {"validation": S.report.to_json(), "valuations": results, "verified": ok}, ok


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return _dispatch(args)
    except (MatroidValuationError, OSError) as exc:
        if isinstance(exc, AssertionError):
            raise
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return USAGE


def _dispatch(args) -> int:
    if args.command == "matroid":
        return _matroid_cmd(args)
    if args.command == "subdivision":
        S = load_subdivision(args.file).validate()
        if args.action == "validate":
            _emit(S.report.to_json())
            return OK if S.validated else FAILED
        if not S.validated:
            _emit(S.report.to_json())
            return FAILED
        sys.stdout.write(interior_face_tsv(S))
        return OK
    if args.command == "valuate":
        M = load_matroid(args.file)
        _emit({"meta": {"n": M.n, "dual_mode": dual_mode(M.n)}, "f": args.f,
               "value": value_to_json(single_value(M, args.f))})
        return OK
    if args.command == "verify":
        names = VALUATION_NAMES if args.f == "all" else (args.f,)
        report, ok = _verify(load_subdivision(args.file), names)
        _emit(report)
        return OK if ok else FAILED
    if args.command == "reproduce":
        if args.target == "table1":
            S = u36_subdivision().validate()
            sys.stdout.write(activity_table_tsv(S))
            return OK
        if args.target == "table2":
            report = table2_report()
        else:
            S = octahedron_subdivision() if args.target == "octahedron" else u36_subdivision()
            report = subdivision_report(S)
        _emit(report)
        return OK if report["verified"] else FAILED
    if args.command == "generate":
        _emit(generate_u_a_ab(args.a, args.b).to_json())
        return OK
    raise AssertionError(f"unhandled command {args.command}")


def main() -> None:
    sys.exit(run())
