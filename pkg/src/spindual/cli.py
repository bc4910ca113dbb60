"""Command-line interface.

Subcommands: classify, table, enumerate, rewrite, orbit, verify-chain.
Parameters come from ``--pairs "x1,..;y1,.."`` with ``--group``, from a JSON
document (``--file`` or stdin) with fields {group, rank, mu, nu} or
{group, pairs: {x: [...], y: [...]}}, or from explicit ``--mu/--nu`` lists.
Rationals are serialized as strings like "3/2" to keep output exact.

Exit codes: 0 unitary, 3 non-unitary (or module error), 4 not Hermitian or
not genuine, 2 parse error.
"""

import argparse
import json
import sys

from .halfint import frac, fmt
from .weyl import GenuineParam, GroupTag, to_langlands, DimensionError
from .spinclass import (
    MalformedParameter, Status, StringPairs, Verdict, classify,
    enumerate_pairs, pairs_to_param, unitarity_test,
)
from . import intertwine, orbits, rewriter


class ParseError(ValueError):
    pass


def _parse_pairs(text: str, family: str) -> StringPairs:
    try:
        xs_text, ys_text = text.split(";")
        xs = [int(t) for t in xs_text.replace(" ", ",").split(",") if t.strip()]
        ys = [int(t) for t in ys_text.replace(" ", ",").split(",") if t.strip()]
    except ValueError as exc:
        raise ParseError(f"cannot parse pairs {text!r}: {exc}") from None
    if len(xs) != len(ys):
        raise ParseError("x-row and y-row have different lengths")
    try:
        return StringPairs(family, tuple(zip(xs, ys)))
    except MalformedParameter as exc:
        raise ParseError(str(exc)) from None


def _param_from_document(doc: dict) -> GenuineParam:
    try:
        family = doc["group"]
        if "pairs" in doc:
            xs = doc["pairs"]["x"]
            ys = doc["pairs"]["y"]
            pairs = StringPairs(family, tuple(zip(xs, ys)))
            return pairs_to_param(pairs)
        mu = [frac(s) for s in doc["mu"]]
        nu = [frac(s) for s in doc["nu"]]
        rank = int(doc.get("rank", len(mu)))
        return GenuineParam(GroupTag(family, rank), tuple(mu), tuple(nu))
    except ParseError:
        raise
    except (KeyError, ValueError, TypeError, DimensionError, MalformedParameter) as exc:
        raise ParseError(f"invalid parameter document: {exc}") from None


def _load_document(args) -> GenuineParam:
    if args.pairs:
        pairs = _parse_pairs(args.pairs, args.group)
        return pairs_to_param(pairs)
    if args.mu or args.nu:
        if not (args.mu and args.nu):
            raise ParseError("--mu and --nu must be given together")
        try:
            mu = [frac(s) for s in args.mu.split(",")]
            nu = [frac(s) for s in args.nu.split(",")]
            if len(mu) != len(nu):
                raise ParseError("mu and nu have different lengths")
            rank = args.rank or len(mu)
            return GenuineParam(GroupTag(args.group, rank), tuple(mu), tuple(nu))
        except (DimensionError, ValueError) as exc:
            raise ParseError(str(exc)) from None
    text = open(args.file).read() if args.file else sys.stdin.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at position {exc.pos}: {exc.msg}") from None
    return _param_from_document(doc)


def _verdict_document(p: GenuineParam, verdict: Verdict) -> dict:
    lp = to_langlands(p)
    doc = {
        "status": verdict.status.value,
        "langlands": {
            "lambda_L": [fmt(v) for v in lp.lambda_l],
            "lambda_R": [fmt(v) for v in lp.lambda_r],
        },
        "transcript": list(verdict.chain),
    }
    if verdict.witness is not None:
        doc["witness"] = {
            "eta_index": verdict.witness.q,
            "weight": [fmt(v) for v in verdict.witness.weight],
        }
    if verdict.certificate is not None:
        cert = verdict.certificate
        doc["certificate"] = {
            "stein_sizes": [f.a for f in cert.stein_factors],
            "gl_factors": [
                {"class": label, "kind": type(f).__name__, "size": f.a}
                for label, f in cert.gl_factors
            ],
            "core": str(cert.core) if cert.core else None,
            "orbit_columns": list(cert.orbit.cols) if cert.orbit else None,
            "orbit_dimension": orbits.orbit_dim(cert.orbit) if cert.orbit else None,
        }
    if verdict.normalized is not None:
        doc["inductions"] = [s.label for s in verdict.normalized.steps]
    return doc


def cmd_classify(args) -> int:
    p = _load_document(args)
    verdict = classify(p)
    doc = _verdict_document(p, verdict)
    if args.json:
        print(json.dumps(doc, indent=2))
    else:
        print(f"parameter: {p}")
        print(f"status: {doc['status']}")
        if "witness" in doc:
            w = doc["witness"]
            eta = f"eta({w['eta_index']})" if w["eta_index"] is not None else "lifted"
            print(f"witness: {eta} weight ({', '.join(w['weight'])})")
        if "certificate" in doc:
            cert = doc["certificate"]
            print(f"stein factor sizes: {cert['stein_sizes']}")
            if cert["core"]:
                print(f"core: {cert['core']}  orbit: {cert['orbit_columns']} "
                      f"dim {cert['orbit_dimension']}")
        for line in doc["transcript"]:
            print(f"  | {line}")
    if verdict.status is Status.UNITARY:
        return 0
    if verdict.status is Status.NON_UNITARY:
        return 3
    return 4


def _row_for(pairs: StringPairs):
    p = pairs_to_param(pairs)
    verdict = classify(p)
    lp = to_langlands(p)
    test = unitarity_test(pairs)
    if verdict.status is Status.UNITARY:
        tag = "Yes - unipotent" if test.strict else "Yes"
        witness = ""
    else:
        q = verdict.witness.q if verdict.witness else None
        tag = "No"
        witness = f"eta({q})" if q is not None else "?"
    return {
        "pairs": str(pairs),
        "lambda_L": [fmt(v) for v in lp.lambda_l],
        "lambda_R": [fmt(v) for v in lp.lambda_r],
        "verdict": tag,
        "witness": witness,
    }


def cmd_table(args) -> int:
    rows = [_row_for(pairs) for pairs in enumerate_pairs(args.group, args.rank)]
    if args.json:
        print(json.dumps(rows, indent=2))
        return 0
    width = max(len(r["pairs"]) for r in rows) + 2
    for r in rows:
        lam = "L=(" + ",".join(r["lambda_L"]) + ") R=(" + ",".join(r["lambda_R"]) + ")"
        witness = f"  {r['witness']}" if r["witness"] else ""
        print(f"{r['pairs']:<{width}} {r['verdict']:<16}{witness}  {lam}")
    return 0


def cmd_enumerate(args) -> int:
    for pairs in enumerate_pairs(args.group, args.rank):
        print(pairs)
    return 0


def cmd_rewrite(args) -> int:
    pairs = _parse_pairs(args.pairs, args.group)
    steps, final = rewriter.full_staircase(pairs)
    if args.json:
        print(json.dumps({
            "sizes": [s.label for s in steps],
            "steps": [str(s) for s in steps],
            "final": str(final),
        }, indent=2))
        return 0
    for s in steps:
        print(s)
    print(f"induced sizes: {', '.join(str(s.label) for s in steps)}")
    print(f"final: {final}")
    return 0


def cmd_orbit(args) -> int:
    pairs = _parse_pairs(args.pairs, args.group)
    try:
        orbit = orbits.attach_orbit(pairs)
    except orbits.NotStrictCore as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    dim = orbits.orbit_dim(orbit)
    doc = {
        "columns": list(orbit.cols),
        "ambient": orbit.ambient,
        "dimension": dim,
        "nilcone_dimension": orbits.nilcone_dim(orbit.ambient),
    }
    if pairs.family == "D":
        doc["codimension_identity"] = orbits.codim_identity_holds(pairs)
    if args.json:
        print(json.dumps(doc, indent=2))
    else:
        print(f"orbit {orbit} of dimension {dim}")
        if "codimension_identity" in doc:
            print(f"codimension identity holds: {doc['codimension_identity']}")
    return 0


def cmd_verify_chain(args) -> int:
    pairs = _parse_pairs(args.pairs, args.group)
    try:
        parts = intertwine.build_case_script(args.group, pairs.pairs)
    except intertwine.ScriptError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    out = []
    all_ok = True
    for name, start, script in parts:
        reports = intertwine.verify_chain(script, start)
        for rep in reports:
            all_ok &= rep.ok
        out.append((name, start, reports))
    if args.json:
        print(json.dumps([
            {
                "part": name,
                "start": [str(e) for e in start],
                "steps": [
                    {
                        "move": rep.description,
                        "well_defined": rep.well_defined,
                        "injective": rep.injective,
                        "scalar": fmt(rep.scalar) if rep.scalar is not None else None,
                        "reason": rep.reason,
                    }
                    for rep in reports
                ],
            }
            for name, start, reports in out
        ], indent=2))
    else:
        for name, start, reports in out:
            print(f"[{name}] start: " + " ".join(str(e) for e in start))
            for rep in reports:
                mark = "ok" if rep.ok else "FAIL"
                scalar = f"  scalar {fmt(rep.scalar)}" if rep.scalar is not None else ""
                reason = f"  ({rep.reason})" if rep.reason else ""
                print(f"  {mark:<5} {rep.description}{scalar}{reason}")
        print("all steps OK" if all_ok else "some steps are not certified")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spindual",
        description="Unitarity of genuine representations of complex spin groups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, pairs_only=False):
        sp.add_argument("--group", choices=("B", "D"), default="D")
        sp.add_argument("--json", action="store_true")
        sp.add_argument("--pairs", help='string pairs "x1,..;y1,.."')
        if not pairs_only:
            sp.add_argument("--mu", help="comma-separated rationals")
            sp.add_argument("--nu", help="comma-separated rationals")
            sp.add_argument("--rank", type=int)
            sp.add_argument("--file", help="JSON parameter document")

    sp = sub.add_parser("classify", help="classify one parameter")
    common(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("table", help="classification table for all pairs of a size")
    sp.add_argument("--group", choices=("B", "D"), default="D")
    sp.add_argument("--rank", type=int, required=True, help="total size n of the pairs")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("enumerate", help="list all string pairs of a size")
    sp.add_argument("--group", choices=("B", "D"), default="D")
    sp.add_argument("--rank", type=int, required=True)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("rewrite", help="staircase rewriting transcript")
    common(sp, pairs_only=True)
    sp.set_defaults(func=cmd_rewrite)

    sp = sub.add_parser("orbit", help="attached nilpotent orbit of a strict core")
    common(sp, pairs_only=True)
    sp.set_defaults(func=cmd_orbit)

    sp = sub.add_parser("verify-chain", help="replay a built-in reduction script")
    common(sp, pairs_only=True)
    sp.set_defaults(func=cmd_verify_chain)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (MalformedParameter, DimensionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
