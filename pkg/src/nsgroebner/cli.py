"""Command-line front end.

    nsgroebner analyze 5,7 [--json]
    nsgroebner member 5,7 13
    nsgroebner gb 7,9,11
    nsgroebner staircase 7,9,11 --out plot.json
    nsgroebner bounds 5,6,11 | --file rows.txt | --paper-tables [--alpha N]
    nsgroebner selftest [--seed N] [--cases N]

Exit codes: 0 ok / member, 1 gap (member only), 2 bad input, 3 resource
limit, 4 I/O error, 5 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import List, Optional

from . import bounds, groebner, selftest, semigroup, staircase
from .monomials import format_monomial

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_GAP = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3
EXIT_IO = 4
EXIT_INTERNAL = 5


class InputError(Exception):
    pass


class ConsistencyError(Exception):
    pass


def parse_generators(text: str) -> semigroup.SemigroupSpec:
    parts = [p.strip() for p in text.split(",")]
    if not parts or any(not p for p in parts):
        raise InputError(f"cannot parse generator list {text!r}: expected comma-separated integers")
    try:
        values = [int(p, 10) for p in parts]
    except ValueError:
        raise InputError(f"cannot parse generator list {text!r}: expected comma-separated integers")
    try:
        return semigroup.normalize(values)
    except semigroup.SemigroupError as exc:
        raise InputError(str(exc))


def read_batch(path: str) -> List[semigroup.SemigroupSpec]:
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    specs = []
    for line in lines:
        line = line.split("#", 1)[0].strip()
        if line:
            specs.append(parse_generators(line))
    return specs


def document(command: str, spec, payload) -> dict:
    gens = list(spec.generators) if spec is not None else None
    return {"schema_version": SCHEMA_VERSION, "command": command, "spec": gens, "payload": payload}


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _frac(x: Optional[Fraction]):
    if x is None:
        return None
    return str(x)


# ---------- payload builders ----------


def analyze_payload(S) -> dict:
    inv = semigroup.invariants(S)
    wilf = semigroup.wilf_check(S)
    return {
        "frobenius": inv.frobenius,
        "genus": inv.genus,
        "conductor": inv.conductor,
        "multiplicity": inv.multiplicity,
        "embedding_dimension": inv.embedding_dimension,
        "minimal_generators": list(semigroup.minimal_generators(S).generators),
        "gaps": list(inv.gaps),
        "sporadic": list(inv.sporadic),
        "sporadic_count_with_zero": inv.sporadic_count_with_zero,
        "sporadic_count_without_zero": inv.sporadic_count_without_zero,
        "wilf": {"conductor": wilf.conductor, "e": wilf.e, "n": wilf.n_with_zero, "holds": wilf.holds},
    }


def member_payload(S, N: int, max_pairs: int) -> dict:
    B = groebner.buchberger(S, max_pairs=max_pairs)
    cert = staircase.certify(B, N)
    oracle = semigroup.is_member(S, N)
    if oracle != cert.member:
        raise ConsistencyError(f"Groebner verdict {cert.member} disagrees with oracle {oracle} for N = {N}")
    return {
        "n": N,
        "member": cert.member,
        "certificate": list(cert.certificate),
        "normal_form": format_monomial(cert.certificate),
        "decomposition": cert.decomposition(S.generators),
        "oracle_agrees": True,
    }


def groebner_payload(S, max_pairs: int) -> dict:
    B = groebner.buchberger(S, max_pairs=max_pairs)
    model = staircase.build_staircase(B)
    return {
        "order": "lex x > y1 > ... > yk",
        "size": len(B),
        "binomials": [str(b) for b in B.elements],
        "elements": [{"lead": list(b.lead), "tail": list(b.tail)} for b in B.elements],
        "corners": [list(q) for q in model.corners],
        "pairs_processed": B.pairs_processed,
    }


def staircase_document(S, max_pairs: int) -> dict:
    B = groebner.buchberger(S, max_pairs=max_pairs)
    model = staircase.build_staircase(B)
    inv = semigroup.invariants(S)
    levels = staircase.gap_points_by_level(model)
    elements = staircase.element_points(model, inv.conductor)
    gens = S.generators
    return {
        "schema_version": SCHEMA_VERSION,
        "generators": list(gens),
        "corners": [list(q) for q in model.corners],
        "gap_points": {str(lvl): [list(p) for p in pts] for lvl, pts in levels.items()},
        "element_points": [list(p) for p in elements],
        "gap_values": staircase.gaps_via_staircase(model),
        "element_values": staircase.elements_via_staircase(model, inv.conductor),
        "ceiling_level": staircase.ceiling_level(model),
        "corner_slices": {
            str(lvl): [list(q) for q in staircase.corner_slice(model, lvl)]
            for lvl in sorted({q[0] for q in model.corners})
        },
    }


def report_payload(rep: bounds.BoundReport) -> dict:
    return {
        "generators": list(rep.spec.generators),
        "frobenius": rep.frobenius,
        "n_with_zero": rep.n_true_with_zero,
        "n_without_zero": rep.n_true_without_zero,
        "gly_bound": rep.gly_bound,
        "gly_bound_exact": _frac(rep.gly_bound_exact),
        "prism_pyramid_bound": rep.prism_pyramid_bound,
        "simple_corollary_bound": rep.simple_corollary_bound,
        "ratio": _frac(rep.ratio),
    }


def alpha_payload(rep: bounds.AlphaReport) -> dict:
    return {
        "alpha": rep.alpha,
        "regime": rep.regime,
        "n_true": rep.n_true,
        "prism_pyramid": rep.prism_pyramid,
        "simple_corollary": rep.simple_corollary,
    }


def published_tables_payload() -> dict:
    rows = []
    for chk in bounds.check_published_tables():
        row = report_payload(chk.report)
        row.update(
            printed_generators=list(chk.printed.generators),
            printed_frobenius=chk.printed.frobenius,
            printed_n=chk.printed.n,
            printed_bound=chk.printed.bound,
            status=chk.status,
            duplicate_of=chk.duplicate_of,
        )
        rows.append(row)
    return {
        "rows": rows,
        "bound_matches": sum(r["gly_bound"] == r["printed_bound"] for r in rows),
        "total": len(rows),
    }


# ---------- text rendering ----------


def _text_analyze(S, p):
    lines = [
        f"S = {S}",
        f"Frobenius number f(S) = {p['frobenius']}",
        f"genus g(S) = {p['genus']}",
        f"conductor c(S) = {p['conductor']}",
        f"multiplicity m(S) = {p['multiplicity']}",
        f"embedding dimension e(S) = {p['embedding_dimension']}",
        f"gaps = {p['gaps']}",
        f"sporadic elements = {p['sporadic']}",
        f"n(S) = {p['sporadic_count_with_zero']} with 0, {p['sporadic_count_without_zero']} without",
        f"Wilf c <= e*n: {p['wilf']['conductor']} <= {p['wilf']['e']}*{p['wilf']['n']} "
        + ("holds" if p["wilf"]["holds"] else "FAILS"),
    ]
    return "\n".join(lines)


def _text_member(S, p):
    verdict = "member" if p["member"] else "gap"
    return (
        f"{p['n']} is a {verdict} of {S}\n"
        f"normal form of x^{p['n']}: {p['normal_form']}  exponents {tuple(p['certificate'])}\n"
        f"{p['decomposition']}\n"
        f"oracle agrees: yes"
    )


def _text_groebner(S, p):
    lines = [f"reduced Groebner basis of <y_i - x^a_i> for {S}, lex x > y1 > ... > yk ({p['size']} elements)"]
    lines += [f"  {b}" for b in p["binomials"]]
    lines.append("corners:")
    lines += [f"  q{i} = {tuple(q)}" for i, q in enumerate(p["corners"], 1)]
    return "\n".join(lines)


def _text_report(p):
    s = (
        f"{'{' + ','.join(map(str, p['generators'])) + '}':<24} f={p['frobenius']:<5} "
        f"n={p['n_with_zero']}/{p['n_without_zero']:<4} gly={p['gly_bound']:<5} "
        f"prism/pyramid={p['prism_pyramid_bound']} simple={p['simple_corollary_bound']}"
    )
    if "alpha" in p:
        a = p["alpha"]
        s += (
            f"\n  alpha={a['alpha']} ({a['regime']}): n(S,alpha)={a['n_true']} "
            f"prism/pyramid={a['prism_pyramid']}"
        )
        if a["simple_corollary"] is not None:
            s += f" simple={a['simple_corollary']}"
    return s


def _text_tables(p):
    lines = ["generators                 f(S) printed/true   n(S) printed/true   bound printed/true   status"]
    for r in p["rows"]:
        g = "{" + ",".join(map(str, r["printed_generators"])) + "}"
        note = r["status"] + (f" (duplicate of row {r['duplicate_of'] + 1})" if r["duplicate_of"] is not None else "")
        lines.append(
            f"{g:<26} {r['printed_frobenius']:>5}/{r['frobenius']:<12} {r['printed_n']:>5}/{r['n_without_zero']:<12} "
            f"{r['printed_bound']:>5}/{r['gly_bound']:<12} {note}"
        )
    lines.append(f"bound column matches: {p['bound_matches']}/{p['total']}")
    return "\n".join(lines)


# ---------- commands ----------


def _emit(args, doc, text):
    sys.stdout.write(dumps(doc) if args.json else text + "\n")


def cmd_analyze(args):
    S = parse_generators(args.generators)
    p = analyze_payload(S)
    _emit(args, document("analyze", S, p), _text_analyze(S, p))
    return EXIT_OK


def cmd_member(args):
    S = parse_generators(args.generators)
    if args.n < 0:
        raise InputError("N must be nonnegative")
    p = member_payload(S, args.n, args.max_pairs)
    _emit(args, document("member", S, p), _text_member(S, p))
    return EXIT_OK if p["member"] else EXIT_GAP


def cmd_groebner(args):
    S = parse_generators(args.generators)
    p = groebner_payload(S, args.max_pairs)
    _emit(args, document("gb", S, p), _text_groebner(S, p))
    return EXIT_OK


def cmd_staircase(args):
    S = parse_generators(args.generators)
    doc = staircase_document(S, args.max_pairs)
    text = dumps(doc)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_bounds(args):
    if args.paper_tables:
        p = published_tables_payload()
        _emit(args, document("bounds", None, p), _text_tables(p))
        return EXIT_OK
    if args.file:
        specs = read_batch(args.file)
    elif args.generators:
        specs = [parse_generators(args.generators)]
    else:
        raise InputError("bounds needs generators, --file or --paper-tables")
    for S in specs:
        if S.k < 2:
            raise InputError(f"bounds need at least two generators, got {S}")

    def one(S):
        p = report_payload(bounds.bound_report(S))
        if args.alpha is not None:
            if args.alpha < 0:
                raise InputError("--alpha must be nonnegative")
            p["alpha"] = alpha_payload(bounds.alpha_report(S, args.alpha))
        return p

    with ThreadPoolExecutor() as pool:
        rows = list(pool.map(one, specs))
    if len(specs) == 1:
        doc = document("bounds", specs[0], rows[0])
    else:
        doc = document("bounds", None, {"rows": rows})
    _emit(args, doc, "\n".join(_text_report(r) for r in rows))
    return EXIT_OK


def cmd_selftest(args):
    def show(res):
        mark = "PASS" if res.passed else "FAIL"
        print(f"{mark} {res.name}" + (f": {res.detail}" if res.detail else ""))

    results = selftest.run(seed=args.seed, cases=args.cases, progress=show)
    failed = [r for r in results if not r.passed]
    if failed:
        print(f"first failing property: {failed[0].name}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nsgroebner",
        description="Numerical semigroup invariants via binomial Groebner bases.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, json_flag=True, pairs=False):
        p.add_argument("generators", help="comma-separated generators, e.g. 5,7")
        if json_flag:
            p.add_argument("--json", action="store_true", help="emit a JSON document")
        if pairs:
            p.add_argument("--max-pairs", type=int, default=groebner.DEFAULT_MAX_PAIRS)

    p = sub.add_parser("analyze", help="invariants of a semigroup")
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("member", help="membership with a normal-form certificate")
    common(p, pairs=True)
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("gb", aliases=["groebner"], help="reduced Groebner basis and corners")
    common(p, pairs=True)
    p.set_defaults(func=cmd_groebner)

    p = sub.add_parser("staircase", help="plot data for the staircase")
    common(p, json_flag=False, pairs=True)
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_staircase)

    p = sub.add_parser("bounds", help="upper bounds on n(S) and n(S, alpha)")
    p.add_argument("generators", nargs="?")
    p.add_argument("--file", metavar="PATH", help="batch file, one generator list per line")
    p.add_argument("--alpha", type=int)
    p.add_argument("--paper-tables", action="store_true", help="check the built-in printed table rows")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("selftest", help="randomized consistency sweeps")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=40)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except groebner.ResourceLimit as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ConsistencyError as exc:
        print(f"consistency failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
