"""Command line front end.

Exit codes: 0 success / verified, 1 a mathematical check failed,
2 input or usage error.
"""
from __future__ import annotations

import argparse
import sys
from typing import List, Optional

import mpmath

from . import basis, counting, lie2
from .free_algebra import Alphabet
from .rewriting import RelationSet, complete, interreduce, reduce, verify_gsb

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {v}")
    return v


def _nonnegative(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {v}")
    return v


def _load_pair(path: str) -> lie2.LiePair:
    try:
        return lie2.load_lie_pair(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except (lie2.LiePairFormatError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _presentation_for(args) -> RelationSet:
    """Relation set named by --dim (closed form for the abelian pair) or by
    --file (transformed presentation of the given pair)."""
    if args.file:
        g = _load_pair(args.file)
        report = lie2.validate_lie_pair(g)
        if not report:
            raise InputError("; ".join(report.lines()))
        p = lie2.transform_to_fF(lie2.build_presentation_original(g))
        return RelationSet(p.alphabet, interreduce(p.alphabet, p.relations))
    p = lie2.gsb_relations_g0(args.dim)
    omit = set()
    if getattr(args, "omit", None):
        try:
            omit = {f"({int(x)})" for x in args.omit.split(",") if x.strip()}
        except ValueError:
            raise InputError(f"--omit expects family numbers like 4,5, got {args.omit!r}") from None
        bad = omit - {"(1)", "(2)", "(3)", "(4)", "(5)"}
        if bad:
            raise InputError(f"unknown relation families: {sorted(bad)}")
    keep = [(r, lab) for r, lab in zip(p.relations, p.labels) if lab not in omit]
    return RelationSet(p.alphabet, [r for r, _ in keep], [lab for _, lab in keep])


def cmd_validate(args, out) -> int:
    g = _load_pair(args.file)
    report = lie2.validate_lie_pair(g)
    for line in report.lines():
        print(line, file=out)
    return EXIT_OK if report else EXIT_FAILED


def cmd_verify_gsb(args, out) -> int:
    S = _presentation_for(args)
    A = S.alphabet
    report = verify_gsb(S)
    n = len(report.checks)
    print(f"{len(S)} relations, {n} compositions", file=out)
    if not args.quiet:
        for c in report.checks:
            comp = c.composition
            verdict = "trivial" if c.trivial else "NON-TRIVIAL"
            print(f"  {comp.kind} ({comp.left},{comp.right}) w = {A.format_word(comp.word)}: "
                  f"{verdict} after {len(c.trail)} steps", file=out)
    if report.all_trivial:
        print(f"all {n} compositions trivial", file=out)
        return EXIT_OK
    seen = []
    for c in report.failures:
        nf = c.normal_form.make_monic()
        if nf not in seen:
            seen.append(nf)
    print(f"{len(report.failures)} non-trivial compositions; distinct monic normal forms:", file=out)
    for nf in seen:
        print(f"  {nf}", file=out)
    return EXIT_FAILED


def cmd_complete(args, out) -> int:
    S = _presentation_for(args)
    G, saturated = complete(S, args.max_degree)
    for r in G:
        print(r, file=out)
    print(f"{len(G)} relations; {'saturated' if saturated else 'NOT saturated'}", file=out)
    return EXIT_OK


def cmd_basis(args, out) -> int:
    d, n = args.dim, args.degree
    A = Alphabet(d)
    if args.mode == "pattern":
        out.write(basis.format_word_list(basis.enumerate_pattern(d, n), A))
        return EXIT_OK
    S = lie2.gsb_relations_g0(d).relation_set()
    irr = basis.enumerate_irreducible(S, n)
    if args.mode == "irreducible":
        out.write(basis.format_word_list(irr, A))
        return EXIT_OK
    pat = basis.enumerate_pattern(d, n)
    only_p = sorted(set(pat) - set(irr))
    only_i = sorted(set(irr) - set(pat))
    for w in only_p:
        print(f"< {A.format_word(w)}", file=out)
    for w in only_i:
        print(f"> {A.format_word(w)}", file=out)
    print(f"{len(pat)} pattern words, {len(irr)} irreducible words, "
          f"{len(only_p) + len(only_i)} differences", file=out)
    return EXIT_FAILED if only_p or only_i else EXIT_OK


def cmd_reduce(args, out) -> int:
    if args.file:
        S = _presentation_for(args)
        S, _ = complete(S, args.max_degree)
    else:
        S = lie2.gsb_relations_g0(args.dim).relation_set()
    A = S.alphabet
    try:
        p = A.poly(args.expr)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"cannot parse expression: {exc}") from None
    if p.has_primed():
        raise InputError("primed generators are not allowed here; write F_i = f_i - f_i'")
    nf, trail = reduce(p, S)
    aliases = A.dim <= 2 and any(t in "fgFG" for t in args.expr.split())
    if args.trail:
        for step in trail:
            print(f"  rewrite {A.format_word(step.word, aliases)} at {step.position} "
                  f"by relation {step.relation}", file=out)
    print(nf.to_string(aliases), file=out)
    return EXIT_OK


def cmd_count(args, out) -> int:
    if args.csv:
        out.write(counting.series_csv(args.dim, args.max))
        return EXIT_OK
    r = counting.count_series(args.dim, args.max, args.method)
    for n, v in enumerate(r.values):
        print(f"{n} {v}", file=out)
    return EXIT_OK


def cmd_growth(args, out) -> int:
    d = args.dim
    methods = [args.method] if args.method != "all" else ["closed_form", "spectral_radius", "ratio", "nth_root"]
    if d > 2 and args.method == "closed_form":
        raise InputError(f"no closed form growth rate for d = {d}")
    if d > 2:
        methods = [m for m in methods if m != "closed_form"]
    rows = []
    for m in methods:
        est = counting.growth_rate(d, m, n=args.n)
        rows.append(est)
    print(f"growth rate, d = {d}", file=out)
    print(f"{'method':<16} {'value':<24} {'error bound':<12}", file=out)
    for est in rows:
        print(f"{est.method:<16} {mpmath.nstr(est.value, 20):<24} {mpmath.nstr(est.error_bound, 3):<12}", file=out)
    if len(rows) > 1:
        ref = rows[0].value
        spread = max(abs(e.value - ref) for e in rows if e.method != "nth_root") if any(
            e.method != "nth_root" for e in rows) else 0
        print(f"max disagreement (excluding nth_root): {mpmath.nstr(spread, 3)}", file=out)
    if any(e.method in ("ratio", "nth_root") for e in rows):
        print(f"ratio and nth_root bounds are the step from degree {args.n - 1}, not rigorous", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lie2pbw",
        description="Enveloping algebras of compatible Lie brackets: "
                    "Gröbner–Shirshov bases, PBW words and growth rates.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a compatible Lie pair file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    def add_source(p):
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--dim", type=_positive)
        g.add_argument("--file", help="JSON Lie pair file")

    p = sub.add_parser("verify-gsb", help="check every composition of the relation families")
    add_source(p)
    p.add_argument("--omit", help="comma separated families to drop, e.g. 4,5")
    p.add_argument("-q", "--quiet", action="store_true", help="omit per-composition verdicts")
    p.set_defaults(func=cmd_verify_gsb)

    p = sub.add_parser("complete", help="bounded Shirshov completion")
    add_source(p)
    p.add_argument("--omit")
    p.add_argument("--max-degree", type=_positive, default=4)
    p.set_defaults(func=cmd_complete)

    p = sub.add_parser("basis", help="list the basis words of one degree")
    p.add_argument("--dim", type=_positive, required=True)
    p.add_argument("--degree", type=_nonnegative, required=True)
    p.add_argument("--mode", choices=["pattern", "irreducible", "both"], default="pattern")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("reduce", help="normal form of an expression")
    add_source(p)
    p.add_argument("--expr", required=True, help='e.g. "F3 f2 f1" or "G g F"')
    p.add_argument("--max-degree", type=_positive, default=4,
                   help="completion bound when --file is given")
    p.add_argument("--trail", action="store_true", help="print every rewrite step")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("count", help="number of basis words per degree")
    p.add_argument("--dim", type=_positive, required=True)
    p.add_argument("--max", type=_nonnegative, required=True)
    p.add_argument("--method", choices=["automaton", "enumerate"], default="automaton")
    p.add_argument("--csv", action="store_true", help="columns n,r_n,s_n,ratio,nth_root")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("growth", help="growth rate estimates")
    p.add_argument("--dim", type=_positive, required=True)
    p.add_argument("--method", choices=["all", "closed_form", "spectral_radius", "ratio", "nth_root"],
                   default="all")
    p.add_argument("--n", type=_positive, default=40, help="degree for ratio / nth_root")
    p.set_defaults(func=cmd_growth)
    return parser


def main(argv: Optional[List[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
