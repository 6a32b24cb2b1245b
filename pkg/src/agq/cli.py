"""Command line interface.

Exit codes: 0 success, 1 parse or validation failure, 2 formula-vs-oracle
mismatch (``check``).  Reports go to stdout, diagnostics to stderr.  The
only environment variable honored is AGQ_COLOR=0|1 (pass/fail coloring in
``check``).
"""

from __future__ import annotations

import argparse
import os
import sys

from .agqfile import ParseError, load_pair
from .emitters import emit_dot, emit_json, report_json
from .forbidden import forbidden_cycles, sup_forbidden_from_vertex, zero_length_forbidden
from .generator import GeneratorParams, random_ag_pair
from .homdim import (
    global_dimension,
    gorenstein_report,
    pdim_directed_string,
    pdim_injective,
    pdim_simple,
    self_injective_dimension,
)
from .oracle import check_against_formulas, oracle_pdim, rep_of
from .quiver import AgqError
from .strings import DirectedString
from .syzygy import resolve_symbolic


def _color(text: str, code: str) -> str:
    if os.environ.get("AGQ_COLOR") == "1":
        return f"\x1b[{code}m{text}\x1b[0m"
    return text


def _load(path: str):
    try:
        doc, pair = load_pair(path)
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(1)
    return doc, pair


def _require_valid(pair) -> None:
    if not pair.validated:
        for v in pair.report.violations:
            print(f"invalid: {v.kind} at {', '.join(v.location)}: {v.message}", file=sys.stderr)
        raise SystemExit(1)


def _print_dim(report, args) -> None:
    print(report.value)
    if getattr(args, "witness", False) and report.witness is not None:
        walk = report.witness
        text = " ".join(walk.stem)
        if walk.is_lasso:
            text = (text + " " if text else "") + "(" + " ".join(walk.cycle) + ")*"
        print(f"witness: {text}")


def cmd_validate(args) -> int:
    doc, pair = _load(args.file)
    for warning in pair.report.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    if pair.validated:
        print("valid almost gentle pair"
              f" ({len(pair.quiver.vertices)} vertices, {len(pair.quiver.arrows)} arrows,"
              f" {len(pair.relations)} relations)")
        return 0
    for v in pair.report.violations:
        print(f"{v.kind} at {', '.join(v.location)}: {v.message}")
    print("note: 'rel a b' means the path a-then-b lies in the ideal", file=sys.stderr)
    return 1


def cmd_gldim(args) -> int:
    doc, pair = _load(args.file)
    _require_valid(pair)
    if args.json:
        sys.stdout.write(emit_json(report_json(pair, doc.name)))
        return 0
    _print_dim(global_dimension(pair), args)
    return 0


def cmd_injdim(args) -> int:
    doc, pair = _load(args.file)
    _require_valid(pair)
    if args.json:
        sys.stdout.write(emit_json(report_json(pair, doc.name)))
        return 0
    rep = self_injective_dimension(pair)
    _print_dim(rep, args)
    if rep.attained_at is not None:
        print(f"attained at: {rep.attained_at}")
    return 0


def _string_arg(text: str) -> DirectedString:
    return DirectedString.of(tuple(s for s in text.split(",") if s))


def cmd_pdim(args) -> int:
    doc, pair = _load(args.file)
    _require_valid(pair)
    try:
        if args.simple:
            rep = pdim_simple(pair, args.simple)
        elif args.injective:
            rep = pdim_injective(pair, args.injective)
        else:
            rep = pdim_directed_string(pair, _string_arg(args.string))
    except AgqError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _print_dim(rep, args)
    return 0


def cmd_forbidden(args) -> int:
    doc, pair = _load(args.file)
    _require_valid(pair)
    if args.cycles:
        cycles, truncated = forbidden_cycles(pair)
        for cyc in cycles:
            print(" ".join(cyc))
        if truncated:
            print("(truncated)", file=sys.stderr)
        return 0
    vertices = [args.from_vertex] if args.from_vertex else list(pair.quiver.vertices)
    for v in vertices:
        value, witness = sup_forbidden_from_vertex(pair, v)
        mark = " (zero-length forbidden path)" if zero_length_forbidden(pair, v) else ""
        if witness is None:
            print(f"{v}: sup 0{mark}")
        else:
            text = " ".join(witness.stem)
            if witness.is_lasso:
                text = (text + " " if text else "") + "(" + " ".join(witness.cycle) + ")*"
            print(f"{v}: sup {value} via {text}{mark}")
    return 0


def cmd_resolve(args) -> int:
    doc, pair = _load(args.file)
    _require_valid(pair)
    try:
        if args.simple:
            kind, arg = "simple", args.simple
        elif args.injective:
            kind, arg = "injective", args.injective
        else:
            kind, arg = "string", _string_arg(args.string)
        res = resolve_symbolic(pair, kind, arg, max_steps=args.max_steps)
    except AgqError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    for k, level in enumerate(res.levels):
        cover = " + ".join(f"P({v})" + (f"^{m}" if m > 1 else "") for v, m in level.cover) or "0"
        parts = []
        for s, n in level.syzygy.items:
            if s.kind == "simple":
                text = f"S({s.vertex})"
            elif s.kind == "projective":
                text = f"P({s.vertex})"
            elif s.kind == "psi0":
                text = f"SocleBlock({s.vertex})"
            else:
                text = "M(" + " ".join(s.arrows) + ")"
            parts.append(text + (f"^{n}" if n > 1 else ""))
        print(f"P{k} = {cover}   Omega{k + 1} = " + (" + ".join(parts) or "0"))
    print(f"terminated: {res.terminated} (length {res.length})")
    if args.oracle:
        result = oracle_pdim(pair, rep_of(pair, kind, arg), max(args.max_steps, 4))
        print(f"oracle pdim: {result}")
    return 0


def cmd_gorenstein(args) -> int:
    doc, pair = _load(args.file)
    _require_valid(pair)
    if args.json:
        sys.stdout.write(emit_json(report_json(pair, doc.name)))
        return 0
    g = gorenstein_report(pair)
    print(f"global dimension: {g.gldim.value}")
    print(f"self-injective dimension: {g.injdim.value}")
    print(f"gorenstein: {'yes' if g.gorenstein else 'no'}")
    print(f"forbidden-cycle criterion: {'infinite' if g.cycle_criterion else 'finite'}")
    print(f"injective envelope pdim: {g.envelope_pdim}")
    print(g.auslander_note)
    return 0


def cmd_check(args) -> int:
    doc, pair = _load(args.file)
    _require_valid(pair)
    report = check_against_formulas(pair, cutoff=args.cutoff)
    if report.ok:
        print(_color(f"ok: {report.checked} quantities agree with the oracle", "32"))
        return 0
    for m in report.mismatches:
        where = f" at {m.vertex}" if m.vertex else ""
        print(_color(f"mismatch{where}: {m.quantity}: formula {m.formula} vs oracle {m.oracle}", "31"))
    return 2


def cmd_random(args) -> int:
    import os as _os
    for k in range(args.count):
        params = GeneratorParams(seed=args.seed + k, max_vertices=args.max_vertices,
                                 max_arrows=args.max_arrows)
        pair, text = random_ag_pair(params)
        if args.emit:
            _os.makedirs(args.emit, exist_ok=True)
            path = _os.path.join(args.emit, f"random_{args.seed + k}.agq")
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(text)
            print(path)
        else:
            sys.stdout.write(text)
    return 0


def cmd_dot(args) -> int:
    doc, pair = _load(args.file)
    sys.stdout.write(emit_dot(pair, doc.name))
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # usage problems exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="agq",
        description="Homological dimensions of almost gentle algebras from .agq bound quivers")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the almost gentle conditions")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    for name, func in (("gldim", cmd_gldim), ("injdim", cmd_injdim)):
        p = sub.add_parser(name, help=f"{name} of the algebra")
        p.add_argument("file")
        p.add_argument("--json", action="store_true")
        p.add_argument("--witness", action="store_true")
        p.set_defaults(func=func)

    p = sub.add_parser("pdim", help="projective dimension of a module")
    p.add_argument("file")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--simple", metavar="V")
    grp.add_argument("--injective", metavar="V")
    grp.add_argument("--string", metavar="a1,a2,...")
    p.add_argument("--witness", action="store_true")
    p.set_defaults(func=cmd_pdim)

    p = sub.add_parser("forbidden", help="forbidden path sups and cycles")
    p.add_argument("file")
    p.add_argument("--from", dest="from_vertex", metavar="V")
    p.add_argument("--cycles", action="store_true")
    p.set_defaults(func=cmd_forbidden)

    p = sub.add_parser("resolve", help="symbolic minimal projective resolution")
    p.add_argument("file")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--simple", metavar="V")
    grp.add_argument("--injective", metavar="V")
    grp.add_argument("--string", metavar="a1,a2,...")
    p.add_argument("--max-steps", type=int, default=64)
    p.add_argument("--oracle", action="store_true")
    p.set_defaults(func=cmd_resolve)

    p = sub.add_parser("gorenstein", help="Gorenstein report")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_gorenstein)

    p = sub.add_parser("check", help="cross-validate formulas against the oracle")
    p.add_argument("file")
    p.add_argument("--cutoff", type=int, default=40)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("random", help="generate seeded random almost gentle pairs")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--max-vertices", type=int, default=8)
    p.add_argument("--max-arrows", type=int, default=14)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--emit", metavar="DIR")
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("dot", help="DOT rendering of the bound quiver")
    p.add_argument("file")
    p.set_defaults(func=cmd_dot)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        code = args.func(args)
    except SystemExit as exc:
        return int(exc.code or 0)
    except BrokenPipeError:
        return 0
    return code


if __name__ == "__main__":
    sys.exit(main())
