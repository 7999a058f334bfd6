"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 domain
error (the typed error name is printed to stderr).
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys

from .census import build_census, enumerate_paths
from .errors import DyckError
from .formulas import FormulaId, evaluate_formula
from .maps import BIJECTIONS
from .paths import parse_path
from .render import render_ascii, render_svg
from .stats import ClassFilter, stat_record
from .verify import BIJECTION_IDS, IdentityId, verify_bijection, verify_identity


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="dyckpeaks",
        description="Enumerate, inspect, transform and verify lattice paths "
        "from (0,0) to (n,n) by peak statistics.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("enumerate", help="stream all paths of a semilength")
    pe.add_argument("--n", type=int, required=True)
    pe.add_argument("--m", type=int)
    pe.add_argument("--k", type=int)
    pe.add_argument("--first", choices=["U", "D"])
    pe.add_argument("--last", choices=["U", "D"])
    pe.add_argument("--limit", type=int)
    pe.add_argument("--format", choices=["words", "json"], default="words")

    ps = sub.add_parser("stats", help="print the statistic vector of a word")
    _add_word_args(ps)

    pm = sub.add_parser("map", help="apply a bijection to a word")
    pm.add_argument("--bijection", required=True, choices=sorted(BIJECTIONS))
    _add_word_args(pm)

    pc = sub.add_parser("census", help="exact count table for a semilength")
    pc.add_argument("--n", type=int, required=True)
    pc.add_argument("--format", choices=["json", "csv"], default="json")
    pc.add_argument("--out")

    pf = sub.add_parser("formula", help="evaluate a closed form")
    pf.add_argument("--id", required=True, choices=[f.value for f in FormulaId])
    pf.add_argument("--params", required=True, help="comma-separated integers")

    pv = sub.add_parser("verify", help="run identity/bijection sweeps")
    pv.add_argument("--identity", help="identity id or 'all'")
    pv.add_argument("--bijection", help="bijection id or 'all'")
    pv.add_argument("--n-max", type=int, required=True)
    pv.add_argument("--format", choices=["json", "text"], default="text")

    pr = sub.add_parser("render", help="draw a word as ascii or svg")
    _add_word_args(pr)
    pr.add_argument("--format", choices=["ascii", "svg"], default="ascii")
    pr.add_argument("--out")

    return p


def _add_word_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("word", nargs="?", help="path word over U/D")
    sub.add_argument("--in", dest="infile", help="read the word from a file")


def _read_word(args) -> str:
    if args.infile:
        with open(args.infile) as fh:
            text = fh.read().strip()
    elif args.word is not None:
        text = args.word
    else:
        raise SystemExit(2)
    return parse_path(text)


def _write_out(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _cmd_enumerate(args) -> int:
    flt = ClassFilter(m=args.m, k=args.k, first=args.first, last=args.last)
    stream = enumerate_paths(args.n, flt)
    if args.limit is not None:
        stream = itertools.islice(stream, args.limit)
    if args.format == "json":
        print(json.dumps(list(stream)))
    else:
        for word in stream:
            print(word)
    return 0


def _cmd_stats(args) -> int:
    print(json.dumps(stat_record(_read_word(args)).to_json()))
    return 0


def _cmd_map(args) -> int:
    print(BIJECTIONS[args.bijection](_read_word(args)))
    return 0


def _cmd_census(args) -> int:
    census = build_census(args.n)
    text = census.to_json() + "\n" if args.format == "json" else census.to_csv()
    _write_out(text, args.out)
    return 0


def _cmd_formula(args) -> int:
    params = [int(x) for x in args.params.split(",") if x.strip() != ""]
    print(evaluate_formula(args.id, params))
    return 0


def _cmd_verify(args) -> int:
    reports = []
    if args.identity:
        ids = [i.value for i in IdentityId] if args.identity == "all" else [args.identity]
        for ident in ids:
            reports.append(verify_identity(ident, args.n_max))
    if args.bijection:
        ids = list(BIJECTION_IDS) if args.bijection == "all" else [args.bijection]
        for bid in ids:
            reports.append(verify_bijection(bid, args.n_max))
    if not reports:
        print("nothing to verify: pass --identity and/or --bijection", file=sys.stderr)
        return 2
    for rep in reports:
        if args.format == "json":
            print(rep.to_json())
        else:
            line = f"{rep.status.upper():4s} {rep.target} (checked {rep.checked_cases})"
            if rep.counterexample:
                line += f" counterexample={rep.counterexample}"
            print(line)
    return 0 if all(r.passed for r in reports) else 1


def _cmd_render(args) -> int:
    word = _read_word(args)
    text = render_ascii(word) + "\n" if args.format == "ascii" else render_svg(word) + "\n"
    _write_out(text, args.out)
    return 0


_COMMANDS = {
    "enumerate": _cmd_enumerate,
    "stats": _cmd_stats,
    "map": _cmd_map,
    "census": _cmd_census,
    "formula": _cmd_formula,
    "verify": _cmd_verify,
    "render": _cmd_render,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return _COMMANDS[args.command](args)
    except DyckError as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return 3
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2


def entry() -> None:
    sys.exit(main())
