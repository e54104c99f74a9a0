"""Command-line entry point.

Exit codes: 0 on success, 1 when a verification is falsified, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .band_calculus import SearchBudget, SearchBudgetExceeded
from .braid_core import BAND, STANDARD, BraidWord, WordSyntaxError, as_band, as_standard, component_count, format_word, parse_word
from .invariants import TwistFamily
from .surgery_certifier import certify
from . import theorem_verifier as tv

EXIT_OK = 0
EXIT_FALSIFIED = 1
EXIT_USAGE = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--search-budget", type=int, default=SearchBudget().max_length, metavar="LEN",
                        help="longest band word the conjugacy search accepts (default %(default)s)")
    common.add_argument("--out", help="write the main artifact to this file instead of stdout")
    p = _Parser(prog="propp", description="Property P certificates for closed braids.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", parents=[common], help="certify a single braid word")
    a.add_argument("word", help='e.g. "a12^2 a23 a13" or "s1 s2^-1 s1 s2^-1"')
    a.add_argument("--strands", type=int, default=3)
    alpha = a.add_mutually_exclusive_group()
    alpha.add_argument("--band", action="store_const", const=BAND, dest="alphabet")
    alpha.add_argument("--standard", action="store_const", const=STANDARD, dest="alphabet")
    a.add_argument("--json", action="store_true", help="print the full JSON report")

    for name, helptext in (("enumerate", "write the 3-braid case table"),
                           ("verify-theorem4", "check the 3-braid case analysis")):
        e = sub.add_parser(name, parents=[common], help=helptext)
        e.add_argument("--maxp", type=int, default=4)
        e.add_argument("--maxn", type=int, default=4)
        e.add_argument("--brute", type=int, default=0, metavar="LEN",
                       help="also run the unreduced enumeration up to this length")

    f = sub.add_parser("family", parents=[common], help="fit v2 over a twist family")
    f.add_argument("template", nargs="?", default=None,
                   help="standard word the twists are inserted into (default: built-in families)")
    f.add_argument("--strands", type=int, default=3)
    f.add_argument("--position", type=int, default=0)
    f.add_argument("--generator", type=int, default=1)

    s = sub.add_parser("st-check", parents=[common], help="switch/smooth triples on band words")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--samples", type=int, default=500)
    s.add_argument("--exhaustive", type=int, default=6, metavar="LEN",
                   help="exhaustive check up to this length (0 to skip)")
    return p


def _word_from_args(args) -> BraidWord:
    w = parse_word(args.word, args.strands)
    if args.alphabet == BAND:
        w = as_band(w)
    elif args.alphabet == STANDARD:
        w = as_standard(w)
    return w


def _analyze(args, budget: SearchBudget) -> int:
    report = certify(_word_from_args(args), budget)
    if args.json:
        _emit(_dump(report.as_dict()), args.out)
    else:
        lines = [f"input: {report.input} ({report.strands} strands)",
                 f"conclusion: {report.conclusion}"]
        if report.alexander is not None:
            lines.append(f"alexander: {report.alexander}   v2: {report.v2}")
        if report.minimal_length is not None:
            lines.append(f"minimal length: {report.minimal_length}   genus: {report.genus}")
        for iv in report.intervals:
            d = iv.as_dict()
            lines.append(f"interval ({d['lo']}, {d['hi']})  [{d['rule']}]")
        for r in report.routes:
            lines.append(f"route {r.kind}: {json.dumps(r.witness, sort_keys=True)}")
        lines.extend(f"note: {n}" for n in report.notes)
        _emit("\n".join(lines), args.out)
    return EXIT_OK


def _theorem4(args, budget: SearchBudget, write_table: bool) -> int:
    rows = tv.enumerate_cases(args.maxp, args.maxn, budget)
    verdict = tv.verify_theorem4(rows)
    identities = tv.check_identities(budget)
    links = {w: component_count(parse_word(w, 3)) for w in tv.THREE_COMPONENT_LINKS}
    brute = tv.verify_theorem4(tv.brute_force_cases(args.brute, budget)) if args.brute >= 4 else None
    ok = verdict.holds and all(c.holds for c in identities) and all(v == 3 for v in links.values())
    if brute is not None:
        ok = ok and brute.holds and brute.exceptions == verdict.exceptions
    if write_table:
        _emit(_dump([r.as_dict() for r in rows]), args.out)
        return EXIT_OK if ok else EXIT_FALSIFIED
    result = {
        "verdict": ok,
        "theorem4": verdict.as_dict(),
        "identities": [{"left": c.left, "right": c.right, "same_element": c.same_element,
                        "same_class": c.same_class} for c in identities],
        "three_component_links": links,
    }
    if brute is not None:
        result["brute_force"] = {"max_length": args.brute, **brute.as_dict()}
    _emit(_dump(result), args.out)
    return EXIT_OK if ok else EXIT_FALSIFIED


def _family(args) -> int:
    if args.template is None:
        families = tv.default_families()
    else:
        template = as_standard(parse_word(args.template, args.strands))
        families = [TwistFamily(template, args.position, args.generator)]
    verdicts = [tv.verify_theorem3(f) for f in families]
    _emit(_dump([v.as_dict() for v in verdicts]), args.out)
    return EXIT_OK if all(v.holds for v in verdicts) else EXIT_FALSIFIED


def _st(args, budget: SearchBudget) -> int:
    parts = {}
    if args.exhaustive > 0:
        parts["exhaustive"] = tv.st_exhaustive(args.exhaustive, budget)
    parts["random"] = tv.st_random(args.samples, args.seed, budget=budget)
    out = {name: {"checked": s.checked,
                  "violations": [{"word": format_word(t.word), "position": t.position,
                                  "values": list(t.values)} for t in s.violations]}
           for name, s in parts.items()}
    out["seed"] = args.seed
    _emit(_dump(out), args.out)
    return EXIT_OK if all(s.holds for s in parts.values()) else EXIT_FALSIFIED


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.search_budget < 1:
        parser.print_usage(sys.stderr)
        print("propp: error: --search-budget must be positive", file=sys.stderr)
        return EXIT_USAGE
    budget = SearchBudget(max_length=args.search_budget)
    try:
        if args.command == "analyze":
            return _analyze(args, budget)
        if args.command in ("enumerate", "verify-theorem4"):
            return _theorem4(args, budget, write_table=args.command == "enumerate")
        if args.command == "family":
            return _family(args)
        return _st(args, budget)
    except (WordSyntaxError, ValueError) as exc:
        print(f"propp: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SearchBudgetExceeded as exc:
        print(f"propp: search budget exceeded: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
