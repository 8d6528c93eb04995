"""Command line interface.

Exit codes: 0 success, 1 semantic negative (not a tautology, no model, not
all axioms hold), 2 usage or parse errors (stdout stays empty), 3 an
enumeration limit was exceeded.  Formulas are taken from the positional
argument, or from stdin when the argument is `-`.  Output is deterministic:
the same argv and stdin always produce byte-identical stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import arithmetic, frege, quantifiers, relsyntax, trivalent, truth
from .errors import LimitExceededError
from .notations import Notation, ParseError, PrintError, parse, print_formula

_NOTATION_NAMES = [n.value for n in Notation]


def _out(text: str) -> None:
    sys.stdout.write(text)


def _outline(text: str) -> None:
    sys.stdout.write(text + "\n")


def _read_source(value: str) -> str:
    if value == "-":
        return sys.stdin.read()
    return value


def _assignment_line(assignment: dict[str, bool], order: list[str]) -> str:
    return " ".join(f"{name}={truth.spell(assignment[name])}" for name in order)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="illation",
        description="Peirce's logic workbench: notations, truth tables, "
        "quantifier expansion, and the 1881 number axioms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("translate", help="reprint a formula in another notation")
    p.add_argument("--from", dest="src", required=True, choices=_NOTATION_NAMES)
    p.add_argument("--to", dest="dst", required=True,
                   choices=_NOTATION_NAMES + ["frege"])
    p.add_argument("--format", choices=["ascii", "svg"], default=None,
                   help="rendering format (frege target only)")
    p.add_argument("formula")

    p = sub.add_parser("table", help="print a truth table as TSV")
    p.add_argument("--notation", choices=_NOTATION_NAMES, default="peano-russell")
    p.add_argument("--values", type=int, choices=[2, 3], default=2)
    p.add_argument("formula")

    p = sub.add_parser("taut", help="decide tautology status")
    p.add_argument("--notation", choices=_NOTATION_NAMES, default="peano-russell")
    p.add_argument("--method", choices=["full", "indirect"], default="full")
    p.add_argument("formula")

    sub.add_parser("connectives", help="the sixteen binary connectives and their icons")

    p = sub.add_parser("anf", help="algebraic normal form (XOR of products)")
    p.add_argument("--notation", choices=_NOTATION_NAMES, default="peano-russell")
    p.add_argument("formula")

    p = sub.add_parser("expand", help="expand quantifiers over a finite domain")
    p.add_argument("--domain", type=int, required=True)
    p.add_argument("--to", dest="dst", choices=_NOTATION_NAMES, default="peirce")
    p.add_argument("formula")

    p = sub.add_parser("sat", help="search for a satisfying structure")
    p.add_argument("--domain", type=int, required=True)
    p.add_argument("formula")

    p = sub.add_parser("scan", help="satisfiability scan across domain sizes")
    p.add_argument("--max-size", type=int, default=3)
    p.add_argument("--herbrand", action="store_true",
                   help="scan for the least size whose expansion is a tautology")
    p.add_argument("formula")

    p = sub.add_parser("axioms", help="check the 1881 number axioms on a structure")
    p.add_argument("structure", help="path to a structure JSON file, or - for stdin")
    p.add_argument("--json", action="store_true", dest="as_json")

    p = sub.add_parser("pair-check", help="Wiener pair injectivity sweep")
    p.add_argument("--atoms", type=int, default=3)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {
        "translate": _cmd_translate,
        "table": _cmd_table,
        "taut": _cmd_taut,
        "connectives": _cmd_connectives,
        "anf": _cmd_anf,
        "expand": _cmd_expand,
        "sat": _cmd_sat,
        "scan": _cmd_scan,
        "axioms": _cmd_axioms,
        "pair-check": _cmd_pair_check,
    }[args.command]
    try:
        return handler(args)
    except (ParseError, PrintError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except LimitExceededError as err:
        print(f"limit exceeded: {err}", file=sys.stderr)
        return 3
    except (ValueError, OSError, json.JSONDecodeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


def _cmd_translate(args) -> int:
    formula = parse(_read_source(args.formula), Notation.from_name(args.src))
    if args.dst == "frege":
        _outline(frege.render_frege(formula, args.format or "ascii"))
        return 0
    if args.format is not None:
        print("error: --format applies only to the frege target", file=sys.stderr)
        return 2
    _outline(print_formula(formula, Notation.from_name(args.dst)))
    return 0


def _cmd_table(args) -> int:
    formula = parse(_read_source(args.formula), Notation.from_name(args.notation))
    if args.values == 2:
        _out(truth.truth_table(formula).to_tsv())
    else:
        _out(trivalent.tri_table(formula).to_tsv())
    return 0


def _cmd_taut(args) -> int:
    formula = parse(_read_source(args.formula), Notation.from_name(args.notation))
    from .formulas import free_vars

    order = free_vars(formula)
    if args.method == "full":
        counterexample = truth.find_counterexample(formula)
        if counterexample is None:
            _outline("tautology")
            return 0
        _outline("counterexample: " + _assignment_line(counterexample, order))
        return 1
    result = truth.indirect_falsify(formula)
    if isinstance(result, truth.Tautology):
        _outline("tautology")
        for i, (name, value) in enumerate(result.trace):
            suffix = " (contradiction)" if i == len(result.trace) - 1 else ""
            _outline(f"force {name}={truth.spell(value)}{suffix}")
        return 0
    _outline("counterexample: " + _assignment_line(result.counterexample, order))
    return 1


def _cmd_connectives(args) -> int:
    _outline("index\tvv\tvf\tfv\tff")
    for index in range(1, 17):
        cells = "\t".join(truth.spell(v) for v in truth.connective_vector(index))
        _outline(f"{index}\t{cells}")
    for index in range(1, 17):
        _outline("")
        _outline(str(index))
        _outline(truth.xframe(index))
    return 0


def _cmd_anf(args) -> int:
    formula = parse(_read_source(args.formula), Notation.from_name(args.notation))
    _outline(str(truth.anf(formula)))
    return 0


def _cmd_expand(args) -> int:
    formula = relsyntax.parse_relational(_read_source(args.formula))
    expansion = quantifiers.expand(formula, args.domain)
    _outline(print_formula(expansion, Notation.from_name(args.dst)))
    return 0


def _cmd_sat(args) -> int:
    formula = relsyntax.parse_relational(_read_source(args.formula))
    witness = quantifiers.sat_search(formula, args.domain)
    if witness is None:
        _outline("none")
        return 1
    _outline(json.dumps(quantifiers.structure_to_json(witness)))
    return 0


def _cmd_scan(args) -> int:
    formula = relsyntax.parse_relational(_read_source(args.formula))
    if args.herbrand:
        found = quantifiers.herbrand_scan(formula, args.max_size)
        if found is None:
            _outline(f"no valid size up to {args.max_size}")
            return 1
        size, expansion = found
        _outline(f"least valid size: {size}")
        _outline("expansion: " + print_formula(expansion, Notation.PEIRCE))
        return 0
    report = quantifiers.sat_scan(formula, args.max_size)
    extensions = dict(report.extensions)
    any_witness = False
    for size, witness in report.verdicts:
        if witness is None:
            _outline(f"size {size}: none")
            continue
        any_witness = True
        _outline(f"size {size}: satisfiable "
                 + json.dumps(quantifiers.structure_to_json(witness)))
        _outline(f"extend {size} -> {size + 1}: "
                 + json.dumps(quantifiers.structure_to_json(extensions[size])))
    return 0 if any_witness else 1


def _cmd_axioms(args) -> int:
    if args.structure == "-":
        raw = sys.stdin.read()
    else:
        with open(args.structure, encoding="utf-8") as handle:
            raw = handle.read()
    data = json.loads(raw)
    report = arithmetic.check_axioms(arithmetic.number_structure_from_json(data))
    if args.as_json:
        _outline(json.dumps(arithmetic.report_json(report)))
    else:
        _out(arithmetic.report_text(report))
    return 0 if report.all_hold() else 1


def _cmd_pair_check(args) -> int:
    if args.atoms < 1 or args.atoms > 4:
        print("error: --atoms must be between 1 and 4", file=sys.stderr)
        return 2
    atoms = [arithmetic.HFAtom(chr(ord("a") + i)) for i in range(args.atoms)]
    failures = 0
    atom_comparisons = 0
    for a in atoms:
        for b in atoms:
            left = arithmetic.wiener_pair(a, b)
            for c in atoms:
                for d in atoms:
                    atom_comparisons += 1
                    same = arithmetic.hf_equal(left, arithmetic.wiener_pair(c, d))
                    if same != (arithmetic.hf_equal(a, c) and arithmetic.hf_equal(b, d)):
                        failures += 1
    pairs = [arithmetic.wiener_pair(a, b) for a in atoms for b in atoms]
    nested = [arithmetic.wiener_pair(p, q) for p in pairs for q in pairs]
    components = [(p, q) for p in pairs for q in pairs]
    nested_comparisons = 0
    for (p, q), left in zip(components, nested):
        for (r, t), right in zip(components, nested):
            nested_comparisons += 1
            same = arithmetic.hf_equal(left, right)
            if same != (arithmetic.hf_equal(p, r) and arithmetic.hf_equal(q, t)):
                failures += 1
    if failures:
        _outline(f"pair injectivity: FAILED ({failures} violations)")
        return 1
    _outline(
        f"pair injectivity: ok ({atom_comparisons} atom-level comparisons, "
        f"{nested_comparisons} nested comparisons)"
    )
    return 0


if __name__ == "__main__":
    sys.exit(main())
