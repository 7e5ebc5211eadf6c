"""Command-line interface: every subcommand prints JSON on stdout.

Examples::

    brauerkit hilbert -a -1 -b -1 --place 2
    brauerkit quaternion-class -a -1 -b -1
    brauerkit group char-table --builtin Q8
    brauerkit group rationality --builtin Q8 --char 4
    brauerkit constraints solve --scenario s.json --conjecture
    brauerkit constraints check --scenario s.json --pair p.json

Exit status is 0 on success, 1 when ``constraints check`` finds a violated
constraint, and 2 on invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .brauer import index
from .group_reps.characters import character_table
from .group_reps.groups import FiniteGroup, builtin
from .group_reps.rationality import field_of_rationality, frobenius_schur, schur_index_quaternion_case
from .langlands_constraints import (
    DEFAULT_MAX_CANDIDATES,
    ConstraintScenario,
    InvariantPair,
    check_pair,
    enumerate_solutions,
)
from .quaternion import hilbert_symbol, ramified_places, quaternion_class


def _load(path: str) -> dict:
    with open(path) as fh:
        return json.load(fh)


def _group(args) -> FiniteGroup:
    if args.builtin:
        return builtin(args.builtin)
    return FiniteGroup.from_json(_load(args.table))


def cmd_hilbert(args) -> dict:
    return {"a": args.a, "b": args.b, "place": str(args.place), "symbol": hilbert_symbol(args.a, args.b, args.place)}


def cmd_quaternion_class(args) -> dict:
    cls = quaternion_class(args.a, args.b)
    out = cls.to_json()
    out["index"] = index(cls)
    out["ramified"] = [str(v) for v in ramified_places(args.a, args.b)]
    return out


def cmd_char_table(args) -> dict:
    return character_table(_group(args)).to_json()


def cmd_rationality(args) -> dict:
    G = _group(args)
    table = character_table(G)
    if not 0 <= args.char < len(table):
        raise ValueError(f"character index must be in 0..{len(table) - 1}")
    chi = table[args.char]
    K = field_of_rationality(chi)
    out = {
        "group": G.name,
        "char": args.char,
        "values": [str(v) for v in chi.values],
        "degree": chi.degree,
        "field_of_rationality": K.to_json(),
        "frobenius_schur": frobenius_schur(chi),
    }
    if K.degree == 1:
        cls = schur_index_quaternion_case(G, chi)
        out["brauer_class"] = "not implemented" if cls is None else cls.to_json()
    else:
        out["brauer_class"] = "not computed: character is not rational"
    return out


def _scenario(args) -> ConstraintScenario:
    sc = ConstraintScenario.from_json(_load(args.scenario))
    if getattr(args, "conjecture", False):
        sc = sc.with_conjecture(True)
    return sc


def cmd_solve(args) -> dict:
    return enumerate_solutions(_scenario(args), max_candidates=args.max_candidates).to_json()


def cmd_check(args) -> dict:
    sc = _scenario(args)
    pair = InvariantPair.from_json(_load(args.pair), sc.field)
    report = check_pair(sc, pair)
    args.exit_code = 0 if report.passed else 1
    return report.to_json()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="brauerkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hilbert", help="Hilbert symbol (a, b)_v over Q")
    p.add_argument("-a", type=int, required=True)
    p.add_argument("-b", type=int, required=True)
    p.add_argument("--place", required=True, help="a prime, or 'inf'")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("quaternion-class", help="Brauer class of the quaternion algebra (a, b)_Q")
    p.add_argument("-a", type=int, required=True)
    p.add_argument("-b", type=int, required=True)
    p.set_defaults(func=cmd_quaternion_class)

    group = sub.add_parser("group", help="finite group characters").add_subparsers(dest="group_command", required=True)
    for name, func, helptext in (
        ("char-table", cmd_char_table, "irreducible character table"),
        ("rationality", cmd_rationality, "field of rationality, indicator and Brauer class of one character"),
    ):
        p = group.add_parser(name, help=helptext)
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--builtin", help="C<n>, D<n>, Q8, S<n> or A<n>")
        src.add_argument("--table", help="JSON file with {'order': n, 'table': [[...]]}")
        if name == "rationality":
            p.add_argument("--char", type=int, required=True, help="0-based index into the character table")
        p.set_defaults(func=func)

    cons = sub.add_parser("constraints", help="invariant constraint engine").add_subparsers(
        dest="constraints_command", required=True
    )
    p = cons.add_parser("solve", help="enumerate all admissible invariant pairs")
    p.add_argument("--scenario", required=True)
    p.add_argument("--conjecture", action="store_true", help="also impose the conjectural refinement")
    p.add_argument("--max-candidates", type=int, default=DEFAULT_MAX_CANDIDATES)
    p.set_defaults(func=cmd_solve)
    p = cons.add_parser("check", help="check one invariant pair against every constraint")
    p.add_argument("--scenario", required=True)
    p.add_argument("--pair", required=True)
    p.add_argument("--conjecture", action="store_true")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    args.exit_code = 0
    try:
        out = args.func(args)
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    json.dump(out, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return args.exit_code


if __name__ == "__main__":
    sys.exit(main())
