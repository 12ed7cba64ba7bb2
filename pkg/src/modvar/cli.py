"""The modvar command line.

Verbs: check, sublattice, word-order, stabilizer, gset-verify, verify-paper.

Exit codes for check: 0 Modular, 1 NotModular, 2 Gap or BoundedOnly,
3 input error.  Output is deterministic byte-for-byte for identical inputs.
The environment variable MODVAR_BOUND_CAP (default 8) caps nil-degree
detection for presentations without an explicit nilpotency witness.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import words as W
from .checker import verdict
from .lattice import FiniteLattice, sym_subgroup_lattice
from .perms import minimal_generators, subgroup_name
from .varieties import (BoundExceededError, PresentationSyntaxError, build_closure,
                        JOIN_NONE, JOIN_SL, JOIN_T, parse_presentation)

INPUT_ERROR = 3


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (PresentationSyntaxError, W.WordSyntaxError, BoundExceededError,
            ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="modvar",
        description="Decide whether a finitely based nil-variety of semigroups "
                    "is a modular element of the lattice of varieties.",
        epilog="MODVAR_BOUND_CAP caps nil-degree detection (default 8).")
    sub = parser.add_subparsers(dest="verb", required=True)

    check = sub.add_parser("check", help="run the modularity verdict on an identity file")
    check.add_argument("file", help="identity file (one 'LHS = RHS' per line, RHS 0 "
                                    "marks a 0-reduced identity)")
    join = check.add_mutually_exclusive_group()
    join.add_argument("--join-sl", action="store_true",
                      help="treat the input as joined with the semilattice variety")
    join.add_argument("--join-t", action="store_true",
                      help="treat the input as joined with the trivial variety")
    check.add_argument("--bound", type=int, default=None,
                       help="closure bound (>= nil degree - 1; default exact)")
    check.add_argument("--json", action="store_true", help="emit the JSON verdict")
    check.add_argument("--report-dir", default=None,
                       help="write verdict.json, classes.tsv and stabilizer figures here")
    check.set_defaults(handler=run_check)

    sublat = sub.add_parser("sublattice",
                            help="list or draw the subgroup lattice of S_n")
    sublat.add_argument("degree", type=int)
    sublat.add_argument("--dot", action="store_true", help="emit a DOT Hasse diagram")
    sublat.add_argument("--modular-only", action="store_true",
                        help="restrict to the modular elements")
    sublat.add_argument("--figure", default=None,
                        help="render the Hasse diagram to this image file")
    sublat.add_argument("--out", default=None,
                        help="write the subgroup table to this file instead of stdout")
    sublat.set_defaults(handler=run_sublattice)

    order = sub.add_parser("word-order", help="compare two words in the division order")
    order.add_argument("left")
    order.add_argument("right")
    order.set_defaults(handler=run_word_order)

    stab = sub.add_parser("stabilizer",
                          help="stabilizer of a word in the presented variety")
    stab.add_argument("file")
    stab.add_argument("word")
    stab.set_defaults(handler=run_stabilizer)

    gset = sub.add_parser("gset-verify",
                          help="run the congruence-code lemma suite on a free G-set")
    gset.add_argument("--group", default="s3", choices=["s2", "s3", "s4"],
                      help="acting symmetric group")
    gset.add_argument("--orbits", type=int, default=2)
    gset.set_defaults(handler=run_gset_verify)

    paper = sub.add_parser("verify-paper", help="run the full acceptance battery")
    paper.add_argument("--report-dir", default=None,
                       help="write results.tsv and lattice figures here")
    paper.set_defaults(handler=run_verify_paper)
    return parser


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def run_check(args) -> int:
    join = JOIN_SL if args.join_sl else (JOIN_T if args.join_t else JOIN_NONE)
    presentation = parse_presentation(_read(args.file), join_flag=join)
    result = verdict(presentation, bound=args.bound)
    if args.json:
        print(result.to_json())
    else:
        print(result.render(), end="")
    if args.report_dir is not None:
        _write_check_report(presentation, result, args.report_dir)
    return result.exit_code


def _write_check_report(presentation, result, report_dir: str) -> None:
    """verdict.json + classes.tsv + Sub(S3)/Sub(S4) figures marking the
    stabilizers realized by the presentation's non-zero words."""
    from .figures import hasse_figure
    os.makedirs(report_dir, exist_ok=True)
    with open(os.path.join(report_dir, "verdict.json"), "w") as handle:
        handle.write(result.to_json() + "\n")
    table = build_closure(presentation, bound=result.bound if not result.exact else None)
    realized: dict[int, set] = {3: set(), 4: set()}
    rows = []
    for members in table.nonzero_canonical_classes():
        rep = members[0]
        stab = table.stabilizer(rep)
        name = subgroup_name(stab) or \
            "<" + ",".join(str(g) for g in minimal_generators(stab)) + ">"
        rows.append((W.word_str(rep), len(members), "no", stab.order, name))
        if stab.degree in realized:
            realized[stab.degree].add(stab)
    zero_reps = sorted(
        members[0] for _, members, is_zero in table.classes()
        if is_zero and members[0] == W.canonical_form(members[0]))
    for rep in zero_reps:
        rows.append((W.word_str(rep), 0, "yes", "-", "-"))
    with open(os.path.join(report_dir, "classes.tsv"), "w") as handle:
        handle.write("word\tclass_size\tzero\tstabilizer_order\tstabilizer\n")
        for row in rows:
            handle.write("\t".join(str(v) for v in row) + "\n")
    for degree, stabs in realized.items():
        if not stabs:
            continue
        lat, subs = sym_subgroup_lattice(degree)
        highlight = [subs.index(h) for h in stabs]
        hasse_figure(lat, os.path.join(report_dir, f"stabilizers_s{degree}.png"),
                     highlight=highlight,
                     title=f"Stabilizers realized in Sub(S{degree})")


def run_sublattice(args) -> int:
    if not 2 <= args.degree <= 5:
        raise ValueError(f"degree must be between 2 and 5, got {args.degree}")
    lat, subs = sym_subgroup_lattice(args.degree)
    modular = set(lat.modular_elements())
    keep = sorted(modular) if args.modular_only else list(range(lat.size))
    if args.modular_only:
        sub_leq = lat.leq[[[i] for i in keep], keep]
        view = FiniteLattice(sub_leq, [lat.labels[i] for i in keep])
        marks = set(range(view.size))
    else:
        view = lat
        marks = modular
    lines = ["name\torder\tmodular"]
    for element in keep:
        lines.append(f"{lat.labels[element]}\t{subs[element].order}\t"
                     f"{'yes' if element in modular else 'no'}")
    table = "\n".join(lines) + "\n"
    if args.out is not None:
        with open(args.out, "w") as handle:
            handle.write(table)
    if args.dot:
        print(view.to_dot(highlight=sorted(marks), graph_name=f"sub_s{args.degree}"),
              end="")
    elif args.out is None:
        print(table, end="")
    if args.figure is not None:
        from .figures import hasse_figure
        hasse_figure(view, args.figure, highlight=sorted(marks),
                     title=f"Subgroup lattice of S{args.degree}")
    return 0


def run_word_order(args) -> int:
    left = W.parse_word(args.left)
    right = W.parse_word(args.right)
    print(W.compare(left, right))
    return 0


def run_stabilizer(args) -> int:
    presentation = parse_presentation(_read(args.file))
    word = W.parse_word(args.word)
    table = build_closure(presentation) if presentation.nil_degree is not None \
        else build_closure(presentation, bound=max(len(word), 4))
    stab = table.stabilizer(word)
    letters = W.letters_in_order(word)
    if table.is_zero(word):
        print(f"word is zero in the variety; stabilizer is all of "
              f"S({', '.join(letters)})")
        return 0
    gens = minimal_generators(stab)
    if not gens:
        print("order 1, trivial")
        return 0
    rendered = []
    for g in gens:
        rendered.append("".join(
            "(" + " ".join(letters[i - 1] for i in cycle) + ")"
            for cycle in g.cycles()))
    print(f"order {stab.order}, generated by {' '.join(rendered)}")
    return 0


def run_gset_verify(args) -> int:
    from .acceptance import gset_lemma_report
    degree = int(args.group[1:])
    if args.orbits < 1:
        raise ValueError("at least one orbit")
    points = (1, 1, 2, 6, 24)[degree] * args.orbits
    if degree == 4 and args.orbits > 2:
        raise ValueError("at most 2 orbits for s4")
    report = gset_lemma_report(degree, args.orbits)
    for name, ok, detail in report:
        suffix = f"  [{detail}]" if detail else ""
        print(f"{'PASS' if ok else 'FAIL'}  {name}{suffix}")
    print(f"{sum(1 for _, ok, _ in report if ok)}/{len(report)} lemma checks passed "
          f"({points} points)")
    return 0 if all(ok for _, ok, _ in report) else 1


def run_verify_paper(args) -> int:
    from .acceptance import run_all
    return 0 if run_all(report_dir=args.report_dir) else 1


if __name__ == "__main__":
    sys.exit(main())
