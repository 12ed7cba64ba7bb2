"""The modularity verdict for a presented nil-variety.

Three conditions are scanned on the exact closure table:

(a) every equality of non-zero words is substitutive (a letter renaming);
(b) the stabilizer of every non-zero word is a modular subgroup of the
    symmetric group on its alphabet;
(c) no two words with the same 3- or 4-letter alphabet are incomparable
    while carrying the forbidden stabilizer patterns (two transposition
    groups; a transposition group against the 3-cycle group; two order-8
    dihedral groups; an order-8 dihedral against the even subgroup).
    The strict variant (c') replaces "incomparable" with "non-equivalent".

Failing any of (a), (b), (c) refutes modularity; passing (a), (b), (c')
certifies it.  The sliver in between is reported as Gap, never guessed.
Joining with the trivial or the semilattice variety never changes the
status.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from itertools import combinations

from . import words as W
from .lattice import sym_subgroup_lattice
from .perms import Subgroup, classify_stabilizer_pattern, minimal_generators, subgroup_name
from .varieties import (ClosureTable, VarietyPresentation, build_closure, JOIN_NONE,
                        JOIN_SL, JOIN_T)
from .words import Word

MODULAR = "Modular"
NOT_MODULAR = "NotModular"
GAP = "Gap"
BOUNDED_ONLY = "BoundedOnly"

DEFAULT_BOUNDED_BOUND = 4

# witnesses are discovered in lexicographic order; reporting stops here
MAX_WITNESSES = 10

_EXIT_CODES = {MODULAR: 0, NOT_MODULAR: 1, GAP: 2, BOUNDED_ONLY: 2}


@dataclass(frozen=True)
class Witness:
    condition: str
    word_strings: tuple[str, ...]
    detail: str

    def to_json_dict(self) -> dict:
        return {"condition": self.condition, "words": list(self.word_strings),
                "detail": self.detail}


@dataclass(frozen=True)
class ConditionResult:
    name: str
    passed: bool
    witnesses: tuple[Witness, ...] = ()

    def to_json_dict(self) -> dict:
        return {"passed": self.passed,
                "witnesses": [w.to_json_dict() for w in self.witnesses]}


@dataclass(frozen=True)
class Verdict:
    status: str
    bound: int
    exact: bool
    nil_degree: int | None
    join_flag: str
    conditions: tuple[ConditionResult, ...]
    notes: tuple[str, ...] = ()

    def condition(self, name: str) -> ConditionResult:
        for c in self.conditions:
            if c.name == name:
                return c
        raise KeyError(name)

    @property
    def witnesses(self) -> tuple[Witness, ...]:
        return tuple(w for c in self.conditions for w in c.witnesses)

    @property
    def exit_code(self) -> int:
        return _EXIT_CODES[self.status]

    def to_json_dict(self) -> dict:
        return {
            "status": self.status,
            "bound": self.bound,
            "exact": self.exact,
            "nil_degree": self.nil_degree,
            "join": self.join_flag,
            "conditions": {c.name: c.to_json_dict() for c in self.conditions},
            "witnesses": [w.to_json_dict() for w in self.witnesses],
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    def render(self) -> str:
        lines = [f"status: {self.status}"]
        degree = self.nil_degree if self.nil_degree is not None else "unknown"
        exact = "exact" if self.exact else f"verified up to length {self.bound} only"
        lines.append(f"nil degree: {degree} (bound {self.bound}, {exact})")
        if self.join_flag != JOIN_NONE:
            lines.append(f"join: {self.join_flag}")
        summary = " ".join(f"{c.name}={'pass' if c.passed else 'FAIL'}"
                           for c in self.conditions)
        lines.append(f"conditions: {summary}")
        for w in self.witnesses:
            lines.append(f"witness [{w.condition}] {', '.join(w.word_strings)}: {w.detail}")
        for note in self.notes:
            lines.append(f"note: {note}")
        return "\n".join(lines) + "\n"


def _stab_description(h: Subgroup) -> str:
    name = subgroup_name(h)
    if name is None:
        name = "<" + ",".join(str(g) for g in minimal_generators(h)) + ">"
    return f"{name} (order {h.order})"


def check_condition_a(table: ClosureTable) -> ConditionResult:
    """Non-zero classes must consist of pairwise substitutive words.

    Position-wise renaming is an equivalence on words, so comparing every
    member against the class's least word covers all pairs; classes without
    a canonical least member are renamings of scanned ones and are skipped.
    """
    witnesses = []
    for members in table.nonzero_canonical_classes():
        rep = members[0]
        for w in members[1:]:
            if not W.is_substitutive(rep, w):
                witnesses.append(Witness(
                    "a", (W.word_str(rep), W.word_str(w)),
                    "equal non-zero words that are not a letter renaming"))
                break
        if len(witnesses) >= MAX_WITNESSES:
            break
    return ConditionResult("a", not witnesses, tuple(witnesses))


def _modular_in_sub_sk(h: Subgroup) -> bool:
    k = h.degree
    if k <= 4:
        lat, subs = sym_subgroup_lattice(k)
        return lat.is_modular_element(subs.index(h))
    # degree ≥ 5: modular subgroups are exactly the trivial, even, and full ones
    return h.order in (1, math.factorial(k), math.factorial(k) // 2)


def check_condition_b(table: ClosureTable) -> ConditionResult:
    """Every non-zero word's stabilizer must be modular in Sub(S_alphabet).

    One representative per renaming orbit suffices: renaming conjugates the
    stabilizer, and conjugation is a lattice automorphism of Sub(S_k).
    """
    witnesses = []
    for members in table.nonzero_canonical_classes():
        rep = members[0]
        if len(set(rep)) < 2:
            continue
        stab = table.stabilizer(rep)
        if not _modular_in_sub_sk(stab):
            witnesses.append(Witness(
                "b", (W.word_str(rep),),
                f"stabilizer {_stab_description(stab)} is not modular "
                f"in Sub(S{stab.degree})"))
            if len(witnesses) >= MAX_WITNESSES:
                break
    return ConditionResult("b", not witnesses, tuple(witnesses))


_PATTERN_PAIRS = {("T", "T"), ("T", "A"), ("A", "T"),
                  ("I", "I"), ("I", "A"), ("A", "I")}


def check_condition_c(table: ClosureTable, strict: bool = False) -> ConditionResult:
    """Scan word pairs with equal 3- or 4-letter alphabets for forbidden patterns.

    The listed subgroups live on 3 letters (transposition groups, the
    3-cycle group) and 4 letters (order-8 dihedrals, the even subgroup), so
    only those alphabet sizes participate; other sizes are governed by
    condition (b) alone.  strict=False forbids incomparable pattern pairs
    (condition c), strict=True forbids non-equivalent ones (condition c').
    """
    by_alphabet: dict[frozenset[str], list[tuple[Word, str, int]]] = {}
    for members in table.nonzero_classes():
        rep = members[0]
        if len(set(rep)) not in (3, 4):
            continue
        stab = table.stabilizer(rep)
        stab_type = classify_stabilizer_pattern(stab)
        if stab_type is None:
            continue
        for w in members:
            by_alphabet.setdefault(W.alphabet(w), []).append((w, stab_type, stab.order))
    witnesses = []
    name = "c_prime" if strict else "c"
    for letters in sorted(by_alphabet, key=sorted):
        tagged = sorted(by_alphabet[letters])
        for (u, tu, ou), (v, tv, ov) in combinations(tagged, 2):
            if (tu, tv) not in _PATTERN_PAIRS:
                continue
            # the pure 3-cycle/even pattern pair is allowed
            if tu == "A" and tv == "A":
                continue
            relation = W.compare(u, v)
            hit = (relation == W.INCOMPARABLE if not strict
                   else relation != W.EQUIVALENT)
            if hit:
                witnesses.append(Witness(
                    name, (W.word_str(u), W.word_str(v)),
                    f"{relation} words with equal alphabet; stabilizer patterns "
                    f"{tu}/{tv} (orders {ou}/{ov})"))
                if len(witnesses) >= MAX_WITNESSES:
                    return ConditionResult(name, False, tuple(witnesses))
    return ConditionResult(name, not witnesses, tuple(witnesses))


def assemble_status(a: ConditionResult, b: ConditionResult, c: ConditionResult,
                    c_prime: ConditionResult) -> str:
    """Theorem logic: fail any of a/b/c → NotModular; pass a/b/c' → Modular."""
    if not c.passed:
        assert not c_prime.passed, "an incomparable witness pair is also non-equivalent"
    if not (a.passed and b.passed and c.passed):
        return NOT_MODULAR
    if c_prime.passed:
        return MODULAR
    return GAP


def verdict(presentation: VarietyPresentation, bound: int | None = None) -> Verdict:
    """Decide modularity of the presented variety (optionally joined with T/SL)."""
    notes: list[str] = []
    if presentation.join_flag == JOIN_SL:
        notes.append("joining with the semilattice variety does not change the status")
    elif presentation.join_flag == JOIN_T:
        notes.append("joining with the trivial variety does not change the status")
    if presentation.nil_degree is None:
        table = build_closure(presentation,
                              bound=bound if bound is not None else DEFAULT_BOUNDED_BOUND)
        notes.append(
            "no nilpotency witness: results verified up to the bound only; "
            "every proper modular variety is (T or SL) joined with a nil-variety, "
            "so an exact verdict needs a nil witness")
        conditions = _run_conditions(table)
        return Verdict(BOUNDED_ONLY, table.bound, False, None,
                       presentation.join_flag, conditions, tuple(notes))
    table = build_closure(presentation, bound=bound)
    conditions = _run_conditions(table)
    status = assemble_status(*conditions)
    if status == GAP:
        notes.append("conditions (a), (b), (c) hold but (c') fails: outside both "
                     "the refutation and the certification theorem")
    return Verdict(status, table.bound, True, presentation.nil_degree,
                   presentation.join_flag, conditions, tuple(notes))


def _run_conditions(table: ClosureTable) -> tuple[ConditionResult, ...]:
    return (check_condition_a(table), check_condition_b(table),
            check_condition_c(table, strict=False),
            check_condition_c(table, strict=True))


def verify_paper(report_dir: str | None = None) -> bool:
    """Run the full acceptance battery, printing one line per criterion."""
    from .acceptance import run_all
    return run_all(report_dir=report_dir)
