"""The acceptance battery: every headline claim, re-checked by brute force.

Each criterion returns a CriterionResult with a pass flag, a detail string,
and its runtime against the stated limit.  run_all prints one line per
criterion and optionally writes a delimited results table plus Hasse-figure
files to a report directory.

Criterion 7 reproduces the headline example exactly as stated; its first
two sub-assertions fail under the faithful deduction engine (see the
analysis in the witness output: the defining equation of each variety has
a letter collapse producing a non-substitutive equality of non-zero
words).  The criterion is kept honest rather than forced green; the
repaired variants in presentations/ show the intended
modular/modular/non-modular pattern.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass

from . import presentations as P
from . import words as W
from .checker import MODULAR, NOT_MODULAR, verdict
from .gsets import (Code, Congruence, GSet, code_join, code_meet, code_of,
                    con_lattice, congruence_from_code, enumerate_proper_codes,
                    enumerate_simple_congruences, free_gset, is_coordinated,
                    is_modular_simple, least_transversal, simple_congruence_from_subgroups)
from .lattice import (FiniteLattice, chain, diamond, partition_lattice, pentagon,
                      sym_subgroup_lattice)
from .perms import (alternating_group, enumerate_subgroups, named_subgroup,
                    subgroup_name, symmetric_group, trivial_group)
from .varieties import parse_presentation


@dataclass
class CriterionResult:
    index: int
    title: str
    ok: bool
    detail: str
    elapsed: float
    limit: float

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return (f"[{self.index}] {status}  {self.title}  "
                f"({self.elapsed:.2f}s of {self.limit:.0f}s)"
                + ("" if self.ok else f"\n    {self.detail}"))


def _result(index: int, title: str, limit: float, failures: list[str],
            started: float) -> CriterionResult:
    elapsed = time.perf_counter() - started
    if elapsed > limit:
        failures.append(f"runtime {elapsed:.2f}s exceeded the {limit:.0f}s limit")
    return CriterionResult(index, title, not failures,
                           "; ".join(failures) if failures else "ok", elapsed, limit)


# reference Hasse graphs for the subgroup lattices of S3 and S4
# (cover lists; the S4 figure's cyclic-group labels are swapped in the
# source, so only the unlabeled graph is compared)

SUB_S3_REFERENCE_COVERS = [
    ("T", "T12"), ("T", "T13"), ("T", "T23"), ("T", "C123"),
    ("T12", "S3"), ("T13", "S3"), ("T23", "S3"), ("C123", "S3"),
]

SUB_S4_REFERENCE_COVERS = [
    ("T", "T34"), ("T34", "Stab1"), ("Stab1", "S4"), ("T34", "Stab2"),
    ("T", "T24"), ("T24", "Stab1"), ("T24", "Stab3"),
    ("T", "T23"), ("T23", "Stab1"), ("T23", "Stab4"),
    ("T", "T12"), ("T12", "Stab3"), ("Stab3", "S4"), ("T12", "Stab4"),
    ("Stab4", "S4"),
    ("T", "T13"), ("T13", "Stab2"), ("Stab2", "S4"), ("T13", "Stab4"),
    ("T", "T14"), ("T14", "Stab2"), ("T14", "Stab3"),
    ("T", "P12,34"), ("P12,34", "V4"), ("V4", "A4"), ("A4", "S4"),
    ("T", "P13,24"), ("P13,24", "V4"),
    ("T", "P14,23"), ("P14,23", "V4"),
    ("V4", "I13,24"), ("V4", "I12,34"), ("V4", "I14,23"),
    ("P12,34", "C4a"), ("C4a", "I12,34"), ("I12,34", "S4"),
    ("P13,24", "C4b"), ("C4b", "I13,24"), ("I13,24", "S4"),
    ("P14,23", "C4c"), ("C4c", "I14,23"), ("I14,23", "S4"),
    ("T", "C234"), ("C234", "Stab1"), ("C234", "A4"),
    ("T", "C134"), ("C134", "Stab2"), ("C134", "A4"),
    ("T", "C124"), ("C124", "Stab3"), ("C124", "A4"),
    ("T", "C123"), ("C123", "Stab4"), ("C123", "A4"),
    ("T34", "E12,34"), ("E12,34", "I12,34"), ("T12", "E12,34"),
    ("P12,34", "E12,34"),
    ("T13", "E13,24"), ("E13,24", "I13,24"), ("T24", "E13,24"),
    ("P13,24", "E13,24"),
    ("T14", "E14,23"), ("E14,23", "I14,23"), ("T23", "E14,23"),
    ("P14,23", "E14,23"),
]


def reference_lattice(cover_names: list[tuple[str, str]]) -> FiniteLattice:
    names = sorted({n for pair in cover_names for n in pair})
    index = {n: i for i, n in enumerate(names)}
    covers = [(index[a], index[b]) for a, b in cover_names]
    return FiniteLattice.from_covers(len(names), covers, names)


def criterion_1() -> CriterionResult:
    """Sub(S3): 6 subgroups, the expected diagram, every element modular."""
    start = time.perf_counter()
    failures: list[str] = []
    subs = enumerate_subgroups(3)
    if len(subs) != 6:
        failures.append(f"expected 6 subgroups of S3, got {len(subs)}")
    orders = sorted(h.order for h in subs)
    if orders != [1, 2, 2, 2, 3, 6]:
        failures.append(f"order profile {orders} != [1, 2, 2, 2, 3, 6]")
    lat, _ = sym_subgroup_lattice(3)
    if not lat.is_isomorphic_to(reference_lattice(SUB_S3_REFERENCE_COVERS)):
        failures.append("Sub(S3) Hasse diagram does not match the reference graph")
    for x in range(lat.size):
        if not (lat.is_modular_element(x) and lat.is_modular_element_via_n5(x)):
            failures.append(f"element {lat.labels[x]} fails a modularity test")
    return _result(1, "Sub(S3): 6 subgroups, reference diagram, all modular", 1.0,
                   failures, start)


def criterion_2() -> CriterionResult:
    """Sub(S4): 30 subgroups, reference diagram, the seven modular elements."""
    start = time.perf_counter()
    failures: list[str] = []
    subs = enumerate_subgroups(4)
    if len(subs) != 30:
        failures.append(f"expected 30 subgroups of S4, got {len(subs)}")
    lat, subs = sym_subgroup_lattice(4)
    if not lat.is_isomorphic_to(reference_lattice(SUB_S4_REFERENCE_COVERS)):
        failures.append("Sub(S4) Hasse diagram does not match the reference graph")
    expected = {named_subgroup(n, 4) for n in
                ("T", "V4", "I12,34", "I13,24", "I14,23", "A4", "S4")}
    modular = {subs[x] for x in lat.modular_elements()}
    if modular != expected:
        got = sorted(subgroup_name(h) or "?" for h in modular)
        failures.append(f"modular set {got} differs from the expected seven")
    return _result(2, "Sub(S4): 30 subgroups, reference diagram, modular = "
                      "{T, V4, three I's, A4, S4}", 5.0, failures, start)


def criterion_3() -> CriterionResult:
    """Sub(S5): the nontrivial modular subgroups are exactly A5 and S5."""
    start = time.perf_counter()
    failures: list[str] = []
    lat, subs = sym_subgroup_lattice(5)
    modular = {subs[x] for x in lat.modular_elements()}
    expected = {trivial_group(5), alternating_group(5), symmetric_group(5)}
    if modular != expected:
        failures.append(f"modular set of Sub(S5) has {len(modular)} elements, "
                        "expected exactly T, A5, S5")
    nontrivial = {h for h in modular if h.order > 1}
    if nontrivial != {alternating_group(5), symmetric_group(5)}:
        failures.append("nontrivial modular subgroups are not exactly A5 and S5")
    return _result(3, "Sub(S5): nontrivial modular subgroups are A5 and S5",
                   120.0, failures, start)


def criterion_4() -> CriterionResult:
    """The four diamond sublattices in Sub(S3) and Sub(S4)."""
    start = time.perf_counter()
    failures: list[str] = []
    lat3, subs3 = sym_subgroup_lattice(3)
    found3 = {frozenset(t) for t in lat3.find_sublattices("M3")}
    want3 = [("T", "T12", "T13", "T23", "S3"), ("T", "T12", "T13", "A3", "S3")]
    for names in want3:
        target = frozenset(subs3.index(named_subgroup(n, 3)) for n in names)
        if target not in found3:
            failures.append(f"missing M3 {names} in Sub(S3)")
    lat4, subs4 = sym_subgroup_lattice(4)
    found4 = {frozenset(t) for t in lat4.find_sublattices("M3")}
    want4 = [("V4", "I12,34", "I13,24", "I14,23", "S4"),
             ("V4", "I12,34", "I13,24", "A4", "S4")]
    for names in want4:
        target = frozenset(subs4.index(named_subgroup(n, 4)) for n in names)
        if target not in found4:
            failures.append(f"missing M3 {names} in Sub(S4)")
    return _result(4, "M3 sublattices found at T and at V4 as specified", 1.0,
                   failures, start)


def _restrict_to_orbit(cong: Congruence, single: GSet, offset: int) -> Congruence:
    size = single.n_points
    blocks = []
    for block in cong.blocks:
        local = [x - offset for x in block if offset <= x < offset + size]
        if local:
            blocks.append(local)
    return Congruence(single, blocks)


def gset_lemma_report(degree: int, orbits: int) -> list[tuple[str, bool, str]]:
    """The congruence-code lemma suite on a free symmetric-group set.

    Exhaustive whenever the full congruence lattice fits the materialization
    cap; otherwise the definitional modularity comparison is replaced by a
    seeded sample of the modular law computed on codes.
    """
    group = symmetric_group(degree)
    gset = free_gset(group, orbits)
    report: list[tuple[str, bool, str]] = []
    transversal = least_transversal(gset)
    subgroup_count = len(enumerate_subgroups(degree))

    simples = enumerate_simple_congruences(gset)
    expected = subgroup_count ** orbits
    report.append(("simple congruence count equals |Sub(G)|^orbits",
                   len(simples) == expected,
                   f"{len(simples)} vs {expected}"))

    single = free_gset(group, 1)
    single_congs = {c.key(): c for c in
                    (enumerate_simple_congruences(single))}
    pairs_ok = True
    order_iso_ok = True
    seen = set()
    for cong in simples:
        parts = tuple(_restrict_to_orbit(cong, single, i * single.n_points).key()
                      for i in range(orbits))
        if any(p not in single_congs for p in parts):
            pairs_ok = False
        seen.add(parts)
    pairs_ok = pairs_ok and len(seen) == len(single_congs) ** orbits
    for a, b in itertools.product(simples[:40], simples[:40]):
        lhs = a <= b
        rhs = all(_restrict_to_orbit(a, single, i * single.n_points)
                  <= _restrict_to_orbit(b, single, i * single.n_points)
                  for i in range(orbits))
        if lhs != rhs:
            order_iso_ok = False
    report.append(("simple congruences decompose as a product over orbits",
                   pairs_ok and order_iso_ok, "restriction map is an order bijection"))

    codes = enumerate_proper_codes(gset)
    coordinated = [congruence_from_code(gset, transversal, code) for code in codes]
    closed = True
    for a, b in itertools.combinations(coordinated[: min(len(coordinated), 42)], 2):
        if not (is_coordinated(a.meet(b), transversal)
                and is_coordinated(a.join(b), transversal)):
            closed = False
    report.append(("coordinated congruences are closed under meet and join",
                   closed, "checked pairwise"))

    round_trip = all(code_of(congruence_from_code(gset, transversal, code),
                             transversal) == code for code in codes)
    report.append(("every proper code is the code of its generated congruence",
                   round_trip, f"{len(codes)} codes"))

    order_codes = True
    formulas = True
    sample = coordinated if len(coordinated) <= 42 else coordinated[:42]
    for a, b in itertools.product(sample, sample):
        ca, cb = code_of(a, transversal), code_of(b, transversal)
        if (a <= b) != (ca <= cb):
            order_codes = False
        if code_of(a.meet(b), transversal) != code_meet(ca, cb):
            formulas = False
        if code_of(a.join(b), transversal) != code_join(ca, cb):
            formulas = False
    report.append(("congruence order matches code order", order_codes, "all pairs"))
    report.append(("code meet/join formulas match materialized meet/join",
                   formulas, "all pairs"))

    free_ok = gset.free and all(
        gset.carrier(x, y) is not None
        for orbit in gset.orbits for x, y in [(orbit[0], orbit[-1])])
    report.append(("the action is free with unique carriers", free_ok, ""))

    if gset.n_points <= 16:
        lat, congs = con_lattice(gset)
        index = {c.key(): i for i, c in enumerate(congs)}
        agree = all(is_modular_simple(gset, c) == lat.is_modular_element(index[c.key()])
                    for c in simples)
        report.append(("stabilizer conditions match definitional modularity "
                       "on all simple congruences", agree,
                       f"|Con| = {len(congs)}"))
    else:
        rng = random.Random(7)
        law_ok = True
        for sigma in simples[:12]:
            cs = code_of(sigma, transversal)
            for _ in range(40):
                cb, cg = rng.choice(codes), rng.choice(codes)
                if not cb <= cg:
                    continue
                lhs = code_meet(code_join(cs, cb), cg)
                rhs = code_join(code_meet(cs, cg), cb)
                if is_modular_simple(gset, sigma) and lhs != rhs:
                    law_ok = False
        report.append(("sampled modular law on codes holds for verdict-modular "
                       "simple congruences", law_ok, "seeded sample"))
    return report


def criterion_5() -> CriterionResult:
    """The congruence-code lemma suite, exhaustive on the free 2-orbit S3-set."""
    start = time.perf_counter()
    failures = [f"{name}: {detail}" for name, ok, detail in gset_lemma_report(3, 2)
                if not ok]
    return _result(5, "free S3-set with 2 orbits: code calculus verified "
                      "exhaustively", 60.0, failures, start)


def criterion_6() -> CriterionResult:
    """Modularity reduction vs definition; the pentagon at (0 | T12, T13)."""
    start = time.perf_counter()
    failures: list[str] = []
    gset = free_gset(symmetric_group(3), 2)
    lat, congs = con_lattice(gset)
    index = {c.key(): i for i, c in enumerate(congs)}
    for sigma in enumerate_simple_congruences(gset):
        reduced = is_modular_simple(gset, sigma)
        definitional = lat.is_modular_element(index[sigma.key()])
        if reduced != definitional:
            failures.append(f"verdict mismatch at code "
                            f"{code_of(sigma, least_transversal(gset))}")
    t12, t13, t23 = (named_subgroup(n, 3) for n in ("T12", "T13", "T23"))
    triv, s3 = trivial_group(3), symmetric_group(3)
    transversal = least_transversal(gset)
    alpha = simple_congruence_from_subgroups(gset, [t12, t13])
    beta = congruence_from_code(gset, transversal, Code([[0, 1]], [triv, triv]))
    gamma = congruence_from_code(gset, transversal, Code([[0, 1]], [t23, t23]))
    if not beta <= gamma:
        failures.append("construction broke beta <= gamma")
    top = alpha.join(beta)
    bottom = alpha.meet(gamma)
    if code_of(top, transversal) != Code([[0, 1]], [s3, s3]):
        failures.append("code of alpha v beta is not (merged | S3, S3)")
    if code_of(bottom, transversal) != Code([[0], [1]], [triv, triv]):
        failures.append("alpha ^ gamma is not the identity congruence")
    five = [bottom, beta, gamma, alpha, top]
    if len({c.key() for c in five}) != 5:
        failures.append("pentagon elements are not distinct")
    if not (bottom <= beta and beta <= gamma and gamma <= top):
        failures.append("pentagon chain is broken")
    if alpha <= gamma or beta <= alpha:
        failures.append("alpha is not incomparable to the chain")
    if alpha.join(gamma).key() != top.key() or alpha.meet(beta).key() != bottom.key():
        failures.append("pentagon is not closed under meet and join")
    if lat.is_modular_element(index[alpha.key()]):
        failures.append("(0 | T12, T13) is unexpectedly modular in Con(X)")
    return _result(6, "simple-congruence modularity matches the definition; "
                      "the (0 | T12, T13) pentagon embeds", 120.0, failures, start)


def criterion_7() -> CriterionResult:
    """The headline example, exactly as stated.

    The meet behaves as described (NotModular with an incomparable
    transposition-stabilizer witness pair on a common 3-letter alphabet),
    but the two constituents are themselves refuted by condition (a): the
    defining equation of each admits a letter collapse (y -> x in the
    first, z -> x or z -> y in the second) producing a non-substitutive
    equality of non-zero length-4 words, e.g. x^3 y = x^2 y x.  Since
    condition (a) is necessary, those varieties are not modular elements
    and the first two sub-assertions fail; the repaired presentations
    shipped alongside show the intended phenomenon.
    """
    start = time.perf_counter()
    failures: list[str] = []
    v1 = verdict(parse_presentation(P.V1))
    if v1.status != MODULAR:
        wit = v1.witnesses[0]
        failures.append(f"v1.ids expected Modular, engine says {v1.status} "
                        f"(condition {wit.condition} witness {wit.word_strings})")
    v2 = verdict(parse_presentation(P.V2))
    if v2.status != MODULAR:
        wit = v2.witnesses[0]
        failures.append(f"v2.ids expected Modular, engine says {v2.status} "
                        f"(condition {wit.condition} witness {wit.word_strings})")
    meet = verdict(parse_presentation(P.V1_MEET_V2))
    c_witnesses = [w for w in meet.witnesses if w.condition == "c"]
    if meet.status != NOT_MODULAR or not c_witnesses:
        failures.append(f"meet expected NotModular with a condition-(c) witness, "
                        f"got {meet.status}")
    else:
        u, v = (W.parse_word(s) for s in c_witnesses[0].word_strings)
        if not (W.compare(u, v) == W.INCOMPARABLE
                and W.alphabet(u) == W.alphabet(v) and len(W.alphabet(u)) == 3):
            failures.append("meet witness pair is not an incomparable pair on a "
                            "common 3-letter alphabet")
    return _result(7, "headline example: v1/v2 Modular (defective, fails "
                      "honestly), meet NotModular via condition (c)", 10.0,
                   failures, start)


def criterion_8() -> CriterionResult:
    """Regression families: commutative, permutational of length 3, 0-reduced."""
    start = time.perf_counter()
    failures: list[str] = []
    good = verdict(parse_presentation(P.COMMUT_MODULAR))
    if good.status != MODULAR:
        failures.append(f"commutative with x^2 y = 0 should be Modular, "
                        f"got {good.status}")
    bad = verdict(parse_presentation(P.COMMUT_NIL4))
    a_witnesses = [w for w in bad.witnesses if w.condition == "a"]
    if bad.status != NOT_MODULAR or not a_witnesses:
        failures.append(f"commutative nil-4 should fail via condition (a), "
                        f"got {bad.status}")
    elif a_witnesses[0].word_strings != ("a^2 b", "a b a"):
        failures.append(f"condition (a) witness {a_witnesses[0].word_strings} "
                        "is not the expected (x^2 y, x y x) pair")
    for i, text in enumerate(P.PERMUT3, start=1):
        v = verdict(parse_presentation(text))
        if v.status != MODULAR:
            failures.append(f"permutation system #{i} should be Modular, "
                            f"got {v.status}")
    zr = verdict(parse_presentation(P.ZERO_REDUCED))
    if zr.status != MODULAR:
        failures.append(f"0-reduced presentation should be Modular, got {zr.status}")
    return _result(8, "regression families: commutative / permut-3 / 0-reduced",
                   30.0, failures, start)


def _naive_closure(identities, bound: int, letters: tuple[str, ...]):
    """Independent fixpoint oracle: cut-point instance enumeration, set merging.

    Mirrors the engine's exact-mode semantics (zero instances, overflow to
    zero, free-letter collapse to zero) without sharing its matcher or its
    union-find.
    """
    from .varieties import Equation, ZeroIdentity, nilpotency_word

    def instances(pattern, text):
        k = len(pattern)
        for start_pos in range(len(text)):
            for cuts in itertools.combinations(range(start_pos + 1, len(text) + 1), k):
                segments = []
                prev = start_pos
                for c in cuts:
                    segments.append(text[prev:c])
                    prev = c
                assignment = {}
                consistent = True
                for letter, seg in zip(pattern, segments):
                    if assignment.setdefault(letter, seg) != seg:
                        consistent = False
                        break
                if consistent:
                    yield start_pos, cuts[-1], assignment

    universe = [w for n in range(1, bound + 1)
                for w in itertools.product(letters, repeat=n)]
    classes = {w: frozenset([w]) for w in universe}
    zero: set = set()
    zero_words = [i.word for i in identities if isinstance(i, ZeroIdentity)]
    nil = max((len(z) for z in zero_words if len(set(z)) == len(z)), default=None)
    if nil is not None:
        zero_words.append(nilpotency_word(nil))
    equations = [i for i in identities if isinstance(i, Equation)]
    changed = True
    while changed:
        changed = False
        for w in universe:
            for z in zero_words:
                if w not in zero and next(instances(z, w), None) is not None:
                    zero.add(w)
                    changed = True
            for eq in equations:
                for s, t in ((eq.left, eq.right), (eq.right, eq.left)):
                    if set(t) - set(s):
                        if w not in zero and next(instances(s, w), None) is not None:
                            zero.add(w)
                            changed = True
                        continue
                    for i, j, assignment in instances(s, w):
                        image = tuple(x for letter in t for x in assignment[letter])
                        w2 = w[:i] + image + w[j:]
                        if len(w2) > bound:
                            if w not in zero:
                                zero.add(w)
                                changed = True
                        elif classes[w] is not classes[w2]:
                            union = classes[w] | classes[w2]
                            for member in union:
                                classes[member] = union
                            changed = True
        for w in universe:
            if w in zero:
                for member in classes[w]:
                    if member not in zero:
                        zero.add(member)
                        changed = True
    return classes, zero


def criterion_9() -> CriterionResult:
    """Property suites: lattice tests, homomorphism lemma, oracle, word axioms."""
    start = time.perf_counter()
    failures: list[str] = []

    constructed: list[FiniteLattice] = [chain(1), chain(4), pentagon(), diamond()]
    constructed += [partition_lattice(k) for k in range(1, 6)]
    constructed += [sym_subgroup_lattice(n)[0] for n in range(2, 6)]
    constructed.append(pentagon().direct_product(chain(2)))
    constructed.append(con_lattice(free_gset(symmetric_group(3), 2))[0])
    for lat in constructed:
        for x in range(lat.size):
            if lat.is_modular_element(x) != lat.is_modular_element_via_n5(x):
                failures.append(f"definitional and pentagon modularity disagree "
                                f"at {lat.labels[x]} in a {lat.size}-element lattice")
    base = partition_lattice(4)
    rng = random.Random(2024)
    for trial in range(200):
        seed = rng.sample(range(base.size), rng.randint(3, 8))
        elements = set(seed)
        while True:
            extra = {base.meet(a, b) for a in elements for b in elements}
            extra |= {base.join(a, b) for a in elements for b in elements}
            if extra <= elements:
                break
            elements |= extra
        items = sorted(elements)
        sub = FiniteLattice(base.leq[[[i] for i in items], items],
                            [base.labels[i] for i in items])
        a, b = rng.randrange(sub.size), rng.randrange(sub.size)
        blocks = sub.congruence_from_pairs([(a, b)])
        quotient, projection = sub.quotient(blocks)
        if not (projection.is_homomorphism() and projection.is_surjective()):
            failures.append(f"trial {trial}: quotient projection is not a "
                            "surjective homomorphism")
            continue
        for x in range(sub.size):
            if sub.is_modular_element(x) and not quotient.is_modular_element(projection(x)):
                failures.append(f"trial {trial}: homomorphic image of a modular "
                                "element is not modular")
    from .varieties import build_closure
    oracle_presentations = [
        "x y = y x\nx1 x2 x3 x4 = 0",
        "x^2 y z = x^2 z y\nx1 x2 x3 x4 = 0",
        "x y z = z y x\nx^2 y = 0\nx1 x2 x3 x4 = 0",
        "x^2 y = 0\nx1 x2 x3 x4 = 0",
        "x y = y x\nx^2 y = 0\nx1 x2 x3 x4 = 0",
        "x y = y x\nx1 x2 x3 = 0",
    ]
    for text in oracle_presentations:
        pres = parse_presentation(text)
        table = build_closure(pres)
        classes, zero = _naive_closure(pres.identities, table.bound, table.letters)
        for w in classes:
            if (w in zero) != table.is_zero(w):
                failures.append(f"oracle zero mismatch at {W.word_str(w)} in {text!r}")
                break
            engine_class = set(table.class_members[table._class_of[w]])
            if not table.is_zero(w) and set(classes[w]) != engine_class:
                failures.append(f"oracle class mismatch at {W.word_str(w)} in {text!r}")
                break
    canon = W.canonical_words(5)
    leq_table = {(u, v): W.leq(u, v) for u in canon for v in canon}
    for u in canon:
        if not leq_table[(u, u)]:
            failures.append(f"order not reflexive at {W.word_str(u)}")
    for (u, v), uv in leq_table.items():
        if not uv:
            continue
        if len(u) > len(v) or len(set(u)) > len(set(v)):
            failures.append("order violates the length/alphabet monotonicity")
        for w in canon:
            if leq_table[(v, w)] and not leq_table[(u, w)]:
                failures.append(f"order not transitive at {W.word_str(u)} <= "
                                f"{W.word_str(v)} <= {W.word_str(w)}")
    for u, v in itertools.combinations(canon, 2):
        eq = W.equivalent(u, v)
        mutual = leq_table[(u, v)] and leq_table[(v, u)]
        if eq != mutual:
            failures.append(f"equivalence vs mutual order mismatch at "
                            f"{W.word_str(u)}, {W.word_str(v)}")
    return _result(9, "property suites: lattice equivalences, homomorphic images, "
                      "closure oracle, word axioms", 180.0, failures, start)


CRITERIA = (criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9)


def run_all(report_dir: str | None = None) -> bool:
    results = [fn() for fn in CRITERIA]
    for result in results:
        print(result.line())
    passed = sum(1 for r in results if r.ok)
    print(f"{passed}/{len(results)} criteria passed")
    if report_dir is not None:
        write_report(results, report_dir)
    return all(r.ok for r in results)


def write_report(results: list[CriterionResult], report_dir: str) -> None:
    """Delimited results plus Hasse figures of the two subgroup lattices."""
    import os
    from .figures import hasse_figure
    os.makedirs(report_dir, exist_ok=True)
    with open(os.path.join(report_dir, "results.tsv"), "w") as handle:
        handle.write("criterion\tstatus\telapsed_s\tlimit_s\ttitle\tdetail\n")
        for r in results:
            handle.write(f"{r.index}\t{'pass' if r.ok else 'fail'}\t"
                         f"{r.elapsed:.2f}\t{r.limit:.0f}\t{r.title}\t{r.detail}\n")
    for degree in (3, 4):
        lat, _ = sym_subgroup_lattice(degree)
        hasse_figure(lat, os.path.join(report_dir, f"sub_s{degree}.png"),
                     highlight=lat.modular_elements(),
                     title=f"Subgroup lattice of S{degree} (modular elements filled)")
