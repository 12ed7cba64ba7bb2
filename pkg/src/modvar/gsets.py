"""Finite G-sets, their congruence lattices, and the transversal code calculus.

A free G-set is a disjoint union of copies of the regular action.  Simple
congruences (those isolating every orbit) decompose orbitwise; congruences
coordinated with a transversal are encoded as proper codes
(π | H₁, …, Hₙ) — an equivalence on orbits plus one stabilizer subgroup per
orbit — and meets/joins of coordinated congruences can be computed on codes
alone.  The modularity of a simple congruence in the full congruence
lattice reduces to stabilizer conditions, which is the bridge the checker
uses; this module also materializes small congruence lattices outright so
that reduction can be confronted with the definitional test.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from .lattice import FiniteLattice, partitions_of, sym_subgroup_lattice
from .perms import (Permutation, Subgroup, classify_stabilizer_pattern, compose,
                    minimal_generators, subgroup_join, subgroup_meet, subgroup_name,
                    symmetric_group, trivial_group)

FULL_CON_POINT_CAP = 16


class GSet:
    """A finite group action, point set 0..n_points-1."""

    def __init__(self, group: Subgroup, action: Sequence[Sequence[int]]):
        members = group.members
        if len(action) != len(members):
            raise ValueError("one action row per group element required")
        n = len(action[0])
        rows = tuple(tuple(row) for row in action)
        for row in rows:
            if sorted(row) != list(range(n)):
                raise ValueError("group elements must act by bijections")
        index = {g: i for i, g in enumerate(members)}
        identity_row = rows[index[Permutation.identity(group.degree)]]
        if identity_row != tuple(range(n)):
            raise ValueError("identity must act trivially")
        for gi, g in enumerate(members):
            for hi, h in enumerate(members):
                gh = rows[index[compose(g, h)]]
                composed = tuple(rows[gi][rows[hi][x]] for x in range(n))
                if gh != composed:
                    raise ValueError("action is not compatible with composition")
        self.group = group
        self.n_points = n
        self.action = rows
        self._member_index = index
        orbit_of = [-1] * n
        orbits: list[tuple[int, ...]] = []
        for x in range(n):
            if orbit_of[x] >= 0:
                continue
            orbit = sorted({rows[gi][x] for gi in range(len(members))})
            for y in orbit:
                orbit_of[y] = len(orbits)
            orbits.append(tuple(orbit))
        self.orbit_of = tuple(orbit_of)
        self.orbits = tuple(orbits)
        self.free = all(rows[gi][x] != x
                        for gi, g in enumerate(members) if g != Permutation.identity(group.degree)
                        for x in range(n))

    @property
    def n_orbits(self) -> int:
        return len(self.orbits)

    def act(self, g: Permutation, x: int) -> int:
        return self.action[self._member_index[g]][x]

    def carrier(self, x: int, y: int) -> Permutation:
        """The unique g with x = g(y) on a free G-set (same orbit required)."""
        if not self.free:
            raise ValueError("carriers are unique only on free G-sets")
        hits = [g for g in self.group.members if self.act(g, y) == x]
        if len(hits) != 1:
            raise ValueError(f"points {x}, {y} are not in one orbit")
        return hits[0]

    def to_json_dict(self) -> dict:
        return {
            "group_degree": self.group.degree,
            "group_generators": [str(g) for g in minimal_generators(self.group)],
            "orbit_count": self.n_orbits,
            "points": self.n_points,
        }


def free_gset(group: Subgroup, orbit_count: int) -> GSet:
    """Disjoint union of orbit_count copies of the regular action."""
    if orbit_count < 1:
        raise ValueError("at least one orbit")
    members = group.members
    index = {g: i for i, g in enumerate(members)}
    size = len(members)
    action = []
    for g in members:
        row = []
        for orbit in range(orbit_count):
            for h in members:
                row.append(orbit * size + index[compose(g, h)])
        action.append(row)
    return GSet(group, action)


class Congruence:
    """An action-compatible partition of a G-set's points."""

    def __init__(self, gset: GSet, blocks: Iterable[Iterable[int]]):
        normalized = sorted(tuple(sorted(b)) for b in blocks)
        block_of = [-1] * gset.n_points
        for bi, block in enumerate(normalized):
            for x in block:
                if not 0 <= x < gset.n_points or block_of[x] >= 0:
                    raise ValueError("not a partition of the points")
                block_of[x] = bi
        if -1 in block_of:
            raise ValueError("partition must cover every point")
        for row in gset.action:
            for block in normalized:
                images = {block_of[row[x]] for x in block}
                if len(images) > 1:
                    raise ValueError("partition is not action-compatible")
        self.gset = gset
        self.blocks = tuple(tuple(b) for b in normalized)
        self.block_of = tuple(block_of)

    def key(self) -> tuple[int, ...]:
        """Block ids renumbered by first occurrence; canonical identity."""
        table: dict[int, int] = {}
        return tuple(table.setdefault(b, len(table)) for b in self.block_of)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Congruence) and self.gset is other.gset
                and self.block_of == other.block_of)

    def __hash__(self) -> int:
        return hash(self.block_of)

    def related(self, x: int, y: int) -> bool:
        return self.block_of[x] == self.block_of[y]

    def __le__(self, other: "Congruence") -> bool:
        """Refinement: every block lies inside a block of the other."""
        image: dict[int, int] = {}
        for mine, theirs in zip(self.block_of, other.block_of):
            if image.setdefault(mine, theirs) != theirs:
                return False
        return True

    def meet(self, other: "Congruence") -> "Congruence":
        groups: dict[tuple[int, int], list[int]] = {}
        for x in range(self.gset.n_points):
            groups.setdefault((self.block_of[x], other.block_of[x]), []).append(x)
        return Congruence(self.gset, groups.values())

    def join(self, other: "Congruence") -> "Congruence":
        parent = list(range(self.gset.n_points))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for cong in (self, other):
            for block in cong.blocks:
                for x in block[1:]:
                    parent[find(x)] = find(block[0])
        groups: dict[int, list[int]] = {}
        for x in range(self.gset.n_points):
            groups.setdefault(find(x), []).append(x)
        return Congruence(self.gset, groups.values())

    def is_simple(self) -> bool:
        """Every class inside a single orbit."""
        return all(len({self.gset.orbit_of[x] for x in block}) == 1
                   for block in self.blocks)

    def stabilizer(self, x: int) -> Subgroup:
        """{g ∈ G | x related to g(x)}."""
        gset = self.gset
        return Subgroup(gset.group.degree,
                        (g for g in gset.group.members
                         if self.related(x, gset.act(g, x))),
                        _checked=True)

    def to_json_dict(self) -> dict:
        return {"classes": [list(b) for b in self.blocks]}

    def __repr__(self) -> str:
        return f"<Congruence {self.blocks}>"


def identity_congruence(gset: GSet) -> Congruence:
    return Congruence(gset, [[x] for x in range(gset.n_points)])


def orbit_congruence(gset: GSet) -> Congruence:
    """ω: the same-orbit relation (always a congruence)."""
    return Congruence(gset, gset.orbits)


def full_congruence(gset: GSet) -> Congruence:
    return Congruence(gset, [range(gset.n_points)])


def alpha_star(cong: Congruence) -> tuple[tuple[int, ...], ...]:
    """The induced equivalence on orbits: related when the congruence connects.

    Transitivity of the direct "connects" relation is recomputed and
    asserted rather than assumed.
    """
    gset = cong.gset
    k = gset.n_orbits
    related = [[False] * k for _ in range(k)]
    for i in range(k):
        related[i][i] = True
    for block in cong.blocks:
        touched = sorted({gset.orbit_of[x] for x in block})
        for a, b in combinations(touched, 2):
            related[a][b] = related[b][a] = True
    for a in range(k):
        for b in range(k):
            for c in range(k):
                if related[a][b] and related[b][c]:
                    assert related[a][c], "orbit relation failed transitivity"
    blocks: list[tuple[int, ...]] = []
    seen: set[int] = set()
    for i in range(k):
        if i not in seen:
            block = tuple(j for j in range(k) if related[i][j])
            seen.update(block)
            blocks.append(block)
    return tuple(blocks)


def simple_congruence_from_subgroups(gset: GSet, subgroups: Sequence[Subgroup]) -> Congruence:
    """The simple congruence with the given stabilizer per orbit (free G-sets).

    On the regular orbit through its least point, the classes are the left
    cosets gH acting on that point.
    """
    if not gset.free:
        raise ValueError("subgroup coding needs a free G-set")
    if len(subgroups) != gset.n_orbits:
        raise ValueError("one subgroup per orbit required")
    blocks: list[list[int]] = []
    for orbit, sub in zip(gset.orbits, subgroups):
        base = orbit[0]
        assigned: set[int] = set()
        for g in gset.group.members:
            x = gset.act(g, base)
            if x in assigned:
                continue
            block = sorted(gset.act(compose(g, h), base) for h in sub.members)
            assigned.update(block)
            blocks.append(block)
    return Congruence(gset, blocks)


def enumerate_simple_congruences(gset: GSet) -> tuple[Congruence, ...]:
    """All simple congruences of a free G-set: one subgroup choice per orbit."""
    if not gset.free:
        raise ValueError("simple-congruence enumeration implemented for free G-sets")
    from itertools import product
    from .perms import enumerate_subgroups
    subs = enumerate_subgroups(gset.group.degree)
    if symmetric_group(gset.group.degree) != gset.group:
        subs = tuple(h for h in subs if h <= gset.group)
    out = [simple_congruence_from_subgroups(gset, choice)
           for choice in product(subs, repeat=gset.n_orbits)]
    return tuple(sorted(out, key=lambda c: c.key()))


def enumerate_congruences(gset: GSet) -> tuple[Congruence, ...]:
    """The full congruence lattice: join closure of principal congruences."""
    if gset.n_points > FULL_CON_POINT_CAP:
        raise ValueError(
            f"full Con is materialized only up to {FULL_CON_POINT_CAP} points; "
            "use coordinated codes beyond that")
    bottom = identity_congruence(gset)
    principals: dict[tuple[int, ...], Congruence] = {}
    for x, y in combinations(range(gset.n_points), 2):
        cong = congruence_generated(gset, [(x, y)])
        principals.setdefault(cong.key(), cong)
    known: dict[tuple[int, ...], Congruence] = {bottom.key(): bottom}
    known.update(principals)
    frontier = list(known.values())
    while frontier:
        fresh: list[Congruence] = []
        for new in frontier:
            for cong in list(known.values()):
                joined = new.join(cong)
                if joined.key() not in known:
                    known[joined.key()] = joined
                    fresh.append(joined)
        frontier = fresh
    return tuple(sorted(known.values(), key=lambda c: c.key()))


def congruence_generated(gset: GSet, pairs: Sequence[tuple[int, int]]) -> Congruence:
    """Least congruence containing the pairs: equivalence closure of their G-orbit."""
    parent = list(range(gset.n_points))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for x, y in pairs:
        for row in gset.action:
            rx, ry = find(row[x]), find(row[y])
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)
    groups: dict[int, list[int]] = {}
    for x in range(gset.n_points):
        groups.setdefault(find(x), []).append(x)
    return Congruence(gset, groups.values())


class Code:
    """(π | H₁, …, Hₙ): an orbit equivalence plus one subgroup per orbit.

    Proper when π-related orbits carry equal subgroups.
    """

    def __init__(self, orbit_blocks: Iterable[Iterable[int]], subgroups: Sequence[Subgroup]):
        blocks = sorted(tuple(sorted(b)) for b in orbit_blocks)
        n = len(subgroups)
        block_of = [-1] * n
        for bi, block in enumerate(blocks):
            for i in block:
                if not 0 <= i < n or block_of[i] >= 0:
                    raise ValueError("orbit blocks must partition the orbit ids")
                block_of[i] = bi
        if -1 in block_of:
            raise ValueError("orbit blocks must cover every orbit")
        self.orbit_blocks = tuple(blocks)
        self.block_of = tuple(block_of)
        self.subgroups = tuple(subgroups)

    def is_proper(self) -> bool:
        return all(len({self.subgroups[i] for i in block}) == 1
                   for block in self.orbit_blocks)

    def require_proper(self):
        if not self.is_proper():
            raise ValueError(f"improper code {self}")

    def __eq__(self, other) -> bool:
        return (isinstance(other, Code) and self.orbit_blocks == other.orbit_blocks
                and self.subgroups == other.subgroups)

    def __hash__(self) -> int:
        return hash((self.orbit_blocks, self.subgroups))

    def __le__(self, other: "Code") -> bool:
        """π₁ ⊆ π₂ and componentwise subgroup containment."""
        refine: dict[int, int] = {}
        for mine, theirs in zip(self.block_of, other.block_of):
            if refine.setdefault(mine, theirs) != theirs:
                return False
        return all(h <= p for h, p in zip(self.subgroups, other.subgroups))

    def __str__(self) -> str:
        pi = " ".join("{" + " ".join(str(i + 1) for i in block) + "}"
                      for block in self.orbit_blocks)
        names = []
        for h in self.subgroups:
            name = subgroup_name(h)
            names.append(name if name is not None
                         else "<" + ",".join(str(g) for g in minimal_generators(h)) + ">")
        return f"(pi={pi} | {','.join(names)})"

    def __repr__(self) -> str:
        return f"<Code {self}>"


def least_transversal(gset: GSet) -> tuple[int, ...]:
    return tuple(orbit[0] for orbit in gset.orbits)


def is_coordinated(cong: Congruence, transversal: Sequence[int]) -> bool:
    """Transversal points of connected orbits must be related."""
    star = alpha_star(cong)
    for block in star:
        for i, j in combinations(block, 2):
            if not cong.related(transversal[i], transversal[j]):
                return False
    return True


def code_of(cong: Congruence, transversal: Sequence[int]) -> Code:
    """(σ* | Stab_σ(x₁), …, Stab_σ(xₙ)) for a coordinated congruence."""
    if len(transversal) != cong.gset.n_orbits:
        raise ValueError("one transversal point per orbit")
    for i, x in enumerate(transversal):
        if cong.gset.orbit_of[x] != i:
            raise ValueError("transversal points must list orbits in order")
    if not is_coordinated(cong, transversal):
        raise ValueError("congruence is not coordinated with the transversal")
    code = Code(alpha_star(cong), [cong.stabilizer(x) for x in transversal])
    code.require_proper()
    return code


def congruence_from_code(gset: GSet, transversal: Sequence[int], code: Code) -> Congruence:
    """The coordinated congruence generated by a proper code."""
    code.require_proper()
    if len(code.subgroups) != gset.n_orbits:
        raise ValueError("code orbit count mismatch")
    pairs: list[tuple[int, int]] = []
    for block in code.orbit_blocks:
        anchor = transversal[block[0]]
        for i in block[1:]:
            pairs.append((anchor, transversal[i]))
    for i, sub in enumerate(code.subgroups):
        x = transversal[i]
        pairs.extend((x, gset.act(g, x)) for g in sub.members)
    return congruence_generated(gset, pairs)


def code_meet(c1: Code, c2: Code) -> Code:
    """(π₁∧π₂ | Hᵢ∧Pᵢ)."""
    _check_codes(c1, c2)
    groups: dict[tuple[int, int], list[int]] = {}
    for i in range(len(c1.subgroups)):
        groups.setdefault((c1.block_of[i], c2.block_of[i]), []).append(i)
    subs = [subgroup_meet(h, p) for h, p in zip(c1.subgroups, c2.subgroups)]
    return Code(groups.values(), subs)


def code_join(c1: Code, c2: Code) -> Code:
    """(π₁∨π₂ | Kᵢ), Kᵢ the join of every Hⱼ, Pⱼ over the joined class of i."""
    _check_codes(c1, c2)
    n = len(c1.subgroups)
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for code in (c1, c2):
        for block in code.orbit_blocks:
            for i in block[1:]:
                parent[find(i)] = find(block[0])
    classes: dict[int, list[int]] = {}
    for i in range(n):
        classes.setdefault(find(i), []).append(i)
    joined_subs: list[Subgroup | None] = [None] * n
    for members in classes.values():
        acc = trivial_group(c1.subgroups[0].degree)
        for j in members:
            acc = subgroup_join(acc, subgroup_join(c1.subgroups[j], c2.subgroups[j]))
        for j in members:
            joined_subs[j] = acc
    return Code(classes.values(), joined_subs)


def _check_codes(c1: Code, c2: Code):
    if len(c1.subgroups) != len(c2.subgroups):
        raise ValueError("codes must share the orbit set")
    c1.require_proper()
    c2.require_proper()


def enumerate_proper_codes(gset: GSet) -> tuple[Code, ...]:
    """All proper codes over the G-set's orbits (subgroups of the acting group)."""
    from itertools import product
    from .perms import enumerate_subgroups
    subs = enumerate_subgroups(gset.group.degree)
    if symmetric_group(gset.group.degree) != gset.group:
        subs = tuple(h for h in subs if h <= gset.group)
    out: list[Code] = []
    k = gset.n_orbits
    for rgs in partitions_of(k):
        blocks: dict[int, list[int]] = {}
        for i, b in enumerate(rgs):
            blocks.setdefault(b, []).append(i)
        block_list = list(blocks.values())
        for choice in product(subs, repeat=len(block_list)):
            per_orbit: list[Subgroup | None] = [None] * k
            for block, sub in zip(block_list, choice):
                for i in block:
                    per_orbit[i] = sub
            out.append(Code(block_list, per_orbit))
    return tuple(out)


def find_common_transversal(beta: Congruence, gamma: Congruence) -> tuple[int, ...]:
    """A transversal coordinated with both congruences, given beta ⊆ gamma.

    Within each γ*-class pick one γ-class; inside it pick one β-class per
    β*-class; orbit representatives come from those β-classes.  Least-point
    tie-breaking throughout.  Simple congruences are coordinated with any
    transversal, so the result also serves them.
    """
    if not beta <= gamma:
        raise ValueError("beta must refine gamma")
    gset = beta.gset
    gamma_star = alpha_star(gamma)
    beta_star = alpha_star(beta)
    reps: dict[int, int] = {}
    for gblock in gamma_star:
        orbit_points = sorted(x for i in gblock for x in gset.orbits[i])
        gamma_class = set(gamma.blocks[gamma.block_of[orbit_points[0]]])
        for bblock in beta_star:
            if bblock[0] not in gblock:
                continue
            eligible = sorted(x for x in gamma_class
                              if gset.orbit_of[x] in bblock)
            beta_class = set(beta.blocks[beta.block_of[eligible[0]]])
            for i in bblock:
                reps[i] = min(x for x in beta_class if gset.orbit_of[x] == i)
    return tuple(reps[i] for i in range(gset.n_orbits))


_FORBIDDEN_PAIRS = {3: {("T", "T"), ("T", "A"), ("A", "T")},
                    4: {("I", "I"), ("I", "A"), ("A", "I")}}


def is_modular_simple(gset: GSet, sigma: Congruence) -> bool:
    """Stabilizer conditions for modularity of a simple congruence in Con(X).

    Requires a free G-set with the full symmetric group acting.  The
    verdict: every stabilizer is a modular subgroup, and no two orbits
    carry the forbidden stabilizer patterns (two transposition-type
    stabilizers, transposition-type against the 3-cycle group, two
    order-8 dihedral stabilizers, or order-8 dihedral against the even
    subgroup).
    """
    if not gset.free:
        raise ValueError("modularity reduction needs a free G-set")
    degree = gset.group.degree
    if gset.group != symmetric_group(degree):
        raise ValueError("modularity reduction needs the full symmetric group")
    if not sigma.is_simple():
        raise ValueError("congruence must be simple")
    stabs = [sigma.stabilizer(x) for x in least_transversal(gset)]
    for h in stabs:
        if not _modular_in_sub_sn(h):
            return False
    forbidden = _FORBIDDEN_PAIRS.get(degree, set())
    if forbidden:
        types = [classify_stabilizer_pattern(h) for h in stabs]
        for i, j in combinations(range(len(types)), 2):
            if (types[i], types[j]) in forbidden or (types[j], types[i]) in forbidden:
                return False
    return True


def _modular_in_sub_sn(h: Subgroup) -> bool:
    import math
    n = h.degree
    if n <= 4:
        lat, subs = sym_subgroup_lattice(n)
        return lat.is_modular_element(subs.index(h))
    return h.order in (1, math.factorial(n), math.factorial(n) // 2)


def con_lattice(gset: GSet) -> tuple[FiniteLattice, tuple[Congruence, ...]]:
    """The materialized congruence lattice, ordered by refinement."""
    congruences = enumerate_congruences(gset)
    lat = FiniteLattice.from_order(congruences, lambda a, b: a <= b,
                                   [f"c{i}" for i in range(len(congruences))])
    return lat, congruences
