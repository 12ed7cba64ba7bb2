"""Explicit finite lattices over a boolean order matrix.

The central tests: the definitional modular-element check (the modular law
against all pairs y ≤ z) and the pentagon characterization (an element is
modular iff it is never the side element of an N₅ sublattice), plus the
median-identity neutrality test, M₃/N₅ sublattice search, partition
lattices, products, ideals, quotients, and a Hasse-graph isomorphism check.
"""

from __future__ import annotations

import json
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterator, Sequence

import numpy as np

from .perms import Subgroup, enumerate_subgroups

M3 = "M3"
N5 = "N5"


class LatticeError(ValueError):
    """The input order is not a lattice."""


class FiniteLattice:
    """A lattice on elements 0..size-1 given by its order matrix.

    leq[i, j] means i ≤ j.  Validation checks the partial-order axioms and
    that every pair has a unique least upper and greatest lower bound; the
    meet and join tables are materialized during validation.
    """

    def __init__(self, leq: np.ndarray, labels: Sequence[str] | None = None):
        leq = np.asarray(leq, dtype=bool)
        if leq.ndim != 2 or leq.shape[0] != leq.shape[1]:
            raise LatticeError(f"order matrix must be square, got {leq.shape}")
        m = leq.shape[0]
        if m == 0:
            raise LatticeError("a lattice is nonempty")
        if not leq.diagonal().all():
            raise LatticeError("order is not reflexive")
        if (leq & leq.T & ~np.eye(m, dtype=bool)).any():
            raise LatticeError("order is not antisymmetric")
        closure = leq @ leq
        if (closure & ~leq).any():
            raise LatticeError("order is not transitive")
        self.size = m
        self.leq = leq.copy()
        self.leq.setflags(write=False)
        if labels is not None and len(labels) != m:
            raise LatticeError("label count mismatch")
        self.labels = tuple(labels) if labels is not None else tuple(map(str, range(m)))
        self.meet_table, self.join_table = self._build_tables()

    def _build_tables(self) -> tuple[np.ndarray, np.ndarray]:
        m = self.size
        meet = np.empty((m, m), dtype=np.int64)
        join = np.empty((m, m), dtype=np.int64)
        cols = self.leq
        rows = self.leq.T
        for i in range(m):
            for j in range(i, m):
                meet[i, j] = meet[j, i] = self._extreme(
                    np.flatnonzero(cols[:, i] & cols[:, j]), cols, "meet", i, j)
                join[i, j] = join[j, i] = self._extreme(
                    np.flatnonzero(rows[:, i] & rows[:, j]), rows, "join", i, j)
        meet.setflags(write=False)
        join.setflags(write=False)
        return meet, join

    def _extreme(self, candidates: np.ndarray, bound: np.ndarray,
                 kind: str, i: int, j: int) -> int:
        # glb: candidate below-closing all common lower bounds (dually for lub)
        if candidates.size == 0:
            raise LatticeError(f"no {kind} for elements {i}, {j}")
        sub = bound[np.ix_(candidates, candidates)]
        hits = np.flatnonzero(sub.all(axis=0))
        if hits.size != 1:
            raise LatticeError(f"{kind} of {i}, {j} is not unique")
        return int(candidates[hits[0]])

    # constructors

    @classmethod
    def from_covers(cls, size: int, covers: Sequence[tuple[int, int]],
                    labels: Sequence[str] | None = None) -> "FiniteLattice":
        """Build from cover pairs (child, parent) by transitive closure."""
        leq = np.eye(size, dtype=bool)
        for child, parent in covers:
            leq[child, parent] = True
        for k in range(size):
            leq |= np.outer(leq[:, k], leq[k, :])
        return cls(leq, labels)

    @classmethod
    def from_order(cls, items: Sequence, leq_fn: Callable,
                   labels: Sequence[str] | None = None) -> "FiniteLattice":
        m = len(items)
        leq = np.zeros((m, m), dtype=bool)
        for i, a in enumerate(items):
            for j, b in enumerate(items):
                leq[i, j] = leq_fn(a, b)
        return cls(leq, labels)

    # basic queries

    def leq_bool(self, i: int, j: int) -> bool:
        return bool(self.leq[i, j])

    def meet(self, i: int, j: int) -> int:
        return int(self.meet_table[i, j])

    def join(self, i: int, j: int) -> int:
        return int(self.join_table[i, j])

    @property
    def bottom(self) -> int:
        return int(np.flatnonzero(self.leq.all(axis=1))[0])

    @property
    def top(self) -> int:
        return int(np.flatnonzero(self.leq.all(axis=0))[0])

    def covers(self) -> list[tuple[int, int]]:
        lt = self.leq & ~np.eye(self.size, dtype=bool)
        cover = lt & ~(lt @ lt)
        return [(int(i), int(j)) for i, j in np.argwhere(cover)]

    def heights(self) -> list[int]:
        """Longest chain length from the bottom, per element."""
        h = [0] * self.size
        for i in sorted(range(self.size), key=lambda x: int(self.leq[:, x].sum())):
            below = [j for j in range(self.size) if self.leq[j, i] and j != i]
            h[i] = 1 + max((h[j] for j in below), default=-1)
        return h

    # special-element tests

    def is_modular_element(self, x: int) -> bool:
        """(x ∨ y) ∧ z == (x ∧ z) ∨ y for every pair y ≤ z."""
        lhs = self.meet_table[self.join_table[x]]          # [y, z]
        rhs = self.join_table[self.meet_table[x]].T        # [y, z]
        return bool(np.all(~self.leq | (lhs == rhs)))

    def is_modular_element_via_n5(self, x: int) -> bool:
        """x is modular iff it is never the side element of a pentagon."""
        incomp = ~self.leq[x] & ~self.leq[:, x]
        idx = np.flatnonzero(incomp)
        if idx.size < 2:
            return True
        mx = self.meet_table[x][idx]
        jx = self.join_table[x][idx]
        strict = self.leq[np.ix_(idx, idx)] & ~np.eye(idx.size, dtype=bool)
        pentagon = strict & (mx[:, None] == mx[None, :]) & (jx[:, None] == jx[None, :])
        return not bool(pentagon.any())

    def is_neutral_element(self, x: int) -> bool:
        """Median identity with x against every pair y, z."""
        m = self.size
        jxy = self.join_table[x][:, None]                  # [y, 1]
        jyz = self.join_table                              # [y, z]
        jzx = self.join_table[:, x][None, :]               # [1, z]
        lhs = self.meet_table[self.meet_table[jxy, jyz], jzx]
        mxy = self.meet_table[x][:, None]
        myz = self.meet_table
        mzx = self.meet_table[:, x][None, :]
        rhs = self.join_table[self.join_table[mxy, myz], mzx]
        return bool(np.all(lhs == rhs))

    def modular_elements(self) -> list[int]:
        return [x for x in range(self.size) if self.is_modular_element(x)]

    def neutral_elements(self) -> list[int]:
        return [x for x in range(self.size) if self.is_neutral_element(x)]

    # sublattice search

    def find_sublattices(self, pattern: str) -> Iterator[tuple[int, ...]]:
        """All embedded copies of M₃ or N₅ as element tuples.

        M₃ yields (bottom, a1, a2, a3, top) with a1 < a2 < a3 as indices;
        N₅ yields (bottom, low, high, side, top) with low < high the chain.
        """
        if pattern == M3:
            yield from self._find_m3()
        elif pattern == N5:
            yield from self._find_n5()
        else:
            raise ValueError(f"unknown pattern {pattern!r}")

    def _incomparable(self, i: int, j: int) -> bool:
        return not (self.leq[i, j] or self.leq[j, i])

    def _find_m3(self) -> Iterator[tuple[int, ...]]:
        for a, b in combinations(range(self.size), 2):
            if not self._incomparable(a, b):
                continue
            o, i = self.meet(a, b), self.join(a, b)
            for c in range(b + 1, self.size):
                if (self._incomparable(a, c) and self._incomparable(b, c)
                        and self.meet(a, c) == o and self.meet(b, c) == o
                        and self.join(a, c) == i and self.join(b, c) == i):
                    yield (o, a, b, c, i)

    def _find_n5(self) -> Iterator[tuple[int, ...]]:
        for c in range(self.size):
            idx = [i for i in range(self.size) if self._incomparable(i, c)]
            for a, b in combinations(idx, 2):
                if self.leq[b, a]:
                    a, b = b, a
                if not self.leq[a, b] or a == b:
                    continue
                o, i = self.meet(c, a), self.join(c, b)
                if self.meet(c, b) == o and self.join(c, a) == i:
                    yield (o, a, b, c, i)

    def find_sublattice(self, pattern: str) -> tuple[int, ...] | None:
        return next(self.find_sublattices(pattern), None)

    # constructions

    def direct_product(self, other: "FiniteLattice") -> "FiniteLattice":
        """Componentwise order; element (i, j) maps to index i*other.size + j."""
        leq = np.kron(self.leq, other.leq)
        labels = [f"({a},{b})" for a in self.labels for b in other.labels]
        return FiniteLattice(leq, labels)

    def principal_ideal(self, x: int) -> tuple["FiniteLattice", tuple[int, ...]]:
        """The down-set of x with induced order, plus its element indices."""
        idx = tuple(int(i) for i in np.flatnonzero(self.leq[:, x]))
        sub = self.leq[np.ix_(idx, idx)]
        return FiniteLattice(sub, [self.labels[i] for i in idx]), idx

    def congruence_from_pairs(self, pairs: Sequence[tuple[int, int]]) -> tuple[int, ...]:
        """Least lattice congruence containing the pairs, as block ids.

        Fixpoint: whenever x ≡ y, force x∧z ≡ y∧z and x∨z ≡ y∨z for all z.
        """
        parent = list(range(self.size))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        def union(a, b):
            ra, rb = find(a), find(b)
            if ra == rb:
                return False
            parent[max(ra, rb)] = min(ra, rb)
            return True

        for a, b in pairs:
            union(a, b)
        changed = True
        while changed:
            changed = False
            for a in range(self.size):
                for b in range(a + 1, self.size):
                    if find(a) != find(b):
                        continue
                    for z in range(self.size):
                        if union(self.meet(a, z), self.meet(b, z)):
                            changed = True
                        if union(self.join(a, z), self.join(b, z)):
                            changed = True
        roots = sorted({find(i) for i in range(self.size)})
        index = {r: k for k, r in enumerate(roots)}
        return tuple(index[find(i)] for i in range(self.size))

    def quotient(self, blocks: Sequence[int]) -> tuple["FiniteLattice", "LatticeMap"]:
        """Quotient by a lattice congruence given as block ids."""
        k = max(blocks) + 1
        reps = [min(i for i in range(self.size) if blocks[i] == b) for b in range(k)]
        leq = np.zeros((k, k), dtype=bool)
        for a in range(k):
            for b in range(k):
                leq[a, b] = blocks[self.meet(reps[a], reps[b])] == a
        labels = ["|".join(self.labels[i] for i in range(self.size) if blocks[i] == b)
                  for b in range(k)]
        quot = FiniteLattice(leq, labels)
        return quot, LatticeMap(self, quot, tuple(blocks))

    # isomorphism of Hasse diagrams

    def is_isomorphic_to(self, other: "FiniteLattice") -> bool:
        if self.size != other.size:
            return False
        inv_a, inv_b = _refine_invariants(self), _refine_invariants(other)
        if sorted(inv_a) != sorted(inv_b):
            return False
        up_a, down_a = _neighbor_sets(self)
        up_b, down_b = _neighbor_sets(other)
        order = sorted(range(self.size), key=lambda v: (inv_a.count(inv_a[v]), v))
        assignment: dict[int, int] = {}
        used: set[int] = set()

        def extend(k: int) -> bool:
            if k == self.size:
                return True
            v = order[k]
            for w in range(self.size):
                if w in used or inv_a[v] != inv_b[w]:
                    continue
                ok = True
                for u, fu in assignment.items():
                    if ((u in up_a[v]) != (fu in up_b[w])
                            or (u in down_a[v]) != (fu in down_b[w])):
                        ok = False
                        break
                if ok:
                    assignment[v] = w
                    used.add(w)
                    if extend(k + 1):
                        return True
                    del assignment[v]
                    used.discard(w)
            return False

        return extend(0)

    # output

    def to_dot(self, highlight: Sequence[int] = (), graph_name: str = "lattice") -> str:
        marked = set(highlight)
        lines = [f"digraph {graph_name} {{", "  rankdir=BT;",
                 '  node [shape=ellipse, fontsize=11];']
        for i in range(self.size):
            style = ' style=filled fillcolor="lightblue"' if i in marked else ""
            lines.append(f'  n{i} [label="{self.labels[i]}"{style}];')
        for child, parent in self.covers():
            lines.append(f"  n{child} -> n{parent};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "size": self.size,
            "covers": [[c, p] for c, p in self.covers()],
            "labels": list(self.labels),
            "modular_elements": self.modular_elements(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)


def _refine_invariants(lat: FiniteLattice, rounds: int = 4) -> list:
    up, down = _neighbor_sets(lat)
    height = lat.heights()
    inv = [(height[i], len(up[i]), len(down[i])) for i in range(lat.size)]
    for _ in range(rounds):
        inv = [(inv[i], tuple(sorted(inv[j] for j in up[i])),
                tuple(sorted(inv[j] for j in down[i]))) for i in range(lat.size)]
    return inv


def _neighbor_sets(lat: FiniteLattice) -> tuple[list[set[int]], list[set[int]]]:
    up: list[set[int]] = [set() for _ in range(lat.size)]
    down: list[set[int]] = [set() for _ in range(lat.size)]
    for child, parent in lat.covers():
        up[child].add(parent)
        down[parent].add(child)
    return up, down


class LatticeMap:
    """A total assignment between lattices, checkable as a homomorphism."""

    def __init__(self, source: FiniteLattice, target: FiniteLattice,
                 assignment: Sequence[int]):
        if len(assignment) != source.size:
            raise ValueError("assignment must be total on the source")
        for v in assignment:
            if not 0 <= v < target.size:
                raise ValueError(f"image {v} out of range")
        self.source = source
        self.target = target
        self.assignment = tuple(assignment)

    def __call__(self, i: int) -> int:
        return self.assignment[i]

    def is_homomorphism(self) -> bool:
        return self.violation() is None

    def violation(self) -> tuple[int, int, str] | None:
        """First pair breaking meet or join preservation, if any."""
        f = self.assignment
        for i in range(self.source.size):
            for j in range(i, self.source.size):
                if f[self.source.meet(i, j)] != self.target.meet(f[i], f[j]):
                    return (i, j, "meet")
                if f[self.source.join(i, j)] != self.target.join(f[i], f[j]):
                    return (i, j, "join")
        return None

    def is_surjective(self) -> bool:
        return len(set(self.assignment)) == self.target.size


def chain(n: int) -> FiniteLattice:
    return FiniteLattice(np.triu(np.ones((n, n), dtype=bool)),
                         [str(i) for i in range(n)])


def pentagon() -> FiniteLattice:
    """N₅: bottom 0, chain 1 < 2, side 3, top 4."""
    return FiniteLattice.from_covers(5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)],
                                     ["0", "a", "b", "c", "1"])


def diamond() -> FiniteLattice:
    """M₃: bottom 0, atoms 1, 2, 3, top 4."""
    return FiniteLattice.from_covers(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
                                     ["0", "x", "y", "z", "1"])


def partitions_of(k: int) -> list[tuple[int, ...]]:
    """All set partitions of {0..k-1} as restricted-growth strings."""
    if k == 0:
        return [()]
    out: list[tuple[int, ...]] = []

    def grow(prefix: list[int], used: int):
        if len(prefix) == k:
            out.append(tuple(prefix))
            return
        for b in range(used + 1):
            prefix.append(b)
            grow(prefix, max(used, b + 1))
            prefix.pop()

    grow([], 0)
    return sorted(out)


def refines(pi: tuple[int, ...], rho: tuple[int, ...]) -> bool:
    """Every block of pi lies inside a block of rho."""
    image: dict[int, int] = {}
    for a, b in zip(pi, rho):
        if image.setdefault(a, b) != b:
            return False
    return True


def partition_label(pi: tuple[int, ...]) -> str:
    blocks: dict[int, list[int]] = {}
    for i, b in enumerate(pi):
        blocks.setdefault(b, []).append(i + 1)
    return "|".join("".join(map(str, blk)) for blk in blocks.values())


def partition_lattice(k: int) -> FiniteLattice:
    """All equivalence relations on {1..k} ordered by refinement."""
    if not 1 <= k <= 6:
        raise ValueError(f"partition lattice supported for 1 ≤ k ≤ 6, got {k}")
    parts = partitions_of(k)
    return FiniteLattice.from_order(parts, refines, [partition_label(p) for p in parts])


@lru_cache(maxsize=None)
def sym_subgroup_lattice(degree: int) -> tuple[FiniteLattice, tuple[Subgroup, ...]]:
    """Sub(S_degree) as a lattice, with the subgroup list in element order."""
    subs = enumerate_subgroups(degree)
    from .perms import subgroup_name, minimal_generators
    labels = []
    for h in subs:
        name = subgroup_name(h)
        if name is None:
            name = "<" + ",".join(str(g) for g in minimal_generators(h)) + ">"
        labels.append(name)
    lat = FiniteLattice.from_order(subs, lambda a, b: a <= b, labels)
    return lat, subs
