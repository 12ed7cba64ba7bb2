"""Permutations of {1..n}, subgroups of small symmetric groups, and the
named subgroups that drive the stabilizer analysis (T_ij, C_ijk, P_ij,kl,
V_4, I_ij,st, A_n, point stabilizers).

Everything is immutable after construction and deterministic: permutations
sort by image tuple, subgroups by the sorted tuple of their elements'
image tuples.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable


@dataclass(frozen=True, order=True)
class Permutation:
    """Bijection of {1..n}; images[i-1] is the image of i."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a bijection of 1..{len(self.images)}: {self.images}")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, img in enumerate(self.images, start=1):
            inv[img - 1] = i
        return Permutation(tuple(inv))

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(1, degree + 1)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Iterable[int]], degree: int) -> "Permutation":
        images = list(range(1, degree + 1))
        # cycles compose right to left, matching compose()
        for cycle in reversed(list(cycles)):
            cycle = list(cycle)
            if len(set(cycle)) != len(cycle):
                raise ValueError(f"repeated point in cycle {cycle}")
            step = list(range(1, degree + 1))
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                if not 1 <= a <= degree:
                    raise ValueError(f"point {a} out of range for degree {degree}")
                step[a - 1] = b
            images = [step[i - 1] for i in images]
        return cls(tuple(images))

    @classmethod
    def parse(cls, text: str, degree: int) -> "Permutation":
        """Parse cycle notation: "(1 2)(3 4)", "(12)(34)", identity "()"."""
        text = text.strip()
        if not re.fullmatch(r"(\(\s*[0-9 ,]*\s*\))+", text):
            raise ValueError(f"bad cycle notation: {text!r}")
        cycles = []
        for body in re.findall(r"\(([^()]*)\)", text):
            body = body.strip()
            if not body:
                continue
            if " " in body or "," in body:
                points = [int(tok) for tok in re.split(r"[ ,]+", body)]
            else:
                points = [int(ch) for ch in body]
            cycles.append(points)
        return cls.from_cycles(cycles, degree)

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Nontrivial cycles, each rotated to start at its least point."""
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            nxt = self(start)
            while nxt != start:
                cycle.append(nxt)
                seen.add(nxt)
                nxt = self(nxt)
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return tuple(out)

    def cycle_type(self) -> tuple[int, ...]:
        lengths = sorted((len(c) for c in self.cycles()), reverse=True)
        fixed = self.degree - sum(lengths)
        return tuple(lengths + [1] * fixed)

    def is_even(self) -> bool:
        return sum(len(c) - 1 for c in self.cycles()) % 2 == 0

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)

    def __repr__(self) -> str:
        return f"Permutation.parse({str(self)!r}, {self.degree})"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """(p∘q)(i) = p(q(i))."""
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} vs {q.degree}")
    return Permutation(tuple(p.images[j - 1] for j in q.images))


class Subgroup:
    """A subgroup of S_degree, stored as the full element set.

    Canonical form: elements sorted by image tuple; the subgroup key is the
    sorted tuple of image tuples, used for hashing and cross-subgroup order.
    """

    __slots__ = ("degree", "elements", "members", "key")

    def __init__(self, degree: int, elements: Iterable[Permutation], _checked=False):
        elements = frozenset(elements)
        if not _checked:
            if not elements:
                raise ValueError("a subgroup is nonempty")
            for p in elements:
                if p.degree != degree:
                    raise ValueError("element degree mismatch")
            if Permutation.identity(degree) not in elements:
                raise ValueError("missing identity")
            for p in elements:
                if p.inverse() not in elements:
                    raise ValueError(f"not closed under inverse: {p}")
                for q in elements:
                    if compose(p, q) not in elements:
                        raise ValueError(f"not closed under composition: {p}, {q}")
        self.degree = degree
        self.elements = elements
        self.members = tuple(sorted(elements))
        self.key = tuple(p.images for p in self.members)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p: Permutation) -> bool:
        return p in self.elements

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subgroup)
                and self.degree == other.degree and self.elements == other.elements)

    def __hash__(self) -> int:
        return hash((self.degree, self.elements))

    def __le__(self, other: "Subgroup") -> bool:
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return self.elements <= other.elements

    def __lt__(self, other: "Subgroup") -> bool:
        return self <= other and self != other

    def is_trivial(self) -> bool:
        return self.order == 1

    def __repr__(self) -> str:
        return f"<Subgroup of S{self.degree}, order {self.order}>"

    def __str__(self) -> str:
        name = subgroup_name(self)
        return name if name is not None else "<" + ",".join(
            str(g) for g in minimal_generators(self)) + ">"


def subgroup_closure(gens: Iterable[Permutation], degree: int | None = None) -> Subgroup:
    """Smallest subgroup containing gens; empty gens with a degree give T."""
    gens = list(gens)
    if degree is None:
        if not gens:
            raise ValueError("degree required for an empty generator set")
        degree = gens[0].degree
    for g in gens:
        if g.degree != degree:
            raise ValueError("generator degree mismatch")
    identity = Permutation.identity(degree)
    elements = {identity}
    frontier = [identity]
    while frontier:
        new = []
        for f in frontier:
            for g in gens:
                h = compose(f, g)
                if h not in elements:
                    elements.add(h)
                    new.append(h)
        frontier = new
    return Subgroup(degree, elements, _checked=True)


def conjugate(h: Subgroup, g: Permutation) -> Subgroup:
    """g⁻¹hg elementwise."""
    if h.degree != g.degree:
        raise ValueError("degree mismatch")
    ginv = g.inverse()
    return Subgroup(h.degree, (compose(compose(ginv, x), g) for x in h.elements),
                    _checked=True)


def subgroup_meet(a: Subgroup, b: Subgroup) -> Subgroup:
    if a.degree != b.degree:
        raise ValueError("degree mismatch")
    return Subgroup(a.degree, a.elements & b.elements, _checked=True)


def subgroup_join(a: Subgroup, b: Subgroup) -> Subgroup:
    if a.degree != b.degree:
        raise ValueError("degree mismatch")
    return subgroup_closure(list(a.elements | b.elements), a.degree)


def trivial_group(degree: int) -> Subgroup:
    return Subgroup(degree, [Permutation.identity(degree)], _checked=True)


@lru_cache(maxsize=None)
def symmetric_group(degree: int) -> Subgroup:
    elements = [Permutation(images) for images in
                itertools.permutations(range(1, degree + 1))]
    return Subgroup(degree, elements, _checked=True)


@lru_cache(maxsize=None)
def alternating_group(degree: int) -> Subgroup:
    return Subgroup(degree, (p for p in symmetric_group(degree).elements if p.is_even()),
                    _checked=True)


def point_stabilizer(degree: int, point: int) -> Subgroup:
    if not 1 <= point <= degree:
        raise ValueError(f"point {point} out of range")
    return Subgroup(degree, (p for p in symmetric_group(degree).elements
                             if p(point) == point), _checked=True)


@lru_cache(maxsize=None)
def enumerate_subgroups(degree: int) -> tuple[Subgroup, ...]:
    """Every subgroup of S_degree, canonically sorted (order, then key).

    Brute force: closures of all generator pairs, deduplicated.  Adequate
    at degree ≤ 5 because every subgroup there is 2-generated.
    """
    if not 1 <= degree <= 5:
        raise ValueError(f"supported degrees are 1..5, got {degree}")
    elements = symmetric_group(degree).members
    found: dict[tuple, Subgroup] = {}
    triv = trivial_group(degree)
    found[triv.key] = triv
    for i, g in enumerate(elements):
        for h in elements[i:]:
            sub = subgroup_closure([g, h], degree)
            found.setdefault(sub.key, sub)
    return tuple(sorted(found.values(), key=lambda s: (s.order, s.key)))


_NAME_RES = [
    ("T", re.compile(r"T\Z")),
    ("Tij", re.compile(r"T(?P<i>[0-9])(?P<j>[0-9])\Z")),
    ("Cijk", re.compile(r"C(?P<pts>[0-9]{3,4})\Z")),
    ("Pij,kl", re.compile(r"P(?P<i>[0-9])(?P<j>[0-9]),(?P<k>[0-9])(?P<l>[0-9])\Z")),
    ("An", re.compile(r"A(?P<n>[0-9])\Z")),
    ("Sn", re.compile(r"S(?P<n>[0-9])\Z")),
    ("V4", re.compile(r"V4\Z")),
    ("Iij,st", re.compile(r"I(?P<i>[0-9])(?P<j>[0-9]),(?P<s>[0-9])(?P<t>[0-9])\Z")),
    ("Stabi", re.compile(r"Stab(?P<i>[0-9])\Z")),
]


def named_subgroup(name: str, degree: int) -> Subgroup:
    """Look up T, T12, C123, C1234, P12,34, A3, S4, V4, I12,34, Stab1, ...

    I_{ij,st} is the order-8 dihedral Sylow 2-subgroup of S_4 generated by
    (ij), (st) and (is)(jt); it contains V_4 and both transpositions.
    """
    for kind, regex in _NAME_RES:
        m = regex.fullmatch(name)
        if m is None:
            continue
        if kind == "T":
            return trivial_group(degree)
        if kind == "Tij":
            i, j = int(m["i"]), int(m["j"])
            _check_points(degree, name, i, j)
            return subgroup_closure([Permutation.from_cycles([(i, j)], degree)])
        if kind == "Cijk":
            pts = [int(c) for c in m["pts"]]
            _check_points(degree, name, *pts)
            return subgroup_closure([Permutation.from_cycles([pts], degree)])
        if kind == "Pij,kl":
            i, j, k, l = (int(m[x]) for x in "ijkl")
            _check_points(degree, name, i, j, k, l)
            return subgroup_closure([Permutation.from_cycles([(i, j), (k, l)], degree)])
        if kind == "An":
            if int(m["n"]) != degree:
                raise ValueError(f"{name} needs degree {m['n']}, got {degree}")
            return alternating_group(degree)
        if kind == "Sn":
            if int(m["n"]) != degree:
                raise ValueError(f"{name} needs degree {m['n']}, got {degree}")
            return symmetric_group(degree)
        if kind == "V4":
            if degree != 4:
                raise ValueError("V4 lives in S4")
            return Subgroup(4, [Permutation.identity(4),
                                Permutation.from_cycles([(1, 2), (3, 4)], 4),
                                Permutation.from_cycles([(1, 3), (2, 4)], 4),
                                Permutation.from_cycles([(1, 4), (2, 3)], 4)],
                            _checked=True)
        if kind == "Iij,st":
            i, j, s, t = (int(m[x]) for x in "ijst")
            if degree != 4 or {i, j, s, t} != {1, 2, 3, 4}:
                raise ValueError(f"{name} needs the four points of S4")
            return subgroup_closure([Permutation.from_cycles([(i, j)], 4),
                                     Permutation.from_cycles([(s, t)], 4),
                                     Permutation.from_cycles([(i, s), (j, t)], 4)])
        if kind == "Stabi":
            return point_stabilizer(degree, int(m["i"]))
    raise ValueError(f"unknown subgroup name {name!r}")


def _check_points(degree: int, name: str, *points: int):
    if len(set(points)) != len(points):
        raise ValueError(f"{name}: repeated point")
    for p in points:
        if not 1 <= p <= degree:
            raise ValueError(f"{name}: point {p} out of range for degree {degree}")


def subgroup_name(h: Subgroup) -> str | None:
    """The conventional name of h when it has one, else None."""
    n = h.degree
    if h.order == 1:
        return "T"
    if h == symmetric_group(n):
        return f"S{n}"
    if n >= 3 and h == alternating_group(n):
        return f"A{n}"
    if h.order == 2:
        (g,) = [p for p in h.members if p != Permutation.identity(n)]
        cyc = g.cycles()
        if len(cyc) == 1:
            return "T{}{}".format(*cyc[0])
        if len(cyc) == 2:
            (i, j), (k, l) = cyc
            return f"P{i}{j},{k}{l}"
        return None
    if h.order in (3, 4):
        cyclic = [g for g in h.members if len(g.cycles()) == 1
                  and len(g.cycles()[0]) == h.order]
        if cyclic:
            return "C" + "".join(map(str, min(g.cycles()[0] for g in cyclic)))
        if h.order == 4 and n == 4 and h == named_subgroup("V4", 4):
            return "V4"
        return None
    if h.order == 8 and n == 4:
        transpositions = sorted(g.cycles()[0] for g in h.members
                                if len(g.cycles()) == 1 and len(g.cycles()[0]) == 2)
        if len(transpositions) == 2:
            (i, j), (s, t) = transpositions
            return f"I{i}{j},{s}{t}"
        return None
    fixed = [i for i in range(1, n + 1) if all(p(i) == i for p in h.members)]
    if len(fixed) == 1 and h.order == math.factorial(n - 1):
        return f"Stab{fixed[0]}"
    return None


def minimal_generators(h: Subgroup) -> tuple[Permutation, ...]:
    """A small deterministic generating set (greedy over sorted elements)."""
    if h.order == 1:
        return ()
    gens: list[Permutation] = []
    current = trivial_group(h.degree)
    for p in h.members:
        if p not in current:
            gens.append(p)
            current = subgroup_closure(gens, h.degree)
            if current.order == h.order:
                break
    return tuple(gens)


def classify_stabilizer_pattern(h: Subgroup) -> str | None:
    """Structural pattern of a stabilizer subgroup, for the forbidden-pair scan.

    Degree 3: "T" = order-2 transposition group, "A" = the 3-cycle group.
    Degree 4: "I" = order-8 dihedral over V_4, "A" = the even subgroup.
    Anything else (including other degrees) has no pattern.
    """
    if h.degree == 3:
        if h.order == 2:
            return "T"
        if h.order == 3:
            return "A"
    elif h.degree == 4:
        if h.order == 8:
            assert named_subgroup("V4", 4) <= h, "order-8 subgroup of S4 must contain V4"
            return "I"
        if h.order == 12:
            return "A"
    return None
