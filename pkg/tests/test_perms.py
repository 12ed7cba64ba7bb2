import math

import pytest

from modvar.perms import (Permutation, Subgroup, alternating_group,
                          classify_stabilizer_pattern, compose, conjugate,
                          enumerate_subgroups, minimal_generators, named_subgroup,
                          point_stabilizer, subgroup_closure, subgroup_join,
                          subgroup_meet, subgroup_name, symmetric_group,
                          trivial_group)


def p(text, degree):
    return Permutation.parse(text, degree)


def test_compose():
    assert compose(p("(1 2)", 2), p("(1 2)", 2)) == Permutation.identity(2)
    assert compose(p("(1 2)", 3), p("(2 3)", 3)) == p("(1 2 3)", 3)
    assert compose(Permutation.identity(4), p("(1 2 3 4)", 4)) == p("(1 2 3 4)", 4)
    with pytest.raises(ValueError):
        compose(p("(1 2)", 2), p("(1 2)", 3))


def test_cycle_notation():
    g = p("(1 2)(3 4)", 4)
    assert str(g) == "(1 2)(3 4)"
    assert str(Permutation.identity(3)) == "()"
    assert p("(12)(34)", 4) == g
    assert p("(1 3 2)", 3).cycles() == ((1, 3, 2),)
    assert g.cycle_type() == (2, 2)
    assert not p("(1 2)", 4).is_even()
    assert g.is_even()


def test_inverse():
    g = p("(1 2 3 4)", 4)
    assert compose(g, g.inverse()) == Permutation.identity(4)


def test_subgroup_closure():
    t12 = subgroup_closure([p("(1 2)", 3)])
    assert t12.order == 2
    assert subgroup_closure([], degree=3).order == 1
    assert subgroup_closure([p("(1 2)", 3), p("(1 2 3)", 3)]).order == 6


def test_subgroup_validation():
    with pytest.raises(ValueError):
        Subgroup(3, [p("(1 2)", 3)])  # missing identity
    with pytest.raises(ValueError):
        Subgroup(3, [Permutation.identity(3), p("(1 2 3)", 3)])  # not closed


def test_enumerate_counts_and_lagrange():
    assert len(enumerate_subgroups(1)) == 1
    assert len(enumerate_subgroups(2)) == 2
    subs3 = enumerate_subgroups(3)
    assert len(subs3) == 6
    assert sorted(h.order for h in subs3) == [1, 2, 2, 2, 3, 6]
    subs4 = enumerate_subgroups(4)
    assert len(subs4) == 30
    for n, subs in ((3, subs3), (4, subs4)):
        for h in subs:
            assert math.factorial(n) % h.order == 0
    with pytest.raises(ValueError):
        enumerate_subgroups(6)


def _enumerate_by_extension(degree):
    """Independent oracle: grow subgroups one generator at a time."""
    found = {trivial_group(degree).key: trivial_group(degree)}
    frontier = [trivial_group(degree)]
    elements = symmetric_group(degree).members
    while frontier:
        fresh = []
        for sub in frontier:
            for g in elements:
                if g in sub:
                    continue
                bigger = subgroup_closure(list(sub.elements) + [g], degree)
                if bigger.key not in found:
                    found[bigger.key] = bigger
                    fresh.append(bigger)
        frontier = fresh
    return set(found.values())


@pytest.mark.parametrize("degree", [2, 3, 4])
def test_enumeration_matches_extension_oracle(degree):
    assert set(enumerate_subgroups(degree)) == _enumerate_by_extension(degree)


@pytest.mark.parametrize("degree", [3, 4])
def test_enumeration_closed_under_conjugation(degree):
    subs = set(enumerate_subgroups(degree))
    for h in subs:
        for g in symmetric_group(degree).members:
            assert conjugate(h, g) in subs


def test_named_subgroups():
    v4 = named_subgroup("V4", 4)
    assert v4.order == 4
    assert p("(1 2)(3 4)", 4) in v4 and p("(1 3)(2 4)", 4) in v4
    assert named_subgroup("A3", 3) == named_subgroup("C123", 3)
    assert named_subgroup("A3", 3).order == 3
    i = named_subgroup("I12,34", 4)
    assert i.order == 8
    assert v4 <= i
    for text in ("(1 2)", "(3 4)", "(1 3 2 4)", "(1 4 2 3)"):
        assert p(text, 4) in i
    assert named_subgroup("Stab1", 4) == point_stabilizer(4, 1)
    with pytest.raises(ValueError):
        named_subgroup("V4", 3)
    with pytest.raises(ValueError):
        named_subgroup("Q8", 4)


def test_conjugate():
    t12 = named_subgroup("T12", 3)
    assert conjugate(t12, p("(2 3)", 3)) == named_subgroup("T13", 3)
    a4 = alternating_group(4)
    v4 = named_subgroup("V4", 4)
    for g in symmetric_group(4).members:
        assert conjugate(a4, g) == a4
        assert conjugate(v4, g) == v4


def test_meet_join():
    lat_i = named_subgroup("I12,34", 4)
    assert subgroup_meet(lat_i, alternating_group(4)) == named_subgroup("V4", 4)
    t12, t13 = named_subgroup("T12", 3), named_subgroup("T13", 3)
    assert subgroup_join(t12, t13) == symmetric_group(3)


def test_subgroup_names():
    assert subgroup_name(trivial_group(4)) == "T"
    assert subgroup_name(named_subgroup("T12", 4)) == "T12"
    assert subgroup_name(named_subgroup("P12,34", 4)) == "P12,34"
    assert subgroup_name(named_subgroup("I13,24", 4)) == "I13,24"
    assert subgroup_name(alternating_group(4)) == "A4"
    assert subgroup_name(symmetric_group(5)) == "S5"
    assert subgroup_name(point_stabilizer(4, 2)) == "Stab2"
    klein_non_normal = subgroup_closure([p("(1 2)", 4), p("(3 4)", 4)])
    assert subgroup_name(klein_non_normal) is None


def test_minimal_generators():
    for name in ("T", "T12", "C123", "I12,34", "A4", "S4"):
        h = named_subgroup(name, 4) if name != "C123" else named_subgroup(name, 4)
        assert subgroup_closure(list(minimal_generators(h)) or [], 4) == h


def test_classify_stabilizer_pattern():
    assert classify_stabilizer_pattern(named_subgroup("T12", 3)) == "T"
    assert classify_stabilizer_pattern(alternating_group(3)) == "A"
    assert classify_stabilizer_pattern(named_subgroup("I12,34", 4)) == "I"
    assert classify_stabilizer_pattern(alternating_group(4)) == "A"
    assert classify_stabilizer_pattern(symmetric_group(3)) is None
    assert classify_stabilizer_pattern(named_subgroup("T12", 4)) is None
    assert classify_stabilizer_pattern(trivial_group(3)) is None
