import itertools
import random

import pytest

from modvar.gsets import (Code, Congruence, GSet, alpha_star, code_join, code_meet,
                          code_of, con_lattice, congruence_from_code,
                          enumerate_congruences, enumerate_proper_codes,
                          enumerate_simple_congruences, find_common_transversal,
                          free_gset, full_congruence, identity_congruence,
                          is_coordinated, is_modular_simple, least_transversal,
                          orbit_congruence, simple_congruence_from_subgroups)
from modvar.perms import (alternating_group, named_subgroup, symmetric_group,
                          trivial_group)


@pytest.fixture(scope="module")
def s3_two_orbits():
    return free_gset(symmetric_group(3), 2)


def test_free_gset_shapes():
    assert free_gset(symmetric_group(2), 1).n_points == 2
    a = free_gset(symmetric_group(3), 2)
    assert a.n_points == 12 and a.n_orbits == 2 and a.free
    assert free_gset(symmetric_group(4), 2).n_points == 48
    with pytest.raises(ValueError):
        free_gset(symmetric_group(2), 0)


def test_gset_validation():
    s2 = symmetric_group(2)
    with pytest.raises(ValueError):
        GSet(s2, [[0, 1]])  # one row per element required
    with pytest.raises(ValueError):
        GSet(s2, [[0, 1], [0, 0]])  # not a bijection
    with pytest.raises(ValueError):
        GSet(s2, [[1, 0], [0, 1]])  # identity must act trivially


def test_orbit_congruence_and_alpha_star(s3_two_orbits):
    a = s3_two_orbits
    ident = identity_congruence(a)
    omega = orbit_congruence(a)
    full = full_congruence(a)
    assert alpha_star(ident) == ((0,), (1,))
    assert alpha_star(omega) == ((0,), (1,))
    assert alpha_star(full) == ((0, 1),)
    assert ident.is_simple() and omega.is_simple() and not full.is_simple()


def test_enumerate_simple(s3_two_orbits):
    assert len(enumerate_simple_congruences(free_gset(symmetric_group(2), 1))) == 2
    simples = enumerate_simple_congruences(s3_two_orbits)
    assert len(simples) == 36
    assert all(c.is_simple() for c in simples)
    full = enumerate_congruences(s3_two_orbits)
    assert len(full) == 54
    assert sum(1 for c in full if c.is_simple()) == 36


def test_alpha_stabilizer(s3_two_orbits):
    a = s3_two_orbits
    assert identity_congruence(a).stabilizer(0).order == 1
    assert orbit_congruence(a).stabilizer(0) == symmetric_group(3)
    t12 = named_subgroup("T12", 3)
    sigma = simple_congruence_from_subgroups(a, [t12, alternating_group(3)])
    assert sigma.stabilizer(least_transversal(a)[0]) == t12
    # stabilizers within one orbit are conjugate via the carrier
    x = a.orbits[0][0]
    for y in a.orbits[0]:
        g = a.carrier(y, x)
        stab_y = sigma.stabilizer(y)
        expected = {g * h * g.inverse() for h in sigma.stabilizer(x).elements}
        assert stab_y.elements == frozenset(expected)


def test_simple_congruences_decompose_three_orbits():
    # the lattice of simple congruences is the direct product of the orbit
    # congruence lattices; exhaustive on a free S2-set with 3 orbits
    a = free_gset(symmetric_group(2), 3)
    single = free_gset(symmetric_group(2), 1)
    singles = {c.key(): c for c in enumerate_simple_congruences(single)}
    simples = enumerate_simple_congruences(a)
    assert len(simples) == len(singles) ** 3 == 8

    def restrict(cong, orbit):
        offset = orbit * single.n_points
        blocks = [[x - offset for x in block if offset <= x < offset + single.n_points]
                  for block in cong.blocks]
        return Congruence(single, [b for b in blocks if b])

    images = {tuple(restrict(c, i).key() for i in range(3)) for c in simples}
    assert len(images) == 8  # bijective onto the product
    for x, y in itertools.product(simples, simples):
        componentwise = all(restrict(x, i) <= restrict(y, i) for i in range(3))
        assert (x <= y) == componentwise
        meet_parts = tuple(restrict(x.meet(y), i).key() for i in range(3))
        assert meet_parts == tuple(restrict(x, i).meet(restrict(y, i)).key()
                                   for i in range(3))
        join_parts = tuple(restrict(x.join(y), i).key() for i in range(3))
        assert join_parts == tuple(restrict(x, i).join(restrict(y, i)).key()
                                   for i in range(3))


def test_unique_carrier(s3_two_orbits):
    a = s3_two_orbits
    for orbit in a.orbits:
        for x, y in itertools.product(orbit[:3], orbit[:3]):
            g = a.carrier(x, y)
            assert a.act(g, y) == x
    with pytest.raises(ValueError):
        a.carrier(a.orbits[0][0], a.orbits[1][0])


def test_code_round_trips(s3_two_orbits):
    a = s3_two_orbits
    transversal = least_transversal(a)
    assert code_of(identity_congruence(a), transversal) == Code(
        [[0], [1]], [trivial_group(3), trivial_group(3)])
    assert code_of(orbit_congruence(a), transversal) == Code(
        [[0], [1]], [symmetric_group(3), symmetric_group(3)])
    for code in enumerate_proper_codes(a):
        cong = congruence_from_code(a, transversal, code)
        assert is_coordinated(cong, transversal)
        assert code_of(cong, transversal) == code


def test_congruence_from_code_examples():
    s2 = free_gset(symmetric_group(2), 2)
    merged = congruence_from_code(
        s2, least_transversal(s2),
        Code([[0, 1]], [symmetric_group(2), symmetric_group(2)]))
    assert merged.blocks == (tuple(range(4)),)
    a = free_gset(symmetric_group(3), 2)
    mixed = congruence_from_code(
        a, least_transversal(a),
        Code([[0], [1]], [named_subgroup("T12", 3), alternating_group(3)]))
    sizes = sorted({len(b) for b in mixed.blocks})
    assert sizes == [2, 3]
    with pytest.raises(ValueError):
        congruence_from_code(a, least_transversal(a),
                             Code([[0, 1]], [named_subgroup("T12", 3),
                                             alternating_group(3)]))


def test_code_meet_join(s3_two_orbits):
    s3 = symmetric_group(3)
    t12, t13, t = named_subgroup("T12", 3), named_subgroup("T13", 3), trivial_group(3)
    top = Code([[0, 1]], [s3, s3])
    other = Code([[0], [1]], [t12, t13])
    assert code_meet(other, top) == other
    join = code_join(other, Code([[0, 1]], [t, t]))
    assert join == Code([[0, 1]], [s3, s3])
    assert code_join(other, other) == other
    with pytest.raises(ValueError):
        code_meet(other, Code([[0]], [t]))


def test_coordination_check(s3_two_orbits):
    a = s3_two_orbits
    transversal = least_transversal(a)
    # congruence pairing transversal points: coordinated
    good = congruence_from_code(a, transversal,
                                Code([[0, 1]], [trivial_group(3), trivial_group(3)]))
    assert is_coordinated(good, transversal)
    # the same congruence against a mismatched transversal is not coordinated
    other = (transversal[0], transversal[1] + 1)
    assert not is_coordinated(good, other)
    with pytest.raises(ValueError):
        code_of(good, other)


def test_con_t_closed_under_meet_join(s3_two_orbits):
    a = s3_two_orbits
    transversal = least_transversal(a)
    codes = enumerate_proper_codes(a)
    rng = random.Random(5)
    congruences = [congruence_from_code(a, transversal, c) for c in codes]
    for _ in range(60):
        x, y = rng.choice(congruences), rng.choice(congruences)
        assert is_coordinated(x.meet(y), transversal)
        assert is_coordinated(x.join(y), transversal)


def test_order_on_codes(s3_two_orbits):
    a = s3_two_orbits
    transversal = least_transversal(a)
    codes = enumerate_proper_codes(a)
    congruences = [congruence_from_code(a, transversal, c) for c in codes]
    for (c1, g1), (c2, g2) in itertools.product(zip(codes, congruences), repeat=2):
        assert (g1 <= g2) == (c1 <= c2)


def test_find_common_transversal(s3_two_orbits):
    a = s3_two_orbits
    ident = identity_congruence(a)
    assert find_common_transversal(ident, ident) == least_transversal(a)
    full = full_congruence(a)
    assert len(find_common_transversal(full, full)) == a.n_orbits
    transversal = least_transversal(a)
    gamma = congruence_from_code(
        a, transversal, Code([[0, 1]], [trivial_group(3), trivial_group(3)]))
    found = find_common_transversal(ident, gamma)
    assert is_coordinated(ident, found) and is_coordinated(gamma, found)
    with pytest.raises(ValueError):
        find_common_transversal(gamma, ident)


def test_common_transversal_random_pairs(s3_two_orbits):
    a = s3_two_orbits
    congruences = enumerate_congruences(a)
    rng = random.Random(11)
    checked = 0
    while checked < 25:
        beta, gamma = rng.choice(congruences), rng.choice(congruences)
        if not beta <= gamma:
            continue
        found = find_common_transversal(beta, gamma)
        assert is_coordinated(beta, found) and is_coordinated(gamma, found)
        checked += 1


def test_is_modular_simple(s3_two_orbits):
    a = s3_two_orbits
    t12, t13 = named_subgroup("T12", 3), named_subgroup("T13", 3)
    assert not is_modular_simple(a, simple_congruence_from_subgroups(a, [t12, t13]))
    assert not is_modular_simple(a, simple_congruence_from_subgroups(a, [t12, t12]))
    assert is_modular_simple(a, identity_congruence(a))
    a3 = alternating_group(3)
    assert is_modular_simple(a, simple_congruence_from_subgroups(a, [a3, a3]))
    assert not is_modular_simple(
        a, simple_congruence_from_subgroups(a, [t12, a3]))
    b = free_gset(symmetric_group(4), 2)
    v4, a4 = named_subgroup("V4", 4), alternating_group(4)
    assert is_modular_simple(b, simple_congruence_from_subgroups(b, [v4, a4]))
    i1, i2 = named_subgroup("I12,34", 4), named_subgroup("I13,24", 4)
    assert not is_modular_simple(b, simple_congruence_from_subgroups(b, [i1, i2]))
    assert not is_modular_simple(b, simple_congruence_from_subgroups(b, [i1, a4]))
    assert is_modular_simple(b, simple_congruence_from_subgroups(b, [v4, i1]))
    with pytest.raises(ValueError):
        is_modular_simple(a, full_congruence(a))


def test_con_lattice_cap():
    big = free_gset(symmetric_group(4), 2)
    with pytest.raises(ValueError):
        enumerate_congruences(big)


@pytest.mark.slow
def test_lemma_suite_sampled_on_s4():
    from modvar.acceptance import gset_lemma_report
    report = gset_lemma_report(4, 2)
    assert all(ok for _, ok, _ in report), [name for name, ok, _ in report if not ok]


def test_congruence_validation(s3_two_orbits):
    a = s3_two_orbits
    with pytest.raises(ValueError):
        Congruence(a, [[0, 1]])  # not a partition of all points
    with pytest.raises(ValueError):
        # orbit 0 split against the action
        Congruence(a, [[0, 1], [2], [3], [4], [5]] + [[x] for x in range(6, 12)])


def test_json_dumps(s3_two_orbits):
    a = s3_two_orbits
    data = a.to_json_dict()
    assert data["orbit_count"] == 2 and data["points"] == 12
    cong = orbit_congruence(a)
    assert cong.to_json_dict() == {"classes": [list(range(6)), list(range(6, 12))]}
    code = code_of(cong, least_transversal(a))
    assert str(code) == "(pi={1} {2} | S3,S3)"
