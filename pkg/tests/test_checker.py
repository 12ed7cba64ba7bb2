import json

import pytest

from modvar import presentations as P
from modvar.checker import (BOUNDED_ONLY, GAP, MODULAR, NOT_MODULAR, ConditionResult,
                            Verdict, assemble_status, check_condition_a,
                            check_condition_b, check_condition_c, verdict)
from modvar.varieties import build_closure, parse_presentation


def decide(text, **kwargs):
    return verdict(parse_presentation(text), **kwargs)


def test_v1_fails_condition_a_with_collapse_witness():
    # the y -> x collapse of the defining equation produces x^3 y = x^2 y x,
    # a non-substitutive equality of non-zero words
    table = build_closure(parse_presentation(P.V1))
    result = check_condition_a(table)
    assert not result.passed
    assert result.witnesses[0].word_strings == ("a^3 b", "a^2 b a")
    assert check_condition_b(table).passed
    assert check_condition_c(table).passed
    assert decide(P.V1).status == NOT_MODULAR
    assert decide(P.V2).status == NOT_MODULAR


def test_repaired_headline_trio():
    assert decide(P.V1_REPAIRED).status == MODULAR
    assert decide(P.V2_REPAIRED).status == MODULAR
    meet = decide(P.MEET_REPAIRED)
    assert meet.status == NOT_MODULAR
    c_witnesses = [w for w in meet.witnesses if w.condition == "c"]
    assert c_witnesses
    assert c_witnesses[0].word_strings == ("a^2 b c", "a b c^2")


def test_meet_condition_c_witness():
    meet = decide(P.V1_MEET_V2)
    assert meet.status == NOT_MODULAR
    assert not meet.condition("c").passed
    assert not meet.condition("c_prime").passed
    first = meet.condition("c").witnesses[0]
    assert first.word_strings == ("a^2 b c", "a b c^2")
    assert "T/T" in first.detail


def test_commutative_classification():
    assert decide(P.COMMUT_MODULAR).status == MODULAR
    bad = decide(P.COMMUT_NIL4)
    assert bad.status == NOT_MODULAR
    a_result = bad.condition("a")
    assert not a_result.passed
    assert a_result.witnesses[0].word_strings == ("a^2 b", "a b a")


def test_permut3_families_modular():
    for text in P.PERMUT3:
        assert decide(text).status == MODULAR


def test_zero_reduced_modular():
    assert decide(P.ZERO_REDUCED).status == MODULAR
    assert decide("x^2 = 0\nx1 x2 x3 x4 = 0").status == MODULAR
    assert decide("x y x = 0\nx1 x2 x3 x4 x5 = 0").status == MODULAR
    # the degenerate trivial variety, nil degree 1
    assert decide("x = 0").status == MODULAR


def test_condition_b_failure():
    # a non-zero 4-letter word whose stabilizer is a bare transposition group
    bad = decide("x y z t = y x z t\nx1 x2 x3 x4 x5 = 0")
    assert bad.status == NOT_MODULAR
    b_result = bad.condition("b")
    assert not b_result.passed
    assert any("a b c d" in w.word_strings[0] for w in b_result.witnesses)
    assert any("order 2" in w.detail for w in b_result.witnesses)


def test_c_failure_implies_c_prime_failure():
    for text in (P.V1_MEET_V2, P.MEET_REPAIRED, P.COMMUT_NIL4, P.V1_REPAIRED):
        v = decide(text)
        if not v.condition("c").passed:
            assert not v.condition("c_prime").passed


def test_status_assembly():
    ok = ConditionResult("x", True)
    bad = ConditionResult("x", False)
    assert assemble_status(ok, ok, ok, ok) == MODULAR
    assert assemble_status(bad, ok, ok, ok) == NOT_MODULAR
    assert assemble_status(ok, bad, ok, ok) == NOT_MODULAR
    assert assemble_status(ok, ok, bad, bad) == NOT_MODULAR
    # the gap: (a), (b), (c) hold, (c') fails
    assert assemble_status(ok, ok, ok, bad) == GAP
    with pytest.raises(AssertionError):
        assemble_status(ok, ok, bad, ok)


def test_join_flags_do_not_change_status():
    base = decide(P.COMMUT_MODULAR)
    for flag in ("SL", "T"):
        joined = verdict(parse_presentation(P.COMMUT_MODULAR, join_flag=flag))
        assert joined.status == base.status
        assert any("does not change the status" in note for note in joined.notes)


def test_bounded_mode_verdict():
    v = verdict(parse_presentation("x y = y x", detect_cap=2))
    assert v.status == BOUNDED_ONLY
    assert not v.exact
    assert v.exit_code == 2
    assert any("nilpotency witness" in note for note in v.notes)
    wider = verdict(parse_presentation("x y = y x", detect_cap=2), bound=5)
    assert wider.bound == 5


def test_monotone_soundness():
    small = decide(P.V1_MEET_V2)
    large = decide(P.V1_MEET_V2, bound=5)
    assert large.status == NOT_MODULAR
    first_small = small.condition("c").witnesses[0]
    first_large = large.condition("c").witnesses[0]
    assert first_small.word_strings == first_large.word_strings


def test_exit_codes():
    assert decide(P.V1_REPAIRED).exit_code == 0
    assert decide(P.V1_MEET_V2).exit_code == 1
    assert verdict(parse_presentation("x y = y x", detect_cap=2)).exit_code == 2


def test_verdict_json_and_render():
    v = decide(P.V1_MEET_V2)
    data = json.loads(v.to_json())
    assert data["status"] == NOT_MODULAR
    assert set(data["conditions"]) == {"a", "b", "c", "c_prime"}
    assert data["bound"] == 4 and data["nil_degree"] == 5
    assert data["witnesses"][0]["condition"]
    text = v.render()
    assert "status: NotModular" in text
    assert "c=FAIL" in text
    # deterministic output
    assert decide(P.V1_MEET_V2).to_json() == v.to_json()
    assert Verdict.to_json_dict is not None
