import itertools

import pytest

from modvar import words as W


def w(text):
    return W.parse_word(text)


def test_parse_and_print_round_trip():
    assert w("x^2 y z") == ("x", "x", "y", "z")
    assert W.word_str(("x", "x", "y", "z")) == "x^2 y z"
    assert w("x1 x2 x3 x4 x5") == ("x1", "x2", "x3", "x4", "x5")
    assert W.word_str(w("a b b b")) == "a b^3"


def test_parse_rejects_garbage():
    with pytest.raises(W.WordSyntaxError):
        w("")
    with pytest.raises(W.WordSyntaxError):
        w("X y")
    with pytest.raises(W.WordSyntaxError):
        w("x^0")
    with pytest.raises(W.WordSyntaxError):
        w("x^")


def test_alphabet_and_length():
    assert W.alphabet(w("x^2 y z")) == {"x", "y", "z"}
    assert W.length(w("x^2 y z")) == 4
    assert W.length(w("x1 x2 x3 x4 x5")) == 5
    assert W.alphabet(w("x x")) == {"x"}
    assert W.length(w("x x")) == 2
    assert W.letters_in_order(w("z z w")) == ("z", "w")


def test_apply_substitution():
    assert W.apply_substitution({"x": w("x y")}, w("x x")) == w("x y x y")
    ident = {"x": ("x",), "y": ("y",)}
    assert W.apply_substitution(ident, w("x y x")) == w("x y x")
    assert W.apply_substitution({"x": ("x",), "y": w("z z")}, w("x y")) == w("x z z")
    with pytest.raises(ValueError):
        W.apply_substitution({}, w("x"))


def test_canonical_form():
    assert W.canonical_form(w("z z w")) == w("a a b")
    assert W.canonical_form(w("y x y")) == w("a b a")
    assert W.canonical_form(w("a b c")) == w("a b c")


def test_canonical_words_counts():
    # one word per renaming class: Bell numbers per length
    by_len = {}
    for word in W.canonical_words(5):
        by_len[len(word)] = by_len.get(len(word), 0) + 1
    assert by_len == {1: 1, 2: 2, 3: 5, 4: 15, 5: 52}


def test_leq_examples():
    assert W.leq(w("x y"), w("x y z"))
    assert not W.leq(w("x^2"), w("x y x"))
    assert not W.leq(w("x x y z"), w("x y z z"))
    assert not W.leq(w("x y z z"), w("x x y z"))
    assert W.leq(w("x y"), w("x y"))
    # an instance through a genuine substitution: xy <= (ab)(ab) via x,y -> ab, ab
    assert W.leq(w("x y"), w("a b a b"))


def test_compare():
    assert W.compare(w("x y"), w("x y z")) == W.LESS
    assert W.compare(w("x y z"), w("x y")) == W.GREATER
    assert W.compare(w("x x y z"), w("x y z z")) == W.INCOMPARABLE
    assert W.compare(w("x y"), w("y x")) == W.EQUIVALENT


def test_equivalent():
    assert W.equivalent(w("x y"), w("y x"))
    assert not W.equivalent(w("x x y"), w("x y x"))
    assert W.equivalent(w("x y z"), w("z y x"))


def test_is_substitutive():
    assert W.is_substitutive(w("x y z"), w("z y x"))
    assert not W.is_substitutive(w("x x y"), w("x y x"))
    assert W.is_substitutive(w("x y x"), w("x y x"))
    # equal canonical form but different alphabets is not substitutive
    assert not W.is_substitutive(w("x y"), w("x z"))


def _instances_by_cutting(pattern, text):
    """Independent matcher: enumerate cut points instead of backtracking."""
    hits = set()
    k = len(pattern)
    for start in range(len(text)):
        for cuts in itertools.combinations(range(start + 1, len(text) + 1), k):
            segments, prev = [], start
            for c in cuts:
                segments.append(text[prev:c])
                prev = c
            binding = {}
            if all(binding.setdefault(letter, seg) == seg
                   for letter, seg in zip(pattern, segments)):
                hits.add((start, cuts[-1], tuple(sorted(binding.items()))))
    return hits


def test_match_all_against_cutting_oracle():
    words = W.canonical_words(4)
    for pattern in words:
        for text in words:
            mine = {(i, j, tuple(sorted(b.items())))
                    for i, j, b in W.match_all(pattern, text)}
            assert mine == _instances_by_cutting(pattern, text), (pattern, text)


def test_order_axioms_on_short_words():
    words = W.canonical_words(4)
    table = {(u, v): W.leq(u, v) for u in words for v in words}
    for u in words:
        assert table[(u, u)]
    for (u, v), below in table.items():
        if below:
            assert len(u) <= len(v)
            assert len(set(u)) <= len(set(v))
            if table[(v, u)]:
                assert W.equivalent(u, v)
    for u, v in itertools.combinations(words, 2):
        if W.equivalent(u, v):
            assert table[(u, v)] and table[(v, u)]
