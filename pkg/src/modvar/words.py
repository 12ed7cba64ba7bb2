"""Free-semigroup words: syntax, substitutions, and the divisibility order.

A word is a nonempty tuple of letter names.  Letter tokens match
``[a-z][a-z0-9]*``; the text form is whitespace separated with an optional
``^k`` power suffix, so ``"x^2 y z"`` denotes x·x·y·z.

The order ``leq(u, v)`` holds when some factor of v is the image of u under
an endomorphism of the free semigroup (every letter of u replaced by a fixed
nonempty word, with possibly empty flanks on either side).  Mutual order is
``equivalent``, which holds exactly when the words differ by a bijective
renaming of letters, i.e. when their canonical forms coincide.
"""

from __future__ import annotations

import itertools
import re
from typing import Iterator

Word = tuple[str, ...]
Substitution = dict[str, Word]

CANONICAL_ALPHABET = "abcdefghijklmnopqrstuvwxyz"

_TOKEN_RE = re.compile(r"(?P<letter>[a-z][a-z0-9]*)(?:\^(?P<power>[0-9]+))?\Z")

EQUIVALENT = "equivalent"
LESS = "less"
GREATER = "greater"
INCOMPARABLE = "incomparable"


class WordSyntaxError(ValueError):
    """Malformed word text."""

    def __init__(self, message: str, token: str | None = None):
        if token is not None:
            message = f"{message}: {token!r}"
        super().__init__(message)
        self.token = token


def parse_word(text: str) -> Word:
    """Parse ``"x^2 y z"`` into ``('x', 'x', 'y', 'z')``."""
    letters: list[str] = []
    for token in text.split():
        m = _TOKEN_RE.match(token)
        if m is None:
            raise WordSyntaxError("bad word token", token)
        power = 1 if m.group("power") is None else int(m.group("power"))
        if power < 1:
            raise WordSyntaxError("power must be at least 1", token)
        letters.extend([m.group("letter")] * power)
    if not letters:
        raise WordSyntaxError("empty word")
    return tuple(letters)


def word_str(word: Word) -> str:
    """Inverse of parse_word, with runs compressed to powers."""
    parts = []
    for letter, run in itertools.groupby(word):
        n = len(list(run))
        parts.append(letter if n == 1 else f"{letter}^{n}")
    return " ".join(parts)


def length(word: Word) -> int:
    return len(word)


def alphabet(word: Word) -> frozenset[str]:
    return frozenset(word)


def letters_in_order(word: Word) -> tuple[str, ...]:
    """Distinct letters in order of first occurrence."""
    seen: dict[str, None] = {}
    for x in word:
        seen.setdefault(x)
    return tuple(seen)


def canonical_letters(k: int) -> tuple[str, ...]:
    if not 0 <= k <= len(CANONICAL_ALPHABET):
        raise ValueError(f"at most {len(CANONICAL_ALPHABET)} canonical letters, got {k}")
    return tuple(CANONICAL_ALPHABET[:k])


def apply_substitution(mapping: Substitution, word: Word) -> Word:
    """Concatenate the images of word's letters.  Every image must be nonempty."""
    out: list[str] = []
    for x in word:
        image = mapping.get(x)
        if image is None:
            raise ValueError(f"substitution undefined on letter {x!r}")
        if not image:
            raise ValueError(f"substitution image for {x!r} is empty")
        out.extend(image)
    return tuple(out)


def rename(word: Word, mapping: dict[str, str]) -> Word:
    return tuple(mapping[x] for x in word)


def canonical_form(word: Word) -> Word:
    """Relabel letters by first occurrence onto the fixed canonical alphabet."""
    table: dict[str, str] = {}
    for x in word:
        if x not in table:
            table[x] = CANONICAL_ALPHABET[len(table)]
    return tuple(table[x] for x in word)


def match_all(pattern: Word, text: Word) -> Iterator[tuple[int, int, Substitution]]:
    """All ways a factor of text is a substitution instance of pattern.

    Yields (start, end, binding) with text[start:end] equal to the
    concatenated binding images of pattern's letters.  Bindings assign a
    nonempty factor to every letter, consistently across occurrences.
    Backtracking, exponential in the worst case; fine at the word lengths
    used here (≤ 8 or so).
    """
    n, k = len(text), len(pattern)
    for start in range(n - k + 1):
        yield from _match(pattern, 0, text, start, {})


def _match(pattern: Word, pi: int, text: Word, tj: int,
           binding: Substitution) -> Iterator[tuple[int, int, Substitution]]:
    if pi == len(pattern):
        yield tj - _total(pattern, binding), tj, dict(binding)
        return
    rest = len(pattern) - pi - 1
    letter = pattern[pi]
    bound = binding.get(letter)
    if bound is not None:
        lb = len(bound)
        if text[tj:tj + lb] == bound and len(text) - tj - lb >= rest:
            yield from _match(pattern, pi + 1, text, tj + lb, binding)
        return
    for size in range(1, len(text) - tj - rest + 1):
        binding[letter] = text[tj:tj + size]
        yield from _match(pattern, pi + 1, text, tj + size, binding)
    del binding[letter]


def _total(pattern: Word, binding: Substitution) -> int:
    return sum(len(binding[x]) for x in pattern)


def contains_instance(pattern: Word, text: Word) -> bool:
    return next(match_all(pattern, text), None) is not None


def leq(u: Word, v: Word) -> bool:
    """u ≤ v: some factor of v is a substitution instance of u."""
    if len(u) > len(v) or len(set(u)) > len(set(v)):
        return False
    return contains_instance(u, v)


def equivalent(u: Word, v: Word) -> bool:
    """u ~ v: a bijective letter renaming carries u onto v."""
    return len(u) == len(v) and canonical_form(u) == canonical_form(v)


def compare(u: Word, v: Word) -> str:
    if equivalent(u, v):
        return EQUIVALENT
    below, above = leq(u, v), leq(v, u)
    if below and not above:
        return LESS
    if above and not below:
        return GREATER
    if not below and not above:
        return INCOMPARABLE
    # mutual strict order cannot happen: mutual leq forces equal length,
    # and equal-length instances are letter-for-letter renamings
    raise AssertionError(f"mutual strict order between {u} and {v}")


def is_substitutive(u: Word, v: Word) -> bool:
    """Equal alphabets and v obtained from u by renaming letters in place."""
    if len(u) != len(v) or alphabet(u) != alphabet(v):
        return False
    table: dict[str, str] = {}
    for a, b in zip(u, v):
        if table.setdefault(a, b) != b:
            return False
    return True


def all_words(letters: tuple[str, ...], max_len: int) -> list[Word]:
    """Every word of length 1..max_len over the given letters, short-lex order."""
    out: list[Word] = []
    for n in range(1, max_len + 1):
        out.extend(itertools.product(letters, repeat=n))
    return out


def canonical_words(max_len: int) -> list[Word]:
    """Every canonical word of length 1..max_len (one per renaming class)."""
    out: list[Word] = []

    def grow(prefix: list[str], used: int):
        if prefix:
            out.append(tuple(prefix))
        if len(prefix) == max_len:
            return
        for i in range(min(used + 1, max_len)):
            prefix.append(CANONICAL_ALPHABET[i])
            grow(prefix, max(used, i + 1))
            prefix.pop()

    grow([], 0)
    out.sort(key=lambda w: (len(w), w))
    return out
