"""Identity presentations of nil-varieties and bounded deduction closure.

A presentation is a finite list of identities, either equations u ≈ v or
0-reduced identities w ≈ 0.  When the presentation carries a nilpotency
witness (the product of n distinct letters is 0), the word classes and the
zero set are computed exactly on all words below the bound n − 1; without a
witness the engine runs to a user bound and every verdict is "bounded".
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from typing import Iterator, Union

from .perms import Permutation, Subgroup
from . import words as W
from .words import Word

DEFAULT_BOUND_CAP = 8
BOUND_CAP_ENV = "MODVAR_BOUND_CAP"

JOIN_NONE = "none"
JOIN_T = "T"
JOIN_SL = "SL"


class PresentationSyntaxError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class BoundExceededError(ValueError):
    """A query word is longer than the bound and no nilpotency verdict applies."""


@dataclass(frozen=True)
class Equation:
    left: Word
    right: Word

    def __post_init__(self):
        if self.left == self.right:
            raise ValueError(f"vacuous identity {W.word_str(self.left)} = itself")

    def __str__(self) -> str:
        return f"{W.word_str(self.left)} = {W.word_str(self.right)}"


@dataclass(frozen=True)
class ZeroIdentity:
    word: Word

    def __str__(self) -> str:
        return f"{W.word_str(self.word)} = 0"


Identity = Union[Equation, ZeroIdentity]


@dataclass(frozen=True)
class VarietyPresentation:
    identities: tuple[Identity, ...]
    nil_degree: int | None = None
    join_flag: str = JOIN_NONE

    def __post_init__(self):
        if self.join_flag not in (JOIN_NONE, JOIN_T, JOIN_SL):
            raise ValueError(f"bad join flag {self.join_flag!r}")
        if self.nil_degree is not None and self.nil_degree < 1:
            raise ValueError("nil degree must be positive")

    def equations(self) -> list[Equation]:
        return [i for i in self.identities if isinstance(i, Equation)]

    def zero_identities(self) -> list[ZeroIdentity]:
        return [i for i in self.identities if isinstance(i, ZeroIdentity)]

    def is_zero_reduced(self) -> bool:
        return not self.equations()

    def __str__(self) -> str:
        return "; ".join(str(i) for i in self.identities)


def nilpotency_word(n: int) -> Word:
    """The product of n distinct canonical letters."""
    return W.canonical_letters(n)


def bound_cap() -> int:
    raw = os.environ.get(BOUND_CAP_ENV)
    if raw is None:
        return DEFAULT_BOUND_CAP
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ValueError(f"{BOUND_CAP_ENV} must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise ValueError(f"{BOUND_CAP_ENV} must be positive")
    return cap


def _witness_degree(identity: Identity) -> int | None:
    """n when the identity is a product of n distinct letters ≈ 0."""
    if isinstance(identity, ZeroIdentity) and len(set(identity.word)) == len(identity.word):
        return len(identity.word)
    return None


def parse_presentation(text: str, strict: bool = False, detect: bool = True,
                       join_flag: str = JOIN_NONE,
                       detect_cap: int | None = None) -> VarietyPresentation:
    """Parse the identity-file grammar.

    One identity per line, ``LHS = RHS``; ``#`` starts a comment; an RHS of
    ``0`` marks a 0-reduced identity.  The nilpotency witness is taken from
    an explicit line whose LHS is a product of distinct letters and RHS 0;
    failing that (and with detect=True) the engine tries to derive one, up
    to the MODVAR_BOUND_CAP cap.  strict=True makes a missing witness an
    error.
    """
    identities: list[Identity] = []
    witness: int | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.count("=") != 1:
            raise PresentationSyntaxError("expected exactly one '='", lineno)
        lhs_text, rhs_text = (part.strip() for part in line.split("="))
        try:
            lhs = W.parse_word(lhs_text)
        except W.WordSyntaxError as exc:
            raise PresentationSyntaxError(f"bad left side: {exc}", lineno) from exc
        if rhs_text == "0":
            identity: Identity = ZeroIdentity(lhs)
        else:
            try:
                rhs = W.parse_word(rhs_text)
            except W.WordSyntaxError as exc:
                raise PresentationSyntaxError(f"bad right side: {exc}", lineno) from exc
            if lhs == rhs:
                raise PresentationSyntaxError(
                    f"vacuous identity {W.word_str(lhs)} = {W.word_str(rhs)}", lineno)
            identity = Equation(lhs, rhs)
        identities.append(identity)
        w = _witness_degree(identity)
        if w is not None and (witness is None or w < witness):
            witness = w
    if not identities:
        raise PresentationSyntaxError("no identities in presentation")
    if witness is None and detect:
        witness = detect_nil_degree(tuple(identities),
                                    bound_cap() if detect_cap is None else detect_cap)
    if witness is None and strict:
        raise PresentationSyntaxError("no nilpotency witness (strict mode)")
    return VarietyPresentation(tuple(identities), witness, join_flag)


def detect_nil_degree(identities: tuple[Identity, ...], cap: int) -> int | None:
    """Least k ≤ cap with the k-letter product derivably zero within the cap.

    Each probe explores its deduction component through words of length up
    to the cap (derivations may detour through longer words before falling
    into the zero class).  Sound — a bounded derivation is a derivation —
    but incomplete without a witness; on non-nilpotent inputs with rich
    rewriting the component search can get slow at caps past 6.
    """
    zero_words = [i.word for i in identities if isinstance(i, ZeroIdentity)]
    directed = _directed_rules(identities)
    for k in range(1, cap + 1):
        if _zero_reachable(nilpotency_word(k), zero_words, directed, bound=cap):
            return k
    return None


def _directed_rules(identities: tuple[Identity, ...]) -> list[tuple[Word, Word, bool]]:
    """Equations in both directions, flagged when the target has free letters."""
    out = []
    for ident in identities:
        if not isinstance(ident, Equation):
            continue
        for s, t in ((ident.left, ident.right), (ident.right, ident.left)):
            out.append((s, t, bool(W.alphabet(t) - W.alphabet(s))))
    return out


def _zero_reachable(start: Word, zero_words: list[Word],
                    directed: list[tuple[Word, Word, bool]], bound: int) -> bool:
    """Does start's in-bound deduction component contain a zero instance?

    Bounded-mode semantics: rewrite directions with free letters and steps
    leaving the bound are skipped (without a nilpotency witness neither
    forces zero-ness).
    """
    seen = {start}
    frontier = [start]
    while frontier:
        w = frontier.pop()
        for z in zero_words:
            if len(z) <= len(w) and W.contains_instance(z, w):
                return True
        for s, t, has_free in directed:
            if has_free or len(s) > len(w):
                continue
            for begin, end, binding in W.match_all(s, w):
                rewritten = w[:begin] + W.apply_substitution(binding, t) + w[end:]
                if len(rewritten) <= bound and rewritten not in seen:
                    seen.add(rewritten)
                    frontier.append(rewritten)
    return False


def variety_meet(p1: VarietyPresentation, p2: VarietyPresentation) -> VarietyPresentation:
    """Meet of varieties: the union of the identity systems."""
    degrees = [d for d in (p1.nil_degree, p2.nil_degree) if d is not None]
    return VarietyPresentation(p1.identities + p2.identities,
                               min(degrees) if degrees else None)


def _verify_witness(p: VarietyPresentation) -> None:
    """The declared nil degree must be derivable from the identities.

    Presentations built by parse_presentation always satisfy this (the
    degree comes from an explicit witness line or from sound detection);
    the check guards directly constructed presentations.  Derivations are
    searched within a small bound, which may reject exotic valid degrees
    whose derivations need long intermediate words.
    """
    n = p.nil_degree
    for ident in p.identities:
        degree = _witness_degree(ident)
        if degree is not None and degree <= n:
            return
    zero_words = [z.word for z in p.zero_identities()]
    directed = _directed_rules(p.identities)
    if not _zero_reachable(nilpotency_word(n), zero_words, directed, bound=n + 1):
        raise ValueError(f"nil degree {n} is not witnessed by the identities")


class _UnionFind:
    def __init__(self):
        self.parent: dict[Word, Word] = {}

    def add(self, x: Word):
        self.parent.setdefault(x, x)

    def find(self, x: Word) -> Word:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: Word, b: Word):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


class ClosureTable:
    """Word classes and the zero set of a presentation, below a bound.

    The universe is every word of length ≤ L over the first L canonical
    letters.  With a nilpotency witness x₁⋯xₙ ≈ 0 and L = n − 1 the
    restriction computed here is exact:

    * every word of length ≥ n is zero, so a deduction chain between
      non-zero words only visits words of length ≤ L;
    * applying the endomorphism that fixes the letters of the chain's two
      endpoints and sends every other letter to one of them keeps each step
      valid, keeps lengths, and confines the whole chain to the universe;
    * non-zero equivalent words must share alphabets (a letter of one side
      missing from the other could be pumped to arbitrary length, forcing
      both words into the zero class), so whole non-zero classes of
      universe words stay inside the universe;
    * a rewrite step whose result leaves the bound has a result of length
      ≥ n, which is zero, so the source class is marked zero instead;
    * an equation whose one side uses letters missing from the other keeps
      those letters free in instances, admits unbounded pumping, and hence
      zeroes every word containing an instance of the constrained side.

    Without a witness the same computation runs at the user bound and every
    verdict is only "verified up to L".
    """

    def __init__(self, presentation: VarietyPresentation, bound: int,
                 letters: tuple[str, ...], class_members: tuple[tuple[Word, ...], ...],
                 class_of: dict[Word, int], zero_classes: frozenset[int]):
        self.presentation = presentation
        self.bound = bound
        self.letters = letters
        self.class_members = class_members
        self._class_of = class_of
        self.zero_classes = zero_classes
        self.nil_degree = presentation.nil_degree
        self.exact = presentation.nil_degree is not None

    # queries

    def _canon_index(self, w: Word) -> int:
        cw = W.canonical_form(w)
        try:
            return self._class_of[cw]
        except KeyError:
            raise BoundExceededError(
                f"word {W.word_str(w)} is outside the computed bound {self.bound}")

    def _zero_lookup(self, w: Word) -> bool:
        return self._canon_index(w) in self.zero_classes

    def is_zero(self, w: Word) -> bool:
        if self.exact and len(w) >= self.nil_degree:
            return True
        if len(w) > self.bound:
            raise BoundExceededError(
                f"word {W.word_str(w)} exceeds bound {self.bound} with no nilpotency verdict")
        return self._zero_lookup(w)

    def are_equal(self, u: Word, v: Word) -> bool:
        zu, zv = self.is_zero(u), self.is_zero(v)
        if zu or zv:
            return zu and zv
        if W.alphabet(u) != W.alphabet(v):
            return False
        table: dict[str, str] = {}
        for x in u:
            if x not in table:
                table[x] = W.CANONICAL_ALPHABET[len(table)]
        return self._class_of[W.rename(u, table)] == self._class_of[W.rename(v, table)]

    def holds(self, identity: Identity) -> bool:
        if isinstance(identity, ZeroIdentity):
            return self.is_zero(identity.word)
        return self.are_equal(identity.left, identity.right)

    def stabilizer(self, u: Word) -> Subgroup:
        """Permutations of alphabet(u) fixing u's class, indexed by first occurrence.

        For zero words this is the whole symmetric group; callers that need
        to skip zero words check is_zero separately.
        """
        letters = W.letters_in_order(u)
        k = len(letters)
        import itertools
        elements = []
        for images in itertools.permutations(range(1, k + 1)):
            sigma = Permutation(images)
            mapping = {letters[i]: letters[images[i] - 1] for i in range(k)}
            if self.are_equal(u, W.rename(u, mapping)):
                elements.append(sigma)
        return Subgroup(k, elements, _checked=True)

    # iteration helpers

    def classes(self) -> Iterator[tuple[int, tuple[Word, ...], bool]]:
        for i, members in enumerate(self.class_members):
            yield i, members, i in self.zero_classes

    def nonzero_classes(self) -> Iterator[tuple[Word, ...]]:
        for i, members in enumerate(self.class_members):
            if i not in self.zero_classes:
                yield members

    def nonzero_canonical_classes(self) -> Iterator[tuple[Word, ...]]:
        """Non-zero classes containing a canonical word (one per renaming orbit)."""
        for members in self.nonzero_classes():
            if members[0] == W.canonical_form(members[0]):
                yield members

    def to_json_dict(self) -> dict:
        classes = {}
        zero_words = []
        for members in self.class_members:
            rep = members[0]
            if rep != W.canonical_form(rep):
                continue
            if self._class_of[rep] in self.zero_classes:
                zero_words.extend(W.word_str(w) for w in members
                                  if w == W.canonical_form(w))
            else:
                classes[W.word_str(rep)] = [W.word_str(w) for w in members]
        return {
            "bound": self.bound,
            "exact": self.exact,
            "nil_degree": self.nil_degree,
            "classes": classes,
            "zero_set": sorted(zero_words),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)


def build_closure(p: VarietyPresentation, bound: int | None = None) -> ClosureTable:
    """Union-find closure of the one-step rewriting relation below the bound.

    See ClosureTable for the exactness argument.  A larger bound than the
    default n − 1 is allowed (useful for reproducing witnesses at a bigger
    universe); a smaller one is not.
    """
    if p.nil_degree is not None:
        _verify_witness(p)
        default = max(p.nil_degree - 1, 1)
        if bound is None:
            bound = default
        elif bound < default:
            raise ValueError(f"bound {bound} below the exact bound {default}")
    elif bound is None:
        raise ValueError("a bound is required without a nilpotency witness")

    exact = p.nil_degree is not None
    letters = W.canonical_letters(min(bound, len(W.CANONICAL_ALPHABET)))
    universe = W.all_words(letters, bound)
    uf = _UnionFind()
    for w in universe:
        uf.add(w)
    zero_marked: set[Word] = set()

    zero_words = [z.word for z in p.zero_identities()]
    if exact:
        zero_words.append(nilpotency_word(p.nil_degree))
    directed = _directed_rules(p.identities)

    for w in universe:
        for z in zero_words:
            if len(z) <= len(w) and W.contains_instance(z, w):
                zero_marked.add(w)
                break
        for s, t, has_free in directed:
            if len(s) > len(w):
                continue
            if has_free:
                # free letters in t admit unbounded images; with a
                # nilpotency witness that pumps every instance of s into
                # the zero class, without one it proves nothing
                if exact and W.contains_instance(s, w):
                    zero_marked.add(w)
                continue
            for start, end, binding in W.match_all(s, w):
                image = W.apply_substitution(binding, t)
                rewritten = w[:start] + image + w[end:]
                if len(rewritten) > bound:
                    # the result has length ≥ the nilpotency degree
                    if exact:
                        zero_marked.add(w)
                else:
                    uf.union(w, rewritten)

    groups: dict[Word, list[Word]] = {}
    for w in universe:
        groups.setdefault(uf.find(w), []).append(w)
    roots = sorted(groups)
    class_members = tuple(tuple(sorted(groups[r], key=lambda w: (len(w), w)))
                          for r in roots)
    class_of = {w: i for i, members in enumerate(class_members) for w in members}
    zero_classes = frozenset(class_of[w] for w in zero_marked)
    return ClosureTable(p, bound, letters, class_members, class_of, zero_classes)
