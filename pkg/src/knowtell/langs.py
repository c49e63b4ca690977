"""Exact algebra of regular suffix languages over the marks 1 and 2.

Every value is interned behind its canonical minimal acceptor, so equality
is a dictionary-identity check and the lru caches below make the repeated
small operations of the dynamics essentially free. All operations are pure;
nothing here is ever approximated or sampled.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from typing import Sequence

from . import regexes
from .automata import Dfa, Nfa, compile_regex, determinize, dfa_to_dot, product_dfa
from .regexes import Regex, parse_regex
from .sentences import Word


class Lang:
    """An exact regular language of suffix words; immutable and interned."""

    __slots__ = ("dfa", "_hash")

    _interned: dict[Dfa, "Lang"] = {}

    def __new__(cls, dfa: Dfa):
        # dfa must already be canonical; use the module constructors.
        lang = cls._interned.get(dfa)
        if lang is None:
            lang = super().__new__(cls)
            lang.dfa = dfa
            lang._hash = hash(dfa)
            cls._interned[dfa] = lang
        return lang

    def contains(self, word: Word) -> bool:
        return self.dfa.accepts(word)

    @property
    def accepts_empty(self) -> bool:
        return self.dfa.accepting[0]

    @property
    def is_empty(self) -> bool:
        return not any(self.dfa.accepting)

    def __eq__(self, other) -> bool:
        return self is other or (isinstance(other, Lang) and self.dfa == other.dfa)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        sample = sorted(enumerate_words(self, 3), key=lambda w: (len(w), w))
        shown = ",".join("e" if not w else "".join(map(str, w)) for w in sample[:6])
        more = ",..." if len(sample) > 6 or not _is_finite_up_to(self, 3) else ""
        return f"Lang{{{shown}{more}}}"


def _make(dfa: Dfa) -> Lang:
    return Lang(dfa)


@lru_cache(maxsize=None)
def from_ast(r: Regex) -> Lang:
    """Compile a regex AST to its language."""
    return _make(compile_regex(r))


def from_regex(text: str) -> Lang:
    """Compile regex text, e.g. ``"e|1(1|2)*"``; RegexError on bad syntax."""
    return from_ast(parse_regex(text))


@lru_cache(maxsize=None)
def from_word(word: Word) -> Lang:
    """The one-word language {word}."""
    return from_ast(regexes.word_regex(word))


EMPTY: Lang
EPSILON: Lang
ALL_WORDS: Lang
LETTER: dict[int, Lang]


def union(a: Lang, b: Lang) -> Lang:
    if a is b:
        return a
    if (b.dfa.delta, b.dfa.accepting) < (a.dfa.delta, a.dfa.accepting):
        a, b = b, a  # commutative, so normalize the cache key
    return _union(a, b)


@lru_cache(maxsize=None)
def _union(a: Lang, b: Lang) -> Lang:
    return _make(product_dfa(a.dfa, b.dfa, lambda x, y: x or y))


@lru_cache(maxsize=None)
def concat(a: Lang, b: Lang) -> Lang:
    nfa = Nfa()
    offset_a = nfa.embed(a.dfa)
    offset_b = nfa.embed(b.dfa)
    for state, acc in enumerate(a.dfa.accepting):
        if acc:
            nfa.add_eps(offset_a + state, offset_b)
    finals = {offset_b + s for s, acc in enumerate(b.dfa.accepting) if acc}
    return _make(determinize(nfa, [offset_a], finals))


@lru_cache(maxsize=None)
def star(a: Lang) -> Lang:
    nfa = Nfa()
    offset = nfa.embed(a.dfa)
    hub = nfa.add_state()
    nfa.add_eps(hub, offset)
    for state, acc in enumerate(a.dfa.accepting):
        if acc:
            nfa.add_eps(offset + state, hub)
    return _make(determinize(nfa, [hub], {hub}))


def plus(a: Lang) -> Lang:
    return concat(a, star(a))


def option(a: Lang) -> Lang:
    return union(a, EPSILON)


_KINDS = {
    "union": (2, lambda ops: union(*ops)),
    "concat": (2, lambda ops: concat(*ops)),
    "star": (1, lambda ops: star(*ops)),
    "plus": (1, lambda ops: plus(*ops)),
    "option": (1, lambda ops: option(*ops)),
}


def compose(kind: str, operands: Sequence[Lang]) -> Lang:
    """Apply a closure operator by name; arity is checked."""
    if kind not in _KINDS:
        raise ValueError(f"unknown operator {kind!r}")
    arity, apply = _KINDS[kind]
    if len(operands) != arity:
        raise ValueError(f"{kind} takes {arity} operand(s), got {len(operands)}")
    return apply(operands)


def contains(lang: Lang, word: Word) -> bool:
    return lang.contains(word)


def equals(a: Lang, b: Lang) -> bool:
    """Exact language equality via the shared canonical acceptors."""
    return a == b


@lru_cache(maxsize=None)
def subset(a: Lang, b: Lang) -> bool:
    """Exact inclusion: no reachable product state accepts in a but not b."""
    if a is b:
        return True
    seen = {(0, 0)}
    stack = [(0, 0)]
    while stack:
        s, t = stack.pop()
        if a.dfa.accepting[s] and not b.dfa.accepting[t]:
            return False
        for letter_index in (0, 1):
            pair = (a.dfa.delta[s][letter_index], b.dfa.delta[t][letter_index])
            if pair not in seen:
                seen.add(pair)
                stack.append(pair)
    return True


@lru_cache(maxsize=None)
def enumerate_words(lang: Lang, max_len: int) -> frozenset[Word]:
    """Exactly the members with length <= max_len."""
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    out = []

    def walk(state: int, word: Word) -> None:
        if lang.dfa.accepting[state]:
            out.append(word)
        if len(word) < max_len:
            walk(lang.dfa.delta[state][0], word + (1,))
            walk(lang.dfa.delta[state][1], word + (2,))

    walk(0, ())
    return frozenset(out)


def solve_arden(base: Lang, loop: Lang) -> Lang:
    """Least solution X = base . loop* of the equation X = base + X . loop.

    The loop language must not contain the empty word, otherwise the
    solution is not unique and the closed form is not justified.
    """
    if loop.accepts_empty:
        raise ValueError("loop language contains the empty word; no unique solution")
    return concat(base, star(loop))


@lru_cache(maxsize=None)
def cone(word: Word) -> Lang:
    """All extensions of a word: {word} followed by anything."""
    return concat(from_word(word), ALL_WORDS)


def distinguishing_word(a: Lang, b: Lang) -> Word | None:
    """Shortest word (letter 1 before 2) in exactly one of the languages."""
    if a is b:
        return None
    queue = deque([((), (0, 0))])
    seen = {(0, 0)}
    while queue:
        word, (s, t) = queue.popleft()
        if a.dfa.accepting[s] != b.dfa.accepting[t]:
            return word
        for letter_index in (0, 1):
            pair = (a.dfa.delta[s][letter_index], b.dfa.delta[t][letter_index])
            if pair not in seen:
                seen.add(pair)
                queue.append((word + (letter_index + 1,), pair))
    return None


def to_dot(lang: Lang, name: str = "lang") -> str:
    """Canonical acceptor in GraphViz DOT form."""
    return dfa_to_dot(lang.dfa, name)


def _is_finite_up_to(lang: Lang, max_len: int) -> bool:
    # repr helper: does the language have members longer than max_len?
    return len(enumerate_words(lang, max_len + 3)) == len(enumerate_words(lang, max_len))


EMPTY = from_ast(regexes.EMPTY)
EPSILON = from_ast(regexes.EPS)
ALL_WORDS = from_regex("(1|2)*")
LETTER = {1: from_ast(regexes.Lit(1)), 2: from_ast(regexes.Lit(2))}
