"""Depth-bounded brute-force closure over explicit sentence sets.

Deliberately free of the acceptor machinery: agreement between this module
and the symbolic engine is evidence, not circularity. The bounded result is
exact up to the bound because no rule ever shortens a suffix, so a missing
short sentence can never appear later via longer ones.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dynamics import saturate
from .langs import enumerate_words
from .sentences import Sentence, Word, append_knows, format_sentence
from .states import ModelKind, Scenario, validate_scenario


@dataclass(frozen=True)
class BoundedKnowledge:
    """Every sentence an agent holds with suffix length up to the bound."""

    agent: int
    bound: int
    sentences: frozenset[Sentence]

    def suffixes(self, fact: str) -> frozenset[Word]:
        return frozenset(s.suffix for s in self.sentences if s.fact == fact)


def _own_close(sentences: set[Sentence], agent: int, bound: int) -> set[Sentence]:
    out = set(sentences)
    stack = list(sentences)
    while stack:
        sentence = stack.pop()
        if sentence.depth < bound:
            extended = append_knows(sentence, agent)
            if extended not in out:
                out.add(extended)
                stack.append(extended)
    return out


def _received(from_sender: set[Sentence], sender: int, bound: int,
              understanding: bool) -> set[Sentence]:
    gained = set()
    for message in from_sender:
        if message.depth < bound:
            gained.add(append_knows(message, sender))
        if understanding:
            gained.add(message)
    return gained


def bounded_closure(scenario: Scenario, bound: int, *,
                    disable_understanding: bool = False
                    ) -> tuple[BoundedKnowledge, BoundedKnowledge]:
    """Exhaustively apply the rules, keeping suffixes at or below the bound.

    Rounds alternate receiving everything the other side currently holds
    with closing under the own mark; the universe of bounded sentences is
    finite and rounds only grow, so this terminates at the least fixpoint.
    """
    validate_scenario(scenario)
    if bound < 0:
        raise ValueError("bound must be >= 0")
    understanding = (
        scenario.model is ModelKind.UNDERSTANDING and not disable_understanding
    )
    side_a = _own_close({Sentence(f) for f in scenario.side_a}, 1, bound)
    side_b = _own_close({Sentence(f) for f in scenario.side_b}, 2, bound)
    while True:
        next_a = _own_close(
            side_a | _received(side_b, 2, bound, understanding), 1, bound
        )
        next_b = _own_close(
            side_b | _received(side_a, 1, bound, understanding), 2, bound
        )
        if next_a == side_a and next_b == side_b:
            break
        side_a, side_b = next_a, next_b
    return (
        BoundedKnowledge(1, bound, frozenset(side_a)),
        BoundedKnowledge(2, bound, frozenset(side_b)),
    )


@dataclass(frozen=True)
class Mismatch:
    """Per agent and fact: sentences only one engine produced."""

    agent: int
    fact: str
    only_symbolic: tuple[str, ...]
    only_bounded: tuple[str, ...]


@dataclass(frozen=True)
class OracleReport:
    scenario: Scenario
    depth: int
    mismatches: tuple[Mismatch, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def compare_symbolic(scenario: Scenario, depth: int, *,
                     disable_understanding: bool = False) -> OracleReport:
    """Enumerate each saturated language to the depth and compare it with
    the bounded closure, per agent per fact. Mismatches are report content."""
    result = saturate(scenario, disable_understanding=disable_understanding)
    closed = bounded_closure(
        scenario, depth, disable_understanding=disable_understanding
    )
    mismatches = []
    for state, bounded in zip((result.state_a, result.state_b), closed):
        for fact in scenario.facts:
            symbolic = enumerate_words(state.langs[fact], depth)
            brute = bounded.suffixes(fact)
            if symbolic != brute:
                def render(words):
                    ordered = sorted(words, key=lambda w: (len(w), w))
                    return tuple(format_sentence(Sentence(fact, w)) for w in ordered)

                mismatches.append(
                    Mismatch(
                        agent=state.agent,
                        fact=fact,
                        only_symbolic=render(symbolic - brute),
                        only_bounded=render(brute - symbolic),
                    )
                )
    return OracleReport(scenario, depth, tuple(mismatches))
