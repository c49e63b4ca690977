"""Dotted knowledge sentences over the two agents.

A sentence is a basic fact followed by a chain of agent marks, written
``fact(.agent)*``: ``a.2.1`` is "agent 1 knows that agent 2 knows a".
Each appended mark wraps the whole preceding sentence, so the outermost
knower is always the last mark.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

AGENTS = (1, 2)

# A suffix word: the chain of agent marks, innermost first.
Word = tuple[int, ...]

_FACT_RE = re.compile(r"[a-z][a-z0-9_]*\Z")
_FACT_CHARS = frozenset("abcdefghijklmnopqrstuvwxyz0123456789_")


class SentenceError(ValueError):
    """Text that does not follow the sentence grammar."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


def check_agent(agent: int) -> int:
    if agent not in AGENTS:
        raise SentenceError(f"agent id must be 1 or 2, got {agent!r}")
    return agent


def other_agent(agent: int) -> int:
    """The opposite agent: 1 <-> 2."""
    check_agent(agent)
    return 3 - agent


def check_fact(name: str) -> str:
    if not isinstance(name, str) or not _FACT_RE.match(name):
        raise SentenceError(
            f"bad fact name {name!r}: expected a lowercase letter followed by "
            "lowercase letters, digits or underscores"
        )
    return name


@dataclass(frozen=True)
class Sentence:
    """A fact plus the agent marks wrapped around it: ("a", (2, 1)) is a.2.1."""

    fact: str
    suffix: Word = ()

    def __post_init__(self):
        check_fact(self.fact)
        for agent in self.suffix:
            check_agent(agent)

    @property
    def depth(self) -> int:
        return len(self.suffix)

    def __str__(self) -> str:
        return format_sentence(self)


def parse_sentence(text: str) -> Sentence:
    """Parse ``fact(.agent)*`` text such as ``a.2.1``.

    Errors name the offending position: malformed fact names, empty
    segments, agent marks outside {1, 2}, and trailing dots all reject.
    """
    if not isinstance(text, str):
        raise SentenceError(f"expected sentence text, got {type(text).__name__}")
    if not text:
        raise SentenceError("empty sentence", 0)
    segments = text.split(".")
    fact = segments[0]
    if not _FACT_RE.match(fact):
        pos = 0
        for i, ch in enumerate(fact):
            if ch not in _FACT_CHARS or (i == 0 and not ch.isalpha()):
                pos = i
                break
        raise SentenceError(f"bad fact name {fact!r}", pos)
    suffix = []
    pos = len(fact)
    for segment in segments[1:]:
        pos += 1  # the separating dot
        if segment == "":
            raise SentenceError("empty segment after '.'", pos)
        if segment not in ("1", "2"):
            raise SentenceError(f"agent mark must be '1' or '2', got {segment!r}", pos)
        suffix.append(int(segment))
        pos += len(segment)
    return Sentence(fact, tuple(suffix))


def format_sentence(s: Sentence) -> str:
    """Inverse of parse_sentence: fact name, then one dotted mark per suffix letter."""
    return ".".join([s.fact] + [str(a) for a in s.suffix])


def append_knows(s: Sentence, agent: int) -> Sentence:
    """The sentence "agent knows s": same fact, suffix one mark longer."""
    check_agent(agent)
    return Sentence(s.fact, s.suffix + (agent,))
