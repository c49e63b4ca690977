"""Finite acceptors over the two agent marks.

Everything funnels into one canonical form: a complete deterministic
acceptor, minimized and renumbered breadth-first with letter 1 before
letter 2. Two acceptors recognize the same language exactly when their
canonical forms are structurally identical, which is what makes language
values safe to intern and compare by equality.
"""

from __future__ import annotations

from dataclasses import dataclass

from .regexes import Alt, Cat, Empty, Eps, Lit, Opt, Plus, Regex, Star

LETTERS = (1, 2)


@dataclass(frozen=True)
class Dfa:
    """Complete deterministic acceptor; state 0 is the start state.

    delta[s] is the pair of successor states on letters 1 and 2.
    """

    delta: tuple[tuple[int, int], ...]
    accepting: tuple[bool, ...]

    def accepts(self, word) -> bool:
        state = 0
        for letter in word:
            if letter not in (1, 2):
                raise ValueError(f"letter must be 1 or 2, got {letter!r}")
            state = self.delta[state][letter - 1]
        return self.accepting[state]


class Nfa:
    """Mutable epsilon-NFA used only while combining acceptors."""

    def __init__(self):
        self.eps: list[list[int]] = []
        self.moves: list[dict[int, list[int]]] = []

    def add_state(self) -> int:
        self.eps.append([])
        self.moves.append({})
        return len(self.eps) - 1

    def add_eps(self, src: int, dst: int) -> None:
        self.eps[src].append(dst)

    def add_move(self, src: int, letter: int, dst: int) -> None:
        self.moves[src].setdefault(letter, []).append(dst)

    def embed(self, dfa: Dfa) -> int:
        """Copy a DFA in as plain transitions; returns the state offset."""
        offset = len(self.eps)
        for _ in dfa.delta:
            self.add_state()
        for state, row in enumerate(dfa.delta):
            for letter, target in zip(LETTERS, row):
                self.add_move(offset + state, letter, offset + target)
        return offset


def compile_regex(r: Regex) -> Dfa:
    """Thompson construction followed by the canonical determinization."""
    nfa = Nfa()
    start, accept = _fragment(nfa, r)
    return determinize(nfa, [start], {accept})


def _fragment(nfa: Nfa, r: Regex) -> tuple[int, int]:
    match r:
        case Empty():
            return nfa.add_state(), nfa.add_state()
        case Eps():
            s, t = nfa.add_state(), nfa.add_state()
            nfa.add_eps(s, t)
            return s, t
        case Lit(letter):
            s, t = nfa.add_state(), nfa.add_state()
            nfa.add_move(s, letter, t)
            return s, t
        case Alt(a, b):
            sa, ta = _fragment(nfa, a)
            sb, tb = _fragment(nfa, b)
            s, t = nfa.add_state(), nfa.add_state()
            nfa.add_eps(s, sa)
            nfa.add_eps(s, sb)
            nfa.add_eps(ta, t)
            nfa.add_eps(tb, t)
            return s, t
        case Cat(a, b):
            sa, ta = _fragment(nfa, a)
            sb, tb = _fragment(nfa, b)
            nfa.add_eps(ta, sb)
            return sa, tb
        case Star(body):
            sb, tb = _fragment(nfa, body)
            s = nfa.add_state()
            nfa.add_eps(s, sb)
            nfa.add_eps(tb, s)
            return s, s
        case Plus(body):
            sb, tb = _fragment(nfa, body)
            t = nfa.add_state()
            nfa.add_eps(tb, t)
            nfa.add_eps(t, sb)
            return sb, t
        case Opt(body):
            sb, tb = _fragment(nfa, body)
            s, t = nfa.add_state(), nfa.add_state()
            nfa.add_eps(s, sb)
            nfa.add_eps(s, t)
            nfa.add_eps(tb, t)
            return s, t
    raise TypeError(f"not a regex node: {r!r}")


def determinize(nfa: Nfa, starts, finals) -> Dfa:
    """Subset construction; the empty subset serves as the dead state, so
    the result is always complete. Returns the canonical minimal form."""
    finals = set(finals)

    def closure(states: frozenset) -> frozenset:
        out = set(states)
        stack = list(states)
        while stack:
            for nxt in nfa.eps[stack.pop()]:
                if nxt not in out:
                    out.add(nxt)
                    stack.append(nxt)
        return frozenset(out)

    start = closure(frozenset(starts))
    index = {start: 0}
    order = [start]
    rows = []
    i = 0
    while i < len(order):
        current = order[i]
        row = []
        for letter in LETTERS:
            targets = set()
            for state in current:
                targets.update(nfa.moves[state].get(letter, ()))
            subset = closure(frozenset(targets))
            if subset not in index:
                index[subset] = len(order)
                order.append(subset)
            row.append(index[subset])
        rows.append(tuple(row))
        i += 1
    accepting = tuple(bool(subset & finals) for subset in order)
    return canonical_dfa(Dfa(tuple(rows), accepting))


def canonical_dfa(dfa: Dfa) -> Dfa:
    """Moore minimization plus breadth-first renumbering.

    Assumes every state is reachable (true for anything built here).
    """
    n = len(dfa.delta)
    block = [1 if acc else 0 for acc in dfa.accepting]
    n_blocks = len(set(block))
    while True:
        signature_index: dict[tuple[int, int, int], int] = {}
        refined = [0] * n
        for state in range(n):
            sig = (block[state], block[dfa.delta[state][0]], block[dfa.delta[state][1]])
            refined[state] = signature_index.setdefault(sig, len(signature_index))
        block = refined
        if len(signature_index) == n_blocks:
            break
        n_blocks = len(signature_index)

    representative: dict[int, int] = {}
    for state in range(n):
        representative.setdefault(block[state], state)
    quotient_delta = {
        b: (block[dfa.delta[rep][0]], block[dfa.delta[rep][1]])
        for b, rep in representative.items()
    }

    # BFS from the start block, letter 1 first, fixes the numbering.
    number = {block[0]: 0}
    order = [block[0]]
    i = 0
    while i < len(order):
        for target in quotient_delta[order[i]]:
            if target not in number:
                number[target] = len(order)
                order.append(target)
        i += 1
    delta = tuple(
        (number[quotient_delta[b][0]], number[quotient_delta[b][1]]) for b in order
    )
    accepting = tuple(bool(dfa.accepting[representative[b]]) for b in order)
    return Dfa(delta, accepting)


def product_dfa(a: Dfa, b: Dfa, keep) -> Dfa:
    """Reachable product of two complete DFAs; `keep` decides acceptance
    from the two component flags. Returns the canonical minimal form."""
    index = {(0, 0): 0}
    order = [(0, 0)]
    rows = []
    i = 0
    while i < len(order):
        s, t = order[i]
        row = []
        for letter_index in (0, 1):
            pair = (a.delta[s][letter_index], b.delta[t][letter_index])
            if pair not in index:
                index[pair] = len(order)
                order.append(pair)
            row.append(index[pair])
        rows.append(tuple(row))
        i += 1
    accepting = tuple(keep(a.accepting[s], b.accepting[t]) for s, t in order)
    return canonical_dfa(Dfa(tuple(rows), accepting))


def dfa_to_dot(dfa: Dfa, name: str = "lang") -> str:
    """GraphViz rendering: double circles accept, edges carry the letters."""
    lines = [
        f"digraph {name} {{",
        "  rankdir=LR;",
        '  __start [shape=point, label=""];',
        "  __start -> s0;",
    ]
    for state, acc in enumerate(dfa.accepting):
        shape = "doublecircle" if acc else "circle"
        lines.append(f"  s{state} [shape={shape}, label=\"{state}\"];")
    for state, row in enumerate(dfa.delta):
        if row[0] == row[1]:
            lines.append(f"  s{state} -> s{row[0]} [label=\"1,2\"];")
        else:
            lines.append(f"  s{state} -> s{row[0]} [label=\"1\"];")
            lines.append(f"  s{state} -> s{row[1]} [label=\"2\"];")
    lines.append("}")
    return "\n".join(lines) + "\n"
