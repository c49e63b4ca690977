"""Verification checks: exhaustive scenario grids plus seeded random
traces, producing machine-readable pass/fail reports whose violations carry
replayable witnesses. Grids are never sampled; randomness appears only in
trace generation and always flows from an explicit seed.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Iterator, Sequence

from .dynamics import TellEvent, saturate, step
from .langs import distinguishing_word, enumerate_words
from .oracle import compare_symbolic
from .sentences import Sentence, format_sentence
from .states import (
    KnowledgeState,
    ModelKind,
    Scenario,
    common_knowledge,
    initial_state,
    known_facts,
    language_equal,
    project_success,
)

FACT_POOL = ("a", "b", "c")

# message suffixes sampled for random tells stay shallow; depth is capped
# so candidate lists remain small while still exercising cross-references
SAMPLE_DEPTH = 3


@dataclass(frozen=True)
class Violation:
    scenario: str
    witness: str


@dataclass(frozen=True)
class CheckReport:
    name: str
    scenarios: int
    violations: tuple[Violation, ...]
    millis: int
    notes: tuple[str, ...] = ()

    @property
    def status(self) -> str:
        return "pass" if not self.violations else "fail"


def _finish(name: str, scenarios: int, violations: list[Violation],
            started: float, notes: Sequence[str] = ()) -> CheckReport:
    millis = int((time.perf_counter() - started) * 1000)
    return CheckReport(name, scenarios, tuple(violations), millis, tuple(notes))


def subsets_of(facts: Sequence[str]) -> list[tuple[str, ...]]:
    """All subsets in a fixed order: by inclusion bitmask over fact order."""
    return [
        tuple(f for i, f in enumerate(facts) if mask >> i & 1)
        for mask in range(2 ** len(facts))
    ]


def scenario_grid(max_facts: int, model: ModelKind) -> Iterator[Scenario]:
    """Every subset pair over fact sets of size 1..max_facts."""
    if not 1 <= max_facts <= len(FACT_POOL):
        raise ValueError(f"max_facts must be in 1..{len(FACT_POOL)}")
    for size in range(1, max_facts + 1):
        facts = FACT_POOL[:size]
        for side_a in subsets_of(facts):
            for side_b in subsets_of(facts):
                yield Scenario.make(facts, side_a, side_b, model)


def _inequality_witness(state_a: KnowledgeState, state_b: KnowledgeState,
                        facts: Sequence[str]) -> str:
    for fact in facts:
        if state_a.langs[fact] != state_b.langs[fact]:
            word = distinguishing_word(state_a.langs[fact], state_b.langs[fact])
            sentence = format_sentence(Sentence(fact, word))
            side = 1 if state_a.langs[fact].contains(word) else 2
            return f"'{sentence}' is in side {side}'s language only"
    return "languages differ on no fact"


def check_language_equivalence_props(max_facts: int = 3) -> CheckReport:
    """Saturated languages are equal exactly when the two sides start from
    the same facts; checked both ways over the whole subset grid."""
    started = time.perf_counter()
    violations: list[Violation] = []
    count = 0
    for scenario in scenario_grid(max_facts, ModelKind.COMMUNICATION):
        count += 1
        result = saturate(scenario)
        equal = language_equal(result.state_a, result.state_b)
        expected = scenario.side_a == scenario.side_b
        if equal and not expected:
            violations.append(Violation(
                scenario.describe(),
                "languages equal although the sides' fact sets differ",
            ))
        elif expected and not equal:
            violations.append(Violation(
                scenario.describe(),
                _inequality_witness(result.state_a, result.state_b, scenario.facts),
            ))
    return _finish("language-equivalence", count, violations, started)


def _sample_tell(state_a: KnowledgeState, state_b: KnowledgeState,
                 facts: Sequence[str], rng: random.Random,
                 depth: int = SAMPLE_DEPTH) -> TellEvent | None:
    """A uniformly random truthful tell with message depth <= depth."""
    candidates = []
    for state in (state_a, state_b):
        receiver = 2 if state.agent == 1 else 1
        for fact in facts:
            for word in sorted(enumerate_words(state.langs[fact], depth),
                               key=lambda w: (len(w), w)):
                candidates.append(
                    TellEvent(state.agent, receiver, Sentence(fact, word))
                )
    if not candidates:
        return None
    return rng.choice(candidates)


def check_ck_dynamics(traces: int = 100, max_len: int = 10,
                      seed: int = 42) -> CheckReport:
    """Along random truthful traces, the set of facts that are common
    knowledge stays empty at every prefix and never shrinks, in both models.

    Covers every subset pair over the two-fact set; reproducible from the
    seed alone.
    """
    started = time.perf_counter()
    rng = random.Random(seed)
    violations: list[Violation] = []
    count = 0
    facts = FACT_POOL[:2]
    for model in (ModelKind.COMMUNICATION, ModelKind.UNDERSTANDING):
        for side_a in subsets_of(facts):
            for side_b in subsets_of(facts):
                scenario = Scenario.make(facts, side_a, side_b, model)
                count += 1
                for trace_index in range(traces):
                    length = rng.randint(0, max_len)
                    state_a = initial_state(1, scenario)
                    state_b = initial_state(2, scenario)
                    previous: frozenset[str] = frozenset()
                    for step_index in range(length + 1):
                        ck_set = frozenset(
                            f for f in facts
                            if common_knowledge(state_a, state_b, Sentence(f))
                        )
                        where = f"trace {trace_index} prefix {step_index}"
                        if ck_set:
                            violations.append(Violation(
                                scenario.describe(),
                                f"{where}: common knowledge of "
                                f"{{{','.join(sorted(ck_set))}}} on a finite trace",
                            ))
                        if not previous <= ck_set:
                            violations.append(Violation(
                                scenario.describe(),
                                f"{where}: common knowledge lost: "
                                f"{{{','.join(sorted(previous - ck_set))}}}",
                            ))
                        previous = ck_set
                        if step_index == length:
                            break
                        event = _sample_tell(state_a, state_b, facts, rng)
                        if event is None:
                            break
                        state_a, state_b = step(
                            state_a, state_b, event, scenario.model
                        )
    return _finish("ck-dynamics", count, violations, started)


def check_success_theorems(max_facts: int = 3, *,
                           disable_understanding: bool = False) -> CheckReport:
    """Equal starting fact sets guarantee success under communication alone;
    joint coverage guarantees success (and common knowledge of every fact)
    under full understanding. Coverage gaps with equal languages are listed
    as notes, not violations."""
    started = time.perf_counter()
    violations: list[Violation] = []
    notes: list[str] = []
    count = 0

    for size in range(1, max_facts + 1):
        facts = FACT_POOL[:size]
        scenario = Scenario.make(facts, facts, facts, ModelKind.COMMUNICATION)
        count += 1
        result = saturate(scenario, disable_understanding=disable_understanding)
        if not language_equal(result.state_a, result.state_b):
            violations.append(Violation(
                scenario.describe(),
                _inequality_witness(result.state_a, result.state_b, facts),
            ))
        elif not project_success(result.state_a, result.state_b, scenario):
            violations.append(Violation(scenario.describe(), "success denied"))

    for scenario in scenario_grid(max_facts, ModelKind.UNDERSTANDING):
        count += 1
        result = saturate(scenario, disable_understanding=disable_understanding)
        covered = scenario.side_a | scenario.side_b >= set(scenario.facts)
        if covered:
            if not language_equal(result.state_a, result.state_b):
                violations.append(Violation(
                    scenario.describe(),
                    _inequality_witness(result.state_a, result.state_b,
                                        scenario.facts),
                ))
                continue
            missing_ck = [
                f for f in scenario.facts
                if not common_knowledge(result.state_a, result.state_b,
                                        Sentence(f))
            ]
            if missing_ck:
                violations.append(Violation(
                    scenario.describe(),
                    f"not common knowledge: {{{','.join(missing_ck)}}}",
                ))
            elif not project_success(result.state_a, result.state_b, scenario):
                violations.append(Violation(
                    scenario.describe(), "coverage holds but success denied"
                ))
        else:
            if (language_equal(result.state_a, result.state_b)
                    and not project_success(result.state_a, result.state_b,
                                            scenario)):
                bare = ",".join(sorted(known_facts(result.state_a)))
                notes.append(
                    f"{scenario.describe()}: languages equal but side 1 knows "
                    f"only {{{bare}}}; lack of knowledge blocks success"
                )
    return _finish("success-theorems", count, violations, started, notes)


# fixed list exercising both models, coverage, gaps, and empty sides
STABILITY_SCENARIOS: tuple[tuple[tuple[str, ...], tuple[str, ...], tuple[str, ...], str], ...] = (
    (("a", "b", "c"), ("a",), ("b",), "communication"),
    (("a", "b", "c"), ("a",), ("b",), "understanding"),
    (("a",), ("a",), ("a",), "communication"),
    (("a",), ("a",), (), "understanding"),
    (("a", "b"), ("a",), ("b",), "understanding"),
    (("a", "b"), ("a", "b"), ("a", "b"), "communication"),
    (("a", "b", "c"), ("a", "b", "c"), ("a", "b", "c"), "communication"),
    (("a", "b", "c"), ("a",), ("b", "c"), "understanding"),
    (("a", "b"), (), ("a",), "communication"),
    (("a", "b", "c"), ("a", "b"), ("b", "c"), "understanding"),
)


def check_fixpoint_stability(tells: int = 50, seed: int = 2024, *,
                             disable_understanding: bool = False) -> CheckReport:
    """Telling a saturated pair anything it already knows changes nothing."""
    started = time.perf_counter()
    rng = random.Random(seed)
    violations: list[Violation] = []
    count = 0
    for facts, side_a, side_b, model in STABILITY_SCENARIOS:
        scenario = Scenario.make(facts, side_a, side_b, model)
        count += 1
        result = saturate(scenario, disable_understanding=disable_understanding)
        state_a, state_b = result.state_a, result.state_b
        for _ in range(tells):
            event = _sample_tell(state_a, state_b, facts, rng, depth=5)
            if event is None:
                break
            after_a, after_b = step(
                state_a, state_b, event, scenario.model,
                disable_understanding=disable_understanding,
            )
            changed = [
                f for f in facts
                if after_a.langs[f] != state_a.langs[f]
                or after_b.langs[f] != state_b.langs[f]
            ]
            if changed:
                violations.append(Violation(
                    scenario.describe(),
                    f"telling '{event.message}' from side {event.sender} grew "
                    f"the language of {{{','.join(changed)}}}",
                ))
    return _finish("fixpoint-stability", count, violations, started)


def check_oracle_equivalence(max_facts: int = 3, depth: int = 5, *,
                             disable_understanding: bool = False) -> CheckReport:
    """The bounded brute-force closure equals the enumerated saturated
    languages, per agent per fact, over the whole grid in both models."""
    started = time.perf_counter()
    violations: list[Violation] = []
    count = 0
    for model in (ModelKind.COMMUNICATION, ModelKind.UNDERSTANDING):
        for scenario in scenario_grid(max_facts, model):
            count += 1
            report = compare_symbolic(
                scenario, depth, disable_understanding=disable_understanding
            )
            for mismatch in report.mismatches:
                symbolic = ",".join(mismatch.only_symbolic) or "(none)"
                bounded = ",".join(mismatch.only_bounded) or "(none)"
                violations.append(Violation(
                    scenario.describe(),
                    f"side {mismatch.agent} fact {mismatch.fact}: "
                    f"symbolic-only {symbolic}; bounded-only {bounded}",
                ))
    return _finish("oracle-equivalence", count, violations, started)


@dataclass(frozen=True)
class CheckConfig:
    max_facts: int = 3
    depth: int = 5
    traces: int = 100
    max_len: int = 10
    seed: int = 42
    stability_tells: int = 50
    disable_understanding: bool = False


def run_all_checks(config: CheckConfig = CheckConfig()) -> list[CheckReport]:
    """Every check in a fixed order; overall status is their conjunction."""
    return [
        check_language_equivalence_props(config.max_facts),
        check_ck_dynamics(config.traces, config.max_len, config.seed),
        check_success_theorems(
            config.max_facts,
            disable_understanding=config.disable_understanding,
        ),
        check_fixpoint_stability(
            config.stability_tells,
            disable_understanding=config.disable_understanding,
        ),
        check_oracle_equivalence(
            config.max_facts, config.depth,
            disable_understanding=config.disable_understanding,
        ),
    ]
