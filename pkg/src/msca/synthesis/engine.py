import logging
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator

from ..analysis import dangling
from ..models import EMPTY, EmptyAutomaton, Msca, StateVector, Transition, validate
from ..utils.common import elapsed_ms
from ..utils.exceptions import InvalidInput, NonMonotonePredicate

logger = logging.getLogger(__name__)

Predicate = Callable[[Transition, Msca, frozenset[StateVector]], bool]
Selector = Callable[[Msca, frozenset[StateVector]], frozenset[Transition]]
Controller = Msca | EmptyAutomaton


def necessary_of(a: Msca) -> frozenset[Transition]:
    return a.necessary_transitions


@dataclass(frozen=True, slots=True)
class PredicatePair:
    """
    Parameters of the fixed-point engine.

    `phi_p` decides which transitions of the current automaton are pruned;
    `phi_f` decides whether the source of a transition in `phi_f_domain` of the
    input becomes bad. When `select` is given it contributes the extra
    transitions pruned by a step whose other effects are void: a pruning
    predicate of the form `phi_p(t) or t in select(K, R)`, with the selection
    only made on a pair that is otherwise stable.
    """

    phi_p: Predicate
    phi_f: Predicate
    name: str = "abstract"
    phi_f_domain: Callable[[Msca], frozenset[Transition]] = necessary_of
    select: Selector | None = None


@dataclass(frozen=True, slots=True)
class SynthesisInput:
    automaton: Msca
    predicates: PredicatePair
    forbidden_states: frozenset[StateVector] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "forbidden_states", frozenset(self.forbidden_states))


@dataclass(frozen=True, slots=True)
class SynthesisSnapshot:
    """One element `(K, R)` of the iteration: pruned automaton and bad states."""

    k: Msca
    r: frozenset[StateVector]

    def precedes(self, other: "SynthesisSnapshot") -> bool:
        """`self <= other`: same states, fewer or equal transitions in `other`, more bad states."""
        return (
            self.k.states == other.k.states
            and other.k.transitions <= self.k.transitions
            and self.r <= other.r
        )


@dataclass(frozen=True, slots=True)
class SynthesisResult:
    controller: Controller
    bad_states: frozenset[StateVector]
    iterations: int
    history: tuple[SynthesisSnapshot, ...] = field(default=(), repr=False)

    def __iter__(self) -> Iterator:
        return iter((self.controller, self.bad_states, self.iterations))

    @property
    def is_empty(self):
        return self.controller is EMPTY


def synthesis_step(
    snapshot: SynthesisSnapshot,
    predicates: PredicatePair,
    domain: list[Transition],
) -> SynthesisSnapshot:
    k, r = snapshot.k, snapshot.r
    pruned = {t for t in k.transitions if predicates.phi_p(t, k, r)}
    bad = {t.source for t in domain if predicates.phi_f(t, k, r)}

    next_k = k.without(pruned)
    next_r = r | bad | dangling(next_k)

    if predicates.select is not None and not pruned and next_r == r:
        if chosen := predicates.select(k, r):
            next_k = k.without(chosen)
            next_r = r | dangling(next_k)

    return SynthesisSnapshot(next_k, frozenset(next_r))


def extract_controller(snapshot: SynthesisSnapshot, name: str = "") -> Controller:
    """
    Remove the bad states and every transition touching them.

    Returns `EMPTY` when the initial state is bad.
    """
    k, r = snapshot.k, snapshot.r
    if k.initial in r:
        return EMPTY
    return k.restrict(k.states - r).renamed(name)


def abstract_synthesize(spec: SynthesisInput, keep_history: bool = False) -> SynthesisResult:
    """
    Least fixed point of the synthesis function instantiated by `spec.predicates`.

    Starting from `(A, Dangling(A))`, every step removes the transitions
    satisfying `phi_p` on the previous pair, adds the sources of the necessary
    transitions of `A` satisfying `phi_f`, and adds the states left dangling.
    The loop stops at the first step that changes nothing.

    Raises:
        InvalidInput: the automaton is not well formed, or forbidden states are
            not states of it.
        NonMonotonePredicate: an iteration was not above its predecessor, or no
            fixed point was reached within `|T| + |Q| + 1` iterations.
    """
    a = spec.automaton
    if violations := validate(a):
        raise InvalidInput(violations)
    if stray := spec.forbidden_states - a.states:
        raise InvalidInput([f"forbidden state {q!r} is not a state" for q in sorted(stray)])

    predicates = spec.predicates
    domain = sorted(predicates.phi_f_domain(a))
    bound = len(a.transitions) + len(a.states) + 1

    started = time.perf_counter()
    current = SynthesisSnapshot(a, dangling(a))
    history = [current]
    iterations = 0

    while True:
        following = synthesis_step(current, predicates, domain)
        iterations += 1
        if not current.precedes(following):
            raise NonMonotonePredicate(f"{predicates.name}: iteration {iterations} is not above its predecessor")
        if following == current:
            break
        if iterations >= bound:
            raise NonMonotonePredicate(f"{predicates.name}: no fixed point after {iterations} iterations")
        logger.debug(
            "%s iteration %d: %d transitions, %d bad states",
            predicates.name,
            iterations,
            len(following.k.transitions),
            len(following.r),
        )
        current = following
        if keep_history:
            history.append(current)

    controller = extract_controller(current, name=f"{predicates.name}({a.name})" if a.name else predicates.name)
    logger.debug(
        "%s reached its fixed point after %d iterations in %s",
        predicates.name,
        iterations,
        elapsed_ms(started, time.perf_counter()),
    )
    return SynthesisResult(
        controller=controller,
        bad_states=current.r,
        iterations=iterations,
        history=tuple(history) if keep_history else (),
    )
