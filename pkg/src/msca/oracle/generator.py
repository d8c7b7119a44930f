"""Random automata for cross-checking the synthesis engine against the oracles."""

import random
from dataclasses import replace

from ..composition import compose
from ..models import ActionKind, ActionVector, BasicAction, Flavor, Modality, Msca, Transition

ACTION_NAMES = ("a", "b", "c")
PRINCIPAL_PREFIXES = "pqrst"


def random_principal(
    rng: random.Random,
    index: int = 0,
    flavor: Flavor = Flavor.ORCHESTRATION,
    max_states: int = 4,
    necessary_ratio: float = 0.3,
) -> Msca:
    """
    Rank-1 automaton whose states are named after `index` (`p0`, `q0`, ...).

    Every action name is either only requested or only offered. Requests may
    be necessary in the orchestration flavor, offers in the choreography flavor.
    At least one state is final.
    """
    prefix = PRINCIPAL_PREFIXES[index % len(PRINCIPAL_PREFIXES)] + ("'" * (index // len(PRINCIPAL_PREFIXES)))
    size = rng.randint(1, max_states)
    states = [f"{prefix}{k}" for k in range(size)]
    roles = {name: rng.choice((ActionKind.REQUEST, ActionKind.OFFER)) for name in ACTION_NAMES}
    promotable = ActionKind.REQUEST if flavor is Flavor.ORCHESTRATION else ActionKind.OFFER

    transitions = set()
    for _ in range(rng.randint(1, 2 * size)):
        name = rng.choice(ACTION_NAMES)
        kind = roles[name]
        modality = Modality.PERMITTED
        if kind is promotable and rng.random() < necessary_ratio:
            modality = Modality.NECESSARY
        transitions.add(
            Transition(
                (rng.choice(states),),
                ActionVector((BasicAction(kind, name),)),
                (rng.choice(states),),
                modality,
            )
        )

    finals = {(q,) for q in states if rng.random() < 0.4} or {(rng.choice(states),)}
    return Msca(
        rank=1,
        states=frozenset((q,) for q in states),
        initial=(states[0],),
        finals=frozenset(finals),
        transitions=frozenset(transitions),
        flavor=flavor,
        name=f"P{index}",
    )


def random_operands(rng: random.Random, rank: int, flavor: Flavor = Flavor.ORCHESTRATION) -> list[Msca]:
    return [random_principal(rng, i, flavor) for i in range(rank)]


def random_msca(
    rng: random.Random,
    flavor: Flavor = Flavor.ORCHESTRATION,
    max_rank: int = 3,
    max_states: int = 30,
    thinning: float = 0.2,
) -> Msca:
    """
    Composition of up to `max_rank` random principals with at most `max_states`
    states, redrawn until small enough.

    With probability `thinning` some transitions are dropped afterwards, which
    may leave unreachable or dangling states. The result always has a final
    state.
    """
    composed = None
    for _ in range(50):
        composed = compose(random_operands(rng, rng.randint(1, max_rank), flavor))
        if len(composed.states) <= max_states:
            break
    else:
        composed = compose([random_principal(rng, 0, flavor)])

    if rng.random() < thinning and composed.transitions:
        dropped = {t for t in composed.transitions if rng.random() < 0.25}
        composed = composed.without(dropped)
    if not composed.finals:
        composed = replace(composed, finals=frozenset({rng.choice(composed.sorted_states())}))
    return composed.renamed(f"random-{composed.rank}x{len(composed.states)}")
