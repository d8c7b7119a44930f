import logging

from ..analysis import branching_violations, dangling
from ..models import EMPTY, Msca, StateVector, SynthesisKind, Transition
from ..synthesis import Controller
from ..utils.common import MAXIMALITY_TRANSITION_LIMIT
from ..utils.exceptions import TooLarge

logger = logging.getLogger(__name__)


def _enlarged(controller: Msca, a: Msca, t: Transition) -> Msca:
    ends = {t.source, t.target}
    return Msca(
        rank=controller.rank,
        states=controller.states | ends,
        initial=controller.initial,
        finals=controller.finals | (ends & a.finals),
        transitions=controller.transitions | {t},
        flavor=controller.flavor,
        name=controller.name,
    )


def _unsafe(t: Transition, kind: SynthesisKind, forbidden: frozenset[StateVector]) -> bool:
    match kind:
        case SynthesisKind.MPC:
            return t.source in forbidden
        case SynthesisKind.ORCHESTRATION:
            return t.is_request
        case SynthesisKind.CHOREOGRAPHY:
            return t.is_request or t.is_offer


def _has_witness(u: Transition, e: Msca, kind: SynthesisKind) -> bool:
    """Whether a necessary match of `e` stands in for the missing necessary `u`."""
    matches = [w for w in e.necessary_transitions if w.is_match]
    match kind:
        case SynthesisKind.ORCHESTRATION:
            i = u.label.requester
            return i is not None and any(
                w.label.requester == i and w.source[i] == u.source[i] and w.label[i] == u.label[i] for w in matches
            )
        case SynthesisKind.CHOREOGRAPHY:
            i = u.label.sender
            return i is not None and any(w.source == u.source and w.label[i] == u.label[i] for w in matches)
        case _:
            return False


def _violates(a: Msca, e: Msca, t: Transition, kind: SynthesisKind, forbidden) -> bool:
    if dangling(e):
        return True
    if _unsafe(t, kind, forbidden):
        return True
    for q in e.states:
        for u in a.outgoing_from(q):
            if u.is_necessary and u not in e.transitions and not _has_witness(u, e, kind):
                return True
    return kind is SynthesisKind.CHOREOGRAPHY and bool(branching_violations(e))


def maximality_check(
    a: Msca,
    controller: Controller,
    kind: SynthesisKind,
    forbidden_states: frozenset[StateVector] = frozenset(),
) -> Transition | None:
    """
    Try to put back, one at a time, each transition of `a` missing from
    `controller`.

    Returns the first transition (in sorted order) whose return keeps the
    controller trim, safe and controllable, or `None` when there is none. For
    `SynthesisKind.MPC`, `a` is the preprocessed automaton and
    `forbidden_states` the states no transition may leave.

    Raises:
        TooLarge: `a` has more than `MAXIMALITY_TRANSITION_LIMIT` transitions.
    """
    if len(a.transitions) > MAXIMALITY_TRANSITION_LIMIT:
        raise TooLarge(
            f"maximality check is limited to {MAXIMALITY_TRANSITION_LIMIT} transitions, got {len(a.transitions)}"
        )
    if controller is EMPTY:
        return None

    kind = SynthesisKind(kind)
    forbidden = frozenset(forbidden_states)
    for t in sorted(a.transitions - controller.transitions):
        if not _violates(a, _enlarged(controller, a, t), t, kind, forbidden):
            logger.debug("%s controller can take back %s", kind, t)
            return t
    return None
