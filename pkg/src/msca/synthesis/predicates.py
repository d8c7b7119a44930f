from functools import lru_cache

from ..analysis import branching_violations, dangling
from ..models import Flavor, Msca, StateVector, TieBreak, Transition
from ..utils.exceptions import FlavorMismatch
from .engine import PredicatePair, SynthesisInput

# ---- most permissive controller ----


def mpc_predicates(forbidden_states: frozenset[StateVector] = frozenset()) -> PredicatePair:
    """Prune transitions into bad states or out of forbidden states; necessary transitions into bad states spread badness."""
    forbidden_states = frozenset(forbidden_states)

    def phi_p(t: Transition, k: Msca, r: frozenset[StateVector]) -> bool:
        return t.target in r or t.source in forbidden_states

    def phi_f(t: Transition, k: Msca, r: frozenset[StateVector]) -> bool:
        return t.target in r

    return PredicatePair(phi_p=phi_p, phi_f=phi_f, name="mpc")


def _prepare(a: Msca, strong: bool) -> SynthesisInput:
    def unwanted(t: Transition):
        return t.is_request or (strong and t.is_offer)

    prepared = a.without(t for t in a.transitions if unwanted(t) and not t.is_necessary)
    forbidden = frozenset(t.source for t in prepared.transitions if unwanted(t) and t.is_necessary)
    return SynthesisInput(automaton=prepared, predicates=mpc_predicates(forbidden), forbidden_states=forbidden)


def prepare_agreement(a: Msca) -> SynthesisInput:
    """
    Input of the most permissive controller for agreement.

    Permitted requests are deleted; every state with an outgoing necessary
    request is forbidden.
    """
    if a.flavor is not Flavor.ORCHESTRATION:
        raise FlavorMismatch(f"agreement preprocessing needs the orchestration flavor, got {a.flavor}")
    return _prepare(a, strong=False)


def prepare_strong_agreement(a: Msca) -> SynthesisInput:
    """As `prepare_agreement`, treating offers like requests."""
    return _prepare(a, strong=True)


def forbidden_input(a: Msca, states) -> SynthesisInput:
    states = frozenset(map(tuple, states))
    return SynthesisInput(automaton=a, predicates=mpc_predicates(states), forbidden_states=states)


# ---- orchestration ----


@lru_cache(maxsize=8)
def _request_witnesses(k: Msca) -> frozenset[tuple[int, str, str]]:
    """(requester, its local state, request name) of every live necessary match of `k`."""
    gone = dangling(k)
    return frozenset(
        (t.label.requester, t.source[t.label.requester], t.label[t.label.requester].name)
        for t in k.necessary_transitions
        if t.is_match and t.source not in gone and t.target not in gone
    )


def orchestration_predicates() -> PredicatePair:
    """
    Requests are pruned; a necessary request stays controllable while some
    live necessary match lets the same principal, in the same local state,
    perform the same request.
    """

    def phi_p(t: Transition, k: Msca, r: frozenset[StateVector]) -> bool:
        return t.is_request or t.target in r

    def phi_f(t: Transition, k: Msca, r: frozenset[StateVector]) -> bool:
        i = t.label.requester
        if i is None:
            return False
        return (i, t.source[i], t.label[i].name) not in _request_witnesses(k)

    return PredicatePair(phi_p=phi_p, phi_f=phi_f, name="orchestration")


# ---- choreography ----


@lru_cache(maxsize=8)
def _offer_witnesses(k: Msca) -> frozenset[tuple[StateVector, int, str]]:
    """(source, sender, offer name) of every live necessary match of `k`."""
    gone = dangling(k)
    return frozenset(
        (t.source, t.label.sender, t.label[t.label.sender].name)
        for t in k.necessary_transitions
        if t.is_match and t.source not in gone and t.target not in gone
    )


def _violation_key(t: Transition):
    return (t.source, t.label.tokens, t.target)


def select_violation(k: Msca, r: frozenset[StateVector], selector: TieBreak = TieBreak.LEXMIN) -> frozenset[Transition]:
    """
    At most one branching violation of `(k, r)` to prune.

    LEXMIN picks the least and LEXMAX the greatest by (source, label, target).
    PERMITTED_FIRST picks the least among the permitted violations, if any.
    """
    violations = branching_violations(k, r)
    if not violations:
        return frozenset()
    candidates = list(violations)
    if selector is TieBreak.PERMITTED_FIRST:
        candidates = [t for t in candidates if not t.is_necessary] or candidates
    pick = max if selector is TieBreak.LEXMAX else min
    return frozenset({pick(candidates, key=_violation_key)})


def choreography_predicates(selector: TieBreak = TieBreak.LEXMIN) -> PredicatePair:
    """
    Requests and offers are pruned, and one branching violation at a time once
    nothing else changes. A necessary offer stays controllable while a live
    necessary match from the same state carries the same offer.
    """
    selector = TieBreak(selector)

    def phi_p(t: Transition, k: Msca, r: frozenset[StateVector]) -> bool:
        return t.is_request or t.is_offer or t.target in r

    def phi_f(t: Transition, k: Msca, r: frozenset[StateVector]) -> bool:
        i = t.label.sender
        if i is None:
            return False
        return (t.source, i, t.label[i].name) not in _offer_witnesses(k)

    def select(k: Msca, r: frozenset[StateVector]) -> frozenset[Transition]:
        return select_violation(k, r, selector)

    return PredicatePair(phi_p=phi_p, phi_f=phi_f, name=f"choreography-{selector}", select=select)
