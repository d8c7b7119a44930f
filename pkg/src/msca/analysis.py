from collections import defaultdict
from functools import lru_cache

import networkx as nx

from .models import Msca, StateVector, Transition
from .utils.exceptions import RankMismatch

# Extra node linked to every final state in the reversed graph.
_ACCEPT = object()


def transition_graph(a: Msca) -> nx.DiGraph:
    graph = nx.DiGraph()
    graph.add_nodes_from(a.states)
    graph.add_edges_from((t.source, t.target) for t in a.transitions)
    return graph


@lru_cache(maxsize=64)
def reachable(a: Msca) -> frozenset[StateVector]:
    """States reachable from the initial state (the initial state included)."""
    if a.initial not in a.states:
        return frozenset()
    return frozenset(nx.descendants(transition_graph(a), a.initial) | {a.initial})


@lru_cache(maxsize=64)
def coreachable(a: Msca) -> frozenset[StateVector]:
    """States from which some final state is reachable (final states included)."""
    graph = transition_graph(a).reverse(copy=True)
    graph.add_edges_from((_ACCEPT, f) for f in a.finals if f in a.states)
    return frozenset(nx.descendants(graph, _ACCEPT))


@lru_cache(maxsize=64)
def dangling(a: Msca) -> frozenset[StateVector]:
    return a.states - (reachable(a) & coreachable(a))


def live_states(a: Msca) -> frozenset[StateVector]:
    return a.states - dangling(a)


def trim(a: Msca) -> Msca:
    """Drop dangling states; the initial state is kept even if it dangles."""
    return a.restrict(live_states(a) | {a.initial})


# ---- agreement ----


def _admits(a: Msca, forbidden) -> bool:
    allowed = a.without(t for t in a.transitions if forbidden(t))
    return a.initial in coreachable(allowed) and a.initial in a.states


def _safe(a: Msca, forbidden) -> bool:
    forward, backward = reachable(a), coreachable(a)
    return not any(forbidden(t) and t.source in forward and t.target in backward for t in a.transitions)


def _request(t: Transition):
    return t.is_request


def _request_or_offer(t: Transition):
    return t.is_request or t.is_offer


def admits_agreement(a: Msca) -> bool:
    """Some accepting run has no request action."""
    return _admits(a, _request)


def is_safe(a: Msca) -> bool:
    """No accepting run has a request action."""
    return _safe(a, _request)


def admits_strong_agreement(a: Msca) -> bool:
    """Some accepting run is made of matches only."""
    return _admits(a, _request_or_offer)


def is_strongly_safe(a: Msca) -> bool:
    """Every accepting run is made of matches only."""
    return _safe(a, _request_or_offer)


# ---- branching condition ----


def branching_violations(a: Msca, r: frozenset[StateVector] = frozenset()) -> frozenset[Transition]:
    """
    Matches that break the branching condition.

    A match `t` leaving `q1` is a violation when some other state `q2` in which
    the offering principal `j` is in the same local state `q1[j]` has no
    transition with the same label. Both states must be reachable,
    non-dangling and outside `r`.

    States are grouped by `(j, local state)`; a match is fine exactly when its
    label is enabled in every state of its group, so each group keeps the
    intersection of the label sets of its members.
    """
    live = live_states(a) - r
    if not live:
        return frozenset()

    labels_at = {q: frozenset(t.label for t in a.outgoing_from(q)) for q in live}
    common: dict[tuple[int, str], frozenset] = {}
    members = defaultdict(list)
    for q in live:
        for j, local in enumerate(q):
            members[(j, local)].append(q)

    def shared_labels(key):
        if key not in common:
            common[key] = frozenset.intersection(*(labels_at[q] for q in members[key]))
        return common[key]

    return frozenset(
        t
        for t in a.transitions
        if t.is_match and t.source in live and t.label not in shared_labels((t.label.sender, t.source[t.label.sender]))
    )


# ---- refinement ----


def is_sub_automaton(a1: Msca, a2: Msca, ignore_modality: bool = False) -> bool:
    """Componentwise inclusion of `a1` in `a2` with the same initial state."""
    if a1.rank != a2.rank:
        raise RankMismatch(f"cannot compare rank {a1.rank} with rank {a2.rank}")

    if ignore_modality:
        t1 = {t.unmodal() for t in a1.transitions}
        t2 = {t.unmodal() for t in a2.transitions}
    else:
        t1, t2 = a1.transitions, a2.transitions

    return a1.initial == a2.initial and a1.states <= a2.states and a1.finals <= a2.finals and t1 <= t2
