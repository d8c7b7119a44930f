"""
Reference syntheses written straight from the three concrete definitions,
without the predicate engine, the networkx reachability or the indexes used by
the main implementation. Slow on purpose; meant for cross-checking.
"""

from collections import defaultdict
from dataclasses import replace

from ..models import EMPTY, Flavor, Msca, TieBreak, Transition, validate
from ..synthesis import Controller, SynthesisInput
from ..utils.exceptions import FlavorMismatch, InvalidInput

# ---- plain reachability ----


def _closure(start, step):
    seen = set(start)
    work = list(seen)
    while work:
        q = work.pop()
        for nxt in step.get(q, ()):
            if nxt not in seen:
                seen.add(nxt)
                work.append(nxt)
    return seen


def dangling_states(k: Msca) -> frozenset:
    succ, pred = defaultdict(set), defaultdict(set)
    for t in k.transitions:
        succ[t.source].add(t.target)
        pred[t.target].add(t.source)
    forward = _closure([k.initial] if k.initial in k.states else [], succ)
    backward = _closure([f for f in k.finals if f in k.states], pred)
    return frozenset(q for q in k.states if q not in forward or q not in backward)


def _with(a: Msca, transitions) -> Msca:
    return replace(a, transitions=frozenset(transitions))


def _result(a: Msca, transitions, bad) -> Controller:
    if a.initial in bad:
        return EMPTY
    keep = a.states - bad
    return Msca(
        rank=a.rank,
        states=keep,
        initial=a.initial,
        finals=a.finals & keep,
        transitions=frozenset(t for t in transitions if t.source in keep and t.target in keep),
        flavor=a.flavor,
        name=a.name,
    )


def _checked(a: Msca):
    if violations := validate(a):
        raise InvalidInput(violations)


# ---- controllability notions ----


def live_necessary_matches(k: Msca, gone) -> list[Transition]:
    return [
        w
        for w in k.transitions
        if w.is_necessary and w.is_match and w.source not in gone and w.target not in gone
    ]


def controllable_request(t: Transition, witnesses: list[Transition]) -> bool:
    """A necessary request is controllable while a live necessary match performs it from the same local state."""
    i = t.label.requester
    if i is None:
        return False
    return any(
        w.label.requester == i and w.source[i] == t.source[i] and w.label[i] == t.label[i] for w in witnesses
    )


def controllable_offer(t: Transition, witnesses: list[Transition]) -> bool:
    """A necessary offer is controllable while a live necessary match from the same state carries it."""
    i = t.label.sender
    if i is None:
        return False
    return any(w.source == t.source and w.label[i] == t.label[i] for w in witnesses)


# ---- mpc ----


def direct_mpc(spec: SynthesisInput) -> Controller:
    a = spec.automaton
    _checked(a)
    forbidden = spec.forbidden_states
    necessary = [t for t in a.transitions if t.is_necessary]

    transitions = set(a.transitions)
    bad = set(dangling_states(a))
    while True:
        kept = {t for t in transitions if t.target not in bad and t.source not in forbidden}
        following = bad | {t.source for t in necessary if t.target in bad} | dangling_states(_with(a, kept))
        if kept == transitions and following == bad:
            return _result(a, transitions, bad)
        transitions, bad = kept, following


# ---- orchestration ----


def direct_orchestration(a: Msca) -> Controller:
    if a.flavor is not Flavor.ORCHESTRATION:
        raise FlavorMismatch("orchestration needs the orchestration flavor")
    _checked(a)
    necessary = [t for t in a.transitions if t.is_necessary]

    transitions = set(a.transitions)
    bad = set(dangling_states(a))
    while True:
        kept = {t for t in transitions if t.target not in bad and not t.is_request}
        k = _with(a, kept)
        gone = dangling_states(k)
        witnesses = live_necessary_matches(k, gone)
        uncontrollable = {t.source for t in necessary if not controllable_request(t, witnesses)}
        following = bad | uncontrollable | gone
        if kept == transitions and following == bad:
            return _result(a, transitions, bad)
        transitions, bad = kept, following


# ---- choreography ----


def branching_conflicts(k: Msca, bad) -> set[Transition]:
    gone = dangling_states(k)
    live = [q for q in k.states if q not in gone and q not in bad]
    labels = defaultdict(set)
    for t in k.transitions:
        labels[t.source].add(t.label)
    sharing = defaultdict(list)
    for q in live:
        for j, local in enumerate(q):
            sharing[(j, local)].append(q)

    conflicts = set()
    for t in k.transitions:
        if not t.is_match or t.source in gone or t.source in bad:
            continue
        j = t.label.sender
        if any(t.label not in labels[q2] for q2 in sharing[(j, t.source[j])]):
            conflicts.add(t)
    return conflicts


def _pick(conflicts, selector: TieBreak):
    if not conflicts:
        return None
    ranked = sorted(conflicts, key=lambda t: (t.source, t.label.tokens, t.target))
    match selector:
        case TieBreak.LEXMAX:
            return ranked[-1]
        case TieBreak.PERMITTED_FIRST:
            return next((t for t in ranked if not t.is_necessary), ranked[0])
    return ranked[0]


def direct_choreography(a: Msca, selector: TieBreak = TieBreak.LEXMIN) -> Controller:
    if a.flavor is not Flavor.CHOREOGRAPHY:
        raise FlavorMismatch("choreography needs the choreography flavor")
    _checked(a)
    selector = TieBreak(selector)
    necessary = [t for t in a.transitions if t.is_necessary]

    def bad_after(kept, bad):
        k = _with(a, kept)
        gone = dangling_states(k)
        witnesses = live_necessary_matches(k, gone)
        return bad | {t.source for t in necessary if not controllable_offer(t, witnesses)} | gone

    transitions = set(a.transitions)
    bad = set(dangling_states(a))
    while True:
        kept = {t for t in transitions if t.target not in bad and not t.is_request and not t.is_offer}
        following = bad_after(kept, bad)
        if kept == transitions and following == bad:
            chosen = _pick(branching_conflicts(_with(a, transitions), bad), selector)
            if chosen is None:
                return _result(a, transitions, bad)
            kept = transitions - {chosen}
            following = bad_after(kept, bad)
        transitions, bad = kept, following
