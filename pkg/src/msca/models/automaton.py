from collections import defaultdict
from dataclasses import dataclass, field, replace
from functools import cached_property, total_ordering
from typing import Iterable

from ._dataclasses import ActionClass, Flavor, Modality, SerializedNamespace
from .actions import ActionVector

StateVector = tuple[str, ...]


@total_ordering
@dataclass(frozen=True, slots=True)
class Transition:
    source: StateVector
    label: ActionVector
    target: StateVector
    modality: Modality = Modality.PERMITTED

    def __lt__(self, value):
        if not isinstance(value, Transition):
            return NotImplemented
        return self.sort_key < value.sort_key

    def __str__(self):
        return "{} -{}{}-> {}".format(
            ",".join(self.source), self.label, self.modality.glyph, ",".join(self.target)
        )

    @property
    def sort_key(self):
        return (self.source, self.label.tokens, self.target, self.modality.is_necessary)

    @property
    def is_necessary(self):
        return self.modality is Modality.NECESSARY

    @property
    def is_request(self):
        return self.label.is_request

    @property
    def is_offer(self):
        return self.label.is_offer

    @property
    def is_match(self):
        return self.label.is_match

    def unmodal(self):
        """Same edge with the modality forgotten (permitted)."""
        return replace(self, modality=Modality.PERMITTED)


class EmptyAutomaton:
    """The empty controller returned when no controller exists."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __bool__(self):
        return False

    def __repr__(self):
        return "EMPTY"

    def __reduce__(self):
        return (EmptyAutomaton, ())


EMPTY = EmptyAutomaton()


@dataclass(frozen=True)
class Msca:
    """
    Modal service contract automaton of a given rank.

    States are tuples of principal-state labels; transitions carry an action
    vector and a modality. Equality and hashing are structural and ignore
    `name`. The instance is immutable; derived indexes are cached on first use.
    """

    rank: int
    states: frozenset[StateVector]
    initial: StateVector
    finals: frozenset[StateVector]
    transitions: frozenset[Transition]
    flavor: Flavor = Flavor.ORCHESTRATION
    name: str = field(default="", compare=False)

    def __post_init__(self):
        for attr in ("states", "finals", "transitions"):
            value = getattr(self, attr)
            if not isinstance(value, frozenset):
                object.__setattr__(self, attr, frozenset(value))
        object.__setattr__(self, "initial", tuple(self.initial))

    @classmethod
    def build(
        cls,
        rank: int,
        initial: Iterable[str],
        finals: Iterable[Iterable[str]],
        transitions: Iterable[Transition],
        flavor: Flavor = Flavor.ORCHESTRATION,
        name: str = "",
        states: Iterable[Iterable[str]] | None = None,
    ):
        """Create an automaton, deriving the state set from the other parts when omitted."""
        transitions = frozenset(transitions)
        initial = tuple(initial)
        finals = frozenset(map(tuple, finals))
        if states is None:
            states = {initial, *finals}
            for t in transitions:
                states.update((t.source, t.target))
        return cls(
            rank=rank,
            states=frozenset(map(tuple, states)),
            initial=initial,
            finals=finals,
            transitions=transitions,
            flavor=flavor,
            name=name,
        )

    # ---- derived views ----

    @cached_property
    def outgoing(self) -> dict[StateVector, tuple[Transition, ...]]:
        index = defaultdict(list)
        for t in self.transitions:
            index[t.source].append(t)
        return {q: tuple(sorted(ts)) for q, ts in index.items()}

    @cached_property
    def necessary_transitions(self) -> frozenset[Transition]:
        return frozenset(t for t in self.transitions if t.is_necessary)

    def outgoing_from(self, state: StateVector) -> tuple[Transition, ...]:
        return self.outgoing.get(state, ())

    def sorted_states(self) -> list[StateVector]:
        return sorted(self.states)

    def sorted_transitions(self) -> list[Transition]:
        return sorted(self.transitions)

    def _names(self, action_class: ActionClass, modality: Modality | None = None):
        names = set()
        for t in self.transitions:
            if modality is not None and t.modality is not modality:
                continue
            if t.label.shape is action_class:
                names.add(t.label.pending.name)
            elif t.label.is_match:
                element = t.label[t.label.requester if action_class is ActionClass.REQUEST else t.label.sender]
                names.add(element.name)
        return frozenset(names)

    @property
    def permitted_requests(self) -> frozenset[str]:
        return self._names(ActionClass.REQUEST, Modality.PERMITTED)

    @property
    def necessary_requests(self) -> frozenset[str]:
        return self._names(ActionClass.REQUEST, Modality.NECESSARY)

    @property
    def offers(self) -> frozenset[str]:
        return self._names(ActionClass.OFFER)

    @property
    def necessary_offers(self) -> frozenset[str]:
        return self._names(ActionClass.OFFER, Modality.NECESSARY)

    # ---- transformers ----

    def without(self, removed: Iterable[Transition]):
        """Same states, fewer transitions."""
        removed = frozenset(removed)
        if not removed:
            return self
        return replace(self, transitions=self.transitions - removed)

    def restrict(self, keep: Iterable[StateVector]):
        """Keep only `keep` states and the transitions between them."""
        keep = frozenset(keep)
        return replace(
            self,
            states=self.states & keep,
            finals=self.finals & keep,
            transitions=frozenset(t for t in self.transitions if t.source in keep and t.target in keep),
        )

    def with_flavor(self, flavor: Flavor):
        return replace(self, flavor=flavor)

    def relax(self):
        """Every transition permitted."""
        return replace(self, transitions=frozenset(t.unmodal() for t in self.transitions))

    def renamed(self, name: str):
        return replace(self, name=name)

    def describe(self):
        return SerializedNamespace(
            module="Info",
            name=self.name or "-",
            rank=self.rank,
            states=len(self.states),
            transitions=len(self.transitions),
            finals=len(self.finals),
            flavor=str(self.flavor),
            permitted_requests=_show(self.permitted_requests),
            necessary_requests=_show(self.necessary_requests),
            offers=_show(self.offers),
            necessary_offers=_show(self.necessary_offers),
        )


def _show(names):
    return ", ".join(sorted(names)) or "-"


def validate(a: Msca) -> list[str]:
    """
    Return every violated well-formedness condition of `a`; an empty list means ok.

    Besides the structural conditions (rank, membership, vector lengths, label
    shapes, idle principals keep their state, flavor-dependent modalities) a
    rank-1 automaton must not both request and offer the same action name.
    """
    violations = []
    rank = a.rank

    if not isinstance(rank, int) or rank < 1:
        return [f"rank must be a positive integer, got {rank!r}"]

    def check_state(q, where):
        if not isinstance(q, tuple) or len(q) != rank:
            violations.append(f"{where}: state {q!r} does not have length {rank}")
        elif not all(isinstance(s, str) and s for s in q):
            violations.append(f"{where}: state {q!r} has an empty or non-string label")

    for q in sorted(a.states, key=repr):
        check_state(q, "states")
    check_state(a.initial, "initial")

    if a.initial not in a.states:
        violations.append(f"initial state {a.initial!r} is not a state")
    for q in sorted(a.finals - a.states, key=repr):
        violations.append(f"final state {q!r} is not a state")

    for t in sorted(a.transitions, key=repr):
        where = f"transition {t}"
        if t.source not in a.states:
            violations.append(f"{where}: source is not a state")
        if t.target not in a.states:
            violations.append(f"{where}: target is not a state")
        if t.label.rank != rank:
            violations.append(f"{where}: label does not have length {rank}")
            continue
        if not t.label.is_valid:
            violations.append(f"{where}: label is neither a request, an offer nor a match")
            continue
        if len(t.source) == rank and len(t.target) == rank:
            for i, element in enumerate(t.label):
                if element.is_idle and t.source[i] != t.target[i]:
                    violations.append(f"{where}: idle principal {i} changes state")
        if t.is_necessary and not a.flavor.allows_necessary(t.label.shape):
            violations.append(f"{where}: {a.flavor} flavor forbids a necessary {t.label.shape}")

    if rank == 1:
        requested = {t.label[0].name for t in a.transitions if t.label.is_request}
        offered = {t.label[0].name for t in a.transitions if t.label.is_offer}
        for name in sorted(requested & offered):
            violations.append(f"principal both requests and offers {name!r}")

    return violations
