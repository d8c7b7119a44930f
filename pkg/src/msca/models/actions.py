from dataclasses import dataclass, field
from functools import total_ordering
from typing import Iterable, Iterator

from ..utils.common import IDLE_TOKEN, OFFER_PREFIX, REQUEST_PREFIX
from ..utils.exceptions import InvalidAction
from ._dataclasses import ActionClass, ActionKind


@total_ordering
@dataclass(frozen=True, slots=True)
class BasicAction:
    """
    A request `?a`, an offer `!a` or the idle symbol `-`.

    Basic actions order by their token, so `!a` < `-` < `?a`.
    """

    kind: ActionKind
    name: str = ""

    def __post_init__(self):
        if self.kind is ActionKind.IDLE:
            if self.name:
                raise InvalidAction(f"idle action cannot carry a name, got {self.name!r}")
        elif not self.name:
            raise InvalidAction(f"{self.kind} action needs a non-empty name")

    def __lt__(self, value):
        if not isinstance(value, BasicAction):
            return NotImplemented
        return self.token < value.token

    def __str__(self):
        return self.token

    @classmethod
    def request(cls, name: str):
        return cls(ActionKind.REQUEST, name)

    @classmethod
    def offer(cls, name: str):
        return cls(ActionKind.OFFER, name)

    @classmethod
    def parse(cls, token: str):
        """Decode `-`, `?name` or `!name`."""
        if not isinstance(token, str):
            raise InvalidAction(f"label element must be a string, got {token!r}")
        if token == IDLE_TOKEN:
            return IDLE
        prefix, name = token[:1], token[1:]
        if prefix == REQUEST_PREFIX:
            return cls.request(name)
        if prefix == OFFER_PREFIX:
            return cls.offer(name)
        raise InvalidAction(f"unknown label element {token!r}")

    @property
    def token(self):
        match self.kind:
            case ActionKind.REQUEST:
                return REQUEST_PREFIX + self.name
            case ActionKind.OFFER:
                return OFFER_PREFIX + self.name
            case _:
                return IDLE_TOKEN

    @property
    def is_idle(self):
        return self.kind is ActionKind.IDLE

    @property
    def is_request(self):
        return self.kind is ActionKind.REQUEST

    @property
    def is_offer(self):
        return self.kind is ActionKind.OFFER


IDLE = BasicAction(ActionKind.IDLE)


def co(x: BasicAction) -> BasicAction:
    """Complement: swaps request and offer on the same name, fixes idle."""
    if x.is_idle:
        return x
    return BasicAction(x.kind.complement(), x.name)


@total_ordering
@dataclass(frozen=True, slots=True)
class ActionVector:
    """
    Label of a transition of a rank-n automaton, one basic action per principal.

    The shape is computed once at construction. Malformed vectors can be built
    (so that `validate` can report them) but `classify` rejects them.
    """

    elements: tuple[BasicAction, ...]
    shape: ActionClass | None = field(default=None, init=False, compare=False, repr=False)
    requester: int | None = field(default=None, init=False, compare=False, repr=False)
    sender: int | None = field(default=None, init=False, compare=False, repr=False)

    def __post_init__(self):
        elements = tuple(self.elements)
        object.__setattr__(self, "elements", elements)

        moving = [(i, e) for i, e in enumerate(elements) if not e.is_idle]
        requests = [i for i, e in moving if e.is_request]
        offers = [i for i, e in moving if e.is_offer]
        shape = None

        match len(moving):
            case 1 if requests:
                shape = ActionClass.REQUEST
            case 1:
                shape = ActionClass.OFFER
            case 2 if len(requests) == 1 and len(offers) == 1:
                if co(elements[offers[0]]) == elements[requests[0]]:
                    shape = ActionClass.MATCH

        if shape is not None:
            object.__setattr__(self, "shape", shape)
            object.__setattr__(self, "requester", requests[0] if requests else None)
            object.__setattr__(self, "sender", offers[0] if offers else None)

    def __lt__(self, value):
        if not isinstance(value, ActionVector):
            return NotImplemented
        return self.tokens < value.tokens

    def __len__(self):
        return len(self.elements)

    def __iter__(self) -> Iterator[BasicAction]:
        return iter(self.elements)

    def __getitem__(self, index):
        return self.elements[index]

    def __str__(self):
        return "({})".format(",".join(self.tokens))

    @classmethod
    def parse(cls, tokens: Iterable[str]):
        return cls(tuple(BasicAction.parse(t) for t in tokens))

    @property
    def tokens(self) -> tuple[str, ...]:
        return tuple(e.token for e in self.elements)

    @property
    def rank(self):
        return len(self.elements)

    @property
    def is_valid(self):
        return self.shape is not None

    @property
    def is_request(self):
        return self.shape is ActionClass.REQUEST

    @property
    def is_offer(self):
        return self.shape is ActionClass.OFFER

    @property
    def is_match(self):
        return self.shape is ActionClass.MATCH

    @property
    def pending(self) -> BasicAction | None:
        """The lone request or offer of a request/offer vector; matches have none."""
        if self.is_request:
            return self.elements[self.requester]
        if self.is_offer:
            return self.elements[self.sender]
        return None

    def snd(self) -> int | None:
        """Index of the offering principal, if any."""
        return self.sender

    def embed(self, rank: int, offset: int):
        """Place this vector at `offset` inside an all-idle vector of `rank`."""
        before = (IDLE,) * offset
        after = (IDLE,) * (rank - offset - self.rank)
        return ActionVector(before + self.elements + after)

    def overlay(self, other: "ActionVector"):
        """Element-wise union of two vectors of equal rank moving disjoint principals."""
        return ActionVector(tuple(b if a.is_idle else a for a, b in zip(self.elements, other.elements, strict=True)))


def classify(v: ActionVector) -> ActionClass:
    if v.shape is None:
        moving = [e.token for e in v.elements if not e.is_idle]
        if not moving:
            reason = "all elements are idle"
        elif len(moving) > 2:
            reason = f"{len(moving)} principals move"
        else:
            reason = f"elements {moving} are not complementary"
        raise InvalidAction(f"invalid action vector {v}: {reason}")
    return v.shape
