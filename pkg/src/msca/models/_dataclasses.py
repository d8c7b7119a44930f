from enum import StrEnum, auto
from functools import total_ordering
from types import SimpleNamespace

from ..utils.common import NECESSARY_GLYPH, PERMITTED_GLYPH, type_name


class SerializedNamespace(SimpleNamespace):
    """
    A mutable, serializable namespace with dict-like behavior. Used for parsed
    command-line arguments, automaton summaries and metadata.
    """

    def __init__(self, **kwargs):
        self.__name__ = kwargs.pop("module", type_name(self))
        super().__init__(**kwargs)

    @property
    def __dir__(self):
        # Exclude __name__ from dir() listings
        return [k for k in super().__dir__() if not k.startswith("_")]

    def __bool__(self):
        return bool(self.__getstate__())

    def __getstate__(self):
        # Only include public attributes for serialization
        return {k: v for k, v in super().__dict__.items() if k in self.__dir__}

    def __repr__(self):
        items = ("{}={!r}".format(*kv) for kv in self.__getstate__().items())
        return f"{self.__name__}({', '.join(items)})"

    def __getattribute__(self, name):
        try:
            return super().__getattribute__(name)
        except AttributeError:
            # Missing attributes read as None
            pass

    def __getitem__(self, name):
        return self.__getattribute__(name)

    def items(self):
        return self.__getstate__().items()

    def asdict(self):
        return self.__getstate__()

    def lines(self, sep: str = ": "):
        """Render as `key: value` lines, underscores in keys shown as spaces."""
        return [f"{k.replace('_', ' ')}{sep}{v}" for k, v in self.items()]


class ActionKind(StrEnum):
    """
    Kind of a single basic action over the shared alphabet of action names.

    Members:
        - REQUEST: an input `?a`, waiting for a partner offering `a`.
        - OFFER: an output `!a`, waiting for a partner requesting `a`.
        - IDLE: the principal does not move (`-`).

    Designed for:
        Building basic actions and their complement (`co`), which swaps
        REQUEST and OFFER and fixes IDLE.
    """

    REQUEST = auto()
    OFFER = auto()
    IDLE = auto()

    def complement(self):
        match self:
            case ActionKind.REQUEST:
                return ActionKind.OFFER
            case ActionKind.OFFER:
                return ActionKind.REQUEST
            case _:
                return ActionKind.IDLE


class ActionClass(StrEnum):
    """
    Classification of an action vector.

    Members:
        - REQUEST: exactly one request, everything else idle.
        - OFFER: exactly one offer, everything else idle.
        - MATCH: one request and its complementary offer at two distinct
          indices, everything else idle.
    """

    REQUEST = auto()
    OFFER = auto()
    MATCH = auto()


@total_ordering
class Modality(StrEnum):
    """
    Modality tag of a transition.

    Members:
        - PERMITTED: controllable, may be pruned freely (◇).
        - NECESSARY: semi-controllable, must be honoured while a witness
          exists (□).

    Ordering places PERMITTED before NECESSARY, which is also the pruning
    priority used when a choreography violation has to be chosen.
    """

    PERMITTED = auto()
    NECESSARY = auto()

    def __lt__(self, value):
        if not isinstance(value, Modality):
            return NotImplemented
        return self is Modality.PERMITTED and value is Modality.NECESSARY

    @property
    def glyph(self):
        return NECESSARY_GLYPH if self is Modality.NECESSARY else PERMITTED_GLYPH

    @property
    def is_necessary(self):
        return self is Modality.NECESSARY

    def join(self, other: "Modality"):
        """Modality of a match: necessary as soon as one participant is."""
        return Modality.NECESSARY if Modality.NECESSARY in (self, other) else Modality.PERMITTED


class Flavor(StrEnum):
    """
    Which actions an automaton may tag as necessary.

    Members:
        - ORCHESTRATION: necessary requests and matches; offers are always permitted.
        - CHOREOGRAPHY: necessary offers and matches; requests are always permitted.
    """

    ORCHESTRATION = auto()
    CHOREOGRAPHY = auto()

    def allows_necessary(self, action_class: ActionClass):
        if action_class is ActionClass.MATCH:
            return True
        if self is Flavor.ORCHESTRATION:
            return action_class is ActionClass.REQUEST
        return action_class is ActionClass.OFFER


class TieBreak(StrEnum):
    """
    Selector for the branching violation pruned by a choreography step.

    Members:
        - LEXMIN: the least violation by (source, label, target).
        - LEXMAX: the greatest violation by (source, label, target).
        - PERMITTED_FIRST: the least permitted violation, falling back to the
          least necessary one when every violation is necessary.
    """

    LEXMIN = auto()
    LEXMAX = auto()
    PERMITTED_FIRST = auto()


class SynthesisKind(StrEnum):
    MPC = auto()
    ORCHESTRATION = auto()
    CHOREOGRAPHY = auto()


class AgreementProperty(StrEnum):
    """
    Invariant enforced by the most permissive controller.

    Members:
        - AGREEMENT: every request is matched.
        - STRONG_AGREEMENT: every request and every offer is matched.
    """

    AGREEMENT = "agreement"
    STRONG_AGREEMENT = "strong-agreement"
