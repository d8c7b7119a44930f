from ._dataclasses import (
    ActionClass,
    ActionKind,
    AgreementProperty,
    Flavor,
    Modality,
    SerializedNamespace,
    SynthesisKind,
    TieBreak,
)
from .actions import IDLE, ActionVector, BasicAction, classify, co
from .automaton import EMPTY, EmptyAutomaton, Msca, StateVector, Transition, validate

__all__ = (
    "ActionClass",
    "ActionKind",
    "ActionVector",
    "AgreementProperty",
    "BasicAction",
    "EMPTY",
    "EmptyAutomaton",
    "Flavor",
    "IDLE",
    "Modality",
    "Msca",
    "SerializedNamespace",
    "StateVector",
    "SynthesisKind",
    "TieBreak",
    "Transition",
    "classify",
    "co",
    "validate",
)
