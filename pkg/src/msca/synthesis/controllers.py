from dataclasses import dataclass

from ..analysis import branching_violations
from ..models import AgreementProperty, Flavor, Msca, StateVector, SynthesisKind, TieBreak
from ..utils.exceptions import BranchingConditionBroken, FlavorMismatch
from .engine import Controller, SynthesisInput, SynthesisResult, abstract_synthesize
from .predicates import (
    choreography_predicates,
    forbidden_input,
    orchestration_predicates,
    prepare_agreement,
    prepare_strong_agreement,
)


@dataclass(frozen=True, slots=True)
class ExplicitForbidden:
    """Most permissive controller avoiding a given set of states."""

    states: frozenset[StateVector]

    def __post_init__(self):
        object.__setattr__(self, "states", frozenset(map(tuple, self.states)))


MpcProperty = AgreementProperty | ExplicitForbidden


def _require(a: Msca, flavor: Flavor, what: str):
    if a.flavor is not flavor:
        raise FlavorMismatch(f"{what} needs the {flavor} flavor, got {a.flavor}")


def mpc_input(a: Msca, prop: MpcProperty = AgreementProperty.AGREEMENT) -> SynthesisInput:
    match prop:
        case ExplicitForbidden(states=states):
            return forbidden_input(a, states)
        case AgreementProperty.STRONG_AGREEMENT:
            return prepare_strong_agreement(a)
        case _:
            return prepare_agreement(a)


def orchestration_input(a: Msca) -> SynthesisInput:
    _require(a, Flavor.ORCHESTRATION, "orchestration")
    return SynthesisInput(automaton=a, predicates=orchestration_predicates())


def choreography_input(a: Msca, selector: TieBreak = TieBreak.LEXMIN) -> SynthesisInput:
    _require(a, Flavor.CHOREOGRAPHY, "choreography")
    return SynthesisInput(automaton=a, predicates=choreography_predicates(selector))


def synthesize(
    a: Msca,
    kind: SynthesisKind,
    prop: MpcProperty = AgreementProperty.AGREEMENT,
    selector: TieBreak = TieBreak.LEXMIN,
    keep_history: bool = False,
) -> SynthesisResult:
    """
    Run the engine for `kind`, returning the full result (controller, bad states, iterations).

    Raises:
        BranchingConditionBroken: a non-empty choreography still has branching
            violations once the engine stops.
    """
    match SynthesisKind(kind):
        case SynthesisKind.MPC:
            spec = mpc_input(a, prop)
        case SynthesisKind.ORCHESTRATION:
            spec = orchestration_input(a)
        case SynthesisKind.CHOREOGRAPHY:
            spec = choreography_input(a, selector)

    result = abstract_synthesize(spec, keep_history=keep_history)

    if kind == SynthesisKind.CHOREOGRAPHY and not result.is_empty:
        if leftover := branching_violations(result.controller):
            raise BranchingConditionBroken(leftover)
    return result


def mpc(a: Msca, prop: MpcProperty = AgreementProperty.AGREEMENT) -> Controller:
    return synthesize(a, SynthesisKind.MPC, prop=prop).controller


def orchestration(a: Msca) -> Controller:
    return synthesize(a, SynthesisKind.ORCHESTRATION).controller


def choreography(a: Msca, selector: TieBreak = TieBreak.LEXMIN) -> Controller:
    return synthesize(a, SynthesisKind.CHOREOGRAPHY, selector=selector).controller
