from .controllers import (
    ExplicitForbidden,
    choreography,
    choreography_input,
    mpc,
    mpc_input,
    orchestration,
    orchestration_input,
    synthesize,
)
from .engine import (
    Controller,
    PredicatePair,
    SynthesisInput,
    SynthesisResult,
    SynthesisSnapshot,
    abstract_synthesize,
    extract_controller,
    synthesis_step,
)
from .predicates import (
    choreography_predicates,
    forbidden_input,
    mpc_predicates,
    orchestration_predicates,
    prepare_agreement,
    prepare_strong_agreement,
    select_violation,
)

__all__ = (
    "Controller",
    "ExplicitForbidden",
    "PredicatePair",
    "SynthesisInput",
    "SynthesisResult",
    "SynthesisSnapshot",
    "abstract_synthesize",
    "choreography",
    "choreography_input",
    "choreography_predicates",
    "extract_controller",
    "forbidden_input",
    "mpc",
    "mpc_input",
    "mpc_predicates",
    "orchestration",
    "orchestration_input",
    "orchestration_predicates",
    "prepare_agreement",
    "prepare_strong_agreement",
    "select_violation",
    "synthesis_step",
    "synthesize",
)
