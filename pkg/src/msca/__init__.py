from .analysis import (
    admits_agreement,
    admits_strong_agreement,
    branching_violations,
    coreachable,
    dangling,
    is_safe,
    is_strongly_safe,
    is_sub_automaton,
    reachable,
    trim,
)
from .composition import compose
from .log import Logger, RotateLogHandler, get_logger
from .models import (
    EMPTY,
    ActionVector,
    AgreementProperty,
    BasicAction,
    Flavor,
    Modality,
    Msca,
    SynthesisKind,
    TieBreak,
    Transition,
    co,
    validate,
)
from .synthesis import (
    ExplicitForbidden,
    PredicatePair,
    SynthesisInput,
    SynthesisResult,
    abstract_synthesize,
    choreography,
    mpc,
    orchestration,
    synthesize,
)
from .utils import MscaError, __version__

__all__ = (
    "__version__",
    "ActionVector",
    "AgreementProperty",
    "BasicAction",
    "EMPTY",
    "ExplicitForbidden",
    "Flavor",
    "Logger",
    "Modality",
    "Msca",
    "MscaError",
    "PredicatePair",
    "RotateLogHandler",
    "SynthesisInput",
    "SynthesisKind",
    "SynthesisResult",
    "TieBreak",
    "Transition",
    "abstract_synthesize",
    "admits_agreement",
    "admits_strong_agreement",
    "branching_violations",
    "choreography",
    "co",
    "compose",
    "coreachable",
    "dangling",
    "get_logger",
    "is_safe",
    "is_strongly_safe",
    "is_sub_automaton",
    "mpc",
    "orchestration",
    "reachable",
    "synthesize",
    "trim",
    "validate",
)
