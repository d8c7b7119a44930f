from ._version import __version__, __version_info__
from .exceptions import (
    BranchingConditionBroken,
    EmptyOperandList,
    FlavorMismatch,
    InvalidAction,
    InvalidInput,
    MixedFlavor,
    MscaError,
    NonMonotonePredicate,
    ParseError,
    RankMismatch,
    TooLarge,
    ValidationError,
)

__all__ = (
    "__version__",
    "__version_info__",
    "BranchingConditionBroken",
    "EmptyOperandList",
    "FlavorMismatch",
    "InvalidAction",
    "InvalidInput",
    "MixedFlavor",
    "MscaError",
    "NonMonotonePredicate",
    "ParseError",
    "RankMismatch",
    "TooLarge",
    "ValidationError",
)
