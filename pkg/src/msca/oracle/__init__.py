from .direct import direct_choreography, direct_mpc, direct_orchestration
from .generator import random_msca, random_operands, random_principal
from .maximality import maximality_check
from .traces import trace_agreement

__all__ = (
    "direct_choreography",
    "direct_mpc",
    "direct_orchestration",
    "maximality_check",
    "random_msca",
    "random_operands",
    "random_principal",
    "trace_agreement",
)
