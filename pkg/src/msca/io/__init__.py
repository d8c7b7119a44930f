from .codec import dump, from_document, load, parse, serialize, to_document
from .dot import to_dot, to_graph
from .fixtures import (
    FixtureSet,
    a1_operands,
    a2_operands,
    a2_orchestration_operands,
    alice_bob_carol,
    fixtures,
    primed,
    principal,
    semi_controllable_pair,
    write_fixtures,
)

__all__ = (
    "FixtureSet",
    "a1_operands",
    "a2_operands",
    "a2_orchestration_operands",
    "alice_bob_carol",
    "dump",
    "fixtures",
    "from_document",
    "load",
    "parse",
    "primed",
    "principal",
    "semi_controllable_pair",
    "serialize",
    "to_document",
    "to_dot",
    "to_graph",
    "write_fixtures",
)
