import random

import pytest

from msca.analysis import dangling
from msca.composition import compose
from msca.io.fixtures import alice_bob_carol, semi_controllable_pair
from msca.models import EMPTY, Flavor, SynthesisKind, TieBreak, validate
from msca.oracle import (
    direct_choreography,
    direct_mpc,
    direct_orchestration,
    maximality_check,
    random_principal,
)
from msca.synthesis import abstract_synthesize, choreography, mpc_input, orchestration
from msca.utils.common import MAXIMALITY_TRANSITION_LIMIT
from msca.utils.exceptions import TooLarge

SMALL_INSTANCES = [
    semi_controllable_pair(),
    semi_controllable_pair(bad_first_match=True),
]
BRANCHING_INSTANCES = [alice_bob_carol(), alice_bob_carol(good_branch=True)]


# ---- engine against the direct definitions ----


def test_engine_matches_direct_definitions_on_hotel_reservation(a1, a1_orchestration, a1_mpc, a2, a2_choreography):
    assert direct_orchestration(a1) == a1_orchestration
    assert direct_mpc(mpc_input(a1)) == a1_mpc
    assert direct_choreography(a2) == a2_choreography


@pytest.mark.parametrize("operands", SMALL_INSTANCES)
def test_engine_matches_direct_definitions_on_small_instances(operands):
    a = compose(operands)
    assert direct_orchestration(a) == orchestration(a)
    spec = mpc_input(a)
    assert direct_mpc(spec) == abstract_synthesize(spec).controller


@pytest.mark.parametrize("operands", BRANCHING_INSTANCES)
@pytest.mark.parametrize("selector", list(TieBreak))
def test_engine_matches_direct_choreography_on_small_instances(operands, selector):
    a = compose(operands)
    assert direct_choreography(a, selector) == choreography(a, selector)


def test_engine_matches_direct_definitions_on_random_orchestrations(orc_corpus):
    for a in orc_corpus:
        assert direct_orchestration(a) == orchestration(a), a.name
        spec = mpc_input(a)
        assert direct_mpc(spec) == abstract_synthesize(spec).controller, a.name


def test_engine_matches_direct_definitions_on_random_choreographies(chor_corpus):
    for a in chor_corpus:
        for selector in TieBreak:
            assert direct_choreography(a, selector) == choreography(a, selector), a.name


# ---- maximality ----


@pytest.mark.parametrize("operands", SMALL_INSTANCES)
def test_small_controllers_are_maximal(operands):
    a = compose(operands)
    assert maximality_check(a, orchestration(a), SynthesisKind.ORCHESTRATION) is None
    spec = mpc_input(a)
    controller = abstract_synthesize(spec).controller
    assert maximality_check(spec.automaton, controller, SynthesisKind.MPC, spec.forbidden_states) is None


@pytest.mark.parametrize("operands", BRANCHING_INSTANCES)
def test_small_choreographies_are_maximal(operands):
    a = compose(operands)
    assert maximality_check(a, choreography(a), SynthesisKind.CHOREOGRAPHY) is None


def test_gratuitous_deletion_is_caught():
    a = compose(semi_controllable_pair())
    offer = next(t for t in a.transitions if t.is_offer)
    assert maximality_check(a, a.without([offer]), SynthesisKind.ORCHESTRATION) == offer


def test_random_controllers_are_maximal(orc_corpus):
    checked = 0
    for a in orc_corpus:
        if len(a.transitions) > MAXIMALITY_TRANSITION_LIMIT:
            continue
        assert maximality_check(a, orchestration(a), SynthesisKind.ORCHESTRATION) is None, a.name
        spec = mpc_input(a)
        controller = abstract_synthesize(spec).controller
        assert maximality_check(spec.automaton, controller, SynthesisKind.MPC, spec.forbidden_states) is None, a.name
        checked += 1
    assert checked


def test_mpc_controllers_avoid_forbidden_states(orc_corpus):
    for a in orc_corpus:
        spec = mpc_input(a)
        result = abstract_synthesize(spec)
        if result.controller is EMPTY:
            continue
        assert all(t.source not in spec.forbidden_states for t in result.controller.transitions)
        assert all(t.target not in result.bad_states for t in result.controller.transitions)
        assert dangling(result.controller) == frozenset()


def test_maximality_refuses_large_automata(a2, a2_choreography):
    with pytest.raises(TooLarge):
        maximality_check(a2, a2_choreography, SynthesisKind.CHOREOGRAPHY)


# ---- generator ----


def test_generated_automata_respect_their_flavor(orc_corpus, chor_corpus):
    for a in [*orc_corpus, *chor_corpus]:
        assert validate(a) == []
        assert a.finals
        assert len(a.states) <= 30
        assert a.rank <= 3
    assert any(t.is_necessary for a in chor_corpus for t in a.transitions)


def test_random_principal_keeps_names_on_one_side():
    for seed in range(50):
        p = random_principal(random.Random(seed), flavor=Flavor.CHOREOGRAPHY)
        assert validate(p) == []
        assert all(not (t.is_necessary and t.is_request) for t in p.transitions)
