import random
from itertools import permutations

import pytest

from msca.analysis import (
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
from msca.composition import compose
from msca.io.fixtures import alice_bob_carol, client, principal, semi_controllable_pair
from msca.models import Flavor
from msca.oracle import random_msca, trace_agreement
from msca.utils.exceptions import RankMismatch


def test_reachability_on_the_pair():
    product = compose(semi_controllable_pair(bad_first_match=True))
    assert reachable(product) == product.states
    assert coreachable(product) == {("p0", "q0"), ("p0", "q2"), ("p1", "q3")}
    assert dangling(product) == {("p1", "q1")}
    assert trim(product).states == {("p0", "q0"), ("p0", "q2"), ("p1", "q3")}


def test_deleting_the_late_match_strands_its_source():
    product = compose(semi_controllable_pair())
    late = next(t for t in product.transitions if t.source == ("p0", "q2"))
    assert dangling(product.without([late])) == {("p0", "q2"), ("p1", "q3")}


def test_agreement_on_the_pair():
    product = compose(semi_controllable_pair())
    assert admits_agreement(product)
    assert is_safe(product)
    assert admits_strong_agreement(product)
    assert is_strongly_safe(product) is False


def test_lone_client_is_not_safe():
    c = client()
    assert admits_agreement(c)  # c0 is final
    assert not is_safe(c)
    no_empty_run = principal("P", "p0", ("p1",), [("p0", "?a", "p1")])
    assert not admits_agreement(no_empty_run)


@pytest.mark.parametrize("seed", range(100))
def test_structural_checks_agree_with_traces(seed):
    a = random_msca(random.Random(seed), Flavor.ORCHESTRATION, max_states=12)
    assert trace_agreement(a) == (admits_agreement(a), is_safe(a))
    assert trace_agreement(a, strong=True) == (admits_strong_agreement(a), is_strongly_safe(a))


def test_branching_violation_of_the_all_bad_instance():
    a = compose(alice_bob_carol())
    live = a.restrict(a.states - dangling(a))
    violations = branching_violations(live)
    assert {(t.source, t.label.tokens) for t in violations} == {(("a0", "b2", "c1"), ("!a", "?a", "-"))}


def test_good_branch_instance_has_no_violation_once_trimmed():
    a = compose(alice_bob_carol(good_branch=True))
    kept = {t for t in a.transitions if t.is_match and t.target != ("a1", "b0", "c2")}
    assert branching_violations(a.without(a.transitions - kept)) == frozenset()


def test_branching_ignores_states_in_r():
    a = compose(alice_bob_carol())
    assert branching_violations(a, r=a.states) == frozenset()


def test_sub_automaton():
    product = compose(semi_controllable_pair())
    smaller = product.restrict({("p0", "q0"), ("p1", "q1")})
    assert is_sub_automaton(smaller, product)
    assert not is_sub_automaton(product, smaller)
    with pytest.raises(RankMismatch):
        is_sub_automaton(client(), product)


def test_sub_automaton_modulo_modalities():
    product = compose(semi_controllable_pair())
    relaxed = product.relax()
    assert not is_sub_automaton(relaxed, product)
    assert is_sub_automaton(relaxed, product, ignore_modality=True)


def test_sub_automaton_is_a_partial_order(orc_corpus):
    rng = random.Random(0)
    for a in orc_corpus[:100]:
        b = a.without(rng.sample(a.sorted_transitions(), len(a.transitions) // 3))
        c = b.without(rng.sample(b.sorted_transitions(), len(b.transitions) // 3))
        triple = (a, b, c.relax())
        assert is_sub_automaton(c, b) and is_sub_automaton(b, a)
        for x in triple:
            assert is_sub_automaton(x, x)
        for x, y in permutations(triple, 2):
            if is_sub_automaton(x, y) and is_sub_automaton(y, x):
                assert x == y, a.name
        for x, y, z in permutations(triple):
            if is_sub_automaton(x, y) and is_sub_automaton(y, z):
                assert is_sub_automaton(x, z), a.name


# ---- hotel reservation ----


def test_hotel_line_ups_admit_agreement(a1, a2):
    assert admits_agreement(a1)
    assert admits_strong_agreement(a2)


def test_client_query_breaks_branching_in_a2(a2):
    matches = a2.without(t for t in a2.transitions if not t.is_match)
    violations = {(t.source, t.label.tokens) for t in branching_violations(matches)}
    assert (a2.initial, ("!qry", "-", "?qry", "-", "-")) in violations
