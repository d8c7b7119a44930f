from msca.io.fixtures import broker, client, fixtures, principal, privileged_client, privileged_hotel
from msca.models import ActionVector, Flavor, Modality, Msca, Transition, validate


def test_fixtures_are_well_formed():
    principals = fixtures().principals()
    assert sorted(principals) == ["Broker", "Client", "Hotel", "PrivilegedClient", "PrivilegedHotel"]
    for name, a in principals.items():
        assert validate(a) == [], name
        assert a.name == name


def test_broker_size():
    b = broker()
    assert len(b.states) == 13
    assert len(b.transitions) == 15
    assert b.finals == {("b0",), ("b9",), ("b12",)}


def test_alphabets():
    c = client()
    assert c.offers == {"qry", "ok", "nok"}
    assert c.permitted_requests == {"bst"}
    assert c.necessary_requests == frozenset()
    assert privileged_hotel().necessary_requests == {"bk"}
    assert privileged_client().necessary_offers == {"qry"}


def test_relax_forgets_modalities():
    relaxed = privileged_hotel().relax()
    assert relaxed.necessary_requests == frozenset()
    assert relaxed.permitted_requests == {"chk", "bk", "nbk"}


def test_equality_ignores_name():
    assert client().renamed("someone else") == client()
    assert hash(client().renamed("x")) == hash(client())


def test_necessary_offer_is_invalid_for_orchestration():
    a = principal("P", "p0", ("p1",), [("p0", "!a", "p1", Modality.NECESSARY)])
    assert any("forbids" in v for v in validate(a))
    assert validate(a.with_flavor(Flavor.CHOREOGRAPHY)) == []


def test_principal_cannot_request_and_offer_the_same_name():
    a = principal("P", "p0", ("p0",), [("p0", "?a", "p1"), ("p1", "!a", "p0")])
    assert validate(a) == ["principal both requests and offers 'a'"]


def test_idle_principal_must_keep_its_state():
    t = Transition(("x0", "y0"), ActionVector.parse(["?a", "-"]), ("x1", "y1"))
    a = Msca.build(rank=2, initial=("x0", "y0"), finals=[("x1", "y1")], transitions=[t])
    assert any("idle principal 1 changes state" in v for v in validate(a))


def test_dangling_references_are_reported():
    t = Transition(("p0",), ActionVector.parse(["?a"]), ("p9",))
    a = Msca(rank=1, states={("p0",)}, initial=("p0",), finals={("p1",)}, transitions={t})
    violations = validate(a)
    assert "final state ('p1',) is not a state" in violations
    assert any("target is not a state" in v for v in violations)


def test_restrict_and_without():
    c = client()
    first = c.outgoing_from(("c0",))[0]
    assert first.label.tokens == ("!qry",)
    assert len(c.without([first]).transitions) == 3
    assert c.without([first]).states == c.states

    kept = c.restrict({("c0",), ("c1",)})
    assert kept.states == {("c0",), ("c1",)}
    assert kept.finals == {("c0",)}
    assert len(kept.transitions) == 1


def test_describe():
    lines = client().describe().lines()
    assert "rank: 1" in lines
    assert "states: 5" in lines
    assert "transitions: 4" in lines
    assert "offers: nok, ok, qry" in lines
    assert "flavor: orchestration" in lines
