"""
Bundled automata: the hotel-reservation principals and their two line-ups,
plus two small instances used to illustrate semi-controllability and the
branching condition.

Principal states are plain labels (`c0`, `b5`, ...). A second copy of a
principal inside a line-up is primed (`c'0`, `h'2`, ...), so composed states
read `(c1,c'0,b5,h2,h'2)`.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from ..models import ActionVector, BasicAction, Flavor, Modality, Msca, Transition
from ..utils.common import CHOREOGRAPHY_FIXTURES, ORCHESTRATION_FIXTURES, PathLike
from .codec import dump

P = Modality.PERMITTED
N = Modality.NECESSARY


def principal(
    name: str,
    initial: str,
    finals: Iterable[str],
    edges: Iterable[tuple],
    flavor: Flavor = Flavor.ORCHESTRATION,
) -> Msca:
    """
    Rank-1 automaton from `(source, token, target[, modality])` edges, e.g.
    `("c0", "!qry", "c1")` or `("h2", "?bk", "h3", N)`.
    """
    transitions = []
    for source, token, target, *rest in edges:
        modality = rest[0] if rest else P
        label = ActionVector((BasicAction.parse(token),))
        transitions.append(Transition((source,), label, (target,), modality))
    return Msca.build(
        rank=1,
        initial=(initial,),
        finals=[(f,) for f in finals],
        transitions=transitions,
        flavor=flavor,
        name=name,
    )


def primed(a: Msca, name: str | None = None) -> Msca:
    """Copy of a principal with every state label primed (`c0` becomes `c'0`)."""

    def prime(q):
        return tuple(s[:1] + "'" + s[1:] for s in q)

    return Msca(
        rank=a.rank,
        states=frozenset(map(prime, a.states)),
        initial=prime(a.initial),
        finals=frozenset(map(prime, a.finals)),
        transitions=frozenset(
            Transition(prime(t.source), t.label, prime(t.target), t.modality) for t in a.transitions
        ),
        flavor=a.flavor,
        name=name or f"{a.name}'",
    )


# ---- hotel reservation ----


def client(flavor: Flavor = Flavor.ORCHESTRATION) -> Msca:
    return principal(
        "Client",
        "c0",
        ("c0", "c3", "c4"),
        [
            ("c0", "!qry", "c1"),
            ("c1", "?bst", "c2"),
            ("c2", "!ok", "c3"),
            ("c2", "!nok", "c4"),
        ],
        flavor,
    )


def privileged_client() -> Msca:
    """Choreography flavor only: its query offer is necessary."""
    return principal(
        "PrivilegedClient",
        "c'0",
        ("c'0", "c'3", "c'4"),
        [
            ("c'0", "!qry", "c'1", N),
            ("c'1", "?bst", "c'2"),
            ("c'2", "!ok", "c'3"),
            ("c'2", "!nok", "c'4"),
        ],
        Flavor.CHOREOGRAPHY,
    )


def broker(flavor: Flavor = Flavor.ORCHESTRATION) -> Msca:
    return principal(
        "Broker",
        "b0",
        ("b0", "b9", "b12"),
        [
            ("b0", "?qry", "b1"),
            ("b1", "!chk", "b2"),
            ("b2", "?rsp", "b3"),
            ("b3", "!chk", "b4"),
            ("b4", "?rsp", "b5"),
            ("b5", "!chk", "b4"),
            ("b5", "!bst", "b6"),
            ("b6", "?ok", "b7"),
            ("b6", "?nok", "b10"),
            ("b7", "!bk", "b8"),
            ("b8", "!nbk", "b9"),
            ("b9", "!nbk", "b9"),
            ("b10", "!nbk", "b11"),
            ("b11", "!nbk", "b12"),
            ("b12", "!nbk", "b12"),
        ],
        flavor,
    )


def hotel(flavor: Flavor = Flavor.ORCHESTRATION) -> Msca:
    return principal(
        "Hotel",
        "h0",
        ("h0", "h3", "h4"),
        [
            ("h0", "?chk", "h1"),
            ("h1", "!rsp", "h2"),
            ("h2", "?bk", "h3"),
            ("h2", "?nbk", "h4"),
        ],
        flavor,
    )


def privileged_hotel() -> Msca:
    """Orchestration flavor only: its booking request is necessary."""
    return principal(
        "PrivilegedHotel",
        "h'0",
        ("h'0", "h'3", "h'4"),
        [
            ("h'0", "?chk", "h'1"),
            ("h'1", "!rsp", "h'2"),
            ("h'2", "?bk", "h'3", N),
            ("h'2", "?nbk", "h'4"),
        ],
        Flavor.ORCHESTRATION,
    )


def a1_operands() -> list[Msca]:
    """Two clients, the broker, a hotel and the privileged hotel (orchestration flavor)."""
    return [client(), primed(client()), broker(), hotel(), privileged_hotel()]


def a2_operands() -> list[Msca]:
    """A client, the privileged client, the broker and two hotels (choreography flavor)."""
    chor = Flavor.CHOREOGRAPHY
    return [client(chor), privileged_client(), broker(chor), hotel(chor), primed(hotel(chor))]


def a2_orchestration_operands() -> list[Msca]:
    """Orchestration-flavored line-up of A2, with the privileged client's query permitted."""
    relaxed_client = privileged_client().relax().with_flavor(Flavor.ORCHESTRATION)
    return [client(), relaxed_client, broker(), hotel(), primed(hotel())]


@dataclass(frozen=True)
class FixtureSet:
    client: Msca
    privileged_client: Msca
    broker: Msca
    hotel: Msca
    privileged_hotel: Msca
    a1: tuple[Msca, ...]
    a2: tuple[Msca, ...]

    def principals(self) -> dict[str, Msca]:
        return {
            "Client": self.client,
            "PrivilegedClient": self.privileged_client,
            "Broker": self.broker,
            "Hotel": self.hotel,
            "PrivilegedHotel": self.privileged_hotel,
        }


def fixtures() -> FixtureSet:
    return FixtureSet(
        client=client(),
        privileged_client=privileged_client(),
        broker=broker(),
        hotel=hotel(),
        privileged_hotel=privileged_hotel(),
        a1=tuple(a1_operands()),
        a2=tuple(a2_operands()),
    )


def write_fixtures(directory: PathLike) -> list:
    """Write the principals as JSON under `orchestration/` and `choreography/`."""
    directory = Path(directory)
    chor = Flavor.CHOREOGRAPHY
    orchestration = dict(
        zip(ORCHESTRATION_FIXTURES, (client(), broker(), hotel(), privileged_hotel()), strict=True)
    )
    choreography = dict(
        zip(CHOREOGRAPHY_FIXTURES, (client(chor), privileged_client(), broker(chor), hotel(chor)), strict=True)
    )
    written = []
    for flavor_dir, bundle in (("orchestration", orchestration), ("choreography", choreography)):
        for stem, a in bundle.items():
            written.append(dump(a, directory / flavor_dir / f"{stem}.json"))
    return written


# ---- small instances ----


def semi_controllable_pair(bad_first_match: bool = False) -> list[Msca]:
    """
    P1 needs `?a`; P2 offers `!a` at once or after `!b`.

    With `bad_first_match` the state reached by the immediate match is not
    final, so only the route through `!b` succeeds.
    """
    p1 = principal("P1", "p0", ("p1",), [("p0", "?a", "p1", N)])
    p2_finals = ("q3",) if bad_first_match else ("q1", "q3")
    p2 = principal(
        "P2",
        "q0",
        p2_finals,
        [("q0", "!a", "q1"), ("q0", "!b", "q2"), ("q2", "!a", "q3")],
    )
    return [p1, p2]


def alice_bob_carol(good_branch: bool = False) -> list[Msca]:
    """
    Alice offers `!a` to whoever takes it first; Bob and Carol can both take
    it initially, and after Bob hands `!e` to Carol only Bob can.

    In the all-bad variant every state reached by Alice's offer from the
    initial state is a dead end. In the good-branch variant Alice's offer is
    necessary and its delivery to Bob from the initial state is successful.
    """
    chor = Flavor.CHOREOGRAPHY
    alice = principal("Alice", "a0", ("a1",), [("a0", "!a", "a1", N if good_branch else P)], chor)
    bob = principal(
        "Bob",
        "b0",
        ("b1", "b3") if good_branch else ("b3",),
        [("b0", "?a", "b1"), ("b0", "!e", "b2"), ("b2", "?a", "b3")],
        chor,
    )
    carol = principal(
        "Carol",
        "c0",
        ("c0", "c1") if good_branch else ("c1",),
        [("c0", "?a", "c2"), ("c0", "?e", "c1")],
        chor,
    )
    return [alice, bob, carol]
