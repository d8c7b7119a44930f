from ..models import Msca, Transition
from ..utils.common import MAXIMALITY_TRANSITION_LIMIT
from ..utils.exceptions import TooLarge


def _spoils(t: Transition, strong: bool) -> bool:
    return t.is_request or (strong and t.is_offer)


def trace_agreement(a: Msca, strong: bool = False, max_length: int | None = None) -> tuple[bool, bool]:
    """
    Brute-force `(admits, safe)` by walking every run of at most `max_length`
    steps (default `2 * |Q| + 1`).

    A run is spoiled by a lone request, or with `strong` by a lone offer too.
    `a` admits (strong) agreement when some unspoiled run is accepted, and is
    (strongly) safe when no spoiled run is. Runs are summarized by their
    current state and whether they are spoiled yet.
    """
    if len(a.transitions) > MAXIMALITY_TRANSITION_LIMIT:
        raise TooLarge(f"trace enumeration is limited to {MAXIMALITY_TRANSITION_LIMIT} transitions")
    if max_length is None:
        max_length = 2 * len(a.states) + 1

    layer = {(a.initial, False)}
    seen = set(layer)
    for _ in range(max_length):
        layer = {
            (t.target, spoiled or _spoils(t, strong))
            for q, spoiled in layer
            for t in a.outgoing_from(q)
        } - seen
        if not layer:
            break
        seen |= layer

    accepted = {spoiled for q, spoiled in seen if q in a.finals}
    return False in accepted, True not in accepted
