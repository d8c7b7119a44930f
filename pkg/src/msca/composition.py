import logging
import time
from collections import defaultdict
from dataclasses import dataclass
from itertools import accumulate
from typing import Iterable, Iterator

from .models import Msca, StateVector, Transition, co, validate
from .utils.common import elapsed_ms
from .utils.exceptions import EmptyOperandList, MixedFlavor, ValidationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class _Block:
    """One operand placed at `offset` inside the composed vectors."""

    operand: Msca
    offset: int

    @property
    def width(self):
        return self.operand.rank

    def project(self, q: StateVector) -> StateVector:
        return q[self.offset : self.offset + self.width]

    def move(self, q: StateVector, local_target: StateVector) -> StateVector:
        return q[: self.offset] + local_target + q[self.offset + self.width :]


def compose(operands: Iterable[Msca]) -> Msca:
    """
    Synchronous product of `operands` with match forcing, reachable part only.

    From every reachable composed state, two operands that can perform a
    pending request and the complementary pending offer are matched, and the
    lone request and offer are suppressed. Moves with no partner interleave
    with everyone else idle. Transitions that are already matches are never
    re-matched. States are explored breadth first over a sorted frontier so the
    result is identical for identical operands.

    Raises:
        EmptyOperandList: `operands` is empty.
        MixedFlavor: operands disagree on the flavor.
        ValidationError: an operand is not well formed.
    """
    operands = list(operands)
    if not operands:
        raise EmptyOperandList("composition needs at least one operand")

    flavors = {o.flavor for o in operands}
    if len(flavors) > 1:
        raise MixedFlavor(f"operands mix flavors {sorted(map(str, flavors))}")

    for position, operand in enumerate(operands):
        if violations := validate(operand):
            raise ValidationError(violations, f"operand {position} ({operand.name or '-'}) is invalid")

    offsets = [0, *accumulate(o.rank for o in operands)]
    blocks = [_Block(o, off) for o, off in zip(operands, offsets)]
    rank = offsets[-1]
    initial = sum((o.initial for o in operands), ())

    started = time.perf_counter()
    seen = {initial}
    frontier = [initial]
    transitions = []

    while frontier:
        discovered = set()
        for q in frontier:
            for t in _expand(q, blocks, rank):
                transitions.append(t)
                if t.target not in seen:
                    seen.add(t.target)
                    discovered.add(t.target)
        frontier = sorted(discovered)

    finals = {q for q in seen if all(b.project(q) in b.operand.finals for b in blocks)}
    composed = Msca(
        rank=rank,
        states=frozenset(seen),
        initial=initial,
        finals=frozenset(finals),
        transitions=frozenset(transitions),
        flavor=operands[0].flavor,
        name=" || ".join(o.name or "?" for o in operands),
    )
    logger.debug(
        "composed %d operands: %d states, %d transitions in %s",
        len(operands),
        len(composed.states),
        len(composed.transitions),
        elapsed_ms(started, time.perf_counter()),
    )
    return composed


def _expand(q: StateVector, blocks: list[_Block], rank: int) -> Iterator[Transition]:
    enabled = [(i, t) for i, b in enumerate(blocks) for t in b.operand.outgoing_from(b.project(q))]

    requests = defaultdict(list)
    offers = defaultdict(list)
    for i, t in enabled:
        if (pending := t.label.pending) is None:
            continue
        (requests if pending.is_request else offers)[pending.name].append((i, t))

    def partners(i, t):
        pending = t.label.pending
        if pending is None:
            return False
        pool = offers if pending.is_request else requests
        return any(j != i for j, _ in pool.get(co(pending).name, ()))

    # Matches, requester first.
    for name, requesters in requests.items():
        for i, t_i in requesters:
            for j, t_j in offers.get(name, ()):
                if i == j:
                    continue
                b_i, b_j = blocks[i], blocks[j]
                label = t_i.label.embed(rank, b_i.offset).overlay(t_j.label.embed(rank, b_j.offset))
                target = b_j.move(b_i.move(q, t_i.target), t_j.target)
                yield Transition(q, label, target, t_i.modality.join(t_j.modality))

    # Interleaving of everything that has no partner.
    for i, t in enabled:
        if partners(i, t):
            continue
        b = blocks[i]
        yield Transition(q, t.label.embed(rank, b.offset), b.move(q, t.target), t.modality)
