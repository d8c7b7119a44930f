import json
from pathlib import Path

from ..models import ActionVector, BasicAction, Flavor, Modality, Msca, Transition, validate
from ..utils.common import PathLike
from ..utils.exceptions import InvalidAction, ParseError, ValidationError


def to_document(a: Msca) -> dict:
    """Canonical JSON-ready form: every array sorted."""
    return {
        "name": a.name,
        "rank": a.rank,
        "flavor": str(a.flavor),
        "states": [list(q) for q in sorted(a.states)],
        "initial": list(a.initial),
        "finals": [list(q) for q in sorted(a.finals)],
        "transitions": [
            {
                "from": list(t.source),
                "label": list(t.label.tokens),
                "to": list(t.target),
                "modality": str(t.modality),
            }
            for t in sorted(a.transitions)
        ],
    }


def serialize(a: Msca) -> str:
    return json.dumps(to_document(a), indent=2, ensure_ascii=False) + "\n"


def _expect(value, kind, path):
    if not isinstance(value, kind) or (kind is int and isinstance(value, bool)):
        raise ParseError(f"expected {kind.__name__}, got {type(value).__name__}", path)
    return value


def _state(value, path) -> tuple[str, ...]:
    _expect(value, list, path)
    for i, label in enumerate(value):
        _expect(label, str, f"{path}[{i}]")
    return tuple(value)


def _states(value, path) -> list[tuple[str, ...]]:
    _expect(value, list, path)
    return [_state(q, f"{path}[{i}]") for i, q in enumerate(value)]


def _label(value, path) -> ActionVector:
    _expect(value, list, path)
    elements = []
    for i, token in enumerate(value):
        try:
            elements.append(BasicAction.parse(token))
        except InvalidAction as exc:
            raise ParseError(str(exc), f"{path}[{i}]") from exc
    return ActionVector(tuple(elements))


def _transition(value, path) -> Transition:
    _expect(value, dict, path)
    for key in ("from", "label", "to"):
        if key not in value:
            raise ParseError(f"missing field {key!r}", path)
    modality = value.get("modality", str(Modality.PERMITTED))
    try:
        modality = Modality(modality)
    except ValueError as exc:
        raise ParseError(f"unknown modality {modality!r}", f"{path}.modality") from exc
    return Transition(
        source=_state(value["from"], f"{path}.from"),
        label=_label(value["label"], f"{path}.label"),
        target=_state(value["to"], f"{path}.to"),
        modality=modality,
    )


def from_document(doc) -> Msca:
    _expect(doc, dict, "$")
    for key in ("rank", "flavor", "states", "initial", "finals", "transitions"):
        if key not in doc:
            raise ParseError(f"missing field {key!r}", "$")

    try:
        flavor = Flavor(doc["flavor"])
    except ValueError as exc:
        raise ParseError(f"unknown flavor {doc['flavor']!r}", "$.flavor") from exc

    transitions = _expect(doc["transitions"], list, "$.transitions")
    a = Msca(
        rank=_expect(doc["rank"], int, "$.rank"),
        states=frozenset(_states(doc["states"], "$.states")),
        initial=_state(doc["initial"], "$.initial"),
        finals=frozenset(_states(doc["finals"], "$.finals")),
        transitions=frozenset(_transition(t, f"$.transitions[{i}]") for i, t in enumerate(transitions)),
        flavor=flavor,
        name=_expect(doc.get("name", ""), str, "$.name"),
    )
    if violations := validate(a):
        raise ValidationError(violations)
    return a


def parse(text: str) -> Msca:
    """
    Decode a JSON automaton document.

    Raises:
        ParseError: malformed JSON or a field of the wrong shape (the message
            carries the JSON path, e.g. `$.transitions[3].label[1]`).
        ValidationError: the document is well formed but the automaton is not.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    except RecursionError as exc:
        raise ParseError("JSON nested too deeply") from exc
    return from_document(doc)


def load(path: PathLike) -> Msca:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path} is not UTF-8 text: {exc.reason} at byte {exc.start}") from exc
    return parse(text)


def dump(a: Msca, path: PathLike) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(serialize(a), encoding="utf-8")
    return path
