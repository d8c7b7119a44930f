import json

import pytest

from msca.io import dump, fixtures, load, parse, serialize, to_document, to_dot, write_fixtures
from msca.io.fixtures import client
from msca.models import EMPTY
from msca.utils.exceptions import ParseError, ValidationError


def client_document():
    return {
        "name": "Client",
        "rank": 1,
        "flavor": "orchestration",
        "states": [["c0"], ["c1"], ["c2"], ["c3"], ["c4"]],
        "initial": ["c0"],
        "finals": [["c0"], ["c3"], ["c4"]],
        "transitions": [
            {"from": ["c0"], "label": ["!qry"], "to": ["c1"], "modality": "permitted"},
            {"from": ["c1"], "label": ["?bst"], "to": ["c2"], "modality": "permitted"},
            {"from": ["c2"], "label": ["!nok"], "to": ["c4"], "modality": "permitted"},
            {"from": ["c2"], "label": ["!ok"], "to": ["c3"], "modality": "permitted"},
        ],
    }


def test_client_document():
    assert to_document(client()) == client_document()
    assert parse(json.dumps(client_document())) == client()


def test_serialization_is_canonical():
    text = serialize(client())
    assert text.endswith("}\n")
    assert serialize(parse(text)) == text


def test_round_trip_on_random_corpus(orc_corpus, chor_corpus):
    for a in [*orc_corpus[:100], *chor_corpus[:100]]:
        assert parse(serialize(a)) == a


def test_modality_defaults_to_permitted():
    doc = client_document()
    for t in doc["transitions"]:
        del t["modality"]
    assert parse(json.dumps(doc)) == client()


def test_invalid_label_is_a_validation_error():
    doc = client_document()
    doc["rank"] = 2
    doc["states"] = [q + ["x"] for q in doc["states"]]
    doc["initial"] = ["c0", "x"]
    doc["finals"] = [q + ["x"] for q in doc["finals"]]
    doc["transitions"] = [{"from": ["c0", "x"], "label": ["?a", "?a"], "to": ["c1", "x"]}]
    with pytest.raises(ValidationError) as info:
        parse(json.dumps(doc))
    assert any("neither a request, an offer nor a match" in v for v in info.value.violations)


@pytest.mark.parametrize(
    "mutate, path",
    [
        (lambda d: d.update(rank="1"), "$.rank"),
        (lambda d: d.update(flavor="both"), "$.flavor"),
        (lambda d: d["transitions"][1].update(label=["?"]), "$.transitions[1].label[0]"),
        (lambda d: d["transitions"][2].update(modality="maybe"), "$.transitions[2].modality"),
        (lambda d: d["states"].append("c9"), "$.states[5]"),
        (lambda d: d.pop("initial"), "$"),
    ],
)
def test_parse_errors_carry_a_path(mutate, path):
    doc = client_document()
    mutate(doc)
    with pytest.raises(ParseError) as info:
        parse(json.dumps(doc))
    assert info.value.path == path


def test_malformed_json():
    with pytest.raises(ParseError, match="invalid JSON"):
        parse("{")


def test_deeply_nested_json():
    with pytest.raises(ParseError, match="nested too deeply"):
        parse("[" * 100_000 + "]" * 100_000)


def test_load_rejects_non_utf8_files(tmp_path):
    path = tmp_path / "latin1.json"
    path.write_bytes(b"\xff\xfe{}")
    with pytest.raises(ParseError, match="not UTF-8"):
        load(path)


def test_dump_and_load(tmp_path):
    path = dump(client(), tmp_path / "nested" / "client.json")
    assert load(path) == client()


def test_write_fixtures(tmp_path):
    written = write_fixtures(tmp_path)
    names = sorted(str(p.relative_to(tmp_path)) for p in written)
    assert names == [
        "choreography/broker.json",
        "choreography/client.json",
        "choreography/hotel.json",
        "choreography/privileged_client.json",
        "orchestration/broker.json",
        "orchestration/client.json",
        "orchestration/hotel.json",
        "orchestration/privileged_hotel.json",
    ]
    assert load(tmp_path / "orchestration" / "privileged_hotel.json") == fixtures().privileged_hotel


def count_dot(text):
    lines = text.splitlines()
    nodes = [line for line in lines if "shape=circle" in line]
    edges = [line for line in lines if "->" in line and "label=" in line]
    doubled = [line for line in lines if "peripheries=2" in line]
    return len(nodes), len(edges), len(doubled)


def test_dot_export_of_client():
    text = to_dot(client())
    assert count_dot(text) == (5, 4, 3)
    assert "rankdir=LR" in text
    assert "shape=point" in text


def test_dot_export_of_the_choreography(a2_choreography):
    nodes, edges, _ = count_dot(to_dot(a2_choreography))
    assert (nodes, edges) == (13, 12)
    assert "□" in to_dot(a2_choreography)


def test_dot_export_of_the_empty_controller():
    text = to_dot(EMPTY)
    assert "EMPTY" in text
    assert "->" not in text
