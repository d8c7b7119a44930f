import pytest

from msca.cli import run
from msca.composition import compose
from msca.io import dump, load
from msca.io.fixtures import semi_controllable_pair
from msca.utils import __version__


@pytest.fixture(scope="module")
def fixture_dir(tmp_path_factory):
    directory = tmp_path_factory.mktemp("fixtures")
    assert run(["fixtures", "--dir", str(directory)]) == 0
    return directory


@pytest.fixture(scope="module")
def a1_file(fixture_dir):
    orc = fixture_dir / "orchestration"
    out = fixture_dir / "a1.json"
    inputs = [orc / f"{stem}.json" for stem in ("client", "client", "broker", "hotel", "privileged_hotel")]
    assert run(["compose", "-o", str(out), *map(str, inputs)]) == 0
    return out


def test_metadata_flags(capsys):
    assert run(["--version"]) == 0
    assert capsys.readouterr().out.strip() == __version__


def test_help_exits_cleanly(capsys):
    assert run(["--help"]) == 0
    assert "synth" in capsys.readouterr().out


def test_missing_command_prints_help(capsys):
    assert run([]) == 2
    assert "usage" in capsys.readouterr().out


def test_compose_then_info(a1_file, capsys):
    assert run(["info", str(a1_file)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert "states: 2934" in lines
    assert "rank: 5" in lines


def test_mpc_of_a1(a1_file, tmp_path):
    out = tmp_path / "mpc.json"
    assert run(["synth", "--kind", "mpc", "--property", "agreement", "-o", str(out), str(a1_file)]) == 0
    assert len(load(out).states) == 1


def test_orchestration_of_a1(a1_file, capsys):
    assert run(["synth", "--kind", "orchestration", str(a1_file)]) == 0
    assert '"flavor": "orchestration"' in capsys.readouterr().out


def test_choreography_needs_the_choreography_flavor(a1_file, capsys):
    assert run(["synth", "--kind", "choreography", str(a1_file)]) == 2
    assert "FlavorMismatch" in capsys.readouterr().err


def test_forbidden_and_property_exclude_each_other(a1_file):
    argv = ["synth", "--kind", "mpc", "--property", "agreement", "--forbidden", "c0,c0,b0,h0,h'0", str(a1_file)]
    assert run(argv) == 2


def test_empty_result_exits_with_1(tmp_path, capsys):
    path = dump(compose(semi_controllable_pair(bad_first_match=True)), tmp_path / "pair.json")
    assert run(["synth", "--kind", "mpc", str(path)]) == 1
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "empty" in captured.err


def test_forbidden_states(tmp_path):
    path = dump(compose(semi_controllable_pair()), tmp_path / "pair.json")
    out = tmp_path / "mpc.json"
    assert run(["synth", "--kind", "mpc", "--forbidden", "p0,q2", "-o", str(out), str(path)]) == 0
    assert load(out).states == {("p0", "q0"), ("p1", "q1")}


def test_unknown_forbidden_state_is_invalid_input(tmp_path):
    path = dump(compose(semi_controllable_pair()), tmp_path / "pair.json")
    assert run(["synth", "--kind", "mpc", "--forbidden", "p9,q9", str(path)]) == 2


def test_checks(fixture_dir, capsys):
    client = str(fixture_dir / "orchestration" / "client.json")
    assert run(["check", "--safe", client]) == 0
    assert capsys.readouterr().out.strip() == "false"
    assert run(["check", "--admits-agreement", client]) == 0
    assert capsys.readouterr().out.strip() == "true"
    assert run(["check", client]) == 2


def test_export(fixture_dir, tmp_path):
    out = tmp_path / "client.dot"
    assert run(["export", "--dot", "-o", str(out), str(fixture_dir / "orchestration" / "client.json")]) == 0
    assert out.read_text(encoding="utf-8").startswith("digraph")


def test_malformed_input(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text('{"rank": 1', encoding="utf-8")
    assert run(["info", str(path)]) == 2
    assert "ParseError" in capsys.readouterr().err


@pytest.mark.parametrize(
    "content",
    [b"\xff\xfe{}", b"[" * 100_000 + b"]" * 100_000],
    ids=["not-utf8", "deep-nesting"],
)
def test_undecodable_input_is_invalid(tmp_path, capsys, content):
    path = tmp_path / "input.json"
    path.write_bytes(content)
    assert run(["info", str(path)]) == 2
    assert "ParseError" in capsys.readouterr().err


def test_missing_file(tmp_path):
    assert run(["info", str(tmp_path / "absent.json")]) == 2
