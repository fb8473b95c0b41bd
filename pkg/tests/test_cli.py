import json
import subprocess
import sys

import pytest

from subspacecodes.cli import main
from subspacecodes.multishot import MultishotCode


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_enumerate_json(capsys):
    code, out, _ = run(capsys, "enumerate", "--q", "2", "--m", "2")
    data = json.loads(out)
    assert code == 0 and data["count"] == 5
    assert data["subspaces"] == [[], [[0, 1]], [[1, 0]], [[1, 1]], [[1, 0], [0, 1]]]


def test_enumerate_csv_and_text(capsys):
    _, out, _ = run(capsys, "enumerate", "--q", "2", "--m", "3", "--format", "csv")
    lines = out.strip().split("\n")
    assert lines[0] == "index,dim,basis" and len(lines) == 17
    _, out, _ = run(capsys, "enumerate", "--q", "3", "--m", "2", "--format", "text")
    assert len(out.strip().split("\n")) == 6


def test_distance(capsys):
    code, out, _ = run(capsys, "distance", "--q", "2", "--m", "2", "--a", "[[0,1]]", "--b", "[[1,0]]")
    assert code == 0 and json.loads(out)["distance"] == 2
    _, out, _ = run(capsys, "distance", "--q", "2", "--m", "2", "--a", "[]", "--b", "[[1,1],[0,1]]", "--format", "text")
    assert out == "2\n"


def test_bounds_sweep_csv(capsys):
    code, out, _ = run(capsys, "bounds", "--q", "2", "--m", "2", "--n", "3", "--d", "1", "--sweep", "6")
    lines = out.strip().split("\n")
    assert code == 0 and len(lines) == 7
    assert lines[2] == "2,2,3,2,25,16,125,125,25,125"


def test_bounds_json(capsys):
    _, out, _ = run(capsys, "bounds", "--q", "2", "--m", "2", "--n", "3", "--d", "2", "--format", "json")
    (rep,) = json.loads(out)
    assert rep["gv_lower"] == "625/41"


@pytest.mark.parametrize("component,size", [("parity", 62), ("odd-parity", 63)])
def test_multilevel_to_verify_round_trip(capsys, tmp_path, component, size):
    path = tmp_path / "code.json"
    design = tmp_path / "design.json"
    code, _, err = run(
        capsys, "multilevel", "--q", "2", "--m", "2", "--n", "3", "--d", "2",
        "--component", component, "-o", str(path), "--design-output", str(design),
    )
    assert code == 0 and "minimum distance 2" in err
    data = json.loads(path.read_text())
    assert data["count"] == size and data["min_distance"] == 2
    assert json.loads(design.read_text())["cutoff"] == 1
    code, out, _ = run(capsys, "verify", "--code", str(path), "--detect-weight", "1")
    rep = json.loads(out)
    assert code == 0 and rep["failures"] == []
    assert rep["detected"] == rep["events_tested"] > 0


def test_multilevel_with_tree_and_component_files(capsys, tmp_path):
    from subspacecodes import multilevel as ml
    from subspacecodes.galois import field_new
    from subspacecodes.subspace import projective_space

    tree = ml.default_tree(projective_space(field_new(2), 2))
    (tmp_path / "tree.json").write_text(json.dumps(tree.to_json()))
    (tmp_path / "comp.json").write_text(json.dumps([ml.repetition_code(2, 3).to_json()]))
    code, out, _ = run(
        capsys, "multilevel", "--q", "2", "--m", "2", "--n", "3", "--d", "2",
        "--tree", str(tmp_path / "tree.json"), "--component", str(tmp_path / "comp.json"),
    )
    assert code == 0 and json.loads(out)["count"] == 35


def test_verify_correction_and_samples(capsys, tmp_path):
    path = tmp_path / "c8.json"
    run(capsys, "multilevel", "--q", "2", "--m", "2", "--n", "3", "--d", "3", "-o", str(path))
    code, out, _ = run(capsys, "verify", "--code", str(path), "--correct-weight", "1", "--samples", "50", "--seed", "3")
    rep = json.loads(out)
    assert code == 0 and rep["failures"] == []
    assert rep["corrected"] + rep["detected"] == rep["events_tested"]


def test_search_modes(capsys):
    code, out, _ = run(capsys, "search", "--q", "2", "--m", "2", "--n", "3", "--d", "2")
    assert code == 0 and json.loads(out)["count"] == 62
    code, out, _ = run(capsys, "search", "--q", "2", "--m", "2", "--n", "3", "--d", "2", "--mode", "bnb")
    data = json.loads(out)
    assert data["count"] == 63 and data["certificate"]["optimal"]


def test_embed_preserves_size_and_distance(capsys, tmp_path):
    path = tmp_path / "c.json"
    run(capsys, "multilevel", "--q", "2", "--m", "2", "--n", "3", "--d", "2", "--component", "odd-parity", "-o", str(path))
    code, out, _ = run(capsys, "embed", "--code", str(path))
    data = json.loads(out)
    assert code == 0 and (data["m"], data["n"]) == (6, 1)
    assert data["count"] == 63 and data["min_distance"] == 2
    assert len(MultishotCode.from_json(data)) == 63


def test_outputs_are_byte_identical(capsys):
    argv = ["search", "--q", "2", "--m", "2", "--n", "2", "--d", "2", "--shuffle", "--seed", "11"]
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert a == b
    argv = ["multilevel", "--q", "2", "--m", "2", "--n", "3", "--d", "3"]
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


@pytest.mark.parametrize(
    "argv",
    [
        ["enumerate", "--q", "6", "--m", "2"],
        ["multilevel", "--q", "2", "--m", "2", "--n", "3", "--d", "2", "--component", "full"],
        ["bounds", "--q", "2", "--m", "2", "--n", "3", "--d", "9"],
        ["verify", "--code", "/nonexistent/code.json"],
        ["search", "--q", "2", "--m", "3", "--n", "5", "--d", "2", "--mode", "bnb"],
    ],
)
def test_domain_errors_exit_1(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1 and out == "" and err.startswith("error:")


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["enumerate", "--q", "2"],
        ["bounds", "--q", "2", "--m", "2", "--n", "3", "--d", "3", "--sweep", "2"],
        ["distance", "--q", "2", "--m", "2", "--a", "not json", "--b", "[]"],
        ["search", "--q", "2", "--m", "2", "--n", "0", "--d", "1"],
        ["enumerate", "--q", "2", "--m", "2", "--format", "xml"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "subspacecodes", "distance", "--q", "2", "--m", "2", "--a", "[[0,1]]", "--b", "[]", "--format", "text"],
        capture_output=True, text=True, check=True,
    )
    assert proc.stdout == "1\n"
