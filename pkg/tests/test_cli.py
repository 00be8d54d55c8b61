import json
import subprocess
import sys

import pytest

from quatlie import serialize
from quatlie.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_build_writes_algebra_and_manifest(tmp_path, capsys):
    path = tmp_path / "a1.json"
    code, doc = run_json(capsys, "build", "--type", "A", "--rank", "1", "--out", str(path))
    assert code == 0
    assert doc["ok"] and doc["dim"] == 15 and doc["dim_k"] == 7
    assert "timings_ms" in doc
    stored = json.loads(path.read_text())
    assert stored["dim"] == 15
    assert stored["manifest"]["inputs"] == {"rank": 1, "type": "A"}
    assert "timings_ms" not in stored["manifest"]


def test_build_rank2_dimension(tmp_path, capsys):
    path = tmp_path / "a2.json"
    code, doc = run_json(capsys, "build", "--type", "A", "--rank", "2", "--out", str(path))
    assert code == 0 and doc["dim"] == 35


def test_build_usage_error(tmp_path, capsys):
    code = main(["build", "--type", "Z", "--rank", "9", "--out", str(tmp_path / "z.json")])
    assert code == 2


def test_build_byte_deterministic(tmp_path, capsys):
    first = tmp_path / "x.json"
    second = tmp_path / "y.json"
    assert main(["build", "--type", "A", "--rank", "1", "--out", str(first)]) == 0
    assert main(["build", "--type", "A", "--rank", "1", "--out", str(second)]) == 0
    capsys.readouterr()
    assert first.read_bytes() == second.read_bytes()


@pytest.fixture(scope="module")
def a2_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("cli") / "a2.json"
    assert main(["build", "--type", "A", "--rank", "2", "--out", str(path)]) == 0
    return path


def test_verify_all_checks_pass(a2_file, capsys):
    code, doc = run_json(capsys, "verify", "--in", str(a2_file))
    assert code == 0 and doc["ok"]
    names = {c["name"] for c in doc["checks"]}
    assert {"serre", "jacobi", "structure", "conjugations", "grading", "k-structure"} <= names
    assert any(n.startswith("relations.") for n in names)
    assert any(n.startswith("weights.") for n in names)


def test_verify_selected_checks(a2_file, capsys):
    code, doc = run_json(capsys, "verify", "--in", str(a2_file), "--checks", "relations")
    assert code == 0
    assert all(c["name"].startswith("relations.") for c in doc["checks"])


def test_verify_unknown_check(a2_file, capsys):
    assert main(["verify", "--in", str(a2_file), "--checks", "nonsense"]) == 2


def test_verify_malformed_file(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["verify", "--in", str(bad)]) == 2
    missing = tmp_path / "missing.json"
    assert main(["verify", "--in", str(missing)]) == 2


def test_verify_detects_structure_constant_mutation(a2_file, tmp_path, capsys):
    doc = json.loads(a2_file.read_text())
    entry = doc["structure_constants"]["entries"][0]
    entry[3] = serialize.format_rational(-serialize.parse_rational(entry[3]))
    mutated = tmp_path / "mutated.json"
    mutated.write_text(json.dumps(doc))
    code, out = run(capsys, "verify", "--in", str(mutated))
    assert code == 1
    report = json.loads(out)
    assert not report["ok"]
    failing = [c for c in report["checks"] if not c["passed"]]
    assert failing
    # the failing triple is named in at least one failure payload
    i, j = entry[0], entry[1]
    assert any(
        f"({i}, {j}" in failure
        for check in failing
        for failure in check["failures"]
    )


def test_verify_k_structure_reports_dims(tmp_path, capsys):
    path = tmp_path / "a1.json"
    assert main(["build", "--type", "A", "--rank", "1", "--out", str(path)]) == 0
    capsys.readouterr()
    code, doc = run_json(capsys, "verify", "--in", str(path), "--checks", "k-structure")
    assert code == 0
    entry = doc["checks"][0]
    assert entry["dim_k"] == 7 and entry["dim_hr"] == 1 and entry["dim_hr_perp"] == 6


def test_verify_detects_weight_index_corruption(a2_file, tmp_path, capsys):
    doc = json.loads(a2_file.read_text())
    # move one index from a nonzero-weight block into another
    blocks = [w for w in doc["weights"] if any(w["weight"])]
    moved = blocks[0]["indices"].pop()
    blocks[1]["indices"].append(moved)
    corrupted = tmp_path / "corrupted.json"
    corrupted.write_text(json.dumps(doc))
    capsys.readouterr()
    assert main(["verify", "--in", str(corrupted), "--checks", "weights"]) == 1
    verdict = json.loads(capsys.readouterr().out)
    assert not verdict["ok"]


def test_decompose(a2_file, capsys):
    code, doc = run_json(capsys, "decompose", "--in", str(a2_file))
    assert code == 0
    assert doc["dim"] == 35
    zero = [w for w in doc["weights"] if w["zero"]]
    assert len(zero) == 1 and zero[0]["dim"] == 11
    assert sum(w["dim"] for w in doc["weights"]) == 35


def test_roots_command(capsys):
    code, doc = run_json(capsys, "roots", "--type", "A", "--rank", "2")
    assert code == 0
    assert sorted(map(tuple, doc["positive_roots"])) == [(0, 1), (1, 0), (1, 1)]
    assert main(["roots", "--type", "X", "--rank", "2"]) == 2


def test_rho_check_command(capsys):
    code, doc = run_json(capsys, "rho-check", "--type", "A", "--rank", "2", "--degree", "4")
    assert code == 0 and doc["ok"]
    families = [c for c in doc["checks"] if c["name"].startswith("family.")]
    assert len(families) == 16
    assert main(["rho-check", "--type", "A", "--rank", "2", "--degree", "1"]) == 2


def test_closure_presets(capsys):
    code, doc = run_json(capsys, "closure", "--preset", "sl", "--n", "3")
    assert code == 0
    assert doc["summary"] == "closure dim 35, equals sl(3,H): True"
    code, doc = run_json(capsys, "closure", "--preset", "so-star", "--n", "3")
    assert code == 0 and doc["dim"] == 15
    code, doc = run_json(capsys, "closure", "--preset", "sp", "--n", "2")
    assert code == 0 and doc["dim"] == 10


def test_missing_subcommand_is_usage_error(capsys):
    assert main([]) == 2


def _assert_no_floats(node):
    if isinstance(node, float):
        raise AssertionError(f"float in report: {node}")
    if isinstance(node, dict):
        for value in node.values():
            _assert_no_floats(value)
    elif isinstance(node, list):
        for value in node:
            _assert_no_floats(value)


def test_reports_contain_no_floats(tmp_path, capsys):
    path = tmp_path / "a1.json"
    code, doc = run_json(capsys, "build", "--type", "A", "--rank", "1", "--out", str(path))
    assert code == 0
    _assert_no_floats(doc)
    code, doc = run_json(capsys, "verify", "--in", str(path))
    _assert_no_floats(doc)
    code, doc = run_json(capsys, "decompose", "--in", str(path))
    _assert_no_floats(doc)
    _assert_no_floats(json.loads(path.read_text()))


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "quatlie", "roots", "--type", "A", "--rank", "1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert doc["positive_roots"] == [[1]]
    proc = subprocess.run(
        [sys.executable, "-m", "quatlie", "roots", "--type", "Q", "--rank", "1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2


def test_build_b2_reports_structural_failures(tmp_path, capsys):
    # B2 builds and persists, but the measured dimension-4 and k-split
    # claims fail structurally, so the build manifest reports exit 1
    path = tmp_path / "b2.json"
    code, doc = run_json(capsys, "build", "--type", "B", "--rank", "2", "--out", str(path))
    assert code == 1
    assert not doc["ok"]
    failing = {c["name"] for c in doc["checks"] if not c["passed"]}
    assert failing == {"built.root-spaces", "built.k-structure"}
    assert doc["dim"] == 63 and doc["dim_k"] == 15
    # the persisted file is still verifiable: exact identities pass,
    # only the weights/k measurements fail
    code, verdict = run_json(
        capsys, "verify", "--in", str(path), "--checks", "relations,serre,jacobi"
    )
    assert code == 0 and verdict["ok"]
    code, verdict = run_json(capsys, "verify", "--in", str(path))
    assert code == 1
    failing = {c["name"] for c in verdict["checks"] if not c["passed"]}
    assert failing == {"k-structure", "weights.spaces"}
