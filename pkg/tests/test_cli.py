import json
import subprocess
import sys

import pytest

from gradedsym.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def model_file(tmp_path):
    def write(data):
        path = tmp_path / "model.json"
        path.write_text(json.dumps(data))
        return str(path)

    return write


def test_relations_half_filling(capsys):
    code, out, _ = run(capsys, "relations", "--flux", "2", "1")
    assert code == 0
    assert out == (
        "flux model N=2 n=1, filling factor v=1/2\n"
        "[i != j]\n"
        "  Theta[1] Theta[2] = +1 Theta[2] Theta[1]    (commute)\n"
        "[nilpotent]\n"
        "  (Theta[1])^2 = 0\n"
        "  (Theta[2])^2 = 0\n"
    )


def test_relations_two_thirds_json(capsys):
    code, out, _ = run(capsys, "relations", "--flux", "3", "2", "--json")
    assert code == 0
    data = json.loads(out)
    by_group = {}
    for r in data["relations"]:
        by_group.setdefault(r["group"], set()).add(r["phase"])
    assert by_group == {"a = b, i != j": {"1/2"}, "a != b, i != j": {"0/1"}, "i = j, a != b": {"1/2"}}
    assert len(data["nilpotent"]) == 6


def test_relations_custom_trivial(capsys, model_file):
    path = model_file({"kind": "custom", "spec": {"moduli": ["inf", "inf"]}, "sym": [[0, 0], [0, 0]], "skew": [[0, 0], [0, 0]], "q": "0/1"})
    code, out, _ = run(capsys, "relations", "--model", path)
    assert code == 0
    rel_lines = [l for l in out.splitlines() if " = " in l and "^2" not in l]
    assert rel_lines and all(l.endswith("(commute)") for l in rel_lines)
    assert "[nilpotent]" not in out


def test_partitions_one_third_admissible(capsys):
    code, out, _ = run(capsys, "partitions", "--flux", "3", "1", "--admissible-only", "--json")
    assert code == 0
    data = json.loads(out)
    assert [p["word"] for p in data["partitions"]] == ["1", "Theta[1]", "Theta[2]", "Theta[3]"]
    assert data["partitions"][1] == {"word": "Theta[1]", "coeff": 1, "quasiparticles": 1, "quasiholes": 2, "admissible": True}


def test_partitions_half_filling_includes_product(capsys):
    code, out, _ = run(capsys, "partitions", "--flux", "2", "1", "--json")
    rows = {p["word"]: p for p in json.loads(out)["partitions"]}
    assert rows["Theta[1] Theta[2]"]["admissible"] and rows["Theta[1] Theta[2]"]["quasiholes"] == 0


def test_partitions_two_thirds_degree_two(capsys):
    code, out, _ = run(capsys, "partitions", "--flux", "3", "2", "--admissible-only", "--degree", "2")
    assert code == 0
    rows = out.splitlines()[1:-1]
    assert len(rows) == 6
    assert out.splitlines()[-1] == "6 partitions, 6 admissible"


def test_partitions_cap(capsys):
    code, _, err = run(capsys, "partitions", "--flux", "7", "3")
    assert code == 2 and "2^20" in err
    code, out, _ = run(capsys, "partitions", "--flux", "7", "3", "--degree", "1", "--force", "--json")
    assert code == 0 and json.loads(out)["count"] == 21


@pytest.mark.parametrize(
    "flux, word, expected",
    [
        (("3", "1"), "T2 T1", "-1 · T1 T2"),
        (("3", "1"), "T1 T1", "0"),
        (("2", "1"), "T2 T1", "+1 · T1 T2"),
        (("3", "2"), "T2^1 T1^2", "+1 · T1^2 T2^1"),
        (("3", "2"), "T1^2 T1^1", "-1 · T1^1 T1^2"),
        (("3", "1"), "", "+1 · 1"),
    ],
)
def test_normal_form(capsys, flux, word, expected):
    code, out, _ = run(capsys, "normal-form", "--flux", *flux, word)
    assert code == 0
    assert out.strip() == expected


def test_normal_form_parse_error_column(capsys):
    code, _, err = run(capsys, "normal-form", "--flux", "3", "1", "T1  Tx")
    assert code == 2
    assert "column 5" in err


def test_normal_form_unknown_generator(capsys):
    code, _, err = run(capsys, "normal-form", "--flux", "3", "1", "T4")
    assert code == 2 and "unknown generator" in err


def test_normal_form_cyclotomic_json(capsys, model_file):
    path = model_file({"kind": "custom", "spec": {"moduli": [3, 3]}, "sym": [[0, 0], [0, 0]], "skew": [[0, 1], [-1, 0]], "q": "1/3"})
    code, out, _ = run(capsys, "normal-form", "--model", path, "T2 T1", "--json")
    assert code == 0
    assert json.loads(out)["coeff"] == {"order": 3, "coeffs": [-1, -1]}


def test_verify_flux4_all(capsys):
    code, out, _ = run(capsys, "verify", "--flux", "4", "1", "--suite", "all", "--json")
    data = json.loads(out)
    assert code == 0 and data["pass"]
    assert set(data["suites"]) == {"bicharacter", "normalized", "ybe", "graded-comm"}
    assert data["suites"]["bicharacter"]["checked"] == 16**3


def test_verify_ybe_count(capsys):
    code, out, _ = run(capsys, "verify", "--flux", "3", "1", "--suite", "ybe", "--json")
    data = json.loads(out)
    assert code == 0 and data["suites"]["ybe"] == {"pass": True, "checked": 27, "violations": 0, "exhaustive": True, "witnesses": []}


def test_verify_multiparticle_skips_graded_comm(capsys):
    code, out, _ = run(capsys, "verify", "--flux", "3", "2", "--json")
    data = json.loads(out)
    assert code == 0 and "skipped" in data["suites"]["graded-comm"]


def test_verify_corrupted_table_fails(capsys, model_file):
    path = model_file(
        {
            "kind": "custom",
            "spec": {"moduli": [2, 2]},
            "sym": [[0, 0], [0, 0]],
            "skew": [[0, 0], [0, 0]],
            "q": "0/1",
            "overrides": [{"a": [1, 0], "b": [1, 1], "value": "1/2"}],
        }
    )
    code, out, _ = run(capsys, "verify", "--model", path, "--suite", "bicharacter")
    assert code == 1
    assert "FAIL" in out and "witness" in out


def test_verify_json_is_byte_stable(capsys):
    _, first, _ = run(capsys, "verify", "--flux", "3", "1", "--json", "--seed", "4")
    _, second, _ = run(capsys, "verify", "--flux", "3", "1", "--json", "--seed", "4")
    assert first == second


def test_invalid_model_file(capsys, model_file):
    path = model_file({"kind": "custom", "spec": {"moduli": [3]}, "sym": [[1]], "skew": [[0]], "q": "0/1"})
    code, _, err = run(capsys, "relations", "--model", path)
    assert code == 2 and "not well defined" in err


def test_missing_model_file(capsys, tmp_path):
    code, _, err = run(capsys, "relations", "--model", str(tmp_path / "nope.json"))
    assert code == 2 and err


def test_usage_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["relations"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--flux", "3", "1", "--suite", "nonsense"])
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "gradedsym", "normal-form", "--flux", "3", "1", "T3 T2 T1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "-1 · T1 T2 T3"
