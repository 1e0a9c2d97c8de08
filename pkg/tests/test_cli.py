import io
import json

import pytest

from core.textform import from_json, parse_text
from main import main
from sequences.conversion import gen_Q_q


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ("BCHLAB_MAX_N", "BCHLAB_LOG_LEVEL", "BCHLAB_GOLDEN_DIR"):
        monkeypatch.delenv(name, raising=False)


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_gen_difference_polynomials():
    code, text = run("gen", "--kind", "Q", "--n", "2")
    assert code == 0
    assert text.splitlines() == ["Q1 = z + q1", "Q2 = 1/3*z^3 + q1*z^2 - 1/3*z + q1^2*z + q2"]


def test_gen_zero_data_and_classical():
    code, text = run("gen", "--kind", "Q0", "--n", "2")
    assert code == 0
    assert text.splitlines() == ["Q0_1 = z", "Q0_2 = 1/3*z^3 - 1/3*z"]
    code, text = run("gen", "--kind", "P", "--n", "1")
    assert code == 0
    assert text == "P1 = z + c1\n"


def test_gen_json_parses_back():
    code, text = run("gen", "--kind", "Q", "--n", "3", "--format", "json")
    assert code == 0
    records = json.loads(text)
    assert [r["name"] for r in records] == ["Q1", "Q2", "Q3"]
    assert from_json(records[2]["poly"]) == gen_Q_q(3)[3]


@pytest.mark.parametrize("kind", ["Q", "Q0", "P", "x"])
def test_gen_cross_check(kind):
    code, _ = run("gen", "--kind", kind, "--n", "3", "--cross-check")
    assert code == 0


def test_gen_rejects_unavailable_combinations():
    assert run("gen", "--kind", "Q", "--coords", "c", "--n", "2")[0] == 2
    assert run("gen", "--kind", "Q", "--coords", "t", "--route", "recurrence", "--n", "2")[0] == 2


def test_convert_directions():
    code, text = run("convert", "--direction", "t-to-q", "--n", "2")
    assert code == 0
    assert text.splitlines() == ["q1 = t1", "q2 = -1/3*t3 + 1/3*t1^3"]
    code, text = run("convert", "--direction", "q-to-t", "--n", "2")
    assert code == 0
    assert text.splitlines() == ["t1 = q1", "t3 = -3*q2 + q1^3"]
    code, text = run("convert", "--direction", "even-gauge", "--n", "2")
    assert code == 0
    assert "t2 = t1^2" in text.splitlines()


def test_convert_json():
    code, text = run("convert", "--direction", "q-to-t", "--n", "2", "--format", "json")
    assert code == 0
    data = json.loads(text)
    assert set(data) == {"t1", "t3"}
    assert from_json(data["t3"]) == parse_text("-3*q2 + q1^3")


@pytest.mark.parametrize("relation", ["dbch", "bch", "modified-dodgson", "dodgson", "constraint", "jacobi"])
def test_verify_passes(relation):
    code, text = run("verify", "--relation", relation, "--n", "3")
    assert code == 0
    assert text.startswith(f"{relation} n<=3: pass")


def test_verify_laurent_reports_normalizers():
    code, text = run("verify", "--relation", "laurent", "--n", "4")
    assert code == 0
    assert "A_n: 1, 3, 45, 4725" in text.splitlines()


def test_verify_json():
    code, text = run("verify", "--relation", "dbch", "--n", "2", "--format", "json")
    assert code == 0
    assert json.loads(text)["ok"] is True


def test_table_figure4(golden_dir):
    code, text = run("table")
    assert code == 0
    assert text == (golden_dir / "figure4.tsv").read_text()


def test_table_symbolic_is_laurent():
    assert run("table", "--seed", "symbolic", "--window", "3x3", "--check-laurent")[0] == 0


def test_table_from_seed_file(tmp_path):
    path = tmp_path / "seed.tsv"
    path.write_text("1\t1\n2\t1\n")
    code, text = run("table", "--seed", f"file:{path}", "--window", "1x2", "--format", "json")
    assert code == 0
    assert len(json.loads(text)) == 12


def test_table_input_errors(tmp_path):
    assert run("table", "--seed", f"file:{tmp_path / 'absent.tsv'}", "--window", "1x1")[0] == 2
    assert run("table", "--window", "big")[0] == 2
    assert run("table", "--seed", "random")[0] == 2
    assert run("table", "--alpha", "1/0")[0] == 2


def test_table_singular_recurrence():
    assert run("table", "--window", "1x1", "--alpha", "0", "--beta", "0")[0] == 1


def test_det(tmp_path):
    path = tmp_path / "m.txt"
    path.write_text("2\n1 2\n3 4\n")
    assert run("det", "--input", str(path)) == (0, "-2\n")
    path.write_text("4\n1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n")
    code, text = run("det", "--input", str(path), "--format", "json")
    assert code == 0
    assert json.loads(text) == {"condense": "1", "bareiss": "1", "agree": True}


def test_det_bad_input(tmp_path):
    path = tmp_path / "m.txt"
    path.write_text("3\n1 2\n")
    assert run("det", "--input", str(path))[0] == 2


def test_limit():
    assert run("limit", "--n", "1") == (0, "P1 = z + c1\n")
    code, text = run("limit", "--n", "2", "--check-against-bch")
    assert code == 0
    assert text.startswith("P2 = ")


def test_usage_errors(monkeypatch):
    assert run("gen")[0] == 2
    assert run("gen", "--kind", "Q", "--n", "0")[0] == 2
    assert run("frobnicate")[0] == 2
    monkeypatch.setenv("BCHLAB_MAX_N", "abc")
    assert run("gen", "--kind", "Q")[0] == 2


def test_max_n_from_environment(monkeypatch):
    monkeypatch.setenv("BCHLAB_MAX_N", "2")
    code, text = run("gen", "--kind", "Q0")
    assert code == 0
    assert len(text.splitlines()) == 2
