import json

import pytest

from dgraceful.cli import main
from dgraceful.graph import build_cycle, build_path
from dgraceful.labeling import Labeling


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def c6_mixed(tmp_path):
    p = tmp_path / "c6_mixed.json"
    p.write_text(json.dumps(Labeling.of(build_cycle(6), (0, 2, 3, 6, 1, 7), 2).to_dict()))
    return p


@pytest.fixture
def c6_alpha(tmp_path):
    p = tmp_path / "c6_alpha.json"
    p.write_text(json.dumps(Labeling.of(build_cycle(6), (0, 5, 2, 3, 1, 7), 2).to_dict()))
    return p


def test_construct_odd_cycle(capsys):
    code, out, _ = run(capsys, "construct", "--family", "cycle2k-odd", "--k", 5, "--d", 2)
    assert code == 0
    assert json.loads(out)["labels"] == [0, 11, 1, 3, 7, 4, 5, 10, 2, 9]


def test_verify_c6_mixed(capsys, c6_mixed):
    code, out, _ = run(capsys, "verify", "--labeling", c6_mixed)
    assert code == 0
    data = json.loads(out)
    assert data["valid"] and data["required"] == [1, 2, 3, 5, 6, 7]
    code, out, _ = run(capsys, "verify", "--labeling", c6_mixed, "--pretty")
    assert "[1,7] \\ {4}" in out


def test_verify_alpha_failure_exit_1(capsys, c6_mixed):
    code, _, err = run(capsys, "verify", "--labeling", c6_mixed, "--alpha")
    assert code == 1
    assert json.loads(err)[0]["kind"] == "not_alpha"


def test_verify_bad_labeling_exit_1(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(Labeling.of(build_path(3), (0, 1, 2, 3), 1).to_dict()))
    code, _, err = run(capsys, "verify", "--labeling", p)
    assert code == 1
    assert {v["kind"] for v in json.loads(err)} >= {"duplicate_gap", "missing_gap"}


def test_expand_pretty(capsys, c6_alpha):
    code, out, _ = run(capsys, "expand", "--labeling", c6_alpha, "--n", 1, "--verify", "--pretty")
    assert code == 0
    assert out.strip() == "K_{4×4}: 16 blocks, 96 edges, partition OK"
    code, out, _ = run(capsys, "expand", "--labeling", c6_alpha, "--n", 2, "--verify", "--pretty")
    assert out.strip() == "K_{4×8}: 64 blocks, 384 edges, partition OK"


def test_expand_n2_needs_alpha(capsys, c6_mixed):
    code, _, _ = run(capsys, "expand", "--labeling", c6_mixed, "--n", 2)
    assert code == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["construct", "--family", "nope", "--e", "3"],
        ["construct", "--family", "path", "--e", "3", "--bogus"],
        ["construct", "--family", "path", "--d", "1"],
        ["construct", "--family", "ladder", "--k", "3"],
        ["construct", "--family", "path", "--e", "7", "--d", "2"],
        ["verify"],
        [],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_output_is_byte_identical(capsys, c6_alpha):
    argv = ["expand", "--labeling", c6_alpha, "--n", 2, "--verify"]
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_version_on_stderr(capsys):
    code, out, err = run(capsys, "--version")
    assert code == 0 and out == "" and err.startswith("dgraceful ")


@pytest.mark.parametrize(
    "family, size",
    [("path", ["--e", 18, "--d", 6]), ("star", ["--e", 12, "--d", 4]), ("cycle4k", ["--k", 3, "--d", 4]),
     ("cycle2k-odd", ["--k", 9]), ("ladder", ["--k", 6])],
)
def test_construct_then_verify(capsys, tmp_path, family, size):
    out = tmp_path / "lab.json"
    assert run(capsys, "construct", "--family", family, *size, "--out", out)[0] == 0
    assert run(capsys, "verify", "--labeling", out)[0] == 0


def test_df_and_expand_from_df(capsys, tmp_path, c6_alpha):
    df = tmp_path / "df.json"
    assert run(capsys, "df", "--labeling", c6_alpha, "--n", 2, "--out", df)[0] == 0
    data = json.loads(df.read_text())
    assert data["v"] == 32 and data["maps"][1] == [0, 13, 2, 11, 1, 15]
    dec = tmp_path / "dec.json"
    assert run(capsys, "expand", "--df", df, "--verify", "--out", dec)[0] == 0
    code, out, _ = run(capsys, "export-dot", "--decomposition", dec)
    assert code == 0 and out.startswith("graph") and "+" in out


def test_export_dot_labeling(capsys, c6_mixed):
    code, out, _ = run(capsys, "export-dot", "--labeling", c6_mixed)
    assert code == 0 and "graph" in out


def test_search_json_lines(capsys, tmp_path):
    g = tmp_path / "p3.json"
    g.write_text(json.dumps(build_path(2).to_dict()))
    code, out, _ = run(capsys, "search", "--graph", g, "--d", 1, "--all")
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == 0
    assert len(lines) == 5 and lines[-1]["solutions"] == 4 and lines[-1]["complete"]
    code, out, _ = run(capsys, "search", "--graph", g, "--d", 3)
    assert code == 2


def test_sweep_with_config(capsys, tmp_path):
    cfg = tmp_path / "sweep.cfg"
    cfg.write_text("max_e = 6\nmax_k_cycle4k = 2\nmax_k_cycle2k_odd = 5\nmax_k_ladder = 4\n")
    code, out, _ = run(capsys, "sweep", "--config", cfg, "--pretty")
    assert code == 0
    assert out.splitlines()[-1].endswith("passed")
    code, out, _ = run(capsys, "sweep", "--max-e", 3, "--max-k", 2)
    rows = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and rows and all(r["ok"] for r in rows)


def test_bad_config_is_usage_error(capsys, tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("max_e = 6\nunknown_key = 1\n")
    assert run(capsys, "sweep", "--config", cfg)[0] == 2
