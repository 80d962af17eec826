"""CLI behavior: output formats, exit codes, file artifacts."""

import csv
import json

import pytest

from veczeck.cli import main

PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_decompose_json_byte_exact(capsys):
    code, out, _ = run(capsys, "decompose", "--k", "3", "--v", "7,0", "--json")
    assert code == 0
    assert out == '{"indices":[1,3,4,7]}\n'


def test_decompose_plain_and_strategies(capsys):
    for strategy in ("small", "large", "reference", "brute"):
        code, out, _ = run(capsys, "decompose", "--k", "3", "--v", "2,-2",
                           "--strategy", strategy)
        assert code == 0
        assert out == "2,3,6,7\n"


def test_decompose_zero_vector(capsys):
    code, out, _ = run(capsys, "decompose", "--k", "3", "--v", "0,0")
    assert code == 0
    assert out == "\n"


def test_jbound_values(capsys):
    code, out, _ = run(capsys, "jbound", "--k", "3", "--v", "2,-2", "--strategy", "small")
    assert (code, out) == (0, "18\n")
    code, out, _ = run(capsys, "jbound", "--k", "3", "--v", "2,-2",
                       "--strategy", "large", "--json")
    assert code == 0
    assert json.loads(out) == {"strategy": "large_steps", "j": 16}


def test_jbound_zero_vector_is_a_usage_error(capsys):
    code, out, err = run(capsys, "jbound", "--k", "3", "--v", "0,0", "--strategy", "small")
    assert code == 2
    assert out == ""
    assert "error" in err


def test_project(capsys):
    code, out, _ = run(capsys, "project", "--k", "3", "--v", "2,-2", "--n", "19")
    assert (code, out) == (0, "17808\n")


def test_bad_dimension_exits_2(capsys):
    code, _, err = run(capsys, "decompose", "--k", "3", "--v", "1,2,3")
    assert code == 2
    assert "dimension" in err


def test_garbled_vector_exits_2(capsys):
    code, _, err = run(capsys, "decompose", "--k", "3", "--v", "1,x")
    assert code == 2


def test_unknown_subcommand_is_argparse_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_layer_stats_json(capsys):
    code, out, _ = run(capsys, "layer-stats", "--k", "3", "--n", "6")
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 20
    assert data["mean"] == "29/10"
    assert data["kappa_histogram"] == {"1": 1, "2": 5, "3": 9, "4": 5}


def test_layer_stats_csv(capsys):
    code, out, _ = run(capsys, "layer-stats", "--k", "3", "--n", "5", "--csv")
    assert code == 0
    rows = list(csv.reader(out.splitlines()))
    assert rows[0] == ["n", "count", "mean", "variance", "skewness", "excess_kurtosis"]
    assert len(rows) == 6
    assert [r[0] for r in rows[1:]] == ["1", "2", "3", "4", "5"]
    assert rows[5][1] == "11"


def test_gaps_csv(capsys):
    code, out, _ = run(capsys, "gaps", "--k", "3", "--n", "4", "--csv")
    assert code == 0
    rows = list(csv.reader(out.splitlines()))
    assert rows[0] == ["n", "l", "count", "probability", "limiting_probability"]
    by_l = {int(r[1]): r for r in rows[1:]}
    assert int(by_l[0][2]) == 0
    assert int(by_l[1][2]) == 3
    assert int(by_l[3][2]) == 1


def test_gaps_json(capsys):
    code, out, _ = run(capsys, "gaps", "--k", "3", "--n", "4")
    assert code == 0
    data = json.loads(out)
    assert data["n_gaps"] == 7
    assert data["law_normalized"] is True


def test_genfunc_csv_default(capsys):
    code, out, _ = run(capsys, "genfunc", "--k", "3", "--n-max", "4")
    assert code == 0
    rows = list(csv.reader(out.splitlines()))
    assert rows[0][0] == "n"
    assert [r[1] for r in rows[1:]] == ["1", "2", "3", "6"]
    assert rows[3][3] == "5/3"


def test_genfunc_json(capsys):
    code, out, _ = run(capsys, "genfunc", "--k", "3", "--n-max", "3", "--json")
    assert code == 0
    data = json.loads(out)
    assert data[2] == {
        "n": 3, "a": 3,
        "mean": "5/3", "mean_decimal": pytest.approx(5 / 3),
        "variance": "2/9", "variance_decimal": pytest.approx(2 / 9),
    }


def test_spectral_json(capsys):
    code, out, _ = run(capsys, "spectral", "--k", "3")
    assert code == 0
    data = json.loads(out)
    assert data["lambda1"] == pytest.approx(1.8392867552141612)
    assert data["c_lek"] == pytest.approx(0.38158007768, abs=1e-9)
    assert len(data["all_roots"]) == 3


def test_minimality_report(capsys):
    code, out, _ = run(capsys, "minimality", "--k", "3", "--layer", "6",
                       "--max-index", "10")
    assert code == 0
    assert json.loads(out) == {
        "layer": 6, "bound": 10, "vectors_checked": 20, "counterexamples": []
    }


def test_bench_writes_csv(capsys, tmp_path):
    out_file = tmp_path / "bench.csv"
    code, out, err = run(capsys, "bench", "--k", "3", "--norm-bound", "20",
                         "--count", "5", "--seed", "2", "--out", str(out_file))
    assert code == 0
    summary = json.loads(out)
    assert summary["records"] == 15
    assert set(summary["median_op_count"]) == {"small_steps", "large_steps", "reference"}
    rows = list(csv.reader(out_file.open()))
    assert len(rows) == 16


def test_scatter_stdout(capsys):
    code, out, err = run(capsys, "scatter", "--k", "3", "--norm-bound", "5",
                         "--c", "15", "--d", "10")
    assert code == 0
    rows = list(csv.reader(out.splitlines()))
    assert rows[0] == ["l2_norm", "j_lsb", "bound", "violated"]
    assert len(rows) == 1 + 11 * 11 - 1
    assert "violations: 0" in err


def test_dn_points_file(capsys, tmp_path):
    out_file = tmp_path / "dn.csv"
    code, _, _ = run(capsys, "dn-points", "--k", "3", "--n", "6", "--out", str(out_file))
    assert code == 0
    rows = list(csv.reader(out_file.open()))
    assert rows[0] == ["v1", "v2", "J"]
    assert len(rows) == 1 + 44           # |D_6| = x_8
    assert rows[1] == ["0", "0", "0"]
    js = {int(r[2]) for r in rows[1:]}
    assert js == set(range(7))


def test_report_bundle(capsys, tmp_path):
    out_dir = tmp_path / "report"
    code, _, err = run(
        capsys, "report", "--k", "3", "--out-dir", str(out_dir),
        "--layer-n", "8", "--scatter-bound", "8", "--dn-n", "6",
        "--bench-bound", "15", "--bench-count", "4",
    )
    assert code == 0
    names = {p.name for p in out_dir.iterdir()}
    assert {"layer_stats.csv", "gaps.csv", "scatter.csv", "dn_points.csv",
            "bench.csv", "spectral.json"} <= names
    pngs = {"layer_moments.png", "gaps.png", "scatter.png", "dn_cloud.png", "bench.png"}
    assert pngs <= names
    for name in pngs:
        assert (out_dir / name).read_bytes()[:8] == PNG_MAGIC


def test_version_flag():
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
