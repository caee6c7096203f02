"""End-to-end CLI behaviour through click's test runner."""
import json

import pytest
from click.testing import CliRunner

from sumcolour.cli import main


@pytest.fixture()
def runner():
    return CliRunner()


def run(runner, *args):
    return runner.invoke(main, args, catch_exceptions=False)


def test_colour_eval_scalar(runner):
    res = run(runner, "colour", "eval", "--id", "band:k=2,m=3", "7/1")
    assert res.exit_code == 0
    assert res.output.strip() == "2"


def test_colour_eval_array_and_object(runner):
    res = run(runner, "colour", "eval", "--id", "gamma72:k=2,m=2",
              '["5/12", "3/8"]')
    assert res.exit_code == 0 and res.output.strip() == "39"
    res = run(runner, "colour", "eval", "--id", "tau144:k=2",
              '{"0": "1/2", "3": "5/12"}')
    assert res.exit_code == 0 and res.output.strip() == "70"
    # short inputs are zero-padded up to the colouring's dimension
    res = run(runner, "colour", "eval", "--id", "gamma72:k=2,m=2", "1/2")
    assert res.exit_code == 0 and res.output.strip() == "6"


def test_colour_eval_errors(runner):
    res = run(runner, "colour", "eval", "--id", "nope:k=1", "1/2")
    assert res.exit_code == 2
    res = run(runner, "colour", "eval", "--id", "band:k=2,m=3", "garbage")
    assert res.exit_code == 2
    res = run(runner, "colour", "eval", "--id", "gamma72:k=2,m=1",
              '["1/2", "1/3"]')
    assert res.exit_code == 2


def test_seed_feeds_psi_ids(runner):
    base = run(runner, "colour", "eval", "--id", "psiW:n=4,seed=7",
               '{"1": "1/2"}')
    fed = run(runner, "--seed", "7", "colour", "eval", "--id", "psiW:n=4",
              '{"1": "1/2"}')
    assert base.exit_code == fed.exit_code == 0
    assert base.output == fed.output


def test_search_writes_verifiable_cert(runner, tmp_path):
    out = tmp_path / "cert.json"
    res = run(runner, "search", "--id", "band:k=2,m=3", "--mode", "kX",
              "--k", "2", "--height", "2", "--max-size", "2",
              "--out", str(out))
    assert res.exit_code == 0
    cert = json.loads(out.read_text())
    assert cert["type"] == "search" and "digest" in cert

    res = run(runner, "verify", str(out))
    assert res.exit_code == 0
    assert res.output.strip() == "verified"


def test_search_without_out_prints_cert(runner):
    res = run(runner, "search", "--id", "identity", "--mode", "FSk",
              "--k", "2", "--height", "1", "--max-size", "3")
    assert res.exit_code == 0
    cert = json.loads(res.output)
    assert cert["colouring"] == "identity" and len(cert["witness"]) == 3


def test_search_exhausted_exit_code(runner):
    res = run(runner, "search", "--id", "gamma72:k=2,m=1", "--mode", "kX",
              "--k", "2", "--height", "4", "--max-size", "3")
    assert res.exit_code == 1
    assert "best monochromatic size: 2" in res.output


def test_search_budget_exit_code(runner):
    res = run(runner, "search", "--id", "identity", "--mode", "kX",
              "--k", "2", "--height", "2", "--max-size", "5", "--budget", "3")
    assert res.exit_code == 1
    assert "budget" in res.output


def test_search_dim_mismatch(runner):
    res = run(runner, "search", "--id", "gamma72:k=2,m=2", "--mode", "kX",
              "--k", "2", "--height", "2", "--max-size", "2")
    assert res.exit_code == 2


def test_construct_cylinder_and_verify(runner, tmp_path):
    out = tmp_path / "cyl.json"
    res = run(runner, "construct", "cylinder", "--Z", '[["1/4","1/2"]]',
              "--k", "2", "--T", "3", "--out", str(out))
    assert res.exit_code == 0
    cert = json.loads(out.read_text())
    assert len(cert["H"]) == 8
    assert run(runner, "verify", str(out)).exit_code == 0


def test_construct_cylinder_failure_exit(runner):
    res = run(runner, "construct", "cylinder", "--Z", '[["0/1","1/1000"]]',
              "--k", "2", "--T", "1", "--max-depth", "2")
    assert res.exit_code == 1
    assert "construction failed" in res.output


def test_construct_greedy_and_verify(runner, tmp_path):
    out = tmp_path / "greedy.json"
    res = run(runner, "construct", "greedy", "--Z", '[["0/1","1/2"]]',
              "--k", "2", "--T", "3", "--forbidden", '["2/5"]',
              "--out", str(out))
    assert res.exit_code == 0
    cert = json.loads(out.read_text())
    assert cert["Y"] == ["1/6", "1/7", "1/8"]
    assert run(runner, "verify", str(out)).exit_code == 0


def test_construct_greedy_failure_exit(runner):
    res = run(runner, "construct", "greedy", "--Z", '[["1/4","1/2"]]',
              "--k", "2", "--T", "1")
    assert res.exit_code == 1


def test_verify_detects_tampering(runner, tmp_path):
    out = tmp_path / "cert.json"
    run(runner, "construct", "greedy", "--Z", '[["0/1","1/2"]]',
        "--k", "2", "--T", "2", "--out", str(out))
    cert = json.loads(out.read_text())
    cert["Y"][0] = "1/9"
    out.write_text(json.dumps(cert))
    res = run(runner, "verify", str(out))
    assert res.exit_code == 1
    assert "verification failed" in res.output

    del cert["Y"]
    out.write_text(json.dumps(cert))
    assert run(runner, "verify", str(out)).exit_code == 2

    out.write_text("{ not json")
    assert run(runner, "verify", str(out)).exit_code == 2


def test_bad_interval_json_is_usage_error(runner):
    res = run(runner, "construct", "cylinder", "--Z", "oops",
              "--k", "2", "--T", "1")
    assert res.exit_code == 2
    res = run(runner, "construct", "greedy", "--Z", '[["0/1","1/2"]]',
              "--k", "2", "--T", "1", "--forbidden", "not json")
    assert res.exit_code == 2


def test_report_writes_table_and_figures(runner, tmp_path):
    out_dir = tmp_path / "rep"
    res = run(runner, "report", "--id", "band:k=2,m=3", "--height", "2",
              "--out-dir", str(out_dir), "--fmt", "tsv")
    assert res.exit_code == 0
    names = sorted(p.name for p in out_dir.iterdir())
    assert names == ["class_sizes.png", "colours.tsv", "scatter.png"]
    lines = (out_dir / "colours.tsv").read_text().strip().split("\n")
    assert lines[0] == "c0\tcolour"
    assert len(lines) == 8  # header + the 7 height-2 rationals
    for name in names:
        assert str(out_dir / name) in res.output
