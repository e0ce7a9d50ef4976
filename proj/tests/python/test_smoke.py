import json
import os
import subprocess
from pathlib import Path

import pytest

import ahrg

CONFIGS = Path(__file__).resolve().parent.parent / "configs"


def test_describe_b2():
    rep = ahrg.describe("B2")
    assert rep["ok"]
    assert rep["result"]["nroots"] == 8
    assert rep["result"]["weyl_order"] == 8


def test_arthur_gram_rank_one():
    rep = ahrg.arthur_gram("A1", lattice="adjoint", torsion=["1/2"])
    assert rep["ok"]
    assert rep["result"]["rgroup_order"] == 2
    assert rep["result"]["gram"] == [["1", "-1"], ["-1", "1"]]


def test_hecke_end_matches_rgroup():
    rep = ahrg.hecke_end("A1", lattice="adjoint", torsion=["1/2"])
    assert rep["ok"]
    assert rep["result"]["commutant_dim"] == 2
    assert rep["checks"]["commutant_equals_rgroup_order"]


def test_generic_mode_rejects_commutant():
    with pytest.raises(ahrg.UnsupportedRequest):
        ahrg.hecke_end("A1", lattice="adjoint", torsion=["1/2"], mode="generic")


def test_config_errors():
    with pytest.raises(ahrg.ConfigError):
        ahrg.run({"root_datum": {"type": "A1"}, "command": "describe", "colour": "red"})
    with pytest.raises(ahrg.ConfigError):
        ahrg.run("{not json")
    with pytest.raises(ValueError):
        ahrg.run({"root_datum": {"type": "A2"}, "parameters": {"full": {"a1": 2, "a2": 4}},
                  "command": "describe"})


def test_grams_come_back_as_csv():
    text, csv = ahrg.run_with_grams((CONFIGS / "arthur_gram_a1.json").read_text())
    assert json.loads(text)["ok"]
    assert csv.startswith("# ")


def test_deterministic_across_jobs():
    cfg = (CONFIGS / "scan_a2.json").read_text()
    assert ahrg.run(cfg, jobs=1) == ahrg.run(cfg, jobs=3)


@pytest.mark.skipif("AHRG_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_matches_module(tmp_path):
    cfg = CONFIGS / "arthur_gram_a1.json"
    out = tmp_path / "report.json"
    proc = subprocess.run([os.environ["AHRG_CLI"], "--config", str(cfg), "--out", str(out)])
    assert proc.returncode == 0
    assert json.loads(out.read_text()) == ahrg.run(cfg.read_text())
    assert (tmp_path / "report.csv").read_text().startswith("# ")
