"""CLI behavior: JSON round trips, exit codes, byte-level determinism."""

import json
import os
import subprocess

import pytest

CLI = os.environ.get("BRIESKORN_CLI")

pytestmark = pytest.mark.skipif(CLI is None, reason="BRIESKORN_CLI not set")


def run(*args, **kwargs):
    return subprocess.run([CLI, *args], capture_output=True, text=True, **kwargs)


def test_json_round_trip():
    r = run("--json", "link", "2", "3", "5")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["results"]["milnor_number"] == "8"
    assert doc["results"]["casson_invariant"] == "-1"
    assert doc["results"]["geometry"]["kind"] == "spherical"
    # lossless round trip
    assert json.loads(json.dumps(doc)) == doc


def test_kervaire_link_verdict():
    r = run("--json", "link", "3", "2", "2", "2", "2", "2")
    doc = json.loads(r.stdout)
    assert doc["results"]["homotopy_sphere"] is True
    assert doc["results"]["sphere_class"]["kind"] == "kervaire_sphere"


def test_plain_output_is_line_oriented():
    r = run("link", "3", "2", "2", "2")
    assert r.returncode == 0
    lines = r.stdout.splitlines()
    assert any(line.startswith("results.milnor_number: ") for line in lines)
    assert all(": " in line or line.endswith(":") for line in lines if line)


def test_exit_codes():
    assert run("link", "2").returncode == 2
    assert run("link", "3", "1").returncode == 2
    assert run("table", "nope").returncode == 2
    assert run("--budget", "1000", "link", "9973", "9967").returncode == 3
    assert run().returncode == 2
    assert run("--help").returncode == 0


def test_byte_identical_output_across_workers_and_runs():
    runs = [
        run("--json", "--workers", w, "link", "7", "5", "3", "2").stdout
        for w in ("1", "2", "8")
    ]
    runs.append(run("--json", "--workers", "1", "link", "7", "5", "3", "2").stdout)
    assert len(set(runs)) == 1


def test_table_families():
    r = run("--json", "table", "bp8", "--from", "1", "--to", "29")
    doc = json.loads(r.stdout)
    rows = doc["results"]["rows"]
    assert [row["class_mod_28"] for row in rows[:28]].count(rows[0]["class_mod_28"]) == 1
    assert rows[28]["class_mod_28"] == rows[0]["class_mod_28"]
    assert rows[3]["signature"] == "32"

    r = run("--json", "table", "kervaire", "--from", "3", "--to", "17")
    doc = json.loads(r.stdout)
    classes = [row["class"] for row in doc["results"]["rows"]]
    assert classes == [
        "kervaire_sphere",
        "kervaire_sphere",
        "standard_sphere",
        "standard_sphere",
        "kervaire_sphere",
        "kervaire_sphere",
        "standard_sphere",
        "standard_sphere",
    ]


def test_curve_command(tmp_path):
    r = run("--json", "curve", "--terms", "3/2:1", "--meet", "y")
    doc = json.loads(r.stdout)
    assert doc["results"]["characteristic_pairs"] == [[2, 3]]
    assert doc["results"]["alexander_polynomial"]["text"] == "t^2 - t + 1"
    assert doc["results"]["intersection_multiplicity"] == "3"

    branch = tmp_path / "branch.txt"
    branch.write_text("3 2 1 1\n7 4 1 1\n")
    r = run("--json", "curve", "--branch-file", str(branch))
    doc = json.loads(r.stdout)
    assert doc["results"]["cable"]["stages"] == [[2, 3], [2, 13]]
    assert doc["results"]["milnor_number"] == "16"

    assert run("curve", "--terms", "1:1", "--terms-bogus").returncode == 2
    assert run("curve").returncode == 2
    # truncated series: declared denominator not exhausted
    assert run("curve", "--terms", "6/4:1").returncode == 2


def test_plumb_command(tmp_path):
    r = run("--json", "plumb", "E8")
    doc = json.loads(r.stdout)
    assert doc["results"]["determinant"] == "1"
    assert doc["results"]["homology_sphere"] is True
    assert doc["results"]["signature"] == -8
    assert doc["results"]["euler_characteristic"] == 0

    r = run("--json", "plumb", "A4")
    doc = json.loads(r.stdout)
    assert doc["results"]["smith_form"]["cokernel"] == ["5"]

    graph = tmp_path / "cycle.txt"
    graph.write_text(
        "v 0 genus=0 e=-2\nv 1 genus=0 e=-2\nv 2 genus=0 e=-2\n"
        "e 0 1\ne 1 2\ne 2 0\n"
    )
    assert run("plumb", "--graph-file", str(graph)).returncode == 2

    unknot = tmp_path / "one.txt"
    unknot.write_text("v 7 genus=0 e=-1\n")
    r = run("--json", "plumb", "--graph-file", str(unknot))
    doc = json.loads(r.stdout)
    assert doc["results"]["homology_sphere"] is True
