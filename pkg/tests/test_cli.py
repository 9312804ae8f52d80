"""End-to-end CLI tests against golden transcripts.

Each case drives ``vgit.cli.main`` in-process with a fixed argv, stdin
document, and VGIT_SEED=0, then compares stdout byte-for-byte with a file
under ``tests/golden/``.  Set VGIT_REGOLD=1 in the environment to rewrite
the golden files from current behavior instead of asserting.
"""

import io
import json
import os
import subprocess
import sys
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path

import pytest

from vgit.cli import dump_json, main

GOLDEN_DIR = Path(__file__).parent / "golden"

TWO_BLOCK = json.dumps({"cstar": {"blocks": [{"d": 0, "dim": 1}, {"d": 1, "dim": 1}]}})
TWELVE = json.dumps({"cstar": {"blocks": [{"d": 1, "dim": 1}, {"d": 2, "dim": 1}]}})
THREE_BLOCK = json.dumps(
    {
        "cstar": {
            "blocks": [{"d": -1, "dim": 1}, {"d": 0, "dim": 2}, {"d": 2, "dim": 1}]
        },
        "support": [1, 3],
    }
)
TORUS_DOC = json.dumps(
    {
        "torus": {
            "rank": 2,
            "coordinates": [[-1, 0], [1, 0], [0, 1]],
            "slope": ["0/1", "1/2"],
        },
        "support": [1, 2, 3],
    }
)

# (name, argv, stdin text, expected exit code)
CASES = [
    ("chambers_text", ["chambers"], THREE_BLOCK, 0),
    ("chambers_json", ["chambers", "--json"], THREE_BLOCK, 0),
    ("bb_text", ["bb"], THREE_BLOCK, 0),
    ("bb_json", ["bb", "--json"], THREE_BLOCK, 0),
    ("bb_dot", ["bb", "--dot"], THREE_BLOCK, 0),
    ("flips_text", ["flips"], TWO_BLOCK, 0),
    ("flips_json", ["flips", "--json"], TWO_BLOCK, 0),
    ("quotient_text", ["quotient", "--slope", "1/2"], TWO_BLOCK, 0),
    ("quotient_json", ["quotient", "--slope", "7/5", "--json"], TWELVE, 0),
    (
        "product_check_text",
        ["product-check", "--grid", "dims=3,wmax=2,qmax=2,count=12"],
        "",
        0,
    ),
    (
        "product_check_json",
        ["product-check", "--grid", "dims=3,wmax=2,qmax=2,count=12", "--json"],
        "",
        0,
    ),
    (
        "product_check_instance",
        ["product-check", "--input", "-", "--grid", "count=5,dims=2,wmax=1,qmax=1"],
        TORUS_DOC,
        0,
    ),
    ("example_flipsex_text", ["example", "flipsex"], "", 0),
    ("example_flipsex_json", ["example", "flipsex", "--json"], "", 0),
    ("example_two_block_text", ["example", "two-block"], "", 0),
    ("example_two_block_json", ["example", "two-block", "--json"], "", 0),
]


def run_case(argv, stdin_text=""):
    """Run main() in-process with seeded env; return (exit code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    old_stdin = sys.stdin
    old_seed = os.environ.get("VGIT_SEED")
    sys.stdin = io.StringIO(stdin_text)
    os.environ["VGIT_SEED"] = "0"
    try:
        with redirect_stdout(out), redirect_stderr(err):
            code = main(argv)
    finally:
        sys.stdin = old_stdin
        if old_seed is None:
            os.environ.pop("VGIT_SEED", None)
        else:
            os.environ["VGIT_SEED"] = old_seed
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("name,argv,stdin_text,expected", CASES, ids=[c[0] for c in CASES])
def test_golden(name, argv, stdin_text, expected):
    code, stdout, stderr = run_case(argv, stdin_text)
    assert code == expected, stderr
    golden = GOLDEN_DIR / f"{name}.txt"
    if os.environ.get("VGIT_REGOLD"):
        golden.parent.mkdir(exist_ok=True)
        golden.write_text(stdout, encoding="utf-8")
    assert stdout == golden.read_text(encoding="utf-8")


@pytest.mark.parametrize(
    "name,argv,stdin_text,expected",
    [c for c in CASES if "--json" in c[1]],
    ids=[c[0] for c in CASES if "--json" in c[1]],
)
def test_json_output_round_trips(name, argv, stdin_text, expected):
    _, stdout, _ = run_case(argv, stdin_text)
    assert dump_json(json.loads(stdout)) == stdout


def test_runs_are_deterministic():
    argv = ["product-check", "--grid", "count=20,dims=3"]
    first = run_case(argv)
    second = run_case(argv)
    assert first == second


EXIT_CASES = [
    (["chambers"], "not json {", 2),
    (["chambers"], json.dumps({"torus": {}}), 2),
    (["chambers"], json.dumps({"cstar": {"blocks": [{"d": 1}]}}), 2),
    (["chambers"], json.dumps({"cstar": {"blocks": [{"d": 1, "dim": 0}]}}), 1),
    (["chambers"], json.dumps({"cstar": {"blocks": []}}), 1),
    (["chambers"], json.dumps(json.loads(TWO_BLOCK) | {"support": [9]}), 1),
    (["quotient", "--slope", "0.5"], TWO_BLOCK, 2),
    (["quotient"], TWO_BLOCK, 2),
    (["nonsense"], "", 2),
    ([], "", 2),
    (["product-check", "--grid", "bogus=1"], "", 2),
    (["product-check", "--grid", "count=zero"], "", 2),
    (
        ["product-check", "--input", "-"],
        json.dumps({"torus": {"rank": 2, "coordinates": [[0, 1]]}}),
        1,
    ),
    (
        ["product-check", "--input", "-"],
        json.dumps(
            {"torus": {"rank": 1, "coordinates": [[1]], "slope": ["0/1"]}}
        ),
        1,
    ),
    (["example", "unknown"], "", 2),
    (["bb"], json.dumps({"cstar": {"blocks": [{"d": 0, "dim": 2}], "x": 1}}), 0),
]


@pytest.mark.parametrize("argv,stdin_text,expected", EXIT_CASES)
def test_exit_codes(argv, stdin_text, expected):
    code, _, stderr = run_case(argv, stdin_text)
    assert code == expected, stderr


def test_missing_input_file_is_usage_error():
    code, _, stderr = run_case(["chambers", "--input", "/nonexistent/path.json"])
    assert code == 2
    assert "cannot read input" in stderr


def test_bad_seed_is_usage_error():
    old = os.environ.get("VGIT_SEED")
    os.environ["VGIT_SEED"] = "not-a-number"
    try:
        out, err = io.StringIO(), io.StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            code = main(["product-check", "--grid", "count=1"])
    finally:
        if old is None:
            os.environ.pop("VGIT_SEED", None)
        else:
            os.environ["VGIT_SEED"] = old
    assert code == 2


def test_input_file_path(tmp_path):
    doc = tmp_path / "in.json"
    doc.write_text(TWO_BLOCK, encoding="utf-8")
    code, stdout, _ = run_case(["chambers", "--input", str(doc)])
    assert code == 0
    assert "chambers: 4" in stdout


def test_console_script_installed():
    proc = subprocess.run(
        ["vgit", "example", "flipsex"], capture_output=True, text=True, timeout=60
    )
    assert proc.returncode == 0
    assert "notions: (6, 4)" in proc.stdout
