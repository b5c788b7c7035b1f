"""The produced files must satisfy the corpus builder's input contract.

These tests drive the `negforge` CLI as a subprocess; only the JSONL wire
format and the command-line interface connect the two packages.
"""

import json
import shutil
import subprocess
from pathlib import Path

import pytest

from parse_ingest.cli import main
from parse_ingest.heuristic import HeuristicBackend
from parse_ingest.ingest import run_ingest

from conftest import MNLI_DIR, SNLI_DIR, TOTAL_RECORDS

NEGFORGE = shutil.which("negforge")

needs_negforge = pytest.mark.skipif(
    NEGFORGE is None, reason="negforge CLI not installed"
)

MINI_WORDNET = Path(__file__).resolve().parents[2] / "tests/fixtures/mini_wordnet"


@pytest.fixture(scope="module")
def parsed_pairs(tmp_path_factory) -> Path:
    out = tmp_path_factory.mktemp("ingest") / "pairs.jsonl"
    run_ingest(SNLI_DIR, MNLI_DIR, out, HeuristicBackend(), batch_size=8)
    return out


@needs_negforge
def test_negforge_tag_accepts_output(parsed_pairs, tmp_path):
    tagged_path = tmp_path / "tagged.jsonl"
    proc = subprocess.run(
        [
            NEGFORGE,
            "tag",
            "--input",
            str(parsed_pairs),
            "--out",
            str(tagged_path),
        ],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0, proc.stderr

    with open(tagged_path, encoding="utf-8") as handle:
        outcomes = [json.loads(line) for line in handle]
    assert len(outcomes) == TOTAL_RECORDS

    by_id = {o["id"]: o for o in outcomes}
    expected = {
        "snli-train-1": "EP",
        "snli-train-3": "PR",
        "snli-dev-1": "R",
        "snli-test-1": "EX",
        "mnli-train-1": "L",
        "mnli-train-2": "PO",
        "mnli-train-3": "I",
        "mnli-dev_matched-1": "PR",
        "mnli-dev_mismatched-2": "EX",
    }
    for pair_id, category in expected.items():
        assert by_id[pair_id]["outcome"] == "tagged", pair_id
        assert by_id[pair_id]["category"] == category, pair_id

    assert by_id["snli-train-5"]["outcome"] == "unparseable"
    assert by_id["snli-train-4"]["outcome"] == "dropped-label"
    assert by_id["snli-train-2"]["outcome"] == "no-negation"
    assert by_id["mnli-dev_mismatched-1"]["outcome"] == "no-negation"


@needs_negforge
def test_negforge_pipeline_runs_on_output(parsed_pairs, tmp_path):
    out_dir = tmp_path / "corpus"
    proc = subprocess.run(
        [
            NEGFORGE,
            "pipeline",
            "--input",
            str(parsed_pairs),
            "--out",
            str(out_dir),
            "--wordnet",
            str(MINI_WORDNET),
            "--seed",
            "42",
            "--dev-size",
            "0",
            "--augment-target",
            "2",
        ],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0, proc.stderr
    stats = json.loads((out_dir / "stats.json").read_text(encoding="utf-8"))
    assert stats["total_records"] == TOTAL_RECORDS
    assert stats["unparseable"] == 1
    assert stats["dropped_labels"] == 1
    extracted = {k: v["extracted"] for k, v in stats["categories"].items()}
    assert extracted == {"PO": 1, "EX": 2, "L": 1, "PR": 2, "I": 1, "EP": 1, "R": 1}


def test_cli_end_to_end_matches_library(tmp_path):
    out = tmp_path / "pairs.jsonl"
    code = main(
        [
            "--snli",
            str(SNLI_DIR),
            "--mnli",
            str(MNLI_DIR),
            "--out",
            str(out),
            "--model",
            "heuristic",
        ]
    )
    assert code == 0
    lib_out = tmp_path / "pairs-lib.jsonl"
    run_ingest(SNLI_DIR, MNLI_DIR, lib_out, HeuristicBackend(), batch_size=64)
    assert out.read_bytes() == lib_out.read_bytes()
