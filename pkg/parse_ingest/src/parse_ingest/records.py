"""Readers for the raw SNLI/MNLI JSONL distributions."""

import json
from dataclasses import dataclass
from pathlib import Path

VALID_LABELS = ("entailment", "neutral", "contradiction", "-")

SNLI_FILES = (
    ("snli_1.0_train.jsonl", "train"),
    ("snli_1.0_dev.jsonl", "dev"),
    ("snli_1.0_test.jsonl", "test"),
)
MNLI_FILES = (
    ("multinli_1.0_train.jsonl", "train"),
    ("multinli_1.0_dev_matched.jsonl", "dev_matched"),
    ("multinli_1.0_dev_mismatched.jsonl", "dev_mismatched"),
)


@dataclass(frozen=True)
class RawNliRecord:
    dataset: str
    split: str
    line_no: int  # 1-based line within its file
    sentence1: str
    sentence2: str
    gold_label: str

    @property
    def pair_id(self) -> str:
        return f"{self.dataset}-{self.split}-{self.line_no}"

    @property
    def source(self) -> str:
        return f"{self.dataset}-{self.split}"


class SchemaError(ValueError):
    """A raw file does not follow the SNLI/MNLI JSONL schema."""


def discover_files(snli_dir, mnli_dir) -> list[tuple[Path, str, str]]:
    """(path, dataset, split) for every distribution file present."""
    found = []
    for directory, dataset, names in (
        (snli_dir, "snli", SNLI_FILES),
        (mnli_dir, "mnli", MNLI_FILES),
    ):
        if directory is None:
            continue
        directory = Path(directory)
        if not directory.is_dir():
            raise SchemaError(f"{dataset} directory not found: {directory}")
        present = [
            (directory / name, dataset, split)
            for name, split in names
            if (directory / name).is_file()
        ]
        if not present:
            raise SchemaError(
                f"no {dataset} JSONL files found in {directory} "
                f"(expected names like {names[0][0]})"
            )
        found.extend(present)
    if not found:
        raise SchemaError("neither --snli nor --mnli given")
    return found


def read_raw_file(path: Path, dataset: str, split: str):
    """Yield RawNliRecords; fails fast on schema violations."""
    with open(path, encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, 1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise SchemaError(f"{path}:{line_no}: invalid JSON: {exc}") from exc
            if not isinstance(obj, dict):
                raise SchemaError(f"{path}:{line_no}: record is not an object")
            for key in ("sentence1", "sentence2", "gold_label"):
                if key not in obj or not isinstance(obj[key], str):
                    raise SchemaError(f"{path}:{line_no}: missing field {key!r}")
            if obj["gold_label"] not in VALID_LABELS:
                raise SchemaError(
                    f"{path}:{line_no}: unexpected gold_label {obj['gold_label']!r}"
                )
            yield RawNliRecord(
                dataset=dataset,
                split=split,
                line_no=line_no,
                sentence1=obj["sentence1"],
                sentence2=obj["sentence2"],
                gold_label=obj["gold_label"],
            )
