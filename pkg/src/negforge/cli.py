"""Command-line front door.

Subcommands expose the pipeline stages individually (tag, augment, split,
undersample, stats) and end-to-end (pipeline). Exit codes: 0 success,
1 user/data error, 2 internal error.
"""

import argparse
import json
import os
import sys
import traceback
from dataclasses import dataclass
from pathlib import Path

from negforge import corpus as corpus_mod
from negforge.augment import AugmentedPair, augment_category
from negforge.corpus import (
    REASON_NEGATED_UNMATCHED,
    REASON_NO_NEGATION,
    TAGGED,
    CorpusSplits,
    DiagRecord,
    NliPair,
    TaggedPair,
    carve_dev,
    diag_record_from_tagged,
    split_diagnostics,
    stats_report,
    tag_stream,
    tagged_pair_from_outcome,
    undersample,
)
from negforge.errors import NegforgeError
from negforge.rules import CANONICAL_ORDER, CategoryAssignment, NegCategory
from negforge.wordnet import load_wordnet

DEFAULT_SEED = 42
DEFAULT_TEST_FRAC = 1 / 3
DEFAULT_DEV_SIZE = 9000
DEFAULT_AUGMENT_THRESHOLD = 1000
DEFAULT_AUGMENT_TARGET = 1500


@dataclass
class RunConfig:
    """Validated, resolved settings for one command invocation."""

    inputs: list[Path]
    out: Path
    wordnet: Path | None
    seed: int
    test_frac: float
    dev_size: int
    augment_threshold: int
    augment_target: int
    threads: int
    format: str

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        wordnet = getattr(args, "wordnet", None) or os.environ.get("NEGFORGE_WORDNET")
        config = cls(
            inputs=[Path(p).resolve() for p in getattr(args, "input", None) or []],
            out=Path(args.out).resolve() if getattr(args, "out", None) else Path("."),
            wordnet=Path(wordnet).resolve() if wordnet else None,
            seed=getattr(args, "seed", DEFAULT_SEED),
            test_frac=getattr(args, "test_frac", DEFAULT_TEST_FRAC),
            dev_size=getattr(args, "dev_size", DEFAULT_DEV_SIZE),
            augment_threshold=getattr(args, "augment_threshold", DEFAULT_AUGMENT_THRESHOLD),
            augment_target=getattr(args, "augment_target", DEFAULT_AUGMENT_TARGET),
            threads=getattr(args, "threads", 1),
            format=getattr(args, "format", "table"),
        )
        config.validate()
        return config

    def validate(self):
        if not 0 < self.test_frac < 1:
            raise NegforgeError(f"--test-frac must be in (0, 1), got {self.test_frac}")
        if self.dev_size < 0 or self.dev_size % 3 != 0:
            raise NegforgeError(
                f"--dev-size must be a non-negative multiple of 3, got {self.dev_size}"
            )
        if self.augment_threshold < 0:
            raise NegforgeError("--augment-threshold must be >= 0")
        if self.augment_target < 1:
            raise NegforgeError("--augment-target must be >= 1")
        if self.threads < 1:
            raise NegforgeError("--threads must be >= 1")
        for path in self.inputs:
            if not path.exists():
                raise NegforgeError(f"input not found: {path}")

    def params(self) -> dict:
        return {
            "test_frac": self.test_frac,
            "dev_size": self.dev_size,
            "augment_threshold": self.augment_threshold,
            "augment_target": self.augment_target,
        }


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; remap to 1 (user error)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="negforge",
        description="Build developmental-negation diagnostic corpora from "
        "parsed NLI pairs.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_common(p, inputs=True, out_help="output path"):
        if inputs:
            p.add_argument(
                "--input",
                action="append",
                required=True,
                metavar="FILE",
                help="parsed-pairs JSONL file (repeatable)",
            )
        p.add_argument("--out", required=True, metavar="PATH", help=out_help)

    p_tag = sub.add_parser(
        "tag",
        help="classify pairs into negation categories",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    add_common(p_tag, out_help="tagged JSONL file to write")
    p_tag.add_argument("--threads", type=int, default=1, help="worker processes")

    p_aug = sub.add_parser(
        "augment",
        help="add synonym variants to sparse categories",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    add_common(p_aug, out_help="augmented JSONL file to write")
    p_aug.add_argument(
        "--wordnet",
        metavar="DIR",
        default=None,
        help="WordNet 3.x database directory (or set NEGFORGE_WORDNET)",
    )
    p_aug.add_argument(
        "--augment-threshold",
        type=int,
        default=DEFAULT_AUGMENT_THRESHOLD,
        help="augment categories with fewer extracted pairs than this",
    )
    p_aug.add_argument(
        "--augment-target",
        type=int,
        default=DEFAULT_AUGMENT_TARGET,
        help="stop augmenting a category at this size",
    )

    p_split = sub.add_parser(
        "split",
        help="write per-category train/test files",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    add_common(p_split, out_help="output directory")
    p_split.add_argument("--seed", type=int, default=DEFAULT_SEED, help="RNG seed")
    p_split.add_argument(
        "--test-frac",
        type=float,
        default=DEFAULT_TEST_FRAC,
        help="fraction of each category held out as test",
    )

    p_under = sub.add_parser(
        "undersample",
        help="downsample every train set to the smallest category",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    p_under.add_argument(
        "--input",
        action="append",
        required=True,
        metavar="DIR",
        help="directory holding {category}_train.jsonl files",
    )
    p_under.add_argument("--out", required=True, metavar="DIR", help="output directory")
    p_under.add_argument("--seed", type=int, default=DEFAULT_SEED, help="RNG seed")

    p_stats = sub.add_parser(
        "stats",
        help="print the stats report for a built corpus directory",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    p_stats.add_argument(
        "--input",
        action="append",
        required=True,
        metavar="DIR",
        help="corpus output directory",
    )
    p_stats.add_argument(
        "--format", choices=("json", "table"), default="table", help="output format"
    )

    p_pipe = sub.add_parser(
        "pipeline",
        help="run tag -> augment -> split -> stats end to end",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    add_common(p_pipe, out_help="output directory")
    p_pipe.add_argument(
        "--wordnet",
        metavar="DIR",
        default=None,
        help="WordNet 3.x database directory (or set NEGFORGE_WORDNET)",
    )
    p_pipe.add_argument("--seed", type=int, default=DEFAULT_SEED, help="RNG seed")
    p_pipe.add_argument(
        "--test-frac",
        type=float,
        default=DEFAULT_TEST_FRAC,
        help="fraction of each category held out as test",
    )
    p_pipe.add_argument(
        "--dev-size",
        type=int,
        default=DEFAULT_DEV_SIZE,
        help="size of the label-balanced NLI dev carve",
    )
    p_pipe.add_argument(
        "--augment-threshold",
        type=int,
        default=DEFAULT_AUGMENT_THRESHOLD,
        help="augment categories with fewer extracted pairs than this",
    )
    p_pipe.add_argument(
        "--augment-target",
        type=int,
        default=DEFAULT_AUGMENT_TARGET,
        help="stop augmenting a category at this size",
    )
    p_pipe.add_argument("--threads", type=int, default=1, help="worker processes")
    p_pipe.add_argument(
        "--format", choices=("json", "table"), default="table", help="stats format"
    )
    return parser


# --- record serialization -------------------------------------------------------


def _diag_to_json(rec: DiagRecord, split: str) -> dict:
    out = {
        "id": rec.id,
        "source_id": rec.source_id,
        "source": rec.source,
        "category": rec.category.value,
        "split": split,
        "premise": rec.premise,
        "hypothesis": rec.hypothesis,
        "label": rec.label,
        "matched_span": rec.matched_span,
        "ambiguous": rec.ambiguous,
        "augmented": rec.augmented,
    }
    if rec.augmented:
        out["synonym_used"] = rec.synonym_used
    return out


def _nli_to_json(rec: NliPair, split: str) -> dict:
    return {
        "id": rec.id,
        "source_id": rec.id,
        "source": rec.source,
        "split": split,
        "premise": rec.premise,
        "hypothesis": rec.hypothesis,
        "label": rec.label,
        "augmented": False,
    }


def _write_jsonl(path: Path, dicts):
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        for d in dicts:
            handle.write(json.dumps(d, ensure_ascii=False) + "\n")


def _outcome_to_json(outcome) -> dict:
    record = outcome.record
    out = {
        "id": record.get("id"),
        "source": record.get("source"),
        "premise": record.get("premise"),
        "hypothesis": record.get("hypothesis"),
        "label": record.get("label"),
        "outcome": outcome.kind,
    }
    if outcome.kind == TAGGED:
        a = outcome.assignment
        out["category"] = a.category.value
        out["matched_span"] = a.matched_span
        out["ambiguous"] = a.ambiguous
        out["all_matches"] = sorted(
            [span, cat.value] for span, cat in a.all_matches
        )
        out["augmented"] = False
        out["premise_conllu"] = record["premise_conllu"]
        out["hypothesis_conllu"] = record["hypothesis_conllu"]
    return out


def _assignment_from_json(record: dict) -> CategoryAssignment:
    return CategoryAssignment(
        category=NegCategory(record["category"]),
        matched_span=record["matched_span"],
        ambiguous=bool(record["ambiguous"]),
        all_matches=frozenset(
            (span, NegCategory(code)) for span, code in record["all_matches"]
        ),
    )


# --- commands --------------------------------------------------------------------


def cmd_tag(config: RunConfig) -> int:
    counts: dict[str, int] = {}
    out_path = config.out
    with open(out_path, "w", encoding="utf-8", newline="\n") as handle:
        for outcome in tag_stream(config.inputs, threads=config.threads):
            if outcome.kind == TAGGED:
                key = outcome.assignment.category.value
            else:
                key = outcome.kind
            counts[key] = counts.get(key, 0) + 1
            handle.write(json.dumps(_outcome_to_json(outcome), ensure_ascii=False) + "\n")
    for category in CANONICAL_ORDER:
        print(f"{category.value}\t{counts.get(category.value, 0)}", file=sys.stderr)
    for key in (
        REASON_NO_NEGATION,
        REASON_NEGATED_UNMATCHED,
        corpus_mod.UNPARSEABLE,
        corpus_mod.DROPPED_LABEL,
    ):
        print(f"{key}\t{counts.get(key, 0)}", file=sys.stderr)
    return 0


def _augment_tagged(
    tagged_by_cat: dict[NegCategory, list[TaggedPair]], config: RunConfig
) -> tuple[dict[NegCategory, list[AugmentedPair]], str | None]:
    """Augment every sparse category; the lexicon loads only when needed.

    Returns (variants per category, WordNet version or None when the
    lexicon never loaded).
    """
    lexicon = None
    variants: dict[NegCategory, list[AugmentedPair]] = {}
    for category in CANONICAL_ORDER:
        records = tagged_by_cat.get(category, [])
        if not records or len(records) >= config.augment_threshold:
            continue
        if lexicon is None:
            if config.wordnet is None:
                raise NegforgeError(
                    "augmentation needed but no WordNet directory given "
                    "(--wordnet or NEGFORGE_WORDNET)"
                )
            lexicon = load_wordnet(config.wordnet)
        variants[category] = augment_category(records, lexicon, config.augment_target)
    return variants, lexicon.version if lexicon is not None else None


def cmd_augment(config: RunConfig) -> int:
    tagged_by_cat: dict[NegCategory, list[TaggedPair]] = {}
    passthrough: list[dict] = []
    for record, path, line_no in corpus_mod.iter_records(config.inputs):
        passthrough.append(record)
        if record.get("outcome") == TAGGED and not record.get("augmented"):
            outcome = corpus_mod.TagOutcome(
                TAGGED, record, _assignment_from_json(record)
            )
            tagged = tagged_pair_from_outcome(outcome)
            tagged_by_cat.setdefault(tagged.category, []).append(tagged)
    variants, _ = _augment_tagged(tagged_by_cat, config)
    with open(config.out, "w", encoding="utf-8", newline="\n") as handle:
        for record in passthrough:
            handle.write(json.dumps(record, ensure_ascii=False) + "\n")
        for category in CANONICAL_ORDER:
            for variant in variants.get(category, []):
                out = {
                    "id": variant.pair.id,
                    "source_id": variant.source_id,
                    "source": variant.pair.source,
                    "premise": variant.pair.premise,
                    "hypothesis": variant.pair.hypothesis,
                    "label": variant.pair.label,
                    "outcome": TAGGED,
                    "category": variant.category.value,
                    "matched_span": variant.assignment.matched_span,
                    "ambiguous": variant.assignment.ambiguous,
                    "all_matches": sorted(
                        [span, cat.value] for span, cat in variant.assignment.all_matches
                    ),
                    "augmented": True,
                    "synonym_used": variant.synonym_used,
                    "premise_conllu": variant.pair.premise_tree.to_conllu(),
                    "hypothesis_conllu": variant.pair.hypothesis_tree.to_conllu(),
                }
                handle.write(json.dumps(out, ensure_ascii=False) + "\n")
    total = sum(len(v) for v in variants.values())
    print(f"augmented\t{total}", file=sys.stderr)
    return 0


def _diag_records_from_files(paths) -> list[DiagRecord]:
    records = []
    for record, path, line_no in corpus_mod.iter_records(paths):
        if record.get("outcome") != TAGGED and "category" not in record:
            continue
        records.append(
            DiagRecord(
                id=record["id"],
                source_id=record.get("source_id", record["id"]),
                source=record.get("source", ""),
                category=NegCategory(record["category"]),
                premise=record["premise"],
                hypothesis=record["hypothesis"],
                label=record["label"],
                matched_span=record.get("matched_span", ""),
                ambiguous=bool(record.get("ambiguous", False)),
                augmented=bool(record.get("augmented", False)),
                synonym_used=record.get("synonym_used"),
            )
        )
    return records


def cmd_split(config: RunConfig) -> int:
    records = _diag_records_from_files(config.inputs)
    splits = split_diagnostics(records, config.test_frac, config.seed)
    config.out.mkdir(parents=True, exist_ok=True)
    for category in CANONICAL_ORDER:
        train, test = splits.get(category, ([], []))
        _write_jsonl(
            config.out / f"{category.value}_train.jsonl",
            (_diag_to_json(r, "train") for r in train),
        )
        _write_jsonl(
            config.out / f"{category.value}_test.jsonl",
            (_diag_to_json(r, "test") for r in test),
        )
        print(
            f"{category.value}\t{len(train)}\t{len(test)}",
            file=sys.stderr,
        )
    return 0


def cmd_undersample(config: RunConfig) -> int:
    in_dir = Path(config.inputs[0])
    diag_train: dict[NegCategory, list[DiagRecord]] = {}
    for category in CANONICAL_ORDER:
        path = in_dir / f"{category.value}_train.jsonl"
        if path.is_file():
            records = _diag_records_from_files([path])
            if records:
                diag_train[category] = records
    if not diag_train:
        raise NegforgeError(f"no non-empty {{category}}_train.jsonl files in {in_dir}")
    reduced = undersample(diag_train, config.seed)
    config.out.mkdir(parents=True, exist_ok=True)
    for category, records in reduced.items():
        _write_jsonl(
            config.out / f"{category.value}_train.jsonl",
            (_diag_to_json(r, "train") for r in records),
        )
        print(f"{category.value}\t{len(records)}", file=sys.stderr)
    return 0


def cmd_stats(config: RunConfig) -> int:
    stats_path = Path(config.inputs[0]) / "stats.json"
    if not stats_path.is_file():
        raise NegforgeError(f"stats file not found: {stats_path}")
    with open(stats_path, encoding="utf-8") as handle:
        data = json.load(handle)
    if config.format == "json":
        print(json.dumps(data, ensure_ascii=False, indent=2))
    else:
        print(corpus_mod.format_stats(data), end="")
    return 0


def cmd_pipeline(config: RunConfig) -> int:
    tagged_by_cat: dict[NegCategory, list[TaggedPair]] = {}
    nli_pool: list[NliPair] = []
    discarded = 0
    dropped_labels = 0
    unparseable = 0
    total = 0
    for outcome in tag_stream(config.inputs, threads=config.threads):
        total += 1
        if outcome.kind == TAGGED:
            tagged = tagged_pair_from_outcome(outcome)
            tagged_by_cat.setdefault(tagged.category, []).append(tagged)
        elif outcome.kind == REASON_NO_NEGATION:
            r = outcome.record
            nli_pool.append(
                NliPair(
                    id=r["id"],
                    source=r["source"],
                    premise=r["premise"],
                    hypothesis=r["hypothesis"],
                    label=r["label"],
                )
            )
        elif outcome.kind == REASON_NEGATED_UNMATCHED:
            discarded += 1
        elif outcome.kind == corpus_mod.DROPPED_LABEL:
            dropped_labels += 1
        else:
            unparseable += 1

    variants, wordnet_version = _augment_tagged(tagged_by_cat, config)

    diag_records: list[DiagRecord] = []
    extracted_counts: dict[NegCategory, int] = {}
    augmented_counts: dict[NegCategory, int] = {}
    for category in CANONICAL_ORDER:
        originals = tagged_by_cat.get(category, [])
        extracted_counts[category] = len(originals)
        diag_records.extend(diag_record_from_tagged(t) for t in originals)
        cat_variants = variants.get(category, [])
        augmented_counts[category] = len(cat_variants)
        for v in cat_variants:
            diag_records.append(
                DiagRecord(
                    id=v.pair.id,
                    source_id=v.source_id,
                    source=v.pair.source,
                    category=v.category,
                    premise=v.pair.premise,
                    hypothesis=v.pair.hypothesis,
                    label=v.pair.label,
                    matched_span=v.assignment.matched_span,
                    ambiguous=v.assignment.ambiguous,
                    augmented=True,
                    synonym_used=v.synonym_used,
                )
            )

    split = split_diagnostics(diag_records, config.test_frac, config.seed)
    nli_train, nli_dev = carve_dev(nli_pool, config.dev_size, config.seed)

    splits = CorpusSplits(
        diag_train={c: t for c, (t, _) in split.items()},
        diag_test={c: t for c, (_, t) in split.items()},
        nli_train=nli_train,
        nli_dev=nli_dev,
        discarded_negated=discarded,
        seed=config.seed,
        extracted_counts=extracted_counts,
        augmented_counts=augmented_counts,
        dropped_labels=dropped_labels,
        unparseable=unparseable,
        total_records=total,
        wordnet_version=wordnet_version,
        params=config.params(),
    )
    data, table = stats_report(splits)

    config.out.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    try:
        for category in CANONICAL_ORDER:
            train, test = split.get(category, ([], []))
            for name, records, split_name in (
                (f"{category.value}_train.jsonl", train, "train"),
                (f"{category.value}_test.jsonl", test, "test"),
            ):
                path = config.out / name
                _write_jsonl(path, (_diag_to_json(r, split_name) for r in records))
                written.append(path)
        path = config.out / "nli_train.jsonl"
        _write_jsonl(path, (_nli_to_json(r, "nli_train") for r in nli_train))
        written.append(path)
        path = config.out / "nli_dev.jsonl"
        _write_jsonl(path, (_nli_to_json(r, "nli_dev") for r in nli_dev))
        written.append(path)
        path = config.out / "stats.json"
        with open(path, "w", encoding="utf-8", newline="\n") as handle:
            json.dump(data, handle, ensure_ascii=False, indent=2)
            handle.write("\n")
        written.append(path)
        path = config.out / "stats.txt"
        with open(path, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(table)
        written.append(path)
    except BaseException:
        for path in written:
            path.unlink(missing_ok=True)
        raise

    if config.format == "json":
        print(json.dumps(data, ensure_ascii=False, indent=2))
    else:
        print(table, end="")
    return 0


COMMANDS = {
    "tag": cmd_tag,
    "augment": cmd_augment,
    "split": cmd_split,
    "undersample": cmd_undersample,
    "stats": cmd_stats,
    "pipeline": cmd_pipeline,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        config = RunConfig.from_args(args)
        return COMMANDS[args.command](config)
    except NegforgeError as exc:
        print(f"negforge: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"negforge: error: {exc}", file=sys.stderr)
        return 1
    except Exception:
        traceback.print_exc()
        return 2


if __name__ == "__main__":
    sys.exit(main())
