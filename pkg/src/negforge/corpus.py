"""Corpus construction: ingest parsed NLI pairs, tag them, split them.

The flow over a parsed-pairs JSONL corpus is

    ingest -> tag -> (augment sparse categories) -> split diagnostics,
    carve a balanced dev set out of the negation-free pool -> stats

Every random choice goes through one named generator (MT19937 seeded per
stage via SHA-256, shuffled with an explicit Fisher-Yates) so a seed fully
determines every output byte, independent of thread count or dict order.
"""

import hashlib
import json
import math
import random
from dataclasses import dataclass, field
from pathlib import Path

from negforge import kernels
from negforge.deptree import DepTree, parse_conllu
from negforge.errors import DuplicateId, InsufficientLabel, MalformedRecord
from negforge.rules import (
    CANONICAL_ORDER,
    CategoryAssignment,
    NegCategory,
    assign_trees,
    assignment_from_matches,
    categories_from_mask,
    has_negation,
)

LABELS = ("entailment", "neutral", "contradiction")

RNG_NAME = "mt19937/sha256-derived/fisher-yates"

REASON_NO_NEGATION = "no-negation"
REASON_NEGATED_UNMATCHED = "negated-unmatched"


@dataclass(frozen=True)
class NliPair:
    """One NLI example: premise, hypothesis and a gold label."""

    id: str
    source: str
    premise: str
    hypothesis: str
    label: str


@dataclass(frozen=True)
class ParsedPair(NliPair):
    """An NLI example with one dependency tree per span."""

    premise_tree: DepTree
    hypothesis_tree: DepTree


@dataclass(frozen=True)
class TaggedPair:
    """A pair that fell into a category, with its assignment."""

    pair: ParsedPair
    assignment: CategoryAssignment

    @property
    def category(self) -> NegCategory:
        return self.assignment.category


@dataclass
class IngestResult:
    pairs: list[ParsedPair]
    dropped_labels: int = 0
    unparseable: int = 0
    total_records: int = 0


@dataclass
class TagResult:
    tagged: list[TaggedPair]
    negation_free: list[ParsedPair]
    negated_unmatched: list[ParsedPair]


@dataclass(frozen=True)
class DiagRecord:
    """One diagnostic-set record, original or augmented."""

    id: str
    source_id: str
    source: str
    category: NegCategory
    premise: str
    hypothesis: str
    label: str
    matched_span: str
    ambiguous: bool
    augmented: bool = False
    synonym_used: str | None = None


@dataclass
class CorpusSplits:
    """The five output corpora plus the bookkeeping the stats report needs."""

    diag_train: dict[NegCategory, list[DiagRecord]]
    diag_test: dict[NegCategory, list[DiagRecord]]
    nli_train: list[NliPair]
    nli_dev: list[NliPair]
    discarded_negated: int
    seed: int
    extracted_counts: dict[NegCategory, int] = field(default_factory=dict)
    augmented_counts: dict[NegCategory, int] = field(default_factory=dict)
    dropped_labels: int = 0
    unparseable: int = 0
    total_records: int = 0
    wordnet_version: str | None = None
    params: dict = field(default_factory=dict)


# --- seeded randomness --------------------------------------------------------


def derive_rng(seed: int, *scope: str) -> random.Random:
    """An MT19937 generator for one (seed, stage) scope.

    The scope string keeps stages independent: reordering one stage never
    perturbs another stage's draws.
    """
    tag = ":".join((str(seed),) + scope)
    digest = hashlib.sha256(tag.encode("utf-8")).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def fisher_yates(items: list, rng: random.Random) -> list:
    """Explicit Fisher-Yates shuffle (copy); pinned here so the byte-level
    outputs do not depend on stdlib shuffle internals."""
    out = list(items)
    for i in range(len(out) - 1, 0, -1):
        j = rng.randrange(i + 1)
        out[i], out[j] = out[j], out[i]
    return out


def sample_ids(ids: list, k: int, rng: random.Random) -> set:
    """k ids sampled without replacement (shuffle-and-take-prefix)."""
    return set(fisher_yates(ids, rng)[:k])


# --- ingestion ----------------------------------------------------------------

REQUIRED_FIELDS = ("id", "source", "premise", "hypothesis")


def _record_to_pair(record: dict, path, line_no: int) -> ParsedPair:
    for key in REQUIRED_FIELDS:
        if not isinstance(record.get(key), str) or not record[key]:
            raise MalformedRecord(f"missing or empty field {key!r}", path, line_no)
    for key in ("premise_conllu", "hypothesis_conllu"):
        if not isinstance(record.get(key), str) or not record[key].strip():
            raise MalformedRecord(f"missing or empty field {key!r}", path, line_no)
    try:
        premise_tree = parse_conllu(record["premise_conllu"])
        hypothesis_tree = parse_conllu(record["hypothesis_conllu"])
    except Exception as exc:
        raise MalformedRecord(f"bad CoNLL-U block: {exc}", path, line_no) from exc
    for tree, text in (
        (premise_tree, record["premise"]),
        (hypothesis_tree, record["hypothesis"]),
    ):
        # tokenization may split clitics, so compare ignoring whitespace
        if "".join(tree.text.split()) != "".join(text.split()):
            raise MalformedRecord(
                f"tree text {tree.text!r} does not match span {text!r}",
                path,
                line_no,
            )
    return ParsedPair(
        id=record["id"],
        source=record["source"],
        premise=record["premise"],
        hypothesis=record["hypothesis"],
        label=record["label"],
        premise_tree=premise_tree,
        hypothesis_tree=hypothesis_tree,
    )


def iter_records(paths):
    """Yield (record dict, path, line_no) over parsed-pairs JSONL files."""
    for path in paths:
        path = Path(path)
        with open(path, encoding="utf-8") as handle:
            for line_no, line in enumerate(handle, 1):
                if not line.strip():
                    continue
                try:
                    record = json.loads(line)
                except json.JSONDecodeError as exc:
                    raise MalformedRecord(f"invalid JSON: {exc}", path, line_no) from exc
                if not isinstance(record, dict):
                    raise MalformedRecord("record is not a JSON object", path, line_no)
                yield record, path, line_no


def ingest_pairs(paths) -> IngestResult:
    """Load parsed-pairs JSONL files into validated ParsedPairs.

    Records labeled "-" (or unlabeled) and records flagged unparseable by
    the parse stage are dropped and counted; duplicate ids are an error.
    """
    result = IngestResult(pairs=[])
    seen: set[str] = set()
    for record, path, line_no in iter_records(paths):
        result.total_records += 1
        if record.get("unparseable"):
            result.unparseable += 1
            continue
        label = record.get("label")
        if label not in LABELS:
            result.dropped_labels += 1
            continue
        pair = _record_to_pair(record, path, line_no)
        if pair.id in seen:
            raise DuplicateId(f"{path}:{line_no}: duplicate pair id {pair.id!r}")
        seen.add(pair.id)
        result.pairs.append(pair)
    return result


# --- tagging ------------------------------------------------------------------


def tag_corpus(pairs) -> TagResult:
    """Partition pairs by classification outcome.

    Pairs with no explicit marker anywhere join the NLI-train pool; pairs
    with a marker that no rule matches are discarded (counted, never
    trained on).
    """
    result = TagResult(tagged=[], negation_free=[], negated_unmatched=[])
    for pair in pairs:
        assignment = assign_trees(pair.premise_tree, pair.hypothesis_tree)
        if assignment is not None:
            result.tagged.append(TaggedPair(pair=pair, assignment=assignment))
        elif has_negation(pair.premise_tree) or has_negation(pair.hypothesis_tree):
            result.negated_unmatched.append(pair)
        else:
            result.negation_free.append(pair)
    return result


def diag_record_from_tagged(tagged: TaggedPair) -> DiagRecord:
    a = tagged.assignment
    p = tagged.pair
    return DiagRecord(
        id=p.id,
        source_id=p.id,
        source=p.source,
        category=a.category,
        premise=p.premise,
        hypothesis=p.hypothesis,
        label=p.label,
        matched_span=a.matched_span,
        ambiguous=a.ambiguous,
    )


# --- streaming tag path ---------------------------------------------------------

TAGGED = "tagged"
UNPARSEABLE = "unparseable"
DROPPED_LABEL = "dropped-label"


@dataclass(frozen=True)
class TagOutcome:
    """Per-record result of the fused ingest+tag pass.

    ``kind`` is one of tagged / no-negation / negated-unmatched /
    unparseable / dropped-label; ``record`` is the original JSONL dict and
    ``assignment`` is set only for tagged records.
    """

    kind: str
    record: dict
    assignment: CategoryAssignment | None = None


def _tag_payload(payload) -> TagOutcome:
    """Classify one raw JSONL line without building tree objects.

    Top-level so it can run in a multiprocessing pool; the fast path never
    constructs Token/DepTree instances for the (dominant) negation-free
    records.
    """
    line, path, line_no = payload
    try:
        record = json.loads(line)
    except json.JSONDecodeError as exc:
        raise MalformedRecord(f"invalid JSON: {exc}", path, line_no) from exc
    if not isinstance(record, dict):
        raise MalformedRecord("record is not a JSON object", path, line_no)
    if record.get("unparseable"):
        return TagOutcome(UNPARSEABLE, record)
    if record.get("label") not in LABELS:
        return TagOutcome(DROPPED_LABEL, record)
    for key in REQUIRED_FIELDS:
        if not isinstance(record.get(key), str) or not record[key]:
            raise MalformedRecord(f"missing or empty field {key!r}", path, line_no)
    columns = []
    for key, span_key in (
        ("premise_conllu", "premise"),
        ("hypothesis_conllu", "hypothesis"),
    ):
        block = record.get(key)
        if not isinstance(block, str) or not block.strip():
            raise MalformedRecord(f"missing or empty field {key!r}", path, line_no)
        try:
            cols = kernels.parse_block(block)
        except Exception as exc:
            raise MalformedRecord(f"bad CoNLL-U block: {exc}", path, line_no) from exc
        text = cols[0] if cols[0] is not None else " ".join(cols[1])
        if "".join(text.split()) != "".join(record[span_key].split()):
            raise MalformedRecord(
                f"tree text {text!r} does not match span {record[span_key]!r}",
                path,
                line_no,
            )
        columns.append(cols)

    masks = []
    markers = 0
    for _, forms, lemmas, upos, heads, deprels in columns:
        n, mask = kernels.match_mask(forms, lemmas, upos, heads, deprels)
        markers += n
        masks.append(mask)
    assignment = assignment_from_matches(
        categories_from_mask(masks[0]), categories_from_mask(masks[1])
    )
    if assignment is not None:
        return TagOutcome(TAGGED, record, assignment)
    if markers:
        return TagOutcome(REASON_NEGATED_UNMATCHED, record)
    return TagOutcome(REASON_NO_NEGATION, record)


def _iter_line_payloads(paths):
    for path in paths:
        path = Path(path)
        with open(path, encoding="utf-8") as handle:
            for line_no, line in enumerate(handle, 1):
                if line.strip():
                    yield line, str(path), line_no


def tag_stream(paths, threads: int = 1):
    """Yield a TagOutcome per record of the parsed-pairs files.

    Output order equals input order regardless of ``threads``; duplicate
    ids are rejected here so workers stay stateless.
    """
    if threads < 1:
        raise ValueError(f"threads must be >= 1, got {threads}")
    payloads = _iter_line_payloads(paths)
    if threads == 1:
        results = map(_tag_payload, payloads)
    else:
        import multiprocessing

        pool = multiprocessing.Pool(processes=threads)
        results = pool.imap(_tag_payload, payloads, chunksize=256)
    seen: set[str] = set()
    try:
        for outcome in results:
            if outcome.kind not in (UNPARSEABLE, DROPPED_LABEL):
                pair_id = outcome.record["id"]
                if pair_id in seen:
                    raise DuplicateId(f"duplicate pair id {pair_id!r}")
                seen.add(pair_id)
            yield outcome
    finally:
        if threads > 1:
            pool.terminate()
            pool.join()


def tagged_pair_from_outcome(outcome: TagOutcome) -> TaggedPair:
    """Materialize trees for a tagged outcome (augmentation needs them)."""
    record = outcome.record
    pair = ParsedPair(
        id=record["id"],
        source=record["source"],
        premise=record["premise"],
        hypothesis=record["hypothesis"],
        label=record["label"],
        premise_tree=parse_conllu(record["premise_conllu"]),
        hypothesis_tree=parse_conllu(record["hypothesis_conllu"]),
    )
    return TaggedPair(pair=pair, assignment=outcome.assignment)


# --- splitting ----------------------------------------------------------------


def split_diagnostics(
    records, test_frac: float, seed: int
) -> dict[NegCategory, tuple[list[DiagRecord], list[DiagRecord]]]:
    """Per-category group-aware train/test split.

    Records are grouped by source_id so an original and its augmented
    variants always land on the same side. Whole groups go to test, in
    seeded shuffle order, until the test side holds at least
    ceil(test_frac * N) records; the remainder is train.
    """
    if not 0 < test_frac < 1:
        raise ValueError(f"test_frac must be in (0, 1), got {test_frac}")
    by_category: dict[NegCategory, dict[str, list[DiagRecord]]] = {}
    for rec in records:
        groups = by_category.setdefault(rec.category, {})
        groups.setdefault(rec.source_id, []).append(rec)

    out: dict[NegCategory, tuple[list[DiagRecord], list[DiagRecord]]] = {}
    for category in CANONICAL_ORDER:
        groups = by_category.get(category)
        if not groups:
            continue
        total = sum(len(g) for g in groups.values())
        target = math.ceil(test_frac * total)
        rng = derive_rng(seed, "split-diagnostics", category.value)
        order = fisher_yates(sorted(groups), rng)
        test: list[DiagRecord] = []
        train: list[DiagRecord] = []
        taken = 0
        for source_id in order:
            group = groups[source_id]
            if taken < target:
                test.extend(group)
                taken += len(group)
            else:
                train.extend(group)
        train.sort(key=lambda r: (r.source_id, r.id))
        test.sort(key=lambda r: (r.source_id, r.id))
        out[category] = (train, test)
    return out


def carve_dev(pool, dev_size: int, seed: int):
    """Carve a label-balanced dev set out of the NLI-train pool.

    Exactly dev_size/3 records per label, sampled without replacement;
    the rest of the pool stays in train, input order preserved.
    """
    if dev_size < 0 or dev_size % 3 != 0:
        raise ValueError(f"dev_size must be a non-negative multiple of 3, got {dev_size}")
    per_label = dev_size // 3
    dev_ids: set[str] = set()
    for label in LABELS:
        ids = [rec.id for rec in pool if rec.label == label]
        if len(ids) < per_label:
            raise InsufficientLabel(label, len(ids), per_label)
        rng = derive_rng(seed, "carve-dev", label)
        dev_ids.update(sample_ids(ids, per_label, rng))
    train = [rec for rec in pool if rec.id not in dev_ids]
    dev = [rec for rec in pool if rec.id in dev_ids]
    return train, dev


def undersample(
    diag_train: dict[NegCategory, list[DiagRecord]], seed: int
) -> dict[NegCategory, list[DiagRecord]]:
    """Reduce every category's train set to the smallest category's size.

    Sampling is without replacement; categories already at the minimum are
    returned unchanged, and kept records preserve their original order.
    """
    if not diag_train or any(not recs for recs in diag_train.values()):
        raise ValueError("undersample needs non-empty train sets")
    minimum = min(len(recs) for recs in diag_train.values())
    out: dict[NegCategory, list[DiagRecord]] = {}
    for category, recs in diag_train.items():
        if len(recs) == minimum:
            out[category] = list(recs)
            continue
        rng = derive_rng(seed, "undersample", category.value)
        keep = sample_ids([rec.id for rec in recs], minimum, rng)
        out[category] = [rec for rec in recs if rec.id in keep]
    return out


# --- stats --------------------------------------------------------------------


def stats_data(splits: CorpusSplits) -> dict:
    """The stats report as a JSON-ready dict."""
    categories = {}
    for category in CANONICAL_ORDER:
        train = splits.diag_train.get(category, [])
        test = splits.diag_test.get(category, [])
        categories[category.value] = {
            "name": category.display_name,
            "train": len(train),
            "test": len(test),
            "extracted": splits.extracted_counts.get(category, 0),
            "augmented": splits.augmented_counts.get(category, 0),
        }
    diag_total = sum(c["train"] + c["test"] for c in categories.values())
    return {
        "seed": splits.seed,
        "rng": RNG_NAME,
        "params": dict(splits.params),
        "wordnet_version": splits.wordnet_version,
        "categories": categories,
        "diagnostic_total": diag_total,
        "nli_train": len(splits.nli_train),
        "nli_dev": len(splits.nli_dev),
        "discarded_negated": splits.discarded_negated,
        "dropped_labels": splits.dropped_labels,
        "unparseable": splits.unparseable,
        "total_records": splits.total_records,
    }


def format_stats(data: dict) -> str:
    """Render the stats dict as an aligned text table."""
    rows = [("Category", "Train", "Test", "Extracted", "Augmented")]
    for code, cat in data["categories"].items():
        rows.append(
            (
                f"{cat['name']} ({code})",
                str(cat["train"]),
                str(cat["test"]),
                str(cat["extracted"]),
                str(cat["augmented"]),
            )
        )
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = []
    for row in rows:
        lines.append(
            "  ".join(
                cell.ljust(widths[i]) if i == 0 else cell.rjust(widths[i])
                for i, cell in enumerate(row)
            ).rstrip()
        )
    lines.insert(1, "-" * len(lines[0]))
    lines.append("")
    lines.append(f"nli_train          {data['nli_train']}")
    lines.append(f"nli_dev            {data['nli_dev']}")
    lines.append(f"discarded_negated  {data['discarded_negated']}")
    lines.append(f"dropped_labels     {data['dropped_labels']}")
    lines.append(f"unparseable        {data['unparseable']}")
    lines.append(f"total_records      {data['total_records']}")
    lines.append(f"seed               {data['seed']}")
    lines.append(f"rng                {data['rng']}")
    lines.append(f"wordnet_version    {data['wordnet_version']}")
    return "\n".join(lines) + "\n"


def stats_report(splits: CorpusSplits) -> tuple[dict, str]:
    """(JSON-ready dict, aligned text table) for a finished run."""
    data = stats_data(splits)
    return data, format_stats(data)
