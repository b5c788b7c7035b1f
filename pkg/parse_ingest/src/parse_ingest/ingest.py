"""Batch annotation: raw NLI records -> parsed-pairs JSONL + manifest."""

import json
from dataclasses import dataclass
from pathlib import Path

from parse_ingest import __version__
from parse_ingest.records import discover_files, read_raw_file


@dataclass
class IngestStats:
    records: int = 0
    unparseable: int = 0
    per_file: dict = None

    def __post_init__(self):
        if self.per_file is None:
            self.per_file = {}


def _record_out(raw, premise_conllu, hypothesis_conllu):
    out = {
        "id": raw.pair_id,
        "source": raw.source,
        "premise": raw.sentence1,
        "hypothesis": raw.sentence2,
        "label": raw.gold_label,
    }
    if premise_conllu is None or hypothesis_conllu is None:
        out["unparseable"] = True
    else:
        out["premise_conllu"] = premise_conllu
        out["hypothesis_conllu"] = hypothesis_conllu
    return out


def _parse_batch_with_fallback(backend, texts):
    """One block per text; a failed span becomes None instead of aborting."""
    try:
        return backend.parse_batch(list(texts))
    except Exception:
        out = []
        for text in texts:
            try:
                out.extend(backend.parse_batch([text]))
            except Exception:
                out.append(None)
        return out


def run_ingest(snli_dir, mnli_dir, out_path, backend, batch_size: int = 64) -> IngestStats:
    """Annotate every record of the given distributions, input order kept.

    Per-span parser failures produce a placeholder record flagged
    ``unparseable`` (the corpus builder counts and skips those); the
    sidecar manifest records the backend, batch size and counts.
    """
    if batch_size < 1:
        raise ValueError(f"batch_size must be >= 1, got {batch_size}")
    out_path = Path(out_path)
    stats = IngestStats()
    with open(out_path, "w", encoding="utf-8", newline="\n") as sink:
        for path, dataset, split in discover_files(snli_dir, mnli_dir):
            file_count = 0
            batch = []
            for raw in read_raw_file(path, dataset, split):
                batch.append(raw)
                if len(batch) >= batch_size:
                    file_count += _flush(batch, backend, sink, stats)
                    batch = []
            if batch:
                file_count += _flush(batch, backend, sink, stats)
            stats.per_file[f"{dataset}/{path.name}"] = file_count
    _write_manifest(out_path, backend, batch_size, stats)
    return stats


def _flush(batch, backend, sink, stats) -> int:
    texts = []
    for raw in batch:
        texts.append(raw.sentence1)
        texts.append(raw.sentence2)
    blocks = _parse_batch_with_fallback(backend, texts)
    for i, raw in enumerate(batch):
        premise, hypothesis = blocks[2 * i], blocks[2 * i + 1]
        record = _record_out(raw, premise, hypothesis)
        if record.get("unparseable"):
            stats.unparseable += 1
        stats.records += 1
        sink.write(json.dumps(record, ensure_ascii=False) + "\n")
    return len(batch)


def _write_manifest(out_path: Path, backend, batch_size: int, stats: IngestStats):
    manifest = {
        "tool": "parse-ingest",
        "version": __version__,
        "model": backend.name,
        "batch_size": batch_size,
        "records": stats.records,
        "unparseable": stats.unparseable,
        "files": stats.per_file,
    }
    manifest_path = out_path.with_name(out_path.name + ".manifest.json")
    with open(manifest_path, "w", encoding="utf-8", newline="\n") as handle:
        json.dump(manifest, handle, ensure_ascii=False, indent=2)
        handle.write("\n")
