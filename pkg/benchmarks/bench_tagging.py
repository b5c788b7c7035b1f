"""Benchmark the tagging hot loop: compiled kernels vs pure Python.

Synthesizes a parsed-pairs corpus by cycling the bundled fixtures, then
times (a) the bare kernel calls (CoNLL-U column parse + match mask) and
(b) the full per-record tag path (JSON decode, validation, assignment) for
each available backend.

Usage: python benchmarks/bench_tagging.py [--pairs N]
"""

import argparse
import json
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from negforge import corpus, kernels
from negforge.kernels import pykernels

try:
    from negforge.kernels import _ckernels
except ImportError:
    _ckernels = None

from conftest import corpus_records


def build_lines(n_pairs: int) -> list[str]:
    base = corpus_records()
    lines = []
    i = 0
    while len(lines) < n_pairs:
        record = dict(base[i % len(base)])
        record["id"] = f"{record['id']}-bench{i}"
        lines.append(json.dumps(record, ensure_ascii=False))
        i += 1
    return lines


def bench_kernel(backend, blocks, repeats=3) -> float:
    best = 0.0
    for _ in range(repeats):
        t0 = time.perf_counter()
        for block in blocks:
            cols = backend.parse_block(block)
            backend.match_mask(*cols[1:])
        elapsed = time.perf_counter() - t0
        rate = len(blocks) / 2 / elapsed  # two blocks per pair
        best = max(best, rate)
    return best


def bench_tag_path(backend, lines, repeats=3) -> float:
    saved = (kernels.parse_block, kernels.match_mask, kernels.marker_positions)
    kernels.parse_block = backend.parse_block
    kernels.match_mask = backend.match_mask
    kernels.marker_positions = backend.marker_positions
    try:
        best = 0.0
        for _ in range(repeats):
            t0 = time.perf_counter()
            for i, line in enumerate(lines):
                corpus._tag_payload((line, "bench", i))
            elapsed = time.perf_counter() - t0
            best = max(best, len(lines) / elapsed)
        return best
    finally:
        kernels.parse_block, kernels.match_mask, kernels.marker_positions = saved


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--pairs", type=int, default=4000, help="corpus size")
    args = parser.parse_args()

    lines = build_lines(args.pairs)
    blocks = []
    for line in lines:
        record = json.loads(line)
        blocks.append(record["premise_conllu"])
        blocks.append(record["hypothesis_conllu"])

    backends = [("python", pykernels)]
    if _ckernels is not None:
        backends.append(("cython", _ckernels))

    print(f"corpus: {args.pairs} pairs ({len(blocks)} spans)")
    print(f"{'backend':8s}  {'kernel pairs/s':>15s}  {'tag pairs/s':>15s}")
    rates = {}
    for name, backend in backends:
        kernel_rate = bench_kernel(backend, blocks)
        tag_rate = bench_tag_path(backend, lines)
        rates[name] = tag_rate
        print(f"{name:8s}  {kernel_rate:15,.0f}  {tag_rate:15,.0f}")
    if len(rates) == 2:
        print(f"speedup (tag path): {rates['cython'] / rates['python']:.2f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
