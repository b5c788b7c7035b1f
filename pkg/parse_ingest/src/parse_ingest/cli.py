"""parse-ingest command line interface."""

import argparse
import sys
import traceback

from parse_ingest.backends import BackendUnavailable, get_backend
from parse_ingest.ingest import run_ingest
from parse_ingest.records import SchemaError


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parse-ingest",
        description="Annotate SNLI/MNLI pairs with dependency parses and "
        "write parsed-pairs JSONL (plus a .manifest.json sidecar).",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument("--snli", metavar="DIR", help="SNLI 1.0 distribution directory")
    parser.add_argument("--mnli", metavar="DIR", help="MultiNLI 1.0 distribution directory")
    parser.add_argument("--out", required=True, metavar="FILE", help="output JSONL path")
    parser.add_argument(
        "--model",
        default="stanza:en",
        help="parser backend: stanza:<lang>, spacy:<model>, or heuristic",
    )
    parser.add_argument("--batch-size", type=int, default=64, help="sentences per batch")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if not args.snli and not args.mnli:
        print("parse-ingest: error: need --snli and/or --mnli", file=sys.stderr)
        return 1
    try:
        backend = get_backend(args.model)
        stats = run_ingest(args.snli, args.mnli, args.out, backend, args.batch_size)
    except (BackendUnavailable, SchemaError, OSError, ValueError) as exc:
        print(f"parse-ingest: error: {exc}", file=sys.stderr)
        return 1
    except Exception:
        traceback.print_exc()
        return 2
    print(
        f"wrote {stats.records} records ({stats.unparseable} unparseable) to {args.out}",
        file=sys.stderr,
    )
    return 0


if __name__ == "__main__":
    sys.exit(main())
