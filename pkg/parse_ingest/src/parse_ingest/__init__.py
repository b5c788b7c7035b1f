"""parse_ingest: turn raw SNLI/MNLI JSONL into parsed-pairs JSONL.

Each premise and hypothesis gets a CoNLL-U block (FORM, LEMMA, UPOS, HEAD,
DEPREL) from a pluggable parser backend; output order always equals input
order and a sidecar manifest records the backend and batch size used.
"""

__version__ = "0.1.0"
