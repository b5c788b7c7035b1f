"""Shared helpers for parse_ingest tests."""

from pathlib import Path

FIXTURES = Path(__file__).parent / "fixtures"
SNLI_DIR = FIXTURES / "snli"
MNLI_DIR = FIXTURES / "mnli"

# 5 + 2 + 2 snli, 3 + 2 + 2 mnli
TOTAL_RECORDS = 16


def read_block(block: str):
    """Minimal local CoNLL-U reader: (forms, lemmas, upos, heads, deprels).

    Deliberately independent of the corpus-builder package: these tests
    validate the wire format on its own terms.
    """
    forms, lemmas, upos, heads, deprels = [], [], [], [], []
    for line in block.splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        cols = line.split("\t")
        assert len(cols) == 10, f"not 10 columns: {line!r}"
        forms.append(cols[1])
        lemmas.append(cols[2])
        upos.append(cols[3])
        heads.append(int(cols[6]))
        deprels.append(cols[7])
    return forms, lemmas, upos, heads, deprels


def assert_valid_tree(block: str):
    forms, lemmas, upos, heads, deprels = read_block(block)
    n = len(forms)
    assert n >= 1
    roots = [i for i, h in enumerate(heads) if h == 0]
    assert len(roots) == 1, f"roots={roots} in {forms}"
    for i, h in enumerate(heads):
        assert 0 <= h <= n
        # walk to root, bounded by n steps
        steps = 0
        node = i + 1
        while node != 0:
            node = heads[node - 1]
            steps += 1
            assert steps <= n, f"cycle at token {i + 1} in {forms}"
    return forms, lemmas, upos, heads, deprels
