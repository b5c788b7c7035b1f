"""Shared fixtures: bundled parses, the mini WordNet, corpus files, and a
random-tree generator over the rule vocabularies."""

import json
import random
from pathlib import Path

import pytest

from negforge.corpus import ParsedPair, TaggedPair
from negforge.deptree import DepTree, Token, parse_conllu
from negforge.rules import assign_trees
from negforge.wordnet import load_wordnet

FIXTURES = Path(__file__).parent / "fixtures"
TABLE2 = FIXTURES / "table2"
EXTRA = FIXTURES / "extra"
MINI_WORDNET = FIXTURES / "mini_wordnet"

CATEGORY_CODES = ("PO", "EX", "L", "PR", "I", "EP", "R")

# gold labels for the bundled pair fixtures (arbitrary but fixed)
PAIR_LABELS = {
    "PO": "contradiction",
    "EX": "neutral",
    "L": "entailment",
    "PR": "neutral",
    "I": "neutral",
    "EP": "contradiction",
    "R": "neutral",
    "goaway": "entailment",
}


def tree(*tokens, text=None) -> DepTree:
    """Build a DepTree from (form, lemma, upos, head, deprel) tuples."""
    toks = tuple(
        Token(i + 1, form, lemma, upos, head, deprel)
        for i, (form, lemma, upos, head, deprel) in enumerate(tokens)
    )
    return DepTree(tokens=toks, text=text or " ".join(t.form for t in toks))


def load_span(name: str) -> DepTree:
    path = TABLE2 / f"{name}.conllu"
    if not path.is_file():
        path = EXTRA / f"{name}.conllu"
    return parse_conllu(path.read_text(encoding="utf-8"))


def span_block(name: str) -> str:
    path = TABLE2 / f"{name}.conllu"
    if not path.is_file():
        path = EXTRA / f"{name}.conllu"
    return path.read_text(encoding="utf-8")


def make_pair(pid, premise_tree, hypothesis_tree, label="neutral", source="fixture"):
    return ParsedPair(
        id=pid,
        source=source,
        premise=premise_tree.text,
        hypothesis=hypothesis_tree.text,
        label=label,
        premise_tree=premise_tree,
        hypothesis_tree=hypothesis_tree,
    )


def make_tagged(pid, premise_tree, hypothesis_tree, label="neutral"):
    pair = make_pair(pid, premise_tree, hypothesis_tree, label)
    assignment = assign_trees(premise_tree, hypothesis_tree)
    assert assignment is not None, f"fixture pair {pid} did not classify"
    return TaggedPair(pair=pair, assignment=assignment)


@pytest.fixture(scope="session")
def table2_trees() -> dict[str, DepTree]:
    out = {}
    for code in CATEGORY_CODES:
        out[f"{code}_premise"] = load_span(f"{code}_premise")
        out[f"{code}_hypothesis"] = load_span(f"{code}_hypothesis")
    return out


@pytest.fixture(scope="session")
def goaway_trees() -> dict[str, DepTree]:
    return {
        "premise": load_span("goaway_premise"),
        "hypothesis": load_span("goaway_hypothesis"),
    }


@pytest.fixture(scope="session")
def mini_lexicon():
    return load_wordnet(MINI_WORDNET)


# --- negation-free / discard pairs built in code --------------------------------


def _simple_clause(subject, verb, verb_lemma, obj=None, obj_lemma=None):
    toks = [("The", "the", "DET", 2, "det"), (subject, subject, "NOUN", 3, "nsubj")]
    root = 3
    toks.append((verb, verb_lemma, "VERB", 0, "root"))
    if obj:
        toks.append((obj, obj_lemma or obj, "NOUN", root, "obj"))
    toks.append((".", ".", "PUNCT", root, "punct"))
    return tree(*toks)


def negation_free_pairs() -> list[ParsedPair]:
    """Six marker-free pairs, two per label, plus one with only "never"."""
    man_sleeping = tree(
        ("A", "a", "DET", 2, "det"),
        ("man", "man", "NOUN", 4, "nsubj"),
        ("is", "be", "AUX", 4, "aux"),
        ("sleeping", "sleep", "VERB", 0, "root"),
        (".", ".", "PUNCT", 4, "punct"),
    )
    person_sleeping = tree(
        ("A", "a", "DET", 2, "det"),
        ("person", "person", "NOUN", 4, "nsubj"),
        ("is", "be", "AUX", 4, "aux"),
        ("sleeping", "sleep", "VERB", 0, "root"),
        (".", ".", "PUNCT", 4, "punct"),
    )
    dog_runs = tree(
        ("The", "the", "DET", 2, "det"),
        ("dog", "dog", "NOUN", 3, "nsubj"),
        ("runs", "run", "VERB", 0, "root"),
        ("fast", "fast", "ADV", 3, "advmod"),
        (".", ".", "PUNCT", 3, "punct"),
    )
    dog_fast = tree(
        ("The", "the", "DET", 2, "det"),
        ("dog", "dog", "NOUN", 4, "nsubj"),
        ("is", "be", "AUX", 4, "cop"),
        ("fast", "fast", "ADJ", 0, "root"),
        (".", ".", "PUNCT", 4, "punct"),
    )
    woman_guitar = _simple_clause("woman", "plays", "play", "guitar")
    woman_band = tree(
        ("The", "the", "DET", 2, "det"),
        ("woman", "woman", "NOUN", 3, "nsubj"),
        ("plays", "play", "VERB", 0, "root"),
        ("in", "in", "ADP", 6, "case"),
        ("a", "a", "DET", 6, "det"),
        ("band", "band", "NOUN", 3, "obl"),
        (".", ".", "PUNCT", 3, "punct"),
    )
    children_walking = tree(
        ("Children", "child", "NOUN", 3, "nsubj"),
        ("are", "be", "AUX", 3, "aux"),
        ("walking", "walk", "VERB", 0, "root"),
        (".", ".", "PUNCT", 3, "punct"),
    )
    children_school = tree(
        ("Children", "child", "NOUN", 2, "nsubj"),
        ("walk", "walk", "VERB", 0, "root"),
        ("to", "to", "ADP", 4, "case"),
        ("school", "school", "NOUN", 2, "obl"),
        (".", ".", "PUNCT", 2, "punct"),
    )
    cat_sleeps = _simple_clause("cat", "sleeps", "sleep")
    cat_awake = tree(
        ("The", "the", "DET", 2, "det"),
        ("cat", "cat", "NOUN", 4, "nsubj"),
        ("is", "be", "AUX", 4, "cop"),
        ("awake", "awake", "ADJ", 0, "root"),
        (".", ".", "PUNCT", 4, "punct"),
    )
    never_eats = tree(
        ("He", "he", "PRON", 3, "nsubj"),
        ("never", "never", "ADV", 3, "advmod"),
        ("eats", "eat", "VERB", 0, "root"),
        ("meat", "meat", "NOUN", 3, "obj"),
        (".", ".", "PUNCT", 3, "punct"),
    )
    eats_daily = tree(
        ("He", "he", "PRON", 2, "nsubj"),
        ("eats", "eat", "VERB", 0, "root"),
        ("meat", "meat", "NOUN", 2, "obj"),
        ("daily", "daily", "ADV", 2, "advmod"),
        (".", ".", "PUNCT", 2, "punct"),
    )
    return [
        make_pair("nf-1", man_sleeping, person_sleeping, "entailment"),
        make_pair("nf-2", dog_runs, dog_fast, "entailment"),
        make_pair("nf-3", woman_guitar, woman_band, "neutral"),
        make_pair("nf-4", children_walking, children_school, "neutral"),
        make_pair("nf-5", cat_sleeps, cat_awake, "contradiction"),
        make_pair("nf-6", never_eats, eats_daily, "contradiction"),
    ]


def discard_pair() -> ParsedPair:
    """Both spans carry a marker that no rule matches."""
    just_no = tree(
        ("No", "no", "INTJ", 0, "root"),
        (".", ".", "PUNCT", 1, "punct"),
    )
    not_here = tree(
        ("Not", "not", "PART", 2, "advmod"),
        ("here", "here", "ADV", 0, "root"),
        (".", ".", "PUNCT", 2, "punct"),
    )
    return make_pair("disc-1", just_no, not_here, "neutral")


def pair_record(pair: ParsedPair) -> dict:
    return {
        "id": pair.id,
        "source": pair.source,
        "premise": pair.premise,
        "hypothesis": pair.hypothesis,
        "label": pair.label,
        "premise_conllu": pair.premise_tree.to_conllu(),
        "hypothesis_conllu": pair.hypothesis_tree.to_conllu(),
    }


def corpus_records() -> list[dict]:
    """The bundled fixture corpus: 7 category pairs, the imperative pair,
    six negation-free pairs, one discard pair (15 records)."""
    records = []
    for code in CATEGORY_CODES:
        pair = make_pair(
            f"table2-{code}",
            load_span(f"{code}_premise"),
            load_span(f"{code}_hypothesis"),
            PAIR_LABELS[code],
        )
        records.append(pair_record(pair))
    goaway = make_pair(
        "extra-goaway",
        load_span("goaway_premise"),
        load_span("goaway_hypothesis"),
        PAIR_LABELS["goaway"],
    )
    records.append(pair_record(goaway))
    records.extend(pair_record(p) for p in negation_free_pairs())
    records.append(pair_record(discard_pair()))
    return records


def write_corpus(path: Path, records=None) -> Path:
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        for record in records if records is not None else corpus_records():
            handle.write(json.dumps(record, ensure_ascii=False) + "\n")
    return path


@pytest.fixture(scope="session")
def corpus_file(tmp_path_factory) -> Path:
    return write_corpus(tmp_path_factory.mktemp("corpus") / "pairs.jsonl")


# --- random trees over the rule vocabularies -------------------------------------

VOCAB = [
    ("no", "no", "DET"),
    ("not", "not", "PART"),
    ("n't", "not", "PART"),
    ("n’t", "not", "PART"),
    ("there", "there", "PRON"),
    ("do", "do", "AUX"),
    ("did", "do", "AUX"),
    ("does", "do", "AUX"),
    ("can", "can", "AUX"),
    ("could", "could", "AUX"),
    ("is", "be", "AUX"),
    ("'s", "be", "AUX"),
    ("have", "have", "VERB"),
    ("has", "have", "VERB"),
    ("had", "have", "VERB"),
    ("know", "know", "VERB"),
    ("think", "think", "VERB"),
    ("remember", "remember", "VERB"),
    ("like", "like", "VERB"),
    ("want", "want", "VERB"),
    ("that", "that", "DET"),
    ("it", "it", "PRON"),
    ("It", "it", "PRON"),
    ("orders", "order", "NOUN"),
    ("link", "link", "NOUN"),
    ("dog", "dog", "NOUN"),
    ("people", "people", "NOUN"),
    ("John", "john", "PROPN"),
    ("run", "run", "VERB"),
    ("go", "go", "VERB"),
    ("away", "away", "ADV"),
    ("quickly", "quickly", "ADV"),
    ("the", "the", "DET"),
    ("he", "he", "PRON"),
    (".", ".", "PUNCT"),
]

DEPRELS = [
    "nsubj",
    "nsubj:pass",
    "csubj",
    "obj",
    "obl",
    "advmod",
    "aux",
    "det",
    "cop",
    "nmod",
    "mark",
    "conj",
    "discourse",
    "punct",
    "expl",
]


def random_tree(rng: random.Random, max_tokens: int = 12) -> DepTree:
    """A random valid tree over the rule vocabularies.

    Heads are drawn along a random permutation (each token attaches to an
    earlier one), which guarantees a single root and acyclicity.
    """
    n = rng.randint(1, max_tokens)
    choices = [rng.choice(VOCAB) for _ in range(n)]
    order = list(range(1, n + 1))
    rng.shuffle(order)
    heads = [0] * (n + 1)
    for k in range(1, n):
        heads[order[k]] = order[rng.randrange(k)]
    tokens = []
    for i in range(n):
        form, lemma, upos = choices[i]
        idx = i + 1
        head = heads[idx]
        deprel = "root" if head == 0 else rng.choice(DEPRELS)
        tokens.append((form, lemma, upos, head, deprel))
    return tree(*tokens)
