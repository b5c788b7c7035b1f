"""The built-in deterministic annotator: shapes, validity, lemmas."""

import pytest

from parse_ingest.backends import BackendUnavailable, get_backend
from parse_ingest.heuristic import HeuristicBackend

from conftest import assert_valid_tree, read_block

BATTERY = [
    "yeah i don't know why",
    "I know why",
    "It is not orders.",
    "Not orders, no.",
    "You probably don't have the right temperatures.",
    "The analysis proves that there is no link between the drugs.",
    "Don't run into the street!",
    "Two people are sitting against a building.",
    "I could not pick out what kind of manner he had.",
    "I didn't want to be overheard.",
    "There is no hope at all.",
    "Go away.",
    "He cannot swim.",
    "A woman plays in a band.",
    "Children are walking.",
    "The cat is awake.",
    "He never eats meat.",
    "What?",
    "Sleeping.",
    "John saw Mary near the old bridge yesterday.",
]


@pytest.fixture(scope="module")
def backend():
    return HeuristicBackend()


def test_epistemic_sentence_shape(backend):
    """Golden check: the clitic comes apart and both auxiliaries hang off
    the root verb."""
    forms, lemmas, upos, heads, deprels = assert_valid_tree(
        backend.parse_one("yeah i don't know why")
    )
    assert forms == ["yeah", "i", "do", "n't", "know", "why"]
    root = heads.index(0) + 1
    assert forms[root - 1] == "know"
    children = {forms[i] for i, h in enumerate(heads) if h == root}
    assert {"do", "n't"} <= children
    assert lemmas[2] == "do"
    assert lemmas[3] == "not"


def test_copular_sentence_has_nominal_root(backend):
    forms, lemmas, upos, heads, deprels = assert_valid_tree(
        backend.parse_one("It is not orders.")
    )
    root = heads.index(0) + 1
    assert forms[root - 1] == "orders"
    assert upos[root - 1] == "NOUN"
    kids = {forms[i] for i, h in enumerate(heads) if h == root}
    assert "is" in kids and "not" in kids


def test_existential_marker_heads_noun(backend):
    forms, lemmas, upos, heads, deprels = assert_valid_tree(
        backend.parse_one("There is no hope at all.")
    )
    no_idx = forms.index("no")
    head_pos = heads[no_idx] - 1
    assert forms[head_pos] == "hope"
    assert upos[head_pos] == "NOUN"
    assert forms.index("There") < no_idx


def test_imperative_has_no_subject(backend):
    forms, lemmas, upos, heads, deprels = assert_valid_tree(
        backend.parse_one("Don't go away.")
    )
    root = heads.index(0) + 1
    assert forms[root - 1] == "go"
    assert not any("subj" in d and heads[i] == root for i, d in enumerate(deprels))
    assert forms[forms.index("n't") - 1] == "Do"


@pytest.mark.parametrize("text", BATTERY)
def test_battery_produces_valid_trees(backend, text):
    block = backend.parse_one(text)
    assert_valid_tree(block)
    assert block.startswith(f"# text = {text}\n")


def test_lemma_spot_checks(backend):
    cases = {
        "temperatures": "temperature",
        "proves": "prove",
        "sitting": "sit",
        "did": "do",
        "was": "be",
        "overheard": "overhear",
        "estimates": "estimate",
        "lowered": "lower",
        "walking": "walk",
    }
    for surface, lemma in cases.items():
        forms, lemmas, _, _, _ = read_block(backend.parse_one(f"they {surface} it"))
        assert lemmas[forms.index(surface)] == lemma, surface


def test_lemmas_are_lowercase(backend):
    for text in BATTERY:
        _, lemmas, _, _, _ = read_block(backend.parse_one(text))
        assert all(l == l.lower() for l in lemmas)


def test_deterministic(backend):
    for text in BATTERY:
        assert backend.parse_one(text) == backend.parse_one(text)


def test_empty_sentence_fails(backend):
    with pytest.raises(ValueError):
        backend.parse_one("   ")


def test_batch_equals_per_sentence(backend):
    assert backend.parse_batch(BATTERY) == [backend.parse_one(t) for t in BATTERY]


# --- backend registry ---------------------------------------------------------


def test_get_backend_heuristic():
    assert get_backend("heuristic").name == "heuristic-v1"


def test_get_backend_unknown():
    with pytest.raises(BackendUnavailable):
        get_backend("charniak")


def test_get_backend_stanza_absent_gives_guidance():
    try:
        import stanza  # noqa: F401
        pytest.skip("stanza installed; adapter availability covered elsewhere")
    except ImportError:
        pass
    with pytest.raises(BackendUnavailable) as exc:
        get_backend("stanza:en")
    assert "heuristic" in str(exc.value)
