"""CoNLL-U parsing, tree accessors, validation errors, round-trips."""

import random
from pathlib import Path

import pytest

from negforge.deptree import DepTree, Token, parse_conllu
from negforge.errors import CyclicHeads, MalformedLine, MultipleRoots, NoRoot

from conftest import EXTRA, TABLE2, load_span, random_tree, tree


def block(rows, comments=()):
    lines = list(comments)
    lines.extend("\t".join(row) for row in rows)
    return "\n".join(lines) + "\n"


def row(idx, form, lemma="_", upos="X", head="0", deprel="dep"):
    return (str(idx), form, lemma, upos, "_", "_", str(head), deprel, "_", "_")


def test_single_token_sentence():
    t = parse_conllu(block([row(1, "no", "no", "DET", 0, "root")]))
    assert len(t) == 1
    assert t.root.index == 1
    assert t.root.form == "no"


def test_ep_premise_fixture_shape():
    t = load_span("EP_premise")
    assert len(t) == 6
    assert [tok.form for tok in t.tokens] == ["yeah", "i", "do", "n't", "know", "why"]
    assert t.root.form == "know"


def test_mutual_heads_cycle():
    b = block([row(1, "a", head=2), row(2, "b", head=1)])
    with pytest.raises(CyclicHeads):
        parse_conllu(b)


def test_self_loop_is_cyclic():
    b = block([row(1, "a", head=0, deprel="root"), row(2, "b", head=2)])
    with pytest.raises(CyclicHeads) as exc:
        parse_conllu(b)
    assert "2" in str(exc.value)


def test_wrong_column_count():
    with pytest.raises(MalformedLine):
        parse_conllu("1\tno\tno\tDET\t0\troot\n")


def test_non_numeric_id_and_head():
    with pytest.raises(MalformedLine):
        parse_conllu(block([("x", "a", "_", "X", "_", "_", "0", "root", "_", "_")]))
    with pytest.raises(MalformedLine) as exc:
        parse_conllu(block([("1", "a", "_", "X", "_", "_", "q", "root", "_", "_")]))
    assert "HEAD" in str(exc.value)


def test_head_out_of_range():
    with pytest.raises(MalformedLine):
        parse_conllu(block([row(1, "a", head=5, deprel="dep")]))


def test_id_out_of_sequence():
    b = block([row(1, "a", head=0, deprel="root"), row(3, "b", head=1)])
    with pytest.raises(MalformedLine):
        parse_conllu(b)


def test_empty_form():
    with pytest.raises(MalformedLine):
        parse_conllu(block([("1", "", "_", "X", "_", "_", "0", "root", "_", "_")]))


def test_no_roots_and_multiple_roots():
    with pytest.raises(NoRoot):
        parse_conllu("# text = nothing here\n")
    b = block([row(1, "a", head=0, deprel="root"), row(2, "b", head=0, deprel="root")])
    with pytest.raises(MultipleRoots):
        parse_conllu(b)


def test_multiword_ranges_and_empty_nodes_skipped():
    b = block(
        [
            ("1-2", "don't", "_", "_", "_", "_", "_", "_", "_", "_"),
            row(1, "do", "do", "AUX", 3, "aux"),
            row(2, "n't", "not", "PART", 3, "advmod"),
            ("2.1", "ghost", "_", "X", "_", "_", "_", "_", "_", "_"),
            row(3, "know", "know", "VERB", 0, "root"),
        ]
    )
    t = parse_conllu(b)
    assert [tok.form for tok in t.tokens] == ["do", "n't", "know"]


def test_lemma_fallback_lowercases_form():
    t = parse_conllu(block([row(1, "Know", "_", "VERB", 0, "root")]))
    assert t.tokens[0].lemma == "know"


def test_lemma_is_lowercased():
    t = parse_conllu(block([row(1, "John", "John", "PROPN", 0, "root")]))
    assert t.tokens[0].lemma == "john"


def test_text_comment_and_fallback():
    t = parse_conllu("# text = hello there\n" + block([row(1, "hello", head=0, deprel="root"), row(2, "there", head=1)]))
    assert t.text == "hello there"
    t2 = parse_conllu(block([row(1, "hi", head=0, deprel="root")]))
    assert t2.text == "hi"


def test_root_accessor():
    single = parse_conllu(block([row(1, "x", head=0, deprel="root")]))
    assert single.root is single.tokens[0]
    assert load_span("EP_premise").root.form == "know"
    assert load_span("L_hypothesis").root.form == "orders"


def test_children_accessor():
    single = parse_conllu(block([row(1, "x", head=0, deprel="root")]))
    assert single.children(1) == []

    ep = load_span("EP_premise")
    forms = [c.form for c in ep.children(ep.root.index)]
    assert "do" in forms and "n't" in forms

    chain = tree(
        ("a", "a", "X", 2, "dep"),
        ("b", "b", "X", 3, "dep"),
        ("c", "c", "X", 0, "root"),
    )
    assert [c.form for c in chain.children(2)] == ["a"]
    assert [c.form for c in chain.children(3)] == ["b"]


def test_children_in_sentence_order():
    ep = load_span("EP_premise")
    kids = ep.children(ep.root.index)
    assert kids == sorted(kids, key=lambda t: t.index)


def all_fixture_paths():
    return sorted(TABLE2.glob("*.conllu")) + sorted(EXTRA.glob("*.conllu"))


@pytest.mark.parametrize("path", all_fixture_paths(), ids=lambda p: p.stem)
def test_every_bundled_fixture_parses(path):
    t = parse_conllu(path.read_text(encoding="utf-8"))
    assert len(t) >= 1


@pytest.mark.parametrize("path", all_fixture_paths(), ids=lambda p: p.stem)
def test_round_trip(path):
    t = parse_conllu(path.read_text(encoding="utf-8"))
    again = parse_conllu(t.to_conllu())
    assert again == t


def test_round_trip_random_trees():
    rng = random.Random(99)
    for _ in range(100):
        t = random_tree(rng)
        assert parse_conllu(t.to_conllu()) == t


def test_root_children_partition():
    rng = random.Random(7)
    trees = [parse_conllu(p.read_text(encoding="utf-8")) for p in all_fixture_paths()]
    trees += [random_tree(rng) for _ in range(50)]
    for t in trees:
        assert sum(1 for tok in t.tokens if tok.head == 0) == 1
        seen = []
        for idx in range(0, len(t) + 1):
            seen.extend(t.children(idx))
        assert sorted(tok.index for tok in seen) == list(range(1, len(t) + 1))


def test_token_validation():
    with pytest.raises(ValueError):
        Token(0, "x", "x", "X", 0, "root")
    with pytest.raises(ValueError):
        Token(1, "", "x", "X", 0, "root")
    with pytest.raises(ValueError):
        Token(1, "x", "x", "X", -1, "root")


def test_deptree_direct_construction_validates():
    with pytest.raises(NoRoot):
        DepTree(tokens=(), text="")
    with pytest.raises(MultipleRoots):
        tree(("a", "a", "X", 0, "root"), ("b", "b", "X", 0, "root"))
    with pytest.raises(CyclicHeads):
        tree(
            ("a", "a", "X", 0, "root"),
            ("b", "b", "X", 3, "dep"),
            ("c", "c", "X", 2, "dep"),
        )
