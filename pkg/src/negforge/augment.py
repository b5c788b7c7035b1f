"""Synonym-substitution augmentation for under-populated categories.

When premise and hypothesis share a root word, each of its same-POS WordNet
synonyms yields one candidate variant: the root's surface form is replaced
in both texts and both trees (form + lemma; the parse structure is reused,
which a one-word same-POS swap preserves). A candidate survives only if the
patched pair still classifies into the source category, so substitution can
never leak a pair across categories.
"""

import re
import warnings
from dataclasses import dataclass, replace

from negforge.corpus import ParsedPair, TaggedPair
from negforge.deptree import DepTree, Token
from negforge.errors import TargetUnreachable
from negforge.rules import CategoryAssignment, NegCategory, assign_trees
from negforge.wordnet import SynsetLexicon


@dataclass(frozen=True)
class AugmentedPair:
    """One synonym-substituted variant of a tagged pair."""

    pair: ParsedPair
    source_id: str
    synonym_used: str
    category: NegCategory
    assignment: CategoryAssignment


def shared_root(pair: ParsedPair) -> tuple[str, Token] | None:
    """The root shared by both spans, premise root checked first.

    Returns (span role, root token) when the root lemma of one span occurs
    among the other span's token lemmas, else None.
    """
    p_root = pair.premise_tree.root
    if p_root.lemma in {t.lemma for t in pair.hypothesis_tree.tokens}:
        return "premise", p_root
    h_root = pair.hypothesis_tree.root
    if h_root.lemma in {t.lemma for t in pair.premise_tree.tokens}:
        return "hypothesis", h_root
    return None


def _match_case(template: str, replacement: str) -> str:
    if template[:1].isupper():
        return replacement[:1].upper() + replacement[1:]
    return replacement


def _rewrite_text(text: str, form: str, synonym: str) -> str:
    pattern = re.compile(rf"\b{re.escape(form)}\b", re.IGNORECASE)
    return pattern.sub(lambda m: _match_case(m.group(0), synonym), text)


def _patch_tree(tree: DepTree, form: str, synonym: str, new_text: str) -> DepTree:
    form_lower = form.lower()
    tokens = tuple(
        replace(tok, form=_match_case(tok.form, synonym), lemma=synonym)
        if tok.form.lower() == form_lower
        else tok
        for tok in tree.tokens
    )
    return DepTree(tokens=tokens, text=new_text)


def augment_pair(tagged: TaggedPair, lex: SynsetLexicon) -> list[AugmentedPair]:
    """All surviving synonym variants of one tagged pair.

    Variants are ordered lexicographically by synonym; the list is empty
    when the spans share no root, the root has no synonyms, or every
    candidate re-classifies away from the source category.
    """
    found = shared_root(tagged.pair)
    if found is None:
        return []
    _, root = found
    out: list[AugmentedPair] = []
    for synonym in sorted(lex.synonyms(root.lemma, root.upos)):
        pair = tagged.pair
        new_premise = _rewrite_text(pair.premise, root.form, synonym)
        new_hypothesis = _rewrite_text(pair.hypothesis, root.form, synonym)
        premise_tree = _patch_tree(pair.premise_tree, root.form, synonym, new_premise)
        hypothesis_tree = _patch_tree(
            pair.hypothesis_tree, root.form, synonym, new_hypothesis
        )
        assignment = assign_trees(premise_tree, hypothesis_tree)
        if assignment is None or assignment.category != tagged.category:
            continue
        variant = ParsedPair(
            id=f"{pair.id}-aug-{synonym}",
            source=pair.source,
            premise=new_premise,
            hypothesis=new_hypothesis,
            label=pair.label,
            premise_tree=premise_tree,
            hypothesis_tree=hypothesis_tree,
        )
        out.append(
            AugmentedPair(
                pair=variant,
                source_id=pair.id,
                synonym_used=synonym,
                category=tagged.category,
                assignment=assignment,
            )
        )
    return out


def augment_category(
    records: list[TaggedPair], lex: SynsetLexicon, target: int
) -> list[AugmentedPair]:
    """Accumulate variants until originals + variants reach ``target``.

    Records are visited in input order and the variant stream is cut off
    mid-pair once the target is met. Running out of records below the
    target raises the TargetUnreachable warning and returns what was
    produced.
    """
    if target <= 0:
        raise ValueError(f"target must be positive, got {target}")
    count = len(records)
    if count >= target:
        return []
    out: list[AugmentedPair] = []
    for tagged in records:
        for variant in augment_pair(tagged, lex):
            out.append(variant)
            if count + len(out) >= target:
                return out
    category = records[0].category.value if records else "?"
    warnings.warn(
        f"category {category}: {count} originals + {len(out)} variants "
        f"< target {target}",
        TargetUnreachable,
        stacklevel=2,
    )
    return out
