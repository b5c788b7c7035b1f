"""Developmental negation categories and the syntactic rules that detect them.

A span is considered negated when it contains an explicit marker token
("no", "not", "n't", curly-apostrophe "n't"); affixal negation and words
like "never" are deliberately out of scope. A negated span is assigned the
first category, in canonical order, whose rule fires for any marker:

    PO  possession   root is *have*, negation and *do* both modify it
    EX  existence    *there* precedes the marker, marker modifies a
                     noun/determiner/adverb
    L   labeling     sentence starts with *that*/*it*, nominal root with an
                     *is*/'s child
    PR  prohibition  *do* right before the marker, no subject on the root,
                     root not claimed by another category
    I   inability    *can*/*could* right before the marker, marker modifies
                     the root
    EP  epistemic    root is *remember*/*know*/*think* with a *do* child
    R   rejection    root is *like*/*want*, marker modifies the root

The ``rule_*`` functions are independent, readable predicates over a tree;
``classify_span``/``assign_pair`` run the kernel fast path. The two are held
equal by the randomized equivalence tests.
"""

import enum
from dataclasses import dataclass

from negforge import kernels
from negforge.deptree import DepTree

MARKER_FORMS = frozenset({"no", "not", "n't", "n’t"})

PR_EXCLUDED_ROOTS = frozenset({"like", "want", "have", "remember", "know", "think"})

PREMISE = "premise"
HYPOTHESIS = "hypothesis"
BOTH = "both"


class NegCategory(enum.Enum):
    """The seven categories, declared in canonical precedence order."""

    PO = "PO"
    EX = "EX"
    L = "L"
    PR = "PR"
    I = "I"
    EP = "EP"
    R = "R"

    @property
    def display_name(self) -> str:
        return _DISPLAY_NAMES[self]


_DISPLAY_NAMES = {
    NegCategory.PO: "Possession",
    NegCategory.EX: "Existence",
    NegCategory.L: "Labeling",
    NegCategory.PR: "Prohibition",
    NegCategory.I: "Inability",
    NegCategory.EP: "Epistemic",
    NegCategory.R: "Rejection",
}

CANONICAL_ORDER = tuple(NegCategory)

_RANK = {cat: i for i, cat in enumerate(CANONICAL_ORDER)}


def category_rank(cat: NegCategory) -> int:
    """Position in canonical precedence order (PO first)."""
    return _RANK[cat]


@dataclass(frozen=True)
class CategoryAssignment:
    """Pair-level classification with full match provenance.

    ``all_matches`` holds every (span, category) that fired, so alternative
    tie-breaking policies can be replayed offline; ``category`` is the first
    canonical-order category among them and ``matched_span`` says which
    span(s) produced it.
    """

    category: NegCategory
    matched_span: str  # premise | hypothesis | both
    all_matches: frozenset[tuple[str, NegCategory]]
    ambiguous: bool


def find_negation_markers(tree: DepTree) -> list[int]:
    """1-based indices of explicit negation marker tokens, ascending."""
    forms = tree.columns[0]
    return [i + 1 for i in kernels.marker_positions(forms)]


def rule_possession(tree: DepTree, neg_idx: int) -> bool:
    """Root is *have* (by lemma, or surface have/has/had), the marker
    modifies the root, and a *do* child sits on the root."""
    root = tree.root
    if root.lemma != "have" and root.form.lower() not in ("have", "has", "had"):
        return False
    if tree.tokens[neg_idx - 1].head != root.index:
        return False
    return any(child.lemma == "do" for child in tree.children(root.index))


def rule_existence(tree: DepTree, neg_idx: int) -> bool:
    """Some *there* precedes the marker and the marker's head is a noun,
    proper noun, determiner or adverb."""
    if not any(
        tok.form.lower() == "there" and tok.index < neg_idx for tok in tree.tokens
    ):
        return False
    head = tree.tokens[neg_idx - 1].head
    if head == 0:
        return False
    return tree.tokens[head - 1].upos in ("NOUN", "PROPN", "DET", "ADV")


def rule_labeling(tree: DepTree, neg_idx: int) -> bool:
    """Sentence starts with *that*/*it*, root is nominal, and an *is*/'s
    child modifies the root."""
    if tree.tokens[0].form.lower() not in ("that", "it"):
        return False
    root = tree.root
    if root.upos not in ("NOUN", "PROPN"):
        return False
    return any(
        child.form.lower() in ("is", "'s", "’s")
        for child in tree.children(root.index)
    )


def rule_prohibition(tree: DepTree, neg_idx: int) -> bool:
    """*do* immediately before the marker, no subject attached to the root,
    and the root lemma not claimed by another category."""
    if neg_idx < 2 or tree.tokens[neg_idx - 2].lemma != "do":
        return False
    root_idx = tree.root.index
    if any(
        "subj" in tok.deprel and tok.head == root_idx for tok in tree.tokens
    ):
        return False
    return tree.root.lemma not in PR_EXCLUDED_ROOTS


def rule_inability(tree: DepTree, neg_idx: int) -> bool:
    """The marker modifies the root and *can*/*could* sits immediately
    before it. Any grammatical person is allowed."""
    if tree.tokens[neg_idx - 1].head != tree.root.index:
        return False
    return neg_idx >= 2 and tree.tokens[neg_idx - 2].form.lower() in ("can", "could")


def rule_epistemic(tree: DepTree, neg_idx: int) -> bool:
    """Root is *remember*/*know*/*think* with a *do* child."""
    root = tree.root
    if root.lemma not in ("remember", "know", "think"):
        return False
    return any(child.lemma == "do" for child in tree.children(root.index))


def rule_rejection(tree: DepTree, neg_idx: int) -> bool:
    """Root lemma is *like*/*want* and the marker modifies the root."""
    root = tree.root
    if root.lemma not in ("like", "want"):
        return False
    return tree.tokens[neg_idx - 1].head == root.index


RULES = (
    (NegCategory.PO, rule_possession),
    (NegCategory.EX, rule_existence),
    (NegCategory.L, rule_labeling),
    (NegCategory.PR, rule_prohibition),
    (NegCategory.I, rule_inability),
    (NegCategory.EP, rule_epistemic),
    (NegCategory.R, rule_rejection),
)


def categories_from_mask(mask: int) -> list[NegCategory]:
    """Decode a kernel match mask into categories, canonical order."""
    return [cat for i, cat in enumerate(CANONICAL_ORDER) if mask & (1 << i)]


def span_categories(tree: DepTree) -> tuple[int, list[NegCategory]]:
    """(marker count, all categories that fire for the span), kernel path."""
    forms, lemmas, upos, heads, deprels = tree.columns
    n_markers, mask = kernels.match_mask(forms, lemmas, upos, heads, deprels)
    return n_markers, categories_from_mask(mask)


def classify_span(tree: DepTree) -> NegCategory | None:
    """First canonical-order category whose rule fires for any marker,
    None when the span has no marker or no rule fires."""
    _, cats = span_categories(tree)
    return cats[0] if cats else None


def assign_pair(pair) -> CategoryAssignment | None:
    """Classify an NLI pair (anything with premise_tree/hypothesis_tree)."""
    return assign_trees(pair.premise_tree, pair.hypothesis_tree)


def assign_trees(premise_tree: DepTree, hypothesis_tree: DepTree) -> CategoryAssignment | None:
    """Classify an NLI pair from both spans.

    Returns None when neither span yields a category (whether because no
    marker exists, or a marker exists but no rule fires); otherwise the
    first canonical-order category over the union of span matches, with
    provenance.
    """
    _, prem_cats = span_categories(premise_tree)
    _, hyp_cats = span_categories(hypothesis_tree)
    return assignment_from_matches(prem_cats, hyp_cats)


def assignment_from_matches(
    premise_cats, hypothesis_cats
) -> CategoryAssignment | None:
    """Pair-level assignment from the per-span category lists."""
    matches = frozenset(
        [(PREMISE, c) for c in premise_cats]
        + [(HYPOTHESIS, c) for c in hypothesis_cats]
    )
    if not matches:
        return None
    category = min((c for _, c in matches), key=category_rank)
    in_premise = (PREMISE, category) in matches
    in_hypothesis = (HYPOTHESIS, category) in matches
    if in_premise and in_hypothesis:
        matched_span = BOTH
    elif in_premise:
        matched_span = PREMISE
    else:
        matched_span = HYPOTHESIS
    distinct = {c for _, c in matches}
    return CategoryAssignment(
        category=category,
        matched_span=matched_span,
        all_matches=matches,
        ambiguous=len(distinct) >= 2,
    )


def has_negation(tree: DepTree) -> bool:
    """True when the span contains an explicit negation marker."""
    forms = tree.columns[0]
    return bool(kernels.marker_positions(forms))
