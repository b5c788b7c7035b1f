"""Pure-Python tagging kernels.

Same contract as the compiled module (`_ckernels`): parse one CoNLL-U
sentence block into column lists and compute the category match mask for a
span. Kept dependency-free so it can always be imported as a fallback.
"""

from negforge.errors import CyclicHeads, MalformedLine, MultipleRoots, NoRoot

NAME = "python"

# Explicit negation marker surface forms (lowercased comparison).
MARKER_FORMS = ("no", "not", "n't", "n’t")

# Category bit positions, canonical precedence order.
CAT_PO, CAT_EX, CAT_L, CAT_PR, CAT_I, CAT_EP, CAT_R = range(7)

_NOMINAL_UPOS = ("NOUN", "PROPN")
_EX_HEAD_UPOS = ("NOUN", "PROPN", "DET", "ADV")
_IS_FORMS = ("is", "'s", "’s")
_PR_EXCLUDED_ROOTS = ("like", "want", "have", "remember", "know", "think")


def parse_block(block):
    """Parse one CoNLL-U sentence block into column lists.

    Returns (text, forms, lemmas, upos, heads, deprels) where ``text`` is
    the ``# text`` comment value or None. Lemmas are lowercased; a ``_``
    lemma falls back to the lowercased form. Multiword-token ranges and
    empty nodes are skipped. Raises MalformedLine / NoRoot / MultipleRoots /
    CyclicHeads on invalid input.
    """
    text = None
    forms = []
    lemmas = []
    upos = []
    heads = []
    deprels = []

    for raw in block.split("\n"):
        line = raw.rstrip("\r")
        if not line.strip():
            continue
        if line.startswith("#"):
            if text is None and line[1:].lstrip().startswith("text"):
                rest = line[1:].lstrip()[4:].lstrip()
                if rest.startswith("="):
                    text = rest[1:].strip()
            continue
        cols = line.split("\t")
        if len(cols) != 10:
            raise MalformedLine(
                f"expected 10 tab-separated columns, got {len(cols)}: {line!r}"
            )
        tok_id = cols[0]
        if "-" in tok_id or "." in tok_id:
            # multiword-token range or empty node: not a syntactic word
            continue
        try:
            idx = int(tok_id)
        except ValueError:
            raise MalformedLine(f"non-numeric ID {tok_id!r}: {line!r}") from None
        if idx != len(forms) + 1:
            raise MalformedLine(
                f"token ID {idx} out of sequence (expected {len(forms) + 1})"
            )
        form = cols[1]
        if not form:
            raise MalformedLine(f"empty FORM on token {idx}")
        try:
            head = int(cols[6])
        except ValueError:
            raise MalformedLine(
                f"non-numeric HEAD {cols[6]!r} on token {idx}"
            ) from None
        if head < 0:
            raise MalformedLine(f"negative HEAD on token {idx}")
        lemma = cols[2]
        forms.append(form)
        lemmas.append(form.lower() if lemma == "_" or not lemma else lemma.lower())
        upos.append(cols[3])
        heads.append(head)
        deprels.append(cols[7])

    n = len(forms)
    if n == 0:
        raise NoRoot("sentence block contains no token lines")
    for i in range(n):
        if heads[i] > n:
            raise MalformedLine(
                f"HEAD {heads[i]} of token {i + 1} ({forms[i]!r}) out of range"
            )

    # Cycle check before root-count so a rootless cycle reports as cyclic.
    state = [0] * (n + 1)  # 0 unknown, 1 on current path, 2 reaches root
    state[0] = 2
    for start in range(1, n + 1):
        if state[start]:
            continue
        path = []
        node = start
        while state[node] == 0:
            state[node] = 1
            path.append(node)
            node = heads[node - 1]
        if state[node] == 1:
            raise CyclicHeads(
                f"token {node} ({forms[node - 1]!r}) never reaches the root"
            )
        for visited in path:
            state[visited] = 2

    roots = [i + 1 for i in range(n) if heads[i] == 0]
    if len(roots) > 1:
        raise MultipleRoots(f"tokens {roots} all have HEAD = 0")
    # len(roots) == 0 is impossible here: a rootless head relation is cyclic.

    return text, forms, lemmas, upos, heads, deprels


def marker_positions(forms):
    """0-based positions of explicit negation markers, ascending."""
    out = []
    for i, form in enumerate(forms):
        if form.lower() in MARKER_FORMS:
            out.append(i)
    return out


def match_mask(forms, lemmas, upos, heads, deprels):
    """Evaluate all category predicates over every marker.

    Returns (marker_count, mask) where bit ``c`` of ``mask`` is set when
    category ``c`` fires for at least one marker. mask == 0 with markers
    present means "negated but unmatched".
    """
    markers = marker_positions(forms)
    if not markers:
        return 0, 0

    n = len(forms)
    root_pos = 0
    for i in range(n):
        if heads[i] == 0:
            root_pos = i
            break
    root_idx = root_pos + 1
    root_lemma = lemmas[root_pos]

    do_child = False
    is_child = False
    subj_on_root = False
    for j in range(n):
        if heads[j] == root_idx:
            if lemmas[j] == "do":
                do_child = True
            if forms[j].lower() in _IS_FORMS:
                is_child = True
            if "subj" in deprels[j]:
                subj_on_root = True

    first_there = -1
    for j in range(n):
        if forms[j].lower() == "there":
            first_there = j
            break

    mask = 0
    root_form = forms[root_pos].lower()
    root_is_have = root_lemma == "have" or root_form in ("have", "has", "had")

    if root_is_have and do_child:
        for m in markers:
            if heads[m] == root_idx:
                mask |= 1 << CAT_PO
                break
    if first_there >= 0:
        for m in markers:
            if (
                m > first_there
                and heads[m] != 0
                and upos[heads[m] - 1] in _EX_HEAD_UPOS
            ):
                mask |= 1 << CAT_EX
                break
    if (
        forms[0].lower() in ("that", "it")
        and upos[root_pos] in _NOMINAL_UPOS
        and is_child
    ):
        mask |= 1 << CAT_L
    if not subj_on_root and root_lemma not in _PR_EXCLUDED_ROOTS:
        for m in markers:
            if m >= 1 and lemmas[m - 1] == "do":
                mask |= 1 << CAT_PR
                break
    for m in markers:
        if heads[m] == root_idx and m >= 1 and forms[m - 1].lower() in ("can", "could"):
            mask |= 1 << CAT_I
            break
    if root_lemma in ("remember", "know", "think") and do_child:
        mask |= 1 << CAT_EP
    if root_lemma in ("like", "want"):
        for m in markers:
            if heads[m] == root_idx:
                mask |= 1 << CAT_R
                break

    return len(markers), mask
