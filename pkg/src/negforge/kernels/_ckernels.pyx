# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled tagging kernels. Contract-identical to pykernels."""

from negforge.errors import CyclicHeads, MalformedLine, MultipleRoots, NoRoot

NAME = "cython"

MARKER_FORMS = ("no", "not", "n't", "n’t")

CAT_PO = 0
CAT_EX = 1
CAT_L = 2
CAT_PR = 3
CAT_I = 4
CAT_EP = 5
CAT_R = 6

cdef tuple _NOMINAL_UPOS = ("NOUN", "PROPN")
cdef tuple _EX_HEAD_UPOS = ("NOUN", "PROPN", "DET", "ADV")
cdef tuple _IS_FORMS = ("is", "'s", "’s")
cdef tuple _PR_EXCLUDED_ROOTS = ("like", "want", "have", "remember", "know", "think")
cdef tuple _MARKERS = MARKER_FORMS
cdef tuple _CAN_COULD = ("can", "could")
cdef tuple _THAT_IT = ("that", "it")
cdef tuple _HAVE_FORMS = ("have", "has", "had")
cdef tuple _EP_ROOTS = ("remember", "know", "think")
cdef tuple _R_ROOTS = ("like", "want")


def parse_block(str block):
    """Parse one CoNLL-U sentence block into column lists.

    Same contract as pykernels.parse_block.
    """
    cdef str text = None
    cdef list forms = []
    cdef list lemmas = []
    cdef list upos = []
    cdef list heads = []
    cdef list deprels = []
    cdef str raw, line, tok_id, form, lemma, rest
    cdef list cols
    cdef int idx, head, n, i, node, start

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
        tok_id = <str>cols[0]
        if "-" in tok_id or "." in tok_id:
            continue
        try:
            idx = int(tok_id)
        except ValueError:
            raise MalformedLine(f"non-numeric ID {tok_id!r}: {line!r}") from None
        if idx != len(forms) + 1:
            raise MalformedLine(
                f"token ID {idx} out of sequence (expected {len(forms) + 1})"
            )
        form = <str>cols[1]
        if not form:
            raise MalformedLine(f"empty FORM on token {idx}")
        try:
            head = int(<str>cols[6])
        except ValueError:
            raise MalformedLine(
                f"non-numeric HEAD {cols[6]!r} on token {idx}"
            ) from None
        if head < 0:
            raise MalformedLine(f"negative HEAD on token {idx}")
        lemma = <str>cols[2]
        forms.append(form)
        lemmas.append(form.lower() if lemma == "_" or not lemma else lemma.lower())
        upos.append(cols[3])
        heads.append(head)
        deprels.append(cols[7])

    n = len(forms)
    if n == 0:
        raise NoRoot("sentence block contains no token lines")
    for i in range(n):
        if <int>heads[i] > n:
            raise MalformedLine(
                f"HEAD {heads[i]} of token {i + 1} ({forms[i]!r}) out of range"
            )

    cdef list state = [0] * (n + 1)
    cdef list path
    state[0] = 2
    for start in range(1, n + 1):
        if state[start]:
            continue
        path = []
        node = start
        while <int>state[node] == 0:
            state[node] = 1
            path.append(node)
            node = <int>heads[node - 1]
        if <int>state[node] == 1:
            raise CyclicHeads(
                f"token {node} ({forms[node - 1]!r}) never reaches the root"
            )
        for i in range(len(path)):
            state[<int>path[i]] = 2

    cdef list roots = []
    for i in range(n):
        if <int>heads[i] == 0:
            roots.append(i + 1)
    if len(roots) > 1:
        raise MultipleRoots(f"tokens {roots} all have HEAD = 0")

    return text, forms, lemmas, upos, heads, deprels


def marker_positions(list forms):
    """0-based positions of explicit negation markers, ascending."""
    cdef list out = []
    cdef int i
    cdef str form
    for i in range(len(forms)):
        form = <str>forms[i]
        if form.lower() in _MARKERS:
            out.append(i)
    return out


def match_mask(list forms, list lemmas, list upos, list heads, list deprels):
    """Evaluate all category predicates over every marker.

    Same contract as pykernels.match_mask.
    """
    cdef list markers = marker_positions(forms)
    if not markers:
        return 0, 0

    cdef int n = len(forms)
    cdef int root_pos = 0
    cdef int i, j, m, k
    for i in range(n):
        if <int>heads[i] == 0:
            root_pos = i
            break
    cdef int root_idx = root_pos + 1
    cdef str root_lemma = <str>lemmas[root_pos]

    cdef bint do_child = False
    cdef bint is_child = False
    cdef bint subj_on_root = False
    for j in range(n):
        if <int>heads[j] == root_idx:
            if <str>lemmas[j] == "do":
                do_child = True
            if (<str>forms[j]).lower() in _IS_FORMS:
                is_child = True
            if "subj" in <str>deprels[j]:
                subj_on_root = True

    cdef int first_there = -1
    for j in range(n):
        if (<str>forms[j]).lower() == "there":
            first_there = j
            break

    cdef int mask = 0
    cdef str root_form = (<str>forms[root_pos]).lower()
    cdef bint root_is_have = root_lemma == "have" or root_form in _HAVE_FORMS

    if root_is_have and do_child:
        for k in range(len(markers)):
            m = <int>markers[k]
            if <int>heads[m] == root_idx:
                mask |= 1 << CAT_PO
                break
    if first_there >= 0:
        for k in range(len(markers)):
            m = <int>markers[k]
            if (
                m > first_there
                and <int>heads[m] != 0
                and <str>upos[<int>heads[m] - 1] in _EX_HEAD_UPOS
            ):
                mask |= 1 << CAT_EX
                break
    if (
        (<str>forms[0]).lower() in _THAT_IT
        and <str>upos[root_pos] in _NOMINAL_UPOS
        and is_child
    ):
        mask |= 1 << CAT_L
    if not subj_on_root and root_lemma not in _PR_EXCLUDED_ROOTS:
        for k in range(len(markers)):
            m = <int>markers[k]
            if m >= 1 and <str>lemmas[m - 1] == "do":
                mask |= 1 << CAT_PR
                break
    for k in range(len(markers)):
        m = <int>markers[k]
        if (
            <int>heads[m] == root_idx
            and m >= 1
            and (<str>forms[m - 1]).lower() in _CAN_COULD
        ):
            mask |= 1 << CAT_I
            break
    if root_lemma in _EP_ROOTS and do_child:
        mask |= 1 << CAT_EP
    if root_lemma in _R_ROOTS:
        for k in range(len(markers)):
            m = <int>markers[k]
            if <int>heads[m] == root_idx:
                mask |= 1 << CAT_R
                break

    return len(markers), mask
