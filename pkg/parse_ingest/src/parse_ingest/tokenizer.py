"""Word tokenizer with clitic splitting.

Negation clitics must come apart ("don't" -> "do" + "n't") because the
downstream marker detector matches whole token forms. Contracted auxiliaries
split the same way; hyphenated words stay whole.
"""

import re

APOSTROPHES = "'’"

# longest first so n't wins over 't
_CLITICS = ("n't", "'s", "'re", "'ve", "'ll", "'d", "'m")

_ELLIPSIS = re.compile(r"\.\.+|…")
_PUNCT_CHARS = ".,!?;:\"()[]{}“”"

_SPECIAL = {
    "cannot": ["can", "not"],
    "gonna": ["gon", "na"],
    "wanna": ["wan", "na"],
}


def _split_clitic(word: str) -> list[str]:
    lower = word.lower()
    for clitic in _CLITICS:
        for apo in APOSTROPHES:
            suffix = clitic.replace("'", apo)
            if lower.endswith(suffix) and len(word) > len(suffix):
                head = word[: -len(suffix)]
                return [head, word[len(head):]]
    return [word]


def _split_punct(chunk: str) -> list[str]:
    """Peel punctuation off both ends; ellipses stay single tokens."""
    out = []
    tail = []
    while chunk:
        m = _ELLIPSIS.match(chunk)
        if m:
            out.append(m.group(0))
            chunk = chunk[m.end():]
            continue
        if chunk[0] in _PUNCT_CHARS:
            out.append(chunk[0])
            chunk = chunk[1:]
            continue
        break
    while chunk:
        m = _ELLIPSIS.search(chunk)
        if m and m.end() == len(chunk):
            tail.insert(0, m.group(0))
            chunk = chunk[: m.start()]
            continue
        if chunk[-1] in _PUNCT_CHARS:
            tail.insert(0, chunk[-1])
            chunk = chunk[:-1]
            continue
        break
    if chunk:
        lower = chunk.lower()
        if lower in _SPECIAL:
            split = _SPECIAL[lower]
            out.append(chunk[: len(split[0])])
            out.append(chunk[len(split[0]):])
        else:
            out.extend(_split_clitic(chunk))
    return out + tail


def tokenize(text: str) -> list[str]:
    """Split a sentence into word tokens."""
    tokens = []
    for chunk in text.split():
        tokens.extend(tok for tok in _split_punct(chunk) if tok)
    return tokens
