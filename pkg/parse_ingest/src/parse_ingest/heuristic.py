"""Deterministic rule-based UD-style annotator.

A stand-in for a neural pipeline when none is installed: closed-class
lexicons plus suffix heuristics for UPOS, a small irregular table plus
suffix stripping for lemmas, and forward-only head attachment (every
non-root token attaches to a later token or to the root), which makes
single-rootedness and acyclicity structural guarantees rather than hopes.
Useful for smoke runs and schema validation; not a substitute for a real
parser at corpus scale.
"""

import re

from parse_ingest.tokenizer import tokenize

NAME = "heuristic-v1"

_PUNCT_RE = re.compile(r"^[^\w]+$", re.UNICODE)
_NUM_RE = re.compile(r"^\d+([.,]\d+)*$")

DETS = {"a", "an", "the", "this", "these", "those", "no", "every", "each",
        "some", "any", "what", "which", "that"}
PRONS = {"i", "you", "he", "she", "it", "we", "they", "me", "him", "her",
         "us", "them", "who", "whom", "there", "something", "nothing",
         "anything", "everything", "someone", "anyone", "everyone", "one"}
POSS_PRONS = {"my", "your", "his", "its", "our", "their", "hers", "mine"}
AUX_FORMS = {"am", "is", "are", "was", "were", "be", "been", "being",
             "do", "does", "did",
             "will", "would", "can", "could", "shall", "should", "may",
             "might", "must"}
BE_FORMS = {"am", "is", "are", "was", "were", "be", "been", "being", "'s",
            "’s", "'re", "’re", "'m", "’m"}
PARTS = {"to", "not", "n't", "n’t", "na"}
ADPS = {"in", "on", "at", "of", "for", "with", "against", "near", "into",
        "onto", "from", "by", "about", "over", "under", "between",
        "through", "during", "without", "across", "behind", "beyond",
        "around", "off", "out", "up", "down", "inside", "outside", "toward",
        "towards", "upon", "within"}
CCONJS = {"and", "or", "but", "nor", "so", "yet"}
SCONJS = {"because", "although", "while", "if", "since", "unless",
          "whether", "when", "whenever", "before", "after"}
INTJS = {"yeah", "yes", "oh", "wow", "hey", "uh", "um", "hmm", "hello",
         "hi", "please", "okay", "ok"}
ADVS = {"probably", "very", "too", "also", "always", "never", "often",
        "sometimes", "now", "then", "here", "why", "where", "how", "fast",
        "away", "daily", "thoughtfully", "again", "soon", "still", "just",
        "quite", "rather", "maybe", "perhaps", "together", "back"}
ADJS = {"right", "ideal", "unfortunate", "good", "bad", "big", "small",
        "old", "new", "young", "interesting", "awake", "asleep", "same",
        "different", "sure", "happy", "sad", "tall", "short", "red",
        "blue", "green", "many", "few", "several", "busy", "ready",
        "little", "long", "high", "low", "early", "late", "hard", "easy"}
VERBS = {"know", "think", "remember", "want", "like", "run", "go", "sit",
         "stand", "pick", "observe", "lower", "overhear", "prove", "pool",
         "miss", "eat", "play", "walk", "sleep", "see", "say", "make",
         "get", "take", "come", "give", "look", "find", "tell", "ask",
         "work", "seem", "feel", "try", "leave", "call", "read", "write",
         "sing", "dance", "swim", "jump", "buy", "sell", "help", "talk",
         "speak", "hear", "watch", "live", "stay", "move", "stop", "start",
         "open", "close", "cut", "hit", "hold", "keep", "let", "put",
         "set", "win", "lose", "pay", "meet", "learn", "teach", "grow",
         "fall", "rise", "send", "build", "break", "wear", "drive", "ride",
         "fly", "draw", "throw", "catch", "carry", "clean", "cook", "wash",
         "smile", "laugh", "cry", "wait", "need", "use", "turn", "show",
         "have", "point", "ski", "surf", "climb", "race", "rest", "shop"}
WORD_NUMS = {"zero", "one", "two", "three", "four", "five", "six", "seven",
             "eight", "nine", "ten", "eleven", "twelve", "twenty", "thirty",
             "hundred", "thousand", "million"}

IRREGULAR_LEMMAS = {
    "n't": "not", "n’t": "not",
    "'s": "be", "’s": "be", "'re": "be", "’re": "be",
    "'m": "be", "’m": "be", "'ve": "have", "’ve": "have",
    "'ll": "will", "’ll": "will", "'d": "would", "’d": "would",
    "am": "be", "is": "be", "are": "be", "was": "be", "were": "be",
    "been": "be", "being": "be",
    "does": "do", "did": "do", "done": "do", "doing": "do",
    "has": "have", "had": "have", "having": "have",
    "went": "go", "gone": "go", "ran": "run", "sat": "sit", "saw": "see",
    "seen": "see", "got": "get", "gave": "give", "given": "give",
    "took": "take", "taken": "take", "came": "come", "made": "make",
    "knew": "know", "known": "know", "thought": "think", "said": "say",
    "told": "tell", "found": "find", "felt": "feel", "left": "leave",
    "heard": "hear", "met": "meet", "kept": "keep", "held": "hold",
    "stood": "stand", "built": "build", "broke": "break", "wore": "wear",
    "drove": "drive", "rode": "ride", "flew": "fly", "drew": "draw",
    "threw": "throw", "caught": "catch", "won": "win", "lost": "lose",
    "paid": "pay", "grew": "grow", "fell": "fall", "rose": "rise",
    "sent": "send", "ate": "eat", "eaten": "eat", "sang": "sing",
    "swam": "swim", "overheard": "overhear", "spoke": "speak",
    "children": "child", "people": "people", "men": "man",
    "women": "woman", "feet": "foot", "teeth": "tooth", "mice": "mouse",
}

_VOWELS = "aeiou"


def _tag_tokens(forms: list[str]) -> list[str]:
    tags = []
    for i, form in enumerate(forms):
        lf = form.lower()
        if _PUNCT_RE.match(form):
            tags.append("PUNCT")
        elif _NUM_RE.match(form) or lf in WORD_NUMS:
            tags.append("NUM")
        elif lf in PARTS:
            tags.append("PART")
        elif lf in AUX_FORMS or lf in BE_FORMS:
            tags.append("AUX")
        elif lf in POSS_PRONS:
            tags.append("PRON")
        elif lf in PRONS:
            tags.append("PRON")
        elif lf in CCONJS:
            tags.append("CCONJ")
        elif lf in SCONJS:
            tags.append("SCONJ")
        elif lf in ADPS:
            tags.append("ADP")
        elif lf in DETS:
            tags.append("DET")
        elif lf in INTJS:
            tags.append("INTJ")
        elif lf in ADVS or (lf.endswith("ly") and len(lf) > 3):
            tags.append("ADV")
        elif lf in ADJS:
            tags.append("ADJ")
        elif lf in VERBS:
            tags.append("VERB")
        elif IRREGULAR_LEMMAS.get(lf) in VERBS:
            tags.append("VERB")
        elif lf.endswith(("ing", "ed")) and len(lf) > 4:
            tags.append("VERB")
        elif lf.endswith("s") and not lf.endswith("ss") and lf[:-1] in VERBS:
            tags.append("VERB")
        elif any(lf.endswith(suf) for suf in
                 ("ful", "ous", "ive", "able", "ible", "ish", "less")):
            tags.append("ADJ")
        elif i > 0 and form[:1].isupper():
            tags.append("PROPN")
        else:
            tags.append("NOUN")

    # context fixes
    for i, form in enumerate(forms):
        lf = form.lower()
        if lf == "no":
            nxt = tags[i + 1] if i + 1 < len(tags) else None
            tags[i] = "DET" if nxt in ("NOUN", "PROPN", "ADJ", "NUM") else "INTJ"
        elif lf == "that":
            nxt = forms[i + 1].lower() if i + 1 < len(forms) else ""
            if nxt in PRONS or nxt in ("there",):
                tags[i] = "SCONJ"
        elif (
            tags[i] == "VERB"
            and lf.endswith("ing")
            and i > 0
            and tags[i - 1] in ("DET", "ADJ", "NUM")
        ):
            tags[i] = "NOUN"  # "a building", "the shopping ..."
    return tags


def _undouble(stem: str) -> str:
    if (
        len(stem) >= 3
        and stem[-1] == stem[-2]
        and stem[-1] not in _VOWELS + "sl"
    ):
        return stem[:-1]
    return stem


def _lemma(form: str, upos: str) -> str:
    lf = form.lower()
    if lf in IRREGULAR_LEMMAS:
        return IRREGULAR_LEMMAS[lf]
    if upos in ("PUNCT", "NUM", "PRON", "DET", "ADP", "PART", "CCONJ",
                "SCONJ", "INTJ", "ADV", "ADJ", "PROPN", "AUX"):
        return lf
    if upos == "VERB":
        if lf.endswith("ied") and len(lf) > 4:
            return lf[:-3] + "y"
        if lf.endswith("ed") and len(lf) > 3:
            if lf[:-1] in VERBS:  # observed -> observe
                return lf[:-1]
            return _undouble(lf[:-2])
        if lf.endswith("ing") and len(lf) > 4:
            stem = _undouble(lf[:-3])
            if stem + "e" in VERBS:  # racing -> race
                return stem + "e"
            return stem
        if lf.endswith("ies") and len(lf) > 4:
            return lf[:-3] + "y"
        if lf.endswith("es") and lf[:-2] in VERBS:
            return lf[:-2]
        if lf.endswith("s") and not lf.endswith("ss") and len(lf) > 2:
            return lf[:-1]
        return lf
    if upos == "NOUN":
        if lf.endswith("ies") and len(lf) > 4:
            return lf[:-3] + "y"
        if lf.endswith(("ses", "xes", "zes", "ches", "shes")):
            return lf[:-2]
        if lf.endswith("s") and not lf.endswith(("ss", "us", "is")) and len(lf) > 2:
            return lf[:-1]
        return lf
    return lf


def _next_with(tags, start, wanted):
    for j in range(start + 1, len(tags)):
        if tags[j] in wanted:
            return j
    return -1


def _pick_root(forms, tags) -> int:
    for i, tag in enumerate(tags):
        if tag == "VERB":
            return i
    # copular clause: predicate after a be-auxiliary
    for i, form in enumerate(forms):
        if form.lower() in BE_FORMS:
            j = _next_with(tags, i, ("NOUN", "PROPN", "ADJ", "PRON", "NUM"))
            if j >= 0:
                return j
    for wanted in (("NOUN", "PROPN"), ("ADJ",), ("PRON",)):
        for i, tag in enumerate(tags):
            if tag in wanted:
                return i
    return 0


def _attach(forms, tags, root: int) -> list[tuple[int, str]]:
    """(head, deprel) per token, 1-based heads, 0 for the root.

    Non-root tokens attach either forward or to the root, so the result is
    acyclic by construction.
    """
    n = len(forms)
    out: list[tuple[int, str]] = [(0, "root")] * n
    root_nominal = tags[root] in ("NOUN", "PROPN", "PRON", "ADJ", "NUM")
    have_subj = False
    have_obj = False
    for i in range(n):
        if i == root:
            continue
        tag = tags[i]
        lf = forms[i].lower()
        if tag == "PUNCT":
            out[i] = (root + 1, "punct")
        elif tag in ("DET", "NUM"):
            j = _next_with(tags, i, ("NOUN", "PROPN"))
            head = j if j >= 0 else root
            out[i] = (head + 1, "det" if tag == "DET" else "nummod")
        elif tag == "ADJ":
            j = _next_with(tags, i, ("NOUN", "PROPN"))
            out[i] = (j + 1, "amod") if j >= 0 else (root + 1, "dep")
        elif tag == "ADP":
            j = _next_with(tags, i, ("NOUN", "PROPN", "PRON"))
            out[i] = (j + 1, "case") if j >= 0 else (root + 1, "dep")
        elif tag == "AUX":
            j = _next_with(tags, i, ("VERB",))
            if j >= 0:
                out[i] = (j + 1, "aux")
            else:
                out[i] = (root + 1, "cop" if root_nominal else "aux")
        elif tag == "PART":
            if lf == "to":
                j = _next_with(tags, i, ("VERB",))
                out[i] = (j + 1, "mark") if j >= 0 else (root + 1, "mark")
            else:
                j = _next_with(tags, i, ("VERB",))
                out[i] = (j + 1, "advmod") if j >= 0 else (root + 1, "advmod")
        elif tag == "PRON":
            if lf in POSS_PRONS:
                j = _next_with(tags, i, ("NOUN", "PROPN"))
                out[i] = (j + 1, "nmod:poss") if j >= 0 else (root + 1, "dep")
            elif lf == "there":
                out[i] = (root + 1, "expl")
            elif i < root and not have_subj:
                out[i] = (root + 1, "nsubj")
                have_subj = True
            elif i > root and not have_obj:
                out[i] = (root + 1, "obj")
                have_obj = True
            else:
                out[i] = (root + 1, "obl")
        elif tag in ("NOUN", "PROPN"):
            if i + 1 < n and tags[i + 1] in ("NOUN", "PROPN") and i + 1 != root:
                out[i] = (i + 2, "compound")
            elif i < root:
                if not have_subj:
                    out[i] = (root + 1, "nsubj")
                    have_subj = True
                else:
                    out[i] = (root + 1, "nmod")
            else:
                preceded_by_adp = i > 0 and tags[i - 1] == "ADP" or (
                    i > 1 and tags[i - 1] == "DET" and tags[i - 2] == "ADP"
                )
                if preceded_by_adp:
                    out[i] = (root + 1, "obl")
                elif not have_obj:
                    out[i] = (root + 1, "obj")
                    have_obj = True
                else:
                    out[i] = (root + 1, "obl")
        elif tag == "VERB":
            back = forms[max(0, i - 2):i]
            if any(b.lower() == "to" for b in back):
                out[i] = (root + 1, "xcomp")
            elif i > root:
                out[i] = (root + 1, "conj")
            else:
                out[i] = (root + 1, "csubj")
        elif tag == "ADV":
            j = _next_with(tags, i, ("VERB",))
            out[i] = (j + 1, "advmod") if j >= 0 else (root + 1, "advmod")
        elif tag == "INTJ":
            out[i] = (root + 1, "discourse")
        elif tag == "CCONJ":
            j = _next_with(tags, i, ("VERB", "NOUN", "PROPN", "ADJ"))
            out[i] = (j + 1, "cc") if j >= 0 else (root + 1, "cc")
        elif tag == "SCONJ":
            j = _next_with(tags, i, ("VERB",))
            out[i] = (j + 1, "mark") if j >= 0 else (root + 1, "mark")
        else:
            out[i] = (root + 1, "dep")
    return out


class HeuristicBackend:
    """Pluggable-parser interface: parse_batch(texts) -> CoNLL-U blocks."""

    name = NAME

    def parse_batch(self, texts: list[str]) -> list[str]:
        return [self.parse_one(text) for text in texts]

    def parse_one(self, text: str) -> str:
        forms = tokenize(text)
        if not forms:
            raise ValueError("no tokens")
        tags = _tag_tokens(forms)
        root = _pick_root(forms, tags)
        heads = _attach(forms, tags, root)
        lines = [f"# text = {text}"]
        for i, form in enumerate(forms):
            head, deprel = heads[i]
            lemma = _lemma(form, tags[i])
            lines.append(
                f"{i + 1}\t{form}\t{lemma}\t{tags[i]}\t_\t_\t{head}\t{deprel}\t_\t_"
            )
        return "\n".join(lines) + "\n"
