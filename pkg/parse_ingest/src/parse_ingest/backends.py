"""Parser backend registry.

A backend exposes ``name`` and ``parse_batch(texts) -> list[conllu_block]``.
The output contract is what matters (FORM/LEMMA/UPOS/HEAD/DEPREL columns,
clitic-split tokens, lowercase lemmas), not the tool: any UD-trained
pipeline can slot in. ``heuristic`` is always available; ``stanza:<lang>``
and ``spacy:<model>`` wrap the respective libraries when installed.
"""

from parse_ingest.heuristic import HeuristicBackend


class BackendUnavailable(RuntimeError):
    pass


class StanzaBackend:
    """Adapter over a stanza pipeline (tokenize,pos,lemma,depparse)."""

    def __init__(self, lang: str):
        try:
            import stanza
        except ImportError as exc:
            raise BackendUnavailable(
                "stanza is not installed; `pip install stanza` and download "
                f"the '{lang}' model, or use --model heuristic"
            ) from exc
        self.name = f"stanza:{lang}"
        self._nlp = stanza.Pipeline(
            lang, processors="tokenize,pos,lemma,depparse", verbose=False
        )

    def parse_batch(self, texts):
        out = []
        for text in texts:
            doc = self._nlp(text)
            lines = [f"# text = {text}"]
            idx = 0
            for sentence in doc.sentences:
                for word in sentence.words:
                    idx += 1
                    head = word.head + (idx - word.id) if word.head else 0
                    lemma = (word.lemma or word.text).lower()
                    lines.append(
                        f"{idx}\t{word.text}\t{lemma}\t{word.upos}\t_\t_\t"
                        f"{head}\t{word.deprel}\t_\t_"
                    )
            out.append("\n".join(lines) + "\n")
        return out


class SpacyBackend:
    """Adapter over a spaCy model with a parser and lemmatizer."""

    def __init__(self, model: str):
        try:
            import spacy
        except ImportError as exc:
            raise BackendUnavailable(
                "spacy is not installed; `pip install spacy` and the "
                f"'{model}' model, or use --model heuristic"
            ) from exc
        self.name = f"spacy:{model}"
        self._nlp = spacy.load(model)

    def parse_batch(self, texts):
        out = []
        for doc in self._nlp.pipe(texts):
            lines = [f"# text = {doc.text}"]
            tokens = [t for t in doc if not t.is_space]
            index = {t.i: i + 1 for i, t in enumerate(tokens)}
            for t in tokens:
                head = 0 if t.head is t else index[t.head.i]
                lines.append(
                    f"{index[t.i]}\t{t.text}\t{t.lemma_.lower()}\t{t.pos_}\t_\t_\t"
                    f"{head}\t{t.dep_.lower()}\t_\t_"
                )
            out.append("\n".join(lines) + "\n")
        return out


def get_backend(model: str):
    """Instantiate the backend named by --model."""
    if model == "heuristic":
        return HeuristicBackend()
    if model.startswith("stanza:"):
        return StanzaBackend(model.split(":", 1)[1] or "en")
    if model.startswith("spacy:"):
        return SpacyBackend(model.split(":", 1)[1])
    raise BackendUnavailable(
        f"unknown model {model!r}; expected 'heuristic', 'stanza:<lang>' "
        "or 'spacy:<model>'"
    )
