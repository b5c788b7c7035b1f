"""Synonym lookup over WordNet 3.x plain-text database files.

Reads index.{noun,verb,adj,adv} and data.{noun,verb,adj,adv} directly; no
exception lists, no sense ranking. All senses of a lemma are unioned.
Multi-word lemmas (underscored in the files) are dropped because a one-token
substitution must not change token geometry, and a lemma is never reported
as its own synonym.
"""

import re
from dataclasses import dataclass
from pathlib import Path

from negforge.errors import MalformedDataLine, MalformedIndexLine, MissingFile

POS_KEYS = ("noun", "verb", "adj", "adv")

# UPOS tags map to the WordNet part-of-speech files; anything else has no
# synonyms by definition.
UPOS_TO_POS = {
    "NOUN": "noun",
    "PROPN": "noun",
    "VERB": "verb",
    "AUX": "verb",
    "ADJ": "adj",
    "ADV": "adv",
}

_POS_CHARS = {"noun": "n", "verb": "v", "adj": "a", "adv": "r"}

# adjective syntactic markers like beautiful(ip)
_ADJ_MARKER = re.compile(r"\([a-z]+\)$")

_VERSION_RE = re.compile(r"WordNet (\d+\.\d+)")

_EMPTY: frozenset[str] = frozenset()


@dataclass(frozen=True)
class SynsetLexicon:
    """Immutable (lemma, pos) -> synonym set mapping."""

    entries: dict[tuple[str, str], frozenset[str]]
    version: str = "unknown"
    source: str = ""

    def synonyms(self, lemma: str, upos: str) -> frozenset[str]:
        """Single-word same-POS synonyms of ``lemma``, excluding itself.

        ``upos`` is a universal POS tag; unmapped tags (PUNCT, DET, ...)
        yield the empty set, as do unknown lemmas.
        """
        pos = UPOS_TO_POS.get(upos)
        if pos is None:
            return _EMPTY
        return self.entries.get((lemma.lower(), pos), _EMPTY)


def synonyms(lex: SynsetLexicon, lemma: str, upos: str) -> frozenset[str]:
    return lex.synonyms(lemma, upos)


def load_wordnet(directory) -> SynsetLexicon:
    """Build a SynsetLexicon from a WordNet 3.x database directory.

    Raises MissingFile when an index/data file is absent, and
    MalformedIndexLine / MalformedDataLine (with file and line number) when
    a line does not follow the documented layout.
    """
    directory = Path(directory)
    entries: dict[tuple[str, str], frozenset[str]] = {}
    version = "unknown"

    for pos in POS_KEYS:
        index_path = directory / f"index.{pos}"
        data_path = directory / f"data.{pos}"
        for path in (index_path, data_path):
            if not path.is_file():
                raise MissingFile(f"WordNet file not found: {path}")

        synset_words, file_version = _read_data_file(data_path, pos)
        if version == "unknown" and file_version:
            version = file_version

        for lemma, offsets in _read_index_file(index_path, pos):
            union: set[str] = set()
            for off in offsets:
                union.update(synset_words.get(off, ()))
            union.discard(lemma)
            if union:
                entries[(lemma, pos)] = frozenset(union)
            else:
                entries.setdefault((lemma, pos), frozenset())

    return SynsetLexicon(entries=entries, version=version, source=str(directory))


def _is_header(line: str) -> bool:
    # license header lines in the Princeton files start with two spaces
    return line.startswith("  ") or not line.strip()


def _read_data_file(path: Path, pos: str):
    """offset -> single-word lowercase lemmas for every synset in the file."""
    words_by_offset: dict[str, list[str]] = {}
    version = None
    with open(path, encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, 1):
            if _is_header(line):
                if version is None:
                    found = _VERSION_RE.search(line)
                    if found:
                        version = found.group(1)
                continue
            fields = line.split()
            if len(fields) < 6:
                raise MalformedDataLine(f"{path}:{line_no}: too few fields")
            offset = fields[0]
            if len(offset) != 8 or not offset.isdigit():
                raise MalformedDataLine(
                    f"{path}:{line_no}: bad synset offset {offset!r}"
                )
            try:
                w_cnt = int(fields[3], 16)
            except ValueError:
                raise MalformedDataLine(
                    f"{path}:{line_no}: bad word count {fields[3]!r}"
                ) from None
            if w_cnt < 1 or len(fields) < 4 + 2 * w_cnt:
                raise MalformedDataLine(
                    f"{path}:{line_no}: word count {w_cnt} does not fit the line"
                )
            words = []
            for i in range(w_cnt):
                word = _ADJ_MARKER.sub("", fields[4 + 2 * i]).lower()
                if "_" not in word and word:
                    words.append(word)
            words_by_offset[offset] = words
    return words_by_offset, version


def _read_index_file(path: Path, pos: str):
    """Yield (lemma, synset offsets) for every entry in index.<pos>."""
    pos_char = _POS_CHARS[pos]
    out = []
    with open(path, encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, 1):
            if _is_header(line):
                continue
            fields = line.split()
            if len(fields) < 7:
                raise MalformedIndexLine(f"{path}:{line_no}: too few fields")
            lemma = fields[0].lower()
            if fields[1] != pos_char and not (pos == "adj" and fields[1] == "s"):
                raise MalformedIndexLine(
                    f"{path}:{line_no}: POS {fields[1]!r} does not match {pos}"
                )
            try:
                synset_cnt = int(fields[2])
                p_cnt = int(fields[3])
            except ValueError:
                raise MalformedIndexLine(
                    f"{path}:{line_no}: bad synset/pointer count"
                ) from None
            offsets_start = 4 + p_cnt + 2  # skip ptr symbols, sense_cnt, tagsense_cnt
            offsets = fields[offsets_start : offsets_start + synset_cnt]
            if len(offsets) != synset_cnt:
                raise MalformedIndexLine(
                    f"{path}:{line_no}: expected {synset_cnt} offsets, "
                    f"found {len(offsets)}"
                )
            if "_" in lemma:
                continue
            out.append((lemma, offsets))
    return out
