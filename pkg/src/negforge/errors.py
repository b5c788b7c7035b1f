"""Exception types shared across the package.

Everything user-facing derives from NegforgeError so the CLI can map data
problems to exit code 1 and keep exit code 2 for genuine bugs.
"""


class NegforgeError(Exception):
    """Base class for all input/data errors raised by negforge."""


# --- CoNLL-U / dependency tree errors ---------------------------------------

class MalformedLine(NegforgeError):
    """A CoNLL-U token line that cannot be parsed (column count, bad ID/HEAD)."""


class NoRoot(NegforgeError):
    """Sentence block with no token lines (nothing can be the root)."""


class MultipleRoots(NegforgeError):
    """More than one token with HEAD = 0."""


class CyclicHeads(NegforgeError):
    """Following head links from some token never reaches the root."""


# --- WordNet database errors -------------------------------------------------

class MissingFile(NegforgeError):
    """A required WordNet index/data file is absent."""


class MalformedIndexLine(NegforgeError):
    """An index.<pos> line that does not follow the WordNet 3.x layout."""


class MalformedDataLine(NegforgeError):
    """A data.<pos> line that does not follow the WordNet 3.x layout."""


# --- corpus ingestion / splitting errors --------------------------------------

class MalformedRecord(NegforgeError):
    """A parsed-pairs JSONL line with missing or unusable fields."""

    def __init__(self, message, path=None, line_no=None):
        where = ""
        if path is not None:
            where = f"{path}:{line_no}: " if line_no is not None else f"{path}: "
        super().__init__(where + message)
        self.path = path
        self.line_no = line_no


class DuplicateId(NegforgeError):
    """The same pair id occurred twice in the ingested files."""


class InsufficientLabel(NegforgeError):
    """A label pool is too small for the requested balanced dev carve."""

    def __init__(self, label, available, needed):
        super().__init__(
            f"label {label!r} has only {available} records, need {needed}"
        )
        self.label = label
        self.available = available
        self.needed = needed


class TargetUnreachable(UserWarning):
    """Augmentation ran out of source pairs below the requested target.

    A warning, not an error: the run continues and the shortfall is
    reported in the stats.
    """
