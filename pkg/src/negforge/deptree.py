"""Dependency trees parsed from CoNLL-U sentence blocks.

Only the columns the category rules inspect are kept: ID, FORM, LEMMA, UPOS,
HEAD, DEPREL. Multiword-token ranges ("3-4") and empty nodes ("3.1") are
skipped so token indices always run 1..n over syntactic words; this is what
makes "immediately before" well defined for the rules. Lemmas are folded to
lowercase, and a missing LEMMA ("_") falls back to the lowercased FORM.
"""

from dataclasses import dataclass
from functools import cached_property

from negforge import kernels
from negforge.errors import CyclicHeads, MultipleRoots, NoRoot


@dataclass(frozen=True)
class Token:
    """One syntactic word. ``head`` is the 1-based index of its governor,
    0 for the sentence root."""

    index: int
    form: str
    lemma: str
    upos: str
    head: int
    deprel: str

    def __post_init__(self):
        if self.index < 1:
            raise ValueError(f"token index must be >= 1, got {self.index}")
        if self.head < 0:
            raise ValueError(f"token head must be >= 0, got {self.head}")
        if not self.form:
            raise ValueError("token form must be non-empty")


@dataclass(frozen=True)
class DepTree:
    """An ordered token sequence with a single-rooted, acyclic head relation."""

    tokens: tuple[Token, ...]
    text: str

    def __post_init__(self):
        n = len(self.tokens)
        if n == 0:
            raise NoRoot("a tree needs at least one token")
        roots = []
        for tok in self.tokens:
            if tok.head > n:
                raise CyclicHeads(
                    f"token {tok.index} ({tok.form!r}) has head {tok.head} "
                    f"outside the sentence"
                )
            if tok.head == 0:
                roots.append(tok.index)
        if not roots:
            raise NoRoot("no token has head 0")
        if len(roots) > 1:
            raise MultipleRoots(f"tokens {roots} all have head 0")
        # every token must reach the root by following heads
        for tok in self.tokens:
            seen = set()
            node = tok.index
            while node != 0:
                if node in seen:
                    raise CyclicHeads(
                        f"token {node} ({self.tokens[node - 1].form!r}) "
                        f"never reaches the root"
                    )
                seen.add(node)
                node = self.tokens[node - 1].head

    def __len__(self):
        return len(self.tokens)

    @cached_property
    def root(self) -> Token:
        """The unique token with head 0."""
        for tok in self.tokens:
            if tok.head == 0:
                return tok
        raise NoRoot("unreachable: validated tree lost its root")

    def children(self, idx: int) -> list[Token]:
        """Tokens whose head is ``idx``, in sentence order."""
        return self._child_map.get(idx, [])

    @cached_property
    def _child_map(self) -> dict[int, list[Token]]:
        out: dict[int, list[Token]] = {}
        for tok in self.tokens:
            out.setdefault(tok.head, []).append(tok)
        return out

    @cached_property
    def columns(self):
        """(forms, lemmas, upos, heads, deprels) lists for the kernels."""
        forms = [t.form for t in self.tokens]
        lemmas = [t.lemma for t in self.tokens]
        upos = [t.upos for t in self.tokens]
        heads = [t.head for t in self.tokens]
        deprels = [t.deprel for t in self.tokens]
        return forms, lemmas, upos, heads, deprels

    def to_conllu(self) -> str:
        """Serialize back to a CoNLL-U block (with a ``# text`` comment)."""
        lines = [f"# text = {self.text}"]
        for t in self.tokens:
            lines.append(
                f"{t.index}\t{t.form}\t{t.lemma}\t{t.upos}\t_\t_\t"
                f"{t.head}\t{t.deprel}\t_\t_"
            )
        return "\n".join(lines) + "\n"


def parse_conllu(block: str) -> DepTree:
    """Parse one CoNLL-U sentence block into a validated DepTree.

    The block is tab-separated 10-column lines; comment lines start with
    ``#``. Raises MalformedLine, NoRoot, MultipleRoots or CyclicHeads,
    naming the offending line or token.
    """
    text, forms, lemmas, upos, heads, deprels = kernels.parse_block(block)
    tokens = tuple(
        Token(i + 1, forms[i], lemmas[i], upos[i], heads[i], deprels[i])
        for i in range(len(forms))
    )
    if text is None:
        text = " ".join(forms)
    return DepTree(tokens=tokens, text=text)
