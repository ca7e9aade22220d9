"""Tokenizer, rule-based noun-phrase chunker and token-set fuzzy similarity."""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from nail.kernels import levenshtein

TOKEN_RE = re.compile(r"[a-z0-9]+(?:['\-][a-z0-9]+)*")
MAX_NOUN_PHRASES = 20

TAGS = frozenset({"noun", "verb", "adjective", "determiner", "preposition", "pronoun", "other"})


def normalize_quotes(text: str) -> str:
    return text.replace("’", "'").replace("‘", "'").replace("“", '"').replace("”", '"')


def tokenize(text: str) -> list[str]:
    """Lowercase word tokens; punctuation is dropped, inner hyphens and apostrophes kept."""
    return TOKEN_RE.findall(normalize_quotes(text).lower())


class PosLexicon:
    """Word -> coarse part-of-speech tags. Unknown words map to the empty set."""

    def __init__(self, entries: dict[str, frozenset[str]]):
        self._entries = {w.lower(): frozenset(t) for w, t in entries.items()}

    @classmethod
    def from_text(cls, text: str) -> "PosLexicon":
        entries = {}
        for lineno, line in enumerate(text.splitlines(), 1):
            if not line.strip() or line.startswith("#"):
                continue
            try:
                word, tags = line.split("\t")
            except ValueError:
                raise ValueError(f"lexicon line {lineno}: expected word<TAB>tags") from None
            tagset = frozenset(t.strip() for t in tags.split(",") if t.strip())
            unknown = tagset - TAGS
            if unknown:
                raise ValueError(f"lexicon line {lineno}: unknown tags {sorted(unknown)}")
            entries[word] = tagset
        return cls(entries)

    @classmethod
    def load(cls, path=None) -> "PosLexicon":
        if path is None:
            return default_lexicon()
        with open(path, encoding="utf-8") as fh:
            return cls.from_text(fh.read())

    def tags(self, word: str) -> frozenset[str]:
        return self._entries.get(word.lower(), frozenset())

    def __contains__(self, word: str) -> bool:
        return word.lower() in self._entries

    def __len__(self) -> int:
        return len(self._entries)


@lru_cache(maxsize=1)
def default_lexicon() -> PosLexicon:
    text = resources.files("nail").joinpath("data/lexicon.tsv").read_text(encoding="utf-8")
    return PosLexicon.from_text(text)


@dataclass(frozen=True)
class NounPhrase:
    text: str
    head: str
    span: tuple[int, int]


def extract_noun_phrases(text: str, lexicon: PosLexicon | None = None) -> list[NounPhrase]:
    """Chunk ``determiner? adjective* noun+`` spans out of narrative text.

    Sentence punctuation closes a chunk. A word missing from the lexicon that
    directly follows a determiner or adjective is taken to be a noun, since games
    invent their own proper nouns. A word that can also be a verb only counts as
    a noun once a chunk has been opened by a determiner or adjective.
    """
    lexicon = lexicon or default_lexicon()
    phrases: list[NounPhrase] = []
    seen = set()
    # Sentence-final punctuation must break chunks, so chunk clause by clause.
    offset = 0
    for clause in re.split(r"[.!?;:,()\n]+", normalize_quotes(text).lower()):
        tokens = TOKEN_RE.findall(clause)
        for start, end in _chunk(tokens, lexicon):
            words = tokens[start:end]
            while words and "determiner" in lexicon.tags(words[0]):
                words = words[1:]
                start += 1
            if not words:
                continue
            np_text = " ".join(words)
            if np_text in seen:
                continue
            seen.add(np_text)
            phrases.append(NounPhrase(np_text, words[-1], (offset + start, offset + end)))
            if len(phrases) >= MAX_NOUN_PHRASES:
                return phrases
        offset += len(tokens)
    return phrases


def _chunk(tokens, lexicon):
    spans = []
    i, n = 0, len(tokens)
    while i < n:
        start = i
        opened = False
        if "determiner" in lexicon.tags(tokens[i]):
            opened = True
            i += 1
        while i < n and _is_modifier(tokens, i, lexicon):
            opened = True
            i += 1
        head_start = i
        while i < n and _is_noun(tokens, i, opened, i > head_start, lexicon):
            i += 1
        if i > head_start:
            spans.append((start, i))
        elif i == start:
            i += 1
    return spans


def _is_modifier(tokens, i, lexicon):
    tags = lexicon.tags(tokens[i])
    if "adjective" not in tags:
        return False
    # An adjective that is also a noun ends the chunk when nothing nominal follows.
    if "noun" in tags:
        nxt = tokens[i + 1] if i + 1 < len(tokens) else None
        if nxt is None:
            return False
        nt = lexicon.tags(nxt)
        return bool(nt & {"noun", "adjective"}) or not nt
    return True


def _is_noun(tokens, i, opened, continuing, lexicon):
    tags = lexicon.tags(tokens[i])
    if not tags:
        return opened and not continuing
    if "noun" not in tags:
        return False
    if tags & {"preposition", "determiner", "pronoun"}:
        return opened and not continuing
    if "verb" in tags:
        if not continuing:
            return opened
        # "trophy case." / "trophy case is" extend; "key lies on" does not.
        nxt = tokens[i + 1] if i + 1 < len(tokens) else None
        return nxt is None or "verb" in lexicon.tags(nxt)
    return True


@lru_cache(maxsize=8192)
def _token_key(text: str) -> str:
    return " ".join(sorted(set(tokenize(text))))


def fuzzy_ratio(a: str, b: str) -> float:
    """Token-set similarity in [0, 1].

    Both strings are reduced to their sorted unique tokens, joined by spaces, and
    compared with 1 - levenshtein / max(len). Equal token sets give exactly 1.0.
    """
    sa = _token_key(a)
    sb = _token_key(b)
    if sa == sb:
        return 1.0
    longest = max(len(sa), len(sb))
    return 1.0 - levenshtein(sa, sb) / longest
