"""Backoff n-gram language model used as a prior over candidate actions."""
from __future__ import annotations

import math
from collections import Counter
from importlib import resources

from nail.textutils import tokenize

BOS = "<s>"
EOS = "</s>"
DEFAULT_ORDER = 5
BACKOFF = 0.4


class NGramModel:
    """Counts of every n-gram up to ``order`` over boundary-padded sentences.

    Scores use stupid backoff: the relative frequency at the highest order that
    has been observed, multiplied by ``backoff_factor`` once per order dropped.
    """

    def __init__(self, order: int = DEFAULT_ORDER, backoff_factor: float = BACKOFF):
        if order < 2:
            raise ValueError("order must be at least 2")
        if not 0.0 < backoff_factor < 1.0:
            raise ValueError("backoff_factor must lie in (0, 1)")
        self.order = order
        self.backoff_factor = backoff_factor
        self.counts: list[Counter] = [Counter() for _ in range(order + 1)]  # index n -> n-grams
        self.history: list[Counter] = [Counter() for _ in range(order + 1)]  # (n-1)-gram as history
        self.total_tokens = 0
        self._cache: dict[tuple, float] = {}

    @property
    def vocab_size(self) -> int:
        return len(self.counts[1])

    def add_sentence(self, tokens) -> None:
        padded = [BOS] * (self.order - 1) + list(tokens) + [EOS]
        start = self.order - 1
        for i in range(start, len(padded)):
            self.counts[1][(padded[i],)] += 1
            self.total_tokens += 1
            for n in range(2, self.order + 1):
                gram = tuple(padded[i - n + 1:i + 1])
                self.counts[n][gram] += 1
                self.history[n][gram[:-1]] += 1
        self._cache.clear()

    def score(self, context: tuple, token: str) -> float:
        """Unnormalized conditional score S(token | context)."""
        factor = 1.0
        context = tuple(context)[-(self.order - 1):]
        for n in range(len(context) + 1, 1, -1):
            gram = context[-(n - 1):] + (token,)
            c = self.counts[n].get(gram, 0)
            if c:
                return factor * c / self.history[n][gram[:-1]]
            factor *= self.backoff_factor
        c = self.counts[1].get((token,), 0)
        if c:
            return factor * c / self.total_tokens
        return factor / (self.vocab_size + 1)

    def log_prob(self, phrase) -> float:
        toks = tuple(tokenize(phrase) if isinstance(phrase, str) else phrase)
        if not toks:
            return 0.0
        hit = self._cache.get(toks)
        if hit is not None:
            return hit
        context = (BOS,) * (self.order - 1)
        total = 0.0
        for t in toks:
            total += math.log(self.score(context, t))
            context = context[1:] + (t,)
        self._cache[toks] = total
        return total

    def save(self, path) -> None:
        """Sorted ``n-gram<TAB>count`` lines, one block per order."""
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(f"#order\t{self.order}\t{self.backoff_factor!r}\n")
            for n in range(1, self.order + 1):
                fh.write(f"#{n}-grams\n")
                for gram, c in sorted(self.counts[n].items()):
                    fh.write(f"{' '.join(gram)}\t{c}\n")

    @classmethod
    def load(cls, path) -> "NGramModel":
        with open(path, encoding="utf-8") as fh:
            header = fh.readline().rstrip("\n").split("\t")
            if header[0] != "#order":
                raise ValueError(f"{path}: not an n-gram model file")
            model = cls(int(header[1]), float(header[2]))
            n = 0
            for line in fh:
                line = line.rstrip("\n")
                if line.startswith("#") and line.endswith("-grams"):
                    n = int(line[1:].split("-")[0])
                    continue
                gram, c = line.rsplit("\t", 1)
                gram = tuple(gram.split(" "))
                model.counts[n][gram] = int(c)
                if n == 1:
                    model.total_tokens += int(c)
                else:
                    model.history[n][gram[:-1]] += int(c)
        return model


def train_lm(corpus, order: int = DEFAULT_ORDER, backoff_factor: float = BACKOFF) -> NGramModel:
    model = NGramModel(order, backoff_factor)
    n = 0
    for sentence in corpus:
        toks = tokenize(sentence) if isinstance(sentence, str) else list(sentence)
        if toks:
            model.add_sentence(toks)
            n += 1
    if n == 0:
        raise ValueError("cannot train a language model on an empty corpus")
    return model


def log_prob(model: NGramModel, phrase) -> float:
    return model.log_prob(phrase)


def rank_actions(model: NGramModel, candidates) -> list[str]:
    """Sort by descending log-probability, ties broken lexicographically."""
    return sorted(candidates, key=lambda a: (-model.log_prob(a), a))


def load_corpus(path=None) -> list[str]:
    if path is None:
        text = resources.files("nail").joinpath("data/lm_corpus.txt").read_text(encoding="utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return [line for line in text.splitlines() if line.strip()]


_DEFAULT = None


def default_lm() -> NGramModel:
    global _DEFAULT
    if _DEFAULT is None:
        _DEFAULT = train_lm(load_corpus())
    return _DEFAULT
