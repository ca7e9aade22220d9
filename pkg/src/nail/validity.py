"""Validity detector: hashed bag-of-n-grams logistic classifier plus a rule layer."""
from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass, field
from importlib import resources

import numpy as np

from nail.kernels import hash_buckets
from nail.textutils import normalize_quotes, tokenize

VALID_THRESHOLD = 0.5
RULE_FAILURE_P = 0.01
DEFAULT_DIM = 1 << 16
DEFAULT_SEED = 1337

CANONICAL_FAILURES = frozenset({
    "you can't go that way.",
    "i didn't understand that sentence.",
    "that's not a verb i recognise.",
    "that's not a verb i recognize.",
})
UNKNOWN_WORD_RE = re.compile(r"""^i don't know the word ["']?([^"'\s]+?)["']?\.$""", re.IGNORECASE)


@dataclass(frozen=True)
class LabeledResponse:
    text: str
    label: str  # "success" or "failure"

    def __post_init__(self):
        if not self.text:
            raise ValueError("LabeledResponse text must be non-empty")
        if self.label not in ("success", "failure"):
            raise ValueError(f"unknown label {self.label!r}")


@dataclass
class ValidityModel:
    feature_dim: int = DEFAULT_DIM
    hash_seed: int = DEFAULT_SEED
    weights: np.ndarray = field(default=None, repr=False)
    bias: float = 0.0
    trained: bool = False
    held_out_accuracy: float | None = None

    def __post_init__(self):
        if self.weights is None:
            self.weights = np.zeros(self.feature_dim, dtype=np.float64)

    def save(self, path) -> None:
        """Text dump: header line with dim, seed and bias, then one weight per line."""
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(f"{self.feature_dim}\t{self.hash_seed}\t{float(self.bias)!r}\n")
            for w in self.weights:
                fh.write(f"{float(w)!r}\n")

    @classmethod
    def load(cls, path) -> "ValidityModel":
        with open(path, encoding="utf-8") as fh:
            dim, seed, bias = fh.readline().split("\t")
            weights = np.array([float(x) for x in fh], dtype=np.float64)
        if len(weights) != int(dim):
            raise ValueError(f"{path}: expected {dim} weights, found {len(weights)}")
        return cls(int(dim), int(seed), weights, float(bias), trained=True)


def featurize(text: str, feature_dim: int = DEFAULT_DIM, hash_seed: int = DEFAULT_SEED) -> dict[int, float]:
    """Unigram + bigram hashed features, averaged. Returns a sparse {bucket: weight} map."""
    if feature_dim < (1 << 12):
        raise ValueError("feature_dim must be at least 4096")
    toks = tokenize(text)
    feats = toks + [f"{a} {b}" for a, b in zip(toks, toks[1:])]
    if not feats:
        return {}
    share = 1.0 / len(feats)
    vec: dict[int, float] = {}
    for b in hash_buckets(feats, feature_dim, hash_seed):
        vec[b] = vec.get(b, 0.0) + share
    return vec


def _sigmoid(z: float) -> float:
    if z >= 0:
        return 1.0 / (1.0 + math.exp(-z))
    e = math.exp(z)
    return e / (1.0 + e)


def _score(model: ValidityModel, vec: dict[int, float]) -> float:
    z = model.bias
    w = model.weights
    for b, v in vec.items():
        z += w[b] * v
    return _sigmoid(z)


def split_corpus(corpus, seed: int, holdout: float = 0.2):
    """Seeded shuffle then split into (train, held-out)."""
    items = list(corpus)
    random.Random(seed).shuffle(items)
    cut = int(round(len(items) * (1.0 - holdout)))
    return items[:cut], items[cut:]


def train(corpus, epochs: int = 20, learning_rate: float = 0.5, seed: int = 0,
          feature_dim: int = DEFAULT_DIM, hash_seed: int = DEFAULT_SEED,
          held_out=None) -> ValidityModel:
    """Fit logistic regression by SGD over a seeded shuffle of the corpus.

    If ``held_out`` is given, its accuracy is stored on the model.
    """
    corpus = list(corpus)
    labels = {ex.label for ex in corpus}
    if labels != {"success", "failure"}:
        raise ValueError("training corpus must contain both success and failure examples")
    model = ValidityModel(feature_dim, hash_seed)
    data = [(featurize(ex.text, feature_dim, hash_seed), 1.0 if ex.label == "success" else 0.0)
            for ex in corpus]
    rng = random.Random(seed)
    order = list(range(len(data)))
    w = model.weights
    for epoch in range(epochs):
        rng.shuffle(order)
        lr = learning_rate / (1.0 + epoch * 0.1)
        for i in order:
            vec, y = data[i]
            g = _score(model, vec) - y
            model.bias -= lr * g
            for b, v in vec.items():
                w[b] -= lr * g * v
    model.trained = True
    if held_out is not None:
        model.held_out_accuracy = accuracy(model, held_out)
    return model


def accuracy(model: ValidityModel, examples) -> float:
    examples = list(examples)
    if not examples:
        return 0.0
    hits = sum((p_valid(model, ex.text) >= VALID_THRESHOLD) == (ex.label == "success") for ex in examples)
    return hits / len(examples)


def rule_failure(response: str) -> bool:
    """True when the response is one of the canonical parser failures."""
    r = " ".join(normalize_quotes(response).strip().split())
    return r.lower() in CANONICAL_FAILURES or UNKNOWN_WORD_RE.match(r) is not None


def unknown_word(response: str) -> str | None:
    m = UNKNOWN_WORD_RE.match(" ".join(normalize_quotes(response).strip().split()))
    return m.group(1).lower() if m else None


def p_valid(model: ValidityModel, response: str) -> float:
    """Probability that ``response`` reports a successful action."""
    if not model.trained:
        raise RuntimeError("validity model is not trained")
    if rule_failure(response):
        return RULE_FAILURE_P
    p = _score(model, featurize(response, model.feature_dim, model.hash_seed))
    # Keep the output strictly inside (0, 1).
    return min(max(p, 1e-9), 1.0 - 1e-9)


def is_valid(model: ValidityModel, response: str) -> bool:
    return p_valid(model, response) >= VALID_THRESHOLD


def parse_corpus(text: str) -> list[LabeledResponse]:
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            label, body = line.split("\t", 1)
        except ValueError:
            raise ValueError(f"corpus line {lineno}: expected label<TAB>text") from None
        out.append(LabeledResponse(body.replace("\\n", "\n"), label.strip()))
    return out


def load_corpus(path=None) -> list[LabeledResponse]:
    if path is None:
        text = resources.files("nail").joinpath("data/validity_corpus.tsv").read_text(encoding="utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return parse_corpus(text)


_DEFAULT_MODEL = None


def default_model() -> ValidityModel:
    """Model trained on the bundled corpus (80% split, seed 0); cached per process."""
    global _DEFAULT_MODEL
    if _DEFAULT_MODEL is None:
        tr, ho = split_corpus(load_corpus(), seed=0)
        _DEFAULT_MODEL = train(tr, seed=0, held_out=ho)
    return _DEFAULT_MODEL
