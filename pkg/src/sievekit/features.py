"""Tokenization, vocabulary statistics, information-gain feature ranking, binary vectors.

A token is a maximal run of ASCII letters/digits in lowercased text, kept only
at lengths 2..40. Feature vectors are sparse: a sorted int64 array of the
indices whose token occurs in the message at least once.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field

import numpy as np

from .corpus import EmailMessage, LabeledDataset, Label
from .errors import DataError

TOKEN_RE = re.compile(r"[a-z0-9]+")
MIN_TOKEN_LEN = 2
MAX_TOKEN_LEN = 40

# Which message parts feed the tokenizer, in canonical order.
DEFAULT_FIELDS = ("subject", "body")

# token -> occurrence count within one message
TokenBag = dict[str, int]


def normalize_fields(fields) -> tuple[str, ...]:
    chosen = set(fields)
    if not chosen or not chosen <= set(DEFAULT_FIELDS):
        raise ValueError(f"fields must be a non-empty subset of {DEFAULT_FIELDS}, got {fields!r}")
    return tuple(f for f in DEFAULT_FIELDS if f in chosen)


def tokenize(msg: EmailMessage, fields=DEFAULT_FIELDS) -> TokenBag:
    """Count tokens in the selected message parts (subject and/or body)."""
    bag: TokenBag = {}
    for part in normalize_fields(fields):
        text = msg.subject if part == "subject" else msg.body
        for token in TOKEN_RE.findall(text.lower()):
            if MIN_TOKEN_LEN <= len(token) <= MAX_TOKEN_LEN:
                bag[token] = bag.get(token, 0) + 1
    return bag


@dataclass(frozen=True)
class Vocabulary:
    """Per-token document frequencies over a training set.

    ``df`` counts presence (not multiplicity): the number of messages a token
    occurs in. ``spam_df`` and ``legit_df`` split that count by class and sum
    to ``df`` for every token. The class totals are kept so presence/label
    information gain can be computed from the counts alone.
    """

    df: dict[str, int]
    spam_df: dict[str, int]
    legit_df: dict[str, int]
    n_docs: int
    n_spam: int
    n_legit: int


def vocabulary_from_bags(bags: list[TokenBag], labels: list[Label]) -> Vocabulary:
    if len(bags) != len(labels):
        raise ValueError("bags and labels differ in length")
    if not bags:
        raise DataError("cannot build a vocabulary from an empty training set")
    df: dict[str, int] = {}
    spam_df: dict[str, int] = {}
    legit_df: dict[str, int] = {}
    n_spam = 0
    for bag, y in zip(bags, labels):
        per_class = spam_df if y is Label.SPAM else legit_df
        if y is Label.SPAM:
            n_spam += 1
        for token in bag:
            df[token] = df.get(token, 0) + 1
            per_class[token] = per_class.get(token, 0) + 1
    for token, count in df.items():
        # class counts must add up to df; cheap and checked on every build
        assert spam_df.get(token, 0) + legit_df.get(token, 0) == count
    return Vocabulary(df, spam_df, legit_df, len(bags), n_spam, len(bags) - n_spam)


def build_vocabulary(train: LabeledDataset, fields=DEFAULT_FIELDS) -> Vocabulary:
    """Tokenize every training message and collect document frequencies."""
    bags = [tokenize(msg, fields) for msg, _ in train]
    return vocabulary_from_bags(bags, train.labels())


def _entropy2(a: int, b: int) -> float:
    """Shannon entropy in bits of a two-way count split; 0*log0 == 0."""
    n = a + b
    h = 0.0
    for c in (a, b):
        if c:
            p = c / n
            h -= p * math.log2(p)
    return h


def information_gain(vocab: Vocabulary, token: str) -> float:
    """Reduction in label entropy (bits) from observing the token's presence.

    Computed from the vocabulary's per-class presence counts with no smoothing.
    """
    a = vocab.spam_df.get(token, 0)
    b = vocab.legit_df.get(token, 0)
    present = a + b
    absent = vocab.n_docs - present
    gain = _entropy2(vocab.n_spam, vocab.n_legit)
    if present:
        gain -= present / vocab.n_docs * _entropy2(a, b)
    if absent:
        gain -= absent / vocab.n_docs * _entropy2(vocab.n_spam - a, vocab.n_legit - b)
    return gain


@dataclass(frozen=True)
class FeatureSet:
    """Ordered token list defining the feature space; order is selection rank."""

    tokens: tuple[str, ...]
    _index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(set(self.tokens)) != len(self.tokens):
            raise ValueError("feature set contains duplicate tokens")
        object.__setattr__(self, "_index", {t: j for j, t in enumerate(self.tokens)})

    @property
    def d(self) -> int:
        return len(self.tokens)

    def index_of(self, token: str) -> int | None:
        return self._index.get(token)


def select_features(vocab: Vocabulary, d: int) -> FeatureSet:
    """Top-d tokens by information gain; exact ties break lexicographically.

    Asking for more features than the vocabulary holds returns all of them in
    rank order.
    """
    if d <= 0:
        raise ValueError(f"feature count must be positive, got {d}")
    ranked = sorted(vocab.df, key=lambda t: (-information_gain(vocab, t), t))
    return FeatureSet(tuple(ranked[:d]))


def vectorize(bag: TokenBag, fs: FeatureSet) -> np.ndarray:
    """Binary presence vector as a sorted array of feature indices in [0, d)."""
    present = sorted(j for j in (fs.index_of(t) for t in bag) if j is not None)
    return np.array(present, dtype=np.int64)
