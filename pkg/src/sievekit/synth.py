"""Synthetic corpus generation from known per-class token distributions.

Messages are i.i.d. unigram draws: the label comes from a Bernoulli on the
spam fraction, the token count is uniform over a range, and tokens are drawn
from the label's distribution. That family matches the Naive Bayes model
exactly, so generated corpora have analytically known optimal accuracy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .corpus import EmailMessage, Label, LabeledDataset
from .errors import DataError
from .features import MAX_TOKEN_LEN, MIN_TOKEN_LEN, TOKEN_RE

_PROB_TOL = 1e-9


def _check_distribution(name: str, dist: dict[str, float]) -> None:
    if not dist:
        raise DataError(f"{name} token distribution is empty")
    for token, prob in dist.items():
        match = TOKEN_RE.fullmatch(token)
        if match is None or not MIN_TOKEN_LEN <= len(token) <= MAX_TOKEN_LEN:
            raise DataError(f"{name} token {token!r} would not survive tokenization")
        if prob < 0:
            raise DataError(f"{name} probability for {token!r} is negative")
    total = math.fsum(dist.values())
    if abs(total - 1.0) > _PROB_TOL:
        raise DataError(f"{name} token probabilities sum to {total}, not 1")


@dataclass(frozen=True)
class GeneratorSpec:
    n_messages: int
    spam_fraction: float
    spam_tokens: dict[str, float]
    legit_tokens: dict[str, float]
    tokens_per_message: tuple[int, int]
    seed: int = 0

    def __post_init__(self):
        if self.n_messages <= 0:
            raise DataError(f"n_messages must be positive, got {self.n_messages}")
        if not 0.0 < self.spam_fraction < 1.0:
            raise DataError(f"spam_fraction must be in (0, 1), got {self.spam_fraction}")
        lo, hi = self.tokens_per_message
        if not 1 <= lo <= hi:
            raise DataError(f"bad tokens_per_message range ({lo}, {hi})")
        _check_distribution("spam", self.spam_tokens)
        _check_distribution("ham", self.legit_tokens)


def generate(spec: GeneratorSpec) -> LabeledDataset:
    """Generate the corpus; byte-identical output for identical specs."""
    rng = np.random.default_rng(spec.seed)
    # fixed token order regardless of dict construction order
    by_label = {}
    for label, dist in ((Label.SPAM, spec.spam_tokens), (Label.LEGITIMATE, spec.legit_tokens)):
        tokens = sorted(dist)
        probs = np.array([dist[t] for t in tokens])
        by_label[label] = (np.array(tokens, dtype=object), probs / probs.sum())
    lo, hi = spec.tokens_per_message
    items = []
    for i in range(spec.n_messages):
        label = Label.SPAM if rng.random() < spec.spam_fraction else Label.LEGITIMATE
        count = int(rng.integers(lo, hi + 1))
        tokens, probs = by_label[label]
        body = " ".join(rng.choice(tokens, size=count, p=probs))
        items.append((EmailMessage((), body, f"synth-{i:05d}"), label))
    return LabeledDataset(tuple(items))


def load_generator_spec(path: str | Path) -> GeneratorSpec:
    """Read a spec from a plain key=value file.

    Recognized keys: n_messages, spam_fraction, tokens_min, tokens_max, seed,
    and one ``spam.<token>=<prob>`` or ``ham.<token>=<prob>`` line per token.
    Blank lines and lines starting with # are skipped.
    """
    values: dict[str, str] = {}
    spam_tokens: dict[str, float] = {}
    legit_tokens: dict[str, float] = {}
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DataError(f"cannot read generator spec {path}: {exc}") from exc
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise DataError(f"{path}:{lineno}: expected key=value, got {line!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        try:
            if key.startswith("spam."):
                spam_tokens[key[5:]] = float(value)
            elif key.startswith("ham."):
                legit_tokens[key[4:]] = float(value)
            elif key in ("n_messages", "tokens_min", "tokens_max", "seed"):
                values[key] = str(int(value))
            elif key == "spam_fraction":
                values[key] = value
                float(value)
            else:
                raise DataError(f"{path}:{lineno}: unknown key {key!r}")
        except ValueError as exc:
            raise DataError(f"{path}:{lineno}: bad value for {key!r}: {value!r}") from exc
    for required in ("n_messages", "spam_fraction", "tokens_min", "tokens_max"):
        if required not in values:
            raise DataError(f"generator spec {path} is missing {required}")
    return GeneratorSpec(
        n_messages=int(values["n_messages"]),
        spam_fraction=float(values["spam_fraction"]),
        spam_tokens=spam_tokens,
        legit_tokens=legit_tokens,
        tokens_per_message=(int(values["tokens_min"]), int(values["tokens_max"])),
        seed=int(values.get("seed", "0")),
    )
