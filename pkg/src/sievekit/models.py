"""Trained-model wrapper: pipeline training, message classification, persistence.

A TrainedModel ties together the tokenizer field choice, the selected feature
set, and one fitted classifier, so classify() is total for any message. Models
serialize to a versioned UTF-8 text format with [meta], [features] and
[params] sections; floats are written as shortest round-trip decimals, so a
loaded model scores bitwise-identically to the saved one.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .corpus import EmailMessage, Label, LabeledDataset
from .errors import DataError
from .features import (DEFAULT_FIELDS, FeatureSet, TokenBag, normalize_fields,
                       select_features, tokenize, vectorize, vocabulary_from_bags)
from .knn import KNNModel, knn_fit, knn_score
from .metrics import (ConfusionCounts, DEFAULT_LAMBDAS, MetricsReport, RocCurve,
                      confusion, metrics_report, roc_curve)
from .naive_bayes import NBModel, nb_score, nb_train
from .svm import SVMModel, svm_score, svm_train
from .tfidf import TfIdfModel, tfidf_score, tfidf_train

KINDS = ("nb", "svm", "tfidf", "knn")

FORMAT_VERSION = 1


@dataclass(eq=False)
class TrainedModel:
    kind: str
    fields: tuple[str, ...]
    feature_set: FeatureSet
    inner: NBModel | SVMModel | TfIdfModel | KNNModel
    seed: int = 0


def fit_classifier(kind: str, bags: list[TokenBag], labels: list[Label], fs: FeatureSet,
                   *, fields=DEFAULT_FIELDS, seed: int = 0, alpha: float = 1.0,
                   C: float = 1.0, epochs: int = 50, k: int = 5,
                   vote_exponent: float = 1.0, feature_weights=None) -> TrainedModel:
    """Fit one classifier on pre-tokenized training bags."""
    if kind not in KINDS:
        raise ValueError(f"unknown classifier kind {kind!r}, expected one of {KINDS}")
    fields = normalize_fields(fields)
    if kind == "tfidf":
        inner = tfidf_train(list(zip(bags, labels)), fs)
    else:
        pairs = [(vectorize(bag, fs), y) for bag, y in zip(bags, labels)]
        if kind == "nb":
            inner = nb_train(pairs, alpha, n_features=fs.d)
        elif kind == "svm":
            inner = svm_train(pairs, C, epochs, seed, n_features=fs.d)
        else:
            inner = knn_fit(pairs, k, n_features=fs.d, vote_exponent=vote_exponent,
                            feature_weights=feature_weights)
    return TrainedModel(kind, fields, fs, inner, seed)


def train_model(kind: str, train: LabeledDataset, n_features: int, *,
                fields=DEFAULT_FIELDS, seed: int = 0, alpha: float = 1.0,
                C: float = 1.0, epochs: int = 50, k: int = 5,
                vote_exponent: float = 1.0, feature_weights=None) -> TrainedModel:
    """Full pipeline: tokenize, build vocabulary, select features, fit.

    The whole given dataset is used for training; splitting is the caller's
    concern. If the vocabulary holds fewer than n_features tokens the model
    keeps the smaller actual count and a warning is emitted.
    """
    fields = normalize_fields(fields)
    bags = [tokenize(msg, fields) for msg, _ in train]
    labels = train.labels()
    vocab = vocabulary_from_bags(bags, labels)
    if not vocab.df:
        raise DataError("training corpus produced an empty vocabulary")
    fs = select_features(vocab, n_features)
    if fs.d < n_features:
        warnings.warn(f"requested {n_features} features but the vocabulary has only {fs.d}")
    return fit_classifier(kind, bags, labels, fs, fields=fields, seed=seed, alpha=alpha,
                          C=C, epochs=epochs, k=k, vote_exponent=vote_exponent,
                          feature_weights=feature_weights)


def score_bag(model: TrainedModel, bag: TokenBag) -> float:
    if model.kind == "tfidf":
        return tfidf_score(model.inner, bag, model.feature_set)
    x = vectorize(bag, model.feature_set)
    if model.kind == "nb":
        return nb_score(model.inner, x)
    if model.kind == "svm":
        return svm_score(model.inner, x)
    return knn_score(model.inner, x)


def score_message(model: TrainedModel, msg: EmailMessage) -> float:
    return score_bag(model, tokenize(msg, model.fields))


def classify(model: TrainedModel, msg: EmailMessage, threshold: float = 0.0) -> tuple[Label, float]:
    """Score a message and threshold it: SPAM iff score > threshold, ties legitimate."""
    score = score_message(model, msg)
    label = Label.SPAM if score > threshold else Label.LEGITIMATE
    return label, score


@dataclass(frozen=True)
class EvaluationResult:
    counts: ConfusionCounts
    report: MetricsReport
    scores: np.ndarray
    roc: RocCurve | None


def evaluate_model(model: TrainedModel, test: LabeledDataset, lambdas=DEFAULT_LAMBDAS,
                   threshold: float = 0.0, with_roc: bool = True) -> EvaluationResult:
    """Classify every test message at the threshold and compute all measures."""
    if len(test) == 0:
        raise DataError("cannot evaluate on an empty dataset")
    if with_roc and (test.spam_count == 0 or test.legit_count == 0):
        raise DataError("evaluation corpus must contain both spam and ham messages")
    scores = np.array([score_message(model, msg) for msg, _ in test])
    truths = test.labels()
    predictions = [Label.SPAM if s > threshold else Label.LEGITIMATE for s in scores]
    counts = confusion(predictions, truths)
    report = metrics_report(counts, lambdas)
    roc = roc_curve(scores, truths) if with_roc else None
    return EvaluationResult(counts, report, scores, roc)


# ---------------------------------------------------------------------------
# persistence


def _fmt_floats(values) -> str:
    return ",".join(repr(float(v)) for v in values)


def _parse_floats(text: str) -> np.ndarray:
    if text == "":
        return np.array([])
    return np.array([float(part) for part in text.split(",")])


def _parse_indices(text: str) -> np.ndarray:
    if text == "":
        return np.array([], dtype=np.int64)
    return np.array([int(part) for part in text.split(",")], dtype=np.int64)


def save_model(model: TrainedModel, path: str | Path) -> None:
    """Write the model in the sectioned text format."""
    lines = ["[meta]", f"format={FORMAT_VERSION}", f"kind={model.kind}",
             f"fields={','.join(model.fields)}", f"d={model.feature_set.d}",
             f"seed={model.seed}"]
    inner = model.inner
    if model.kind == "nb":
        lines.append(f"alpha={float(inner.alpha)!r}")
    elif model.kind == "svm":
        lines.append(f"C={float(inner.C)!r}")
        lines.append(f"epochs={inner.epochs}")
    elif model.kind == "knn":
        lines.append(f"k={inner.k}")
        lines.append(f"vote_exponent={float(inner.vote_exponent)!r}")
    lines.append("[features]")
    lines.extend(model.feature_set.tokens)
    lines.append("[params]")
    if model.kind == "nb":
        lines.append(f"n_spam={inner.n_spam}")
        lines.append(f"n_legit={inner.n_legit}")
        lines.append(f"present_spam={','.join(str(int(c)) for c in inner.present_spam)}")
        lines.append(f"present_legit={','.join(str(int(c)) for c in inner.present_legit)}")
    elif model.kind == "svm":
        lines.append(f"weights={_fmt_floats(inner.weights)}")
        lines.append(f"bias={float(inner.bias)!r}")
    elif model.kind == "tfidf":
        lines.append(f"idf={_fmt_floats(inner.idf)}")
        lines.append(f"centroid_spam={_fmt_floats(inner.centroid_spam)}")
        lines.append(f"centroid_legit={_fmt_floats(inner.centroid_legit)}")
    else:
        lines.append(f"feature_weights={_fmt_floats(inner.feature_weights)}")
        for i, vec in enumerate(inner.vectors):
            label = Label(int(inner.labels[i])).name
            lines.append(f"train.{i}={label}:{','.join(str(j) for j in vec)}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_model(path: str | Path) -> TrainedModel:
    """Load a model saved by save_model; scores match the original bitwise."""
    text = Path(path).read_text(encoding="utf-8")
    sections: dict[str, list[str]] = {}
    current: list[str] | None = None
    for line in text.splitlines():
        if line.startswith("[") and line.endswith("]"):
            current = sections.setdefault(line[1:-1], [])
        elif current is not None:
            current.append(line)
        elif line.strip():
            raise DataError(f"unexpected content before first section in {path}")
    for required in ("meta", "features", "params"):
        if required not in sections:
            raise DataError(f"model file {path} is missing its [{required}] section")

    def as_map(lines):
        out = {}
        for line in lines:
            if "=" not in line:
                raise DataError(f"malformed line in model file {path}: {line!r}")
            key, _, value = line.partition("=")
            out[key] = value
        return out

    meta = as_map(sections["meta"])
    if meta.get("format") != str(FORMAT_VERSION):
        raise DataError(f"unsupported model format {meta.get('format')!r} in {path}")
    kind = meta.get("kind")
    if kind not in KINDS:
        raise DataError(f"unknown classifier kind {kind!r} in {path}")
    try:
        fields = normalize_fields(meta["fields"].split(","))
        seed = int(meta.get("seed", "0"))
        tokens = tuple(line for line in sections["features"] if line)
        fs = FeatureSet(tokens)
        if fs.d != int(meta["d"]):
            raise DataError(f"feature count mismatch in {path}")

        params = as_map(sections["params"])
        if kind == "nb":
            inner = NBModel(int(params["n_spam"]), int(params["n_legit"]),
                            _parse_indices(params["present_spam"]),
                            _parse_indices(params["present_legit"]),
                            float(meta["alpha"]))
        elif kind == "svm":
            inner = SVMModel(_parse_floats(params["weights"]), float(params["bias"]),
                             float(meta["C"]), int(meta["epochs"]), seed)
        elif kind == "tfidf":
            inner = TfIdfModel(_parse_floats(params["idf"]),
                               _parse_floats(params["centroid_spam"]),
                               _parse_floats(params["centroid_legit"]))
        else:
            pairs = []
            i = 0
            while f"train.{i}" in params:
                label_name, _, idx_text = params[f"train.{i}"].partition(":")
                pairs.append((_parse_indices(idx_text), Label[label_name]))
                i += 1
            if not pairs:
                raise DataError(f"knn model in {path} stores no training vectors")
            inner = knn_fit(pairs, int(meta["k"]), n_features=fs.d,
                            vote_exponent=float(meta["vote_exponent"]),
                            feature_weights=_parse_floats(params["feature_weights"]))
    except (KeyError, ValueError) as exc:
        raise DataError(f"model file {path} is incomplete or malformed: {exc}") from exc
    return TrainedModel(kind, fields, fs, inner, seed)
