"""Sweep harness: classifier x data-size x feature-count grids with metric rows.

Subsampling preserves the corpus spam fraction so size trends are not
confounded by class balance; the realized spam percentage is recorded per row.
Every cell derives its own seed from the plan seed, so results do not depend
on evaluation order and rerunning a plan reproduces the CSV byte for byte.
"""

from __future__ import annotations

import zlib
from dataclasses import dataclass, field

import numpy as np

from .corpus import LabeledDataset, Label, split
from .errors import DataError
from .features import DEFAULT_FIELDS, normalize_fields, select_features, tokenize, vocabulary_from_bags
from .metrics import DEFAULT_LAMBDAS
from .models import KINDS, evaluate_model, fit_classifier

SWEEP_BASE_COLUMNS = ("classifier", "data_size", "spam_pct", "d", "accuracy",
                      "precision", "recall", "fp_rate", "fn_rate", "f1")


@dataclass(frozen=True)
class ExperimentPlan:
    classifiers: tuple[str, ...]
    sizes: tuple[int, ...]
    feature_counts: tuple[int, ...]
    lambdas: tuple = DEFAULT_LAMBDAS
    train_fraction: float = 0.7
    seed: int = 0
    params: dict = field(default_factory=dict)  # alpha, C, epochs, k, vote_exponent
    fields: tuple[str, ...] = DEFAULT_FIELDS

    def __post_init__(self):
        if not self.classifiers or not self.sizes or not self.feature_counts or not self.lambdas:
            raise ValueError("plan lists must be non-empty")
        for kind in self.classifiers:
            if kind not in KINDS:
                raise ValueError(f"unknown classifier kind {kind!r}")
        if any(s <= 0 for s in self.sizes) or any(d <= 0 for d in self.feature_counts):
            raise ValueError("sizes and feature counts must be positive")


def derive_seed(base: int, *parts) -> int:
    """Stable per-cell seed from the plan seed and any hashable tag parts."""
    entropy = [base & 0xFFFFFFFF] + [zlib.crc32(str(p).encode()) for p in parts]
    return int(np.random.SeedSequence(entropy).generate_state(1)[0])


def subsample(ds: LabeledDataset, size: int, seed: int) -> LabeledDataset:
    """Seeded stratified subsample of the given size, preserving spam fraction."""
    if not 0 < size <= len(ds):
        raise DataError(f"subsample size {size} not in 1..{len(ds)}")
    spam = [item for item in ds.items if item[1] is Label.SPAM]
    legit = [item for item in ds.items if item[1] is Label.LEGITIMATE]
    n_spam = round(size * len(spam) / len(ds))
    n_spam = min(len(spam), max(size - len(legit), n_spam))
    rng = np.random.default_rng(seed)
    picked = []
    for group, want in ((legit, size - n_spam), (spam, n_spam)):
        order = rng.permutation(len(group))[:want]
        picked.extend(group[j] for j in sorted(order))
    return LabeledDataset(tuple(picked))


def run_experiment(ds: LabeledDataset, plan: ExperimentPlan) -> list[dict]:
    """Evaluate every plan cell; rows come back in (classifier, size, d) plan order."""
    if max(plan.sizes) > len(ds):
        raise DataError(f"plan size {max(plan.sizes)} exceeds corpus size {len(ds)}")
    fields = normalize_fields(plan.fields)
    params = dict(plan.params)
    cells: dict[tuple, dict] = {}
    for size in plan.sizes:
        sub = subsample(ds, size, derive_seed(plan.seed, "subsample", size))
        train, test = split(sub, plan.train_fraction, derive_seed(plan.seed, "split", size))
        spam_pct = 100.0 * sub.spam_count / len(sub)
        bags = [tokenize(msg, fields) for msg, _ in train]
        labels = train.labels()
        vocab = vocabulary_from_bags(bags, labels)
        for d in plan.feature_counts:
            fs = select_features(vocab, d)
            for kind in plan.classifiers:
                model = fit_classifier(
                    kind, bags, labels, fs, fields=fields,
                    seed=derive_seed(plan.seed, "train", kind, size, d),
                    **params)
                result = evaluate_model(model, test, plan.lambdas, with_roc=False)
                basic = result.report.basic
                row = {
                    "classifier": kind,
                    "data_size": size,
                    "spam_pct": spam_pct,
                    "d": fs.d,
                    "accuracy": basic.accuracy,
                    "precision": basic.precision,
                    "recall": basic.recall,
                    "fp_rate": basic.fp_rate,
                    "fn_rate": basic.fn_rate,
                    "f1": basic.f1,
                }
                for lam, wm in result.report.weighted:
                    row[f"w_err@{lam}"] = wm.w_err
                cells[(kind, size, d)] = row
    return [cells[(kind, size, d)]
            for kind in plan.classifiers
            for size in plan.sizes
            for d in plan.feature_counts]


def sweep_csv(rows: list[dict], lambdas=DEFAULT_LAMBDAS) -> str:
    """Render experiment rows as CSV; undefined measures become "NA"."""
    columns = list(SWEEP_BASE_COLUMNS) + [f"w_err@{lam}" for lam in lambdas]

    def render(column, value):
        if value is None:
            return "NA"
        if column in ("classifier",):
            return str(value)
        if column in ("data_size", "d"):
            return str(int(value))
        return repr(float(value))

    lines = [",".join(columns)]
    lines.extend(",".join(render(c, row[c]) for c in columns) for row in rows)
    return "\n".join(lines) + "\n"
