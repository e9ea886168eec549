"""Evaluation measures over confusion counts, plus ROC curves.

All count-ratio measures are computed in exact rational arithmetic; only ROC
coordinates and AUC use floating point. Measures with a zero denominator are
reported as None (serialized "NA"), never as a silent zero, except TCR whose
zero denominator means a perfect filter and is reported as +infinity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .corpus import Label

Metric = Fraction | None

DEFAULT_LAMBDAS = (1, 9, 999)


@dataclass(frozen=True)
class ConfusionCounts:
    """The four outcome counts: legit->legit, legit->spam, spam->legit, spam->spam."""

    n_ll: int
    n_ls: int
    n_sl: int
    n_ss: int

    def __post_init__(self):
        if min(self.n_ll, self.n_ls, self.n_sl, self.n_ss) < 0:
            raise ValueError("confusion counts must be non-negative")

    @property
    def total(self) -> int:
        return self.n_ll + self.n_ls + self.n_sl + self.n_ss


def confusion(predictions, truths) -> ConfusionCounts:
    """Tally predicted vs true labels."""
    if len(predictions) != len(truths):
        raise ValueError(f"{len(predictions)} predictions vs {len(truths)} truths")
    if not len(predictions):
        raise ValueError("cannot tally an empty prediction list")
    n_ll = n_ls = n_sl = n_ss = 0
    for pred, truth in zip(predictions, truths):
        if truth is Label.LEGITIMATE:
            if pred is Label.LEGITIMATE:
                n_ll += 1
            else:
                n_ls += 1
        else:
            if pred is Label.LEGITIMATE:
                n_sl += 1
            else:
                n_ss += 1
    return ConfusionCounts(n_ll, n_ls, n_sl, n_ss)


@dataclass(frozen=True)
class BasicMetrics:
    accuracy: Fraction
    error_rate: Fraction
    fp_rate: Metric
    fn_rate: Metric
    recall: Metric
    precision: Metric
    f1: Metric


@dataclass(frozen=True)
class WeightedMetrics:
    w_acc: Fraction
    w_err: Fraction
    tcr: Fraction | float  # +inf when the filter makes no cost-bearing mistake


def compute_metrics(c: ConfusionCounts) -> BasicMetrics:
    """Accuracy, error rate, FP/FN rates, recall, precision, F-measure.

    Per-measure zero denominators yield None rather than an exception or a
    fake zero; an all-zero count table is rejected outright.
    """
    if c.total == 0:
        raise ValueError("metrics need at least one counted message")
    accuracy = Fraction(c.n_ll + c.n_ss, c.total)
    legit = c.n_ll + c.n_ls
    spam = c.n_sl + c.n_ss
    predicted_spam = c.n_ls + c.n_ss
    fp_rate = Fraction(c.n_ls, legit) if legit else None
    fn_rate = Fraction(c.n_sl, spam) if spam else None
    recall = Fraction(c.n_ss, spam) if spam else None
    precision = Fraction(c.n_ss, predicted_spam) if predicted_spam else None
    if precision is None or recall is None or precision + recall == 0:
        f1 = None
    else:
        f1 = 2 * precision * recall / (precision + recall)
    return BasicMetrics(accuracy, 1 - accuracy, fp_rate, fn_rate, recall, precision, f1)


def compute_weighted(c: ConfusionCounts, lam) -> WeightedMetrics:
    """Weighted accuracy/error and total cost ratio at false-positive weight lam."""
    lam = Fraction(str(lam)) if isinstance(lam, float) else Fraction(lam)
    if lam <= 0:
        raise ValueError(f"lambda must be positive, got {lam}")
    if c.total == 0:
        raise ValueError("metrics need at least one counted message")
    denom = lam * (c.n_ll + c.n_ls) + c.n_sl + c.n_ss
    w_acc = (lam * c.n_ll + c.n_ss) / denom
    cost = lam * c.n_ls + c.n_sl
    tcr = Fraction(c.n_sl + c.n_ss) / cost if cost else math.inf
    return WeightedMetrics(w_acc, 1 - w_acc, tcr)


@dataclass(frozen=True)
class MetricsReport:
    """Every measure at once, with the weighted block evaluated per lambda."""

    counts: ConfusionCounts
    basic: BasicMetrics
    weighted: tuple[tuple[object, WeightedMetrics], ...]  # (lambda as given, values)


def metrics_report(c: ConfusionCounts, lambdas=DEFAULT_LAMBDAS) -> MetricsReport:
    return MetricsReport(c, compute_metrics(c),
                         tuple((lam, compute_weighted(c, lam)) for lam in lambdas))


@dataclass(frozen=True)
class RocCurve:
    """Operating points (threshold, fp_rate, tp_rate) by descending threshold."""

    points: tuple[tuple[float, float, float], ...]
    auc: float


def roc_curve(scores, truths) -> RocCurve:
    """Sweep the strict score > threshold rule over the distinct score values.

    The first point is the (+inf, 0, 0) prefix; each distinct score value v
    contributes the operating point reached once every item scoring >= v is
    called spam (equal scores move together), so the last point is (1, 1).
    AUC is the trapezoidal integral of the resulting curve.
    """
    scores = np.asarray(scores, dtype=float)
    truths = list(truths)
    if len(scores) != len(truths):
        raise ValueError(f"{len(scores)} scores vs {len(truths)} truths")
    if not len(scores):
        raise ValueError("cannot build a ROC curve from no scores")
    spam = np.array([y is Label.SPAM for y in truths])
    n_spam = int(spam.sum())
    n_legit = len(truths) - n_spam
    if n_spam == 0 or n_legit == 0:
        raise ValueError("ROC needs at least one spam and one legitimate truth")

    order = np.argsort(-scores, kind="stable")
    sorted_scores = scores[order]
    sorted_spam = spam[order]
    tp_cum = np.cumsum(sorted_spam)
    fp_cum = np.cumsum(~sorted_spam)
    boundary = np.nonzero(np.append(sorted_scores[1:] != sorted_scores[:-1], True))[0]

    points = [(math.inf, 0.0, 0.0)]
    points.extend(
        (float(sorted_scores[i]), float(fp_cum[i] / n_legit), float(tp_cum[i] / n_spam))
        for i in boundary
    )
    auc = 0.0
    for (_, fp0, tp0), (_, fp1, tp1) in zip(points, points[1:]):
        auc += (fp1 - fp0) * (tp0 + tp1) / 2.0
    return RocCurve(tuple(points), auc)


def _render_value(value) -> str:
    if value is None:
        return "NA"
    if isinstance(value, float):
        return repr(value) if math.isfinite(value) else "inf"
    return repr(float(value))


def metrics_csv(report: MetricsReport) -> str:
    """Machine-readable measure,lambda,value rows; "NA" marks undefined values."""
    rows = ["measure,lambda,value"]
    basic = report.basic
    for name, value in (
        ("accuracy", basic.accuracy),
        ("error_rate", basic.error_rate),
        ("fp_rate", basic.fp_rate),
        ("fn_rate", basic.fn_rate),
        ("recall", basic.recall),
        ("precision", basic.precision),
        ("f1", basic.f1),
    ):
        rows.append(f"{name},,{_render_value(value)}")
    for lam, wm in report.weighted:
        rows.append(f"w_acc,{lam},{_render_value(wm.w_acc)}")
        rows.append(f"w_err,{lam},{_render_value(wm.w_err)}")
        rows.append(f"tcr,{lam},{_render_value(wm.tcr)}")
    return "\n".join(rows) + "\n"


def metrics_table(report: MetricsReport) -> str:
    """Human-readable fixed-width rendering of a report."""
    lines = [f"{'measure':<16}{'value':>14}"]
    basic = report.basic
    for name, value in (
        ("accuracy", basic.accuracy),
        ("error_rate", basic.error_rate),
        ("fp_rate", basic.fp_rate),
        ("fn_rate", basic.fn_rate),
        ("recall", basic.recall),
        ("precision", basic.precision),
        ("f1", basic.f1),
    ):
        shown = "NA" if value is None else f"{float(value):.6f}"
        lines.append(f"{name:<16}{shown:>14}")
    for lam, wm in report.weighted:
        tcr = "inf" if wm.tcr == math.inf else f"{float(wm.tcr):.6f}"
        lines.append(f"{f'w_acc({lam})':<16}{float(wm.w_acc):>14.6f}")
        lines.append(f"{f'w_err({lam})':<16}{float(wm.w_err):>14.6f}")
        lines.append(f"{f'tcr({lam})':<16}{tcr:>14}")
    return "\n".join(lines) + "\n"


def roc_csv(curve: RocCurve) -> str:
    """threshold,fp_rate,tp_rate rows followed by one auc summary line."""
    rows = ["threshold,fp_rate,tp_rate"]
    for threshold, fp, tp in curve.points:
        shown = repr(threshold) if math.isfinite(threshold) else "inf"
        rows.append(f"{shown},{fp!r},{tp!r}")
    rows.append(f"auc,{curve.auc!r}")
    return "\n".join(rows) + "\n"
