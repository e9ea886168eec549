"""Naive Bayes over binary feature vectors.

The decision score compares, between the two classes, the prior times the
product of conditional presence probabilities over the features *present* in
the query; absent features contribute nothing. Laplace smoothing keeps every
conditional strictly inside (0, 1).

The model's canonical state is the integer training counts; the float priors
and conditionals are derived from them. Scoring uses a fast log-sum, but a
result within noise of zero is recomputed in exact rational arithmetic so an
exact tie really scores 0.0 (and ties break to LEGITIMATE downstream).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .corpus import Label
from .errors import TrainingError

# below this magnitude the float log-sum cannot be trusted for its sign
_EXACT_RECHECK_BOUND = 1e-9


@dataclass(eq=False)
class NBModel:
    n_spam: int
    n_legit: int
    present_spam: np.ndarray  # per-feature presence counts within each class
    present_legit: np.ndarray
    alpha: float
    prior_spam: float = field(init=False)
    prior_legit: float = field(init=False)
    cond_spam: np.ndarray = field(init=False)  # P(feature j present | spam)
    cond_legit: np.ndarray = field(init=False)
    _log_ratio: np.ndarray = field(init=False, repr=False)
    _log_prior_diff: float = field(init=False, repr=False)

    def __post_init__(self):
        n = self.n_spam + self.n_legit
        self.prior_spam = self.n_spam / n
        self.prior_legit = self.n_legit / n
        self.cond_spam = (self.present_spam + self.alpha) / (self.n_spam + 2.0 * self.alpha)
        self.cond_legit = (self.present_legit + self.alpha) / (self.n_legit + 2.0 * self.alpha)
        self._log_ratio = np.log(self.cond_spam) - np.log(self.cond_legit)
        self._log_prior_diff = math.log(self.prior_spam) - math.log(self.prior_legit)

    @property
    def d(self) -> int:
        return len(self.present_spam)


def nb_train(train, alpha: float = 1.0, *, n_features: int) -> NBModel:
    """Count class priors and per-feature presence, smoothed by alpha.

    prior(y) = count(y) / N and
    cond(j, y) = (present count of j in class y + alpha) / (count(y) + 2*alpha).
    """
    if alpha <= 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    n_spam = sum(1 for _, y in train if y is Label.SPAM)
    n_legit = len(train) - n_spam
    if n_spam == 0 or n_legit == 0:
        raise TrainingError("training data must contain both classes")
    present_spam = np.zeros(n_features, dtype=np.int64)
    present_legit = np.zeros(n_features, dtype=np.int64)
    for vec, y in train:
        target = present_spam if y is Label.SPAM else present_legit
        target[vec] += 1
    return NBModel(n_spam, n_legit, present_spam, present_legit, alpha)


def _exact_log_odds(model: NBModel, x: np.ndarray) -> float:
    """Sign-exact log odds via rational arithmetic; 0.0 iff an exact tie."""
    alpha = Fraction(model.alpha)
    value_spam = Fraction(model.n_spam, model.n_spam + model.n_legit)
    value_legit = Fraction(model.n_legit, model.n_spam + model.n_legit)
    denom_spam = model.n_spam + 2 * alpha
    denom_legit = model.n_legit + 2 * alpha
    for j in x:
        value_spam *= (int(model.present_spam[j]) + alpha) / denom_spam
        value_legit *= (int(model.present_legit[j]) + alpha) / denom_legit
    if value_spam == value_legit:
        return 0.0
    return math.log1p(float((value_spam - value_legit) / value_legit))


def nb_score(model: NBModel, x: np.ndarray) -> float:
    """Log odds of spam over legitimate for the present-feature set x.

    Positive means spam wins the two-class comparison; an exact zero is a tie
    (resolved to LEGITIMATE by the thresholding rule).
    """
    score = model._log_prior_diff
    if len(x):
        score += float(model._log_ratio[x].sum())
    if abs(score) < _EXACT_RECHECK_BOUND:
        return _exact_log_odds(model, x)
    return score
