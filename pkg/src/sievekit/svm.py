"""Linear soft-margin SVM trained by seeded stochastic subgradient descent.

The decision function is the signed margin w.x + b over binary feature
vectors, with +1 mapped to SPAM and -1 to LEGITIMATE. Training minimizes

    J(w, b) = 0.5 * (|w|^2 + b^2) + C * sum_i max(0, 1 - y_i (w.x_i + b))

with Pegasos-style steps (learning rate 1/(lambda*t), lambda = 1/(C*n),
projection onto the ball of radius sqrt(C*n)); the bias is treated as an
always-on feature and regularized with the weights. The returned model is
whichever of {tail-averaged iterate, final iterate, zero model} has the
lowest objective, so J(model) <= J(0) holds by construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .corpus import Label
from .errors import TrainingError


@dataclass(eq=False)
class SVMModel:
    weights: np.ndarray
    bias: float
    C: float
    epochs: int
    seed: int

    @property
    def d(self) -> int:
        return len(self.weights)


def svm_score(model: SVMModel, x: np.ndarray) -> float:
    """Signed margin w.x + b; positive side is SPAM."""
    score = model.bias
    if len(x):
        score += float(model.weights[x].sum())
    return score


def hinge_objective(weights: np.ndarray, bias: float, train, C: float) -> float:
    """Regularized hinge objective J(w, b) on the given training pairs."""
    total = 0.5 * (float(weights @ weights) + bias * bias)
    for vec, y in train:
        yi = 1.0 if y is Label.SPAM else -1.0
        margin = yi * (float(weights[vec].sum()) + bias)
        total += C * max(0.0, 1.0 - margin)
    return total


def svm_train(train, C: float = 1.0, epochs: int = 50, seed: int = 0, *, n_features: int) -> SVMModel:
    """Train by stochastic subgradient descent; deterministic for a fixed seed."""
    if C <= 0:
        raise ValueError(f"C must be positive, got {C}")
    if epochs <= 0:
        raise ValueError(f"epochs must be positive, got {epochs}")
    n = len(train)
    n_spam = sum(1 for _, y in train if y is Label.SPAM)
    if n_spam == 0 or n_spam == n:
        raise TrainingError("training data must contain both classes")

    vecs = [vec for vec, _ in train]
    ys = np.array([1.0 if y is Label.SPAM else -1.0 for _, y in train])
    lam = 1.0 / (C * n)
    radius_sq = C * n  # the optimum satisfies |w|^2 + b^2 <= 1/lambda

    rng = np.random.default_rng(seed)
    w = np.zeros(n_features)
    b = 0.0
    w_sum = np.zeros(n_features)
    b_sum = 0.0
    total_steps = epochs * n
    tail_start = total_steps // 2 + 1  # average the last half of the iterates
    tail_count = 0
    t = 0
    for _ in range(epochs):
        for i in rng.permutation(n):
            t += 1
            eta = 1.0 / (lam * t)
            margin = ys[i] * (float(w[vecs[i]].sum()) + b)
            decay = 1.0 - 1.0 / t
            w *= decay
            b *= decay
            if margin < 1.0:
                w[vecs[i]] += eta * ys[i]
                b += eta * ys[i]
            norm_sq = float(w @ w) + b * b
            if norm_sq > radius_sq:
                shrink = math.sqrt(radius_sq / norm_sq)
                w *= shrink
                b *= shrink
            if t >= tail_start:
                w_sum += w
                b_sum += b
                tail_count += 1

    candidates = [
        (w_sum / tail_count, b_sum / tail_count),
        (w, b),
        (np.zeros(n_features), 0.0),
    ]
    best_w, best_b = min(candidates, key=lambda cand: hinge_objective(cand[0], cand[1], train, C))
    if not (np.isfinite(best_w).all() and math.isfinite(best_b)):
        raise TrainingError("SVM training diverged to non-finite weights")
    return SVMModel(best_w, float(best_b), C, epochs, seed)
