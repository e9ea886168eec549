"""Distance-weighted k-nearest-neighbor voting over binary feature vectors.

The distance between two vectors is the per-feature weighted mismatch count
(plain Hamming distance when all feature weights are 1). The k closest
training vectors vote with weight 1/distance^n for their own class; any
neighbor at distance zero short-circuits the vote to a zero-distance count
comparison.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .corpus import Label


@dataclass(eq=False)
class KNNModel:
    vectors: list[np.ndarray]  # training index arrays, in training order
    labels: np.ndarray  # Label values aligned with vectors
    k: int
    vote_exponent: float
    feature_weights: np.ndarray
    n_features: int
    _dense: np.ndarray = field(init=False, repr=False)  # (n, d) float 0/1 matrix

    def __post_init__(self):
        dense = np.zeros((len(self.vectors), self.n_features))
        for i, vec in enumerate(self.vectors):
            dense[i, vec] = 1.0
        self._dense = dense

    @property
    def d(self) -> int:
        return self.n_features


def knn_fit(train, k: int, *, n_features: int, vote_exponent: float = 1.0,
            feature_weights=None) -> KNNModel:
    """Store the training vectors; validation only, no optimization happens."""
    if k <= 0:
        raise ValueError(f"k must be positive, got {k}")
    if k > len(train):
        raise ValueError(f"k={k} exceeds training size {len(train)}")
    if vote_exponent < 0:
        raise ValueError(f"vote exponent must be non-negative, got {vote_exponent}")
    if feature_weights is None:
        weights = np.ones(n_features)
    else:
        weights = np.asarray(feature_weights, dtype=float)
        if weights.shape != (n_features,):
            raise ValueError(f"feature weights must have shape ({n_features},)")
        if (weights < 0).any():
            raise ValueError("feature weights must be non-negative")
    labels = np.array([int(y) for _, y in train], dtype=np.int8)
    return KNNModel([vec for vec, _ in train], labels, k, vote_exponent, weights, n_features)


def knn_distances(model: KNNModel, x: np.ndarray) -> np.ndarray:
    """Weighted mismatch distance from x to every training vector.

    Computed as |X - q| @ weights, which only ever adds selected weights, so a
    distance is exactly 0.0 iff no positively-weighted feature differs.
    """
    q = np.zeros(model.n_features)
    q[x] = 1.0
    return np.abs(model._dense - q) @ model.feature_weights


def knn_score(model: KNNModel, x: np.ndarray) -> float:
    """Vote(SPAM) - Vote(LEGITIMATE) over the k nearest training vectors.

    Distance ties are broken by training order (earlier wins). If any chosen
    neighbor sits at distance zero, the score is the count of zero-distance
    spam neighbors minus the count of zero-distance legitimate ones and the
    rest are ignored.
    """
    dist = knn_distances(model, x)
    return _score_from_distances(model, dist)


def _score_from_distances(model: KNNModel, dist: np.ndarray) -> float:
    order = np.argsort(dist, kind="stable")[: model.k]
    near_dist = dist[order]
    near_spam = model.labels[order] == int(Label.SPAM)
    zero = near_dist == 0.0
    if zero.any():
        return float(np.count_nonzero(zero & near_spam) - np.count_nonzero(zero & ~near_spam))
    votes = 1.0 / near_dist**model.vote_exponent
    return float(votes[near_spam].sum() - votes[~near_spam].sum())
