"""TF-IDF term weighting with Rocchio-style class centroids.

A message maps to the vector tf_j * ln(n / df_j) over the selected features,
L2-normalized (zero vectors stay zero). Each class is summarized by the mean
of its normalized vectors, and scoring compares cosine similarity against the
two centroids.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .corpus import Label
from .errors import TrainingError
from .features import FeatureSet, TokenBag


def tfidf_weight(tf: int, n_docs: int, df: int) -> float:
    """Weight of a term with tf occurrences when df of n_docs messages contain it."""
    if tf == 0 or df == 0:
        return 0.0
    return tf * math.log(n_docs / df)


@dataclass(eq=False)
class TfIdfModel:
    idf: np.ndarray  # ln(n/df) per feature, 0 where df was 0
    centroid_spam: np.ndarray
    centroid_legit: np.ndarray

    @property
    def d(self) -> int:
        return len(self.idf)


def _bag_vector(bag: TokenBag, fs: FeatureSet, idf: np.ndarray) -> np.ndarray:
    vec = np.zeros(len(idf))
    for token, tf in bag.items():
        j = fs.index_of(token)
        if j is not None:
            vec[j] = tf * idf[j]
    return vec


def tfidf_train(train, fs: FeatureSet) -> TfIdfModel:
    """Fit idf weights and per-class centroids from (TokenBag, Label) pairs.

    Messages with no selected features stay zero vectors; they contribute
    nothing to their class centroid's numerator but still count in the mean's
    denominator.
    """
    n = len(train)
    n_spam = sum(1 for _, y in train if y is Label.SPAM)
    if n_spam == 0 or n_spam == n:
        raise TrainingError("training data must contain both classes")

    df = np.zeros(fs.d)
    for bag, _ in train:
        for token in bag:
            j = fs.index_of(token)
            if j is not None:
                df[j] += 1.0
    missing = int(np.count_nonzero(df == 0))
    if missing:
        warnings.warn(f"{missing} selected feature(s) never occur in the training set; "
                      "their idf weight is fixed at 0")
    idf = np.zeros(fs.d)
    seen = df > 0
    idf[seen] = np.log(n / df[seen])

    centroids = {Label.SPAM: np.zeros(fs.d), Label.LEGITIMATE: np.zeros(fs.d)}
    for bag, y in train:
        vec = _bag_vector(bag, fs, idf)
        norm = float(np.linalg.norm(vec))
        if norm > 0.0:
            vec /= norm
        centroids[y] += vec
    centroids[Label.SPAM] /= n_spam
    centroids[Label.LEGITIMATE] /= n - n_spam
    return TfIdfModel(idf, centroids[Label.SPAM], centroids[Label.LEGITIMATE])


def _cosine(u: np.ndarray, v: np.ndarray) -> float:
    nu = float(np.linalg.norm(u))
    nv = float(np.linalg.norm(v))
    if nu == 0.0 or nv == 0.0:
        return 0.0
    return float(u @ v) / (nu * nv)


def tfidf_score(model: TfIdfModel, bag: TokenBag, fs: FeatureSet) -> float:
    """cosine(query, spam centroid) - cosine(query, legitimate centroid)."""
    query = _bag_vector(bag, fs, model.idf)
    return _cosine(query, model.centroid_spam) - _cosine(query, model.centroid_legit)
