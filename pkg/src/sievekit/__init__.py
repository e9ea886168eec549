"""sievekit: statistical spam filtering toolkit.

Four token-based classifiers (Naive Bayes, linear SVM, TF-IDF/Rocchio,
distance-weighted k-NN) over binary feature vectors, a full evaluation
engine (accuracy through weighted error and TCR, ROC/AUC), a synthetic
corpus generator with known optima, and a seeded experiment harness.
"""

from .corpus import (EmailMessage, Label, LabeledDataset, load_dataset, parse_message,
                     render_message, split, write_corpus)
from .errors import DataError, SievekitError, TrainingError
from .experiment import ExperimentPlan, derive_seed, run_experiment, subsample, sweep_csv
from .features import (FeatureSet, TokenBag, Vocabulary, build_vocabulary, information_gain,
                       select_features, tokenize, vectorize, vocabulary_from_bags)
from .knn import KNNModel, knn_distances, knn_fit, knn_score
from .metrics import (BasicMetrics, ConfusionCounts, MetricsReport, RocCurve, WeightedMetrics,
                      compute_metrics, compute_weighted, confusion, metrics_csv, metrics_report,
                      metrics_table, roc_csv, roc_curve)
from .models import (EvaluationResult, TrainedModel, classify, evaluate_model, fit_classifier,
                     load_model, save_model, score_bag, score_message, train_model)
from .naive_bayes import NBModel, nb_score, nb_train
from .svm import SVMModel, hinge_objective, svm_score, svm_train
from .synth import GeneratorSpec, generate, load_generator_spec
from .tfidf import TfIdfModel, tfidf_score, tfidf_train, tfidf_weight

__version__ = "0.1.0"

__all__ = [
    "EmailMessage", "Label", "LabeledDataset", "load_dataset", "parse_message",
    "render_message", "split", "write_corpus",
    "DataError", "SievekitError", "TrainingError",
    "ExperimentPlan", "derive_seed", "run_experiment", "subsample", "sweep_csv",
    "FeatureSet", "TokenBag", "Vocabulary", "build_vocabulary", "information_gain",
    "select_features", "tokenize", "vectorize", "vocabulary_from_bags",
    "KNNModel", "knn_distances", "knn_fit", "knn_score",
    "BasicMetrics", "ConfusionCounts", "MetricsReport", "RocCurve", "WeightedMetrics",
    "compute_metrics", "compute_weighted", "confusion", "metrics_csv", "metrics_report",
    "metrics_table", "roc_csv", "roc_curve",
    "EvaluationResult", "TrainedModel", "classify", "evaluate_model", "fit_classifier",
    "load_model", "save_model", "score_bag", "score_message", "train_model",
    "NBModel", "nb_score", "nb_train",
    "SVMModel", "hinge_objective", "svm_score", "svm_train",
    "GeneratorSpec", "generate", "load_generator_spec",
    "TfIdfModel", "tfidf_score", "tfidf_train", "tfidf_weight",
    "__version__",
]
