"""Exception types shared across the toolkit."""


class SievekitError(Exception):
    """Base class for all toolkit errors."""


class DataError(SievekitError):
    """Corpus, dataset, or configuration problem (missing directory, bad spec file, ...)."""


class TrainingError(SievekitError):
    """Training cannot proceed or failed (single-class data, diverged optimizer, ...)."""
