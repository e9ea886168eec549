"""Shared test helpers: tiny corpora and random sparse vectors."""

import numpy as np
import pytest

from sievekit import EmailMessage, Label, LabeledDataset


def message(body, subject=None, msg_id=""):
    headers = (("Subject", subject),) if subject is not None else ()
    return EmailMessage(headers, body, msg_id)


def dataset_from_bodies(spam_bodies, ham_bodies):
    items = []
    for i, body in enumerate(ham_bodies):
        items.append((message(body, msg_id=f"ham-{i}"), Label.LEGITIMATE))
    for i, body in enumerate(spam_bodies):
        items.append((message(body, msg_id=f"spam-{i}"), Label.SPAM))
    return LabeledDataset(tuple(items))


def random_vector(rng, d, p=0.4):
    return np.flatnonzero(rng.random(d) < p).astype(np.int64)


def random_training_pairs(rng, n, d, p=0.4):
    """Random sparse binary vectors with labels, guaranteed to hold both classes."""
    while True:
        labels = rng.random(n) < 0.5
        if labels.any() and not labels.all():
            break
    return [(random_vector(rng, d, p), Label.SPAM if spam else Label.LEGITIMATE)
            for spam in labels]


@pytest.fixture
def tiny_corpus_dir(tmp_path):
    """On-disk corpus with 2 spam and 3 ham messages."""
    spam_dir = tmp_path / "corpus" / "spam"
    ham_dir = tmp_path / "corpus" / "ham"
    spam_dir.mkdir(parents=True)
    ham_dir.mkdir(parents=True)
    (spam_dir / "s1.txt").write_text("Subject: WIN cash\n\nfree money casino offer")
    (spam_dir / "s2.txt").write_text("Subject: cheap meds\n\nbuy pills online casino")
    (ham_dir / "h1.txt").write_text("Subject: standup\n\nmeeting notes budget review")
    (ham_dir / "h2.txt").write_text("Subject: lunch\n\nsee you at noon")
    (ham_dir / "h3.txt").write_text("Subject: report\n\nquarterly numbers attached")
    return tmp_path / "corpus"
