"""Email corpus handling: raw message parsing, directory-layout loading, stratified splits.

Messages follow a minimal RFC-822-like shape (header block, blank line, body).
MIME decoding is deliberately out of scope; the body is taken verbatim.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import numpy as np

from .errors import DataError

_HEADER_RE = re.compile(r"^([^\s:]+):(.*)$")

# Subdirectory names of the on-disk corpus layout, in label order.
LABEL_DIRS = (("ham", 0), ("spam", 1))


class Label(enum.IntEnum):
    """Message class. LEGITIMATE sorts before SPAM everywhere (files, CSV, splits)."""

    LEGITIMATE = 0
    SPAM = 1


@dataclass(frozen=True)
class EmailMessage:
    """One parsed message: ordered header fields plus verbatim body text."""

    headers: tuple[tuple[str, str], ...]
    body: str
    id: str = ""

    def __post_init__(self):
        for name, _ in self.headers:
            if not name or ":" in name or any(c.isspace() for c in name):
                raise ValueError(f"invalid header name {name!r}")

    @property
    def subject(self) -> str:
        """Value of the first header named Subject (case-insensitive), else ""."""
        for name, value in self.headers:
            if name.lower() == "subject":
                return value
        return ""


@dataclass(frozen=True)
class LabeledDataset:
    """Immutable ordered collection of (message, label) pairs with unique message ids."""

    items: tuple[tuple[EmailMessage, Label], ...]

    def __post_init__(self):
        ids = [msg.id for msg, _ in self.items]
        if len(set(ids)) != len(ids):
            raise DataError("duplicate message ids in dataset")

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    @property
    def spam_count(self) -> int:
        return sum(1 for _, y in self.items if y is Label.SPAM)

    @property
    def legit_count(self) -> int:
        return len(self.items) - self.spam_count

    def labels(self) -> list[Label]:
        return [y for _, y in self.items]

    def messages(self) -> list[EmailMessage]:
        return [m for m, _ in self.items]


def parse_message(raw: bytes | str, message_id: str = "") -> EmailMessage:
    """Parse raw message text into headers and body. Total: never raises on content.

    The header block is the run of leading lines matching ``Name: value``;
    continuation lines starting with whitespace fold into the previous value.
    Everything after the first blank line is body. A non-matching line ends
    the header block and starts the body at that line.
    """
    if isinstance(raw, bytes):
        text = raw.decode("utf-8", errors="replace")
    else:
        text = raw
    lines = text.split("\n")
    headers: list[tuple[str, str]] = []
    body_lines: list[str] = []
    for i, line in enumerate(lines):
        stripped = line.rstrip("\r")
        if stripped == "":
            body_lines = lines[i + 1 :]
            break
        if stripped[0] in " \t" and headers:
            name, value = headers[-1]
            headers[-1] = (name, (value + " " + stripped.strip()).strip())
            continue
        m = _HEADER_RE.match(stripped)
        if m is None:
            body_lines = lines[i:]
            break
        headers.append((m.group(1), m.group(2).strip()))
    return EmailMessage(tuple(headers), "\n".join(body_lines), message_id)


def render_message(msg: EmailMessage) -> str:
    """Serialize a message as header lines, a blank line, then the body.

    Re-parsing the result yields an equal message (parse_message is idempotent
    on its own rendering).
    """
    head = "".join(f"{name}: {value}\n" for name, value in msg.headers)
    return head + "\n" + msg.body


def load_dataset(root: str | Path) -> LabeledDataset:
    """Load a ``root/spam/*`` + ``root/ham/*`` corpus, one message per file.

    Items are ordered by (label, filename) so the result is independent of
    filesystem enumeration order. Ids are ``<dir>/<filename>``.
    """
    root = Path(root)
    for sub, _ in LABEL_DIRS:
        if not (root / sub).is_dir():
            raise DataError(f"missing corpus directory: {root / sub}")
    items: list[tuple[EmailMessage, Label]] = []
    for sub, value in LABEL_DIRS:
        label = Label(value)
        paths = sorted((p for p in (root / sub).iterdir() if p.is_file()), key=lambda p: p.name)
        for path in paths:
            try:
                raw = path.read_bytes()
            except OSError as exc:
                raise DataError(f"unreadable message file {path}: {exc}") from exc
            items.append((parse_message(raw, message_id=f"{sub}/{path.name}"), label))
    return LabeledDataset(tuple(items))


def write_corpus(ds: LabeledDataset, root: str | Path) -> None:
    """Write a dataset back out in the spam/ + ham/ directory layout."""
    root = Path(root)
    dirs = {Label(value): root / sub for sub, value in LABEL_DIRS}
    for path in dirs.values():
        path.mkdir(parents=True, exist_ok=True)
    for msg, label in ds:
        stem = msg.id.replace("/", "_") if msg.id else "message"
        (dirs[label] / f"{stem}.txt").write_bytes(render_message(msg).encode("utf-8"))


def split(
    ds: LabeledDataset, train_fraction: float, seed: int
) -> tuple[LabeledDataset, LabeledDataset]:
    """Deterministic stratified train/test split.

    Each label class is shuffled by a seeded PCG64 permutation and the first
    floor(train_fraction * class_size) items go to train. Identical
    (ds, train_fraction, seed) always yields the identical split.
    """
    if not 0.0 < train_fraction < 1.0:
        raise ValueError(f"train_fraction must be in (0, 1), got {train_fraction}")
    if len(ds) == 0:
        raise DataError("cannot split an empty dataset")
    rng = np.random.default_rng(seed)
    train_items: list[tuple[EmailMessage, Label]] = []
    test_items: list[tuple[EmailMessage, Label]] = []
    for label in (Label.LEGITIMATE, Label.SPAM):
        group = [item for item in ds.items if item[1] is label]
        perm = rng.permutation(len(group))
        # floor of the exact product; parse the fraction via its decimal string
        # so e.g. 0.7 of 10 gives 7, not 6 from binary round-off
        cut = int(Fraction(str(train_fraction)) * len(group))
        shuffled = [group[j] for j in perm]
        train_items.extend(shuffled[:cut])
        test_items.extend(shuffled[cut:])
    if not train_items or not test_items:
        raise DataError(
            f"train_fraction {train_fraction} leaves an empty train or test set "
            f"for a dataset of size {len(ds)}"
        )
    return LabeledDataset(tuple(train_items)), LabeledDataset(tuple(test_items))
