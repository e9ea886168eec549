"""Generate a synthetic corpus with known class distributions.

The generator draws i.i.d. tokens per message from a per-class distribution,
which makes classifier behavior analytically checkable. This script builds a
corpus with partially overlapping vocabularies, writes it in the on-disk
spam/ + ham/ layout, and reloads it.
"""

import tempfile
from pathlib import Path

from sievekit import GeneratorSpec, generate, load_dataset, split, tokenize, write_corpus

spam_dist = {"casino": 0.25, "winner": 0.2, "cash": 0.15, "hello": 0.2, "account": 0.2}
ham_dist = {"meeting": 0.25, "report": 0.2, "budget": 0.15, "hello": 0.2, "account": 0.2}

spec = GeneratorSpec(
    n_messages=1000,
    spam_fraction=0.4,
    spam_tokens=spam_dist,
    legit_tokens=ham_dist,
    tokens_per_message=(5, 15),
    seed=7,
)
ds = generate(spec)
print(f"generated {len(ds)} messages, {ds.spam_count} spam "
      f"({100 * ds.spam_count / len(ds):.1f}%, asked for 40%)")

first, label = ds.items[0]
print(f"\nfirst message ({label.name}): {first.body!r}")
print("its token bag:", tokenize(first))

root = Path(tempfile.mkdtemp()) / "corpus"
write_corpus(ds, root)
print(f"\nwrote corpus under {root}")
print("spam files:", len(list((root / 'spam').iterdir())),
      "| ham files:", len(list((root / 'ham').iterdir())))

reloaded = load_dataset(root)
print("reloaded size:", len(reloaded), "spam:", reloaded.spam_count)

train, test = split(reloaded, 0.7, seed=1)
print(f"\nstratified 70/30 split: train {len(train)} ({train.spam_count} spam), "
      f"test {len(test)} ({test.spam_count} spam)")
