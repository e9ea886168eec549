import math

import numpy as np
import pytest

from sievekit import (DataError, FeatureSet, Label, build_vocabulary, information_gain,
                      select_features, tokenize, vectorize, vocabulary_from_bags)
from conftest import dataset_from_bodies, message


class TestTokenize:
    def test_counts_and_lowercase(self):
        assert tokenize(message("Buy NOW!! buy")) == {"buy": 2, "now": 1}

    def test_subject_only(self):
        msg = message("ignored body", subject="Re: FREE $$$")
        assert tokenize(msg, fields=("subject",)) == {"re": 1, "free": 1}

    def test_length_limits(self):
        long_token = "a" * 41
        kept_token = "b" * 40
        bag = tokenize(message(f"x {long_token} {kept_token} ok"))
        assert bag == {kept_token: 1, "ok": 1}

    def test_digits_and_boundaries(self):
        assert tokenize(message("win100 now-4u")) == {"win100": 1, "now": 1, "4u": 1}

    def test_fields_aggregate(self):
        msg = message("offer offer", subject="offer time")
        assert tokenize(msg, fields=("subject", "body")) == {"offer": 3, "time": 1}

    def test_non_ascii_is_separator(self):
        assert tokenize(message("café race")) == {"caf": 1, "race": 1}

    def test_empty_fields_rejected(self):
        with pytest.raises(ValueError):
            tokenize(message("hello"), fields=())

    def test_unknown_field_rejected(self):
        with pytest.raises(ValueError):
            tokenize(message("hello"), fields=("headers",))


class TestVocabulary:
    def test_df_counts_presence_not_multiplicity(self):
        ds = dataset_from_bodies(
            ["casino casino casino casino", "casino casino casino"],
            ["hello there", "hello again", "good morning"])
        vocab = build_vocabulary(ds)
        assert vocab.n_docs == 5
        assert vocab.df["casino"] == 2
        assert vocab.df["hello"] == 2

    def test_token_in_every_message(self):
        ds = dataset_from_bodies(["common spamword"], ["common one", "common two"])
        vocab = build_vocabulary(ds)
        assert vocab.df["common"] == vocab.n_docs == 3

    def test_per_class_counts(self):
        ds = dataset_from_bodies(["deal now", "deal today"], ["deal tomorrow", "other text"])
        vocab = build_vocabulary(ds)
        assert vocab.df["deal"] == 3
        assert vocab.spam_df["deal"] == 2
        assert vocab.legit_df["deal"] == 1

    def test_class_counts_sum_to_df(self):
        ds = dataset_from_bodies([f"tok{i} shared" for i in range(5)],
                                 [f"ham{i} shared other" for i in range(4)])
        vocab = build_vocabulary(ds)
        for token, df in vocab.df.items():
            assert vocab.spam_df.get(token, 0) + vocab.legit_df.get(token, 0) == df

    def test_empty_training_set_rejected(self):
        with pytest.raises(DataError):
            vocabulary_from_bags([], [])


class TestInformationGain:
    def test_perfect_indicator_is_one_bit(self):
        # 2 spam + 2 ham; token in both spam, absent from both ham
        ds = dataset_from_bodies(["alpha xx", "alpha yy"], ["zz ww", "vv uu"])
        vocab = build_vocabulary(ds)
        assert information_gain(vocab, "alpha") == pytest.approx(1.0)

    def test_everywhere_token_is_zero_and_ranked_below(self):
        ds = dataset_from_bodies(["alpha both", "alpha both"], ["both zz", "both vv"])
        vocab = build_vocabulary(ds)
        assert information_gain(vocab, "both") == pytest.approx(0.0)
        fs = select_features(vocab, vocab.n_docs + 10)
        assert fs.tokens.index("alpha") < fs.tokens.index("both")

    def test_matches_contingency_table_enumeration(self):
        # independent oracle: scan the messages and tabulate the 2x2 table directly
        rng = np.random.default_rng(17)
        tokens = [f"t{i}" for i in range(12)]
        for _ in range(20):
            n = int(rng.integers(4, 21))
            while True:
                labels = rng.random(n) < 0.5
                if labels.any() and not labels.all():
                    break
            docs = [set(np.array(tokens, dtype=object)[rng.random(12) < 0.35]) for _ in range(n)]
            bags = [{t: 1 for t in doc} for doc in docs]
            vocab = vocabulary_from_bags(bags, [Label.SPAM if s else Label.LEGITIMATE
                                                for s in labels])

            def h(counts):
                total = sum(counts)
                return -sum(c / total * math.log2(c / total) for c in counts if c)

            for token in vocab.df:
                with_tok = [bool(labels[i]) for i in range(n) if token in docs[i]]
                without = [bool(labels[i]) for i in range(n) if token not in docs[i]]
                expected = h([int(labels.sum()), int(n - labels.sum())])
                for side in (with_tok, without):
                    if side:
                        expected -= len(side) / n * h([sum(side), len(side) - sum(side)])
                assert information_gain(vocab, token) == pytest.approx(expected, abs=1e-12)


class TestSelectFeatures:
    def test_d_larger_than_vocabulary_returns_all(self):
        ds = dataset_from_bodies(["one two three four"], ["five six seven"])
        vocab = build_vocabulary(ds)
        fs = select_features(vocab, 10)
        assert fs.d == 7
        assert set(fs.tokens) == set(vocab.df)

    def test_ties_break_lexicographically(self):
        # bravo and alpha have identical presence patterns, hence identical gain
        ds = dataset_from_bodies(["alpha bravo", "alpha bravo"], ["noise xx", "noise yy"])
        vocab = build_vocabulary(ds)
        fs = select_features(vocab, 2)
        assert fs.tokens == ("alpha", "bravo")

    def test_deterministic(self):
        ds = dataset_from_bodies([f"s{i} common" for i in range(6)],
                                 [f"h{i} common" for i in range(6)])
        vocab = build_vocabulary(ds)
        assert select_features(vocab, 5) == select_features(vocab, 5)

    @pytest.mark.parametrize("d", [0, -3])
    def test_non_positive_d_rejected(self, d):
        ds = dataset_from_bodies(["spam words"], ["ham words"])
        with pytest.raises(ValueError):
            select_features(build_vocabulary(ds), d)


class TestVectorize:
    def test_present_indices(self):
        fs = FeatureSet(("buy", "now"))
        assert vectorize({"buy": 2}, fs).tolist() == [0]

    def test_empty_bag(self):
        fs = FeatureSet(("buy", "now"))
        assert vectorize({}, fs).tolist() == []

    def test_out_of_set_tokens_ignored(self):
        fs = FeatureSet(("buy", "now"))
        assert vectorize({"other": 3, "words": 1}, fs).tolist() == []

    def test_indices_sorted_and_in_range(self):
        rng = np.random.default_rng(3)
        tokens = tuple(f"t{i}" for i in range(30))
        fs = FeatureSet(tokens)
        for _ in range(25):
            chosen = [tokens[j] for j in rng.integers(0, 30, size=10)]
            bag = {t: 1 for t in chosen}
            bag["unknown"] = 2
            vec = vectorize(bag, fs)
            assert (np.diff(vec) > 0).all() if len(vec) > 1 else True
            assert ((vec >= 0) & (vec < fs.d)).all()

    def test_duplicate_feature_tokens_rejected(self):
        with pytest.raises(ValueError):
            FeatureSet(("dup", "dup"))
