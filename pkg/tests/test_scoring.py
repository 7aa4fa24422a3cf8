import math

import numpy as np
import pytest

from reviewsum.aspects import AspectClass
from reviewsum.errors import DataError
from reviewsum.scoring import (
    SentimentLexicon,
    count_syllables,
    flesch_reading_ease,
    load_default_lexicon,
    load_lexicon,
    opinion_score,
    relevance,
    sentiment_polarity,
    sentiment_strength,
)
from support import make_sentence, table_from


def aspect(label, embedding):
    return AspectClass(label=label, terms=(label.lower(),), embedding=np.array(embedding, float))


def hand_cosine(u, v):
    # independent of reviewsum.embedding.cosine on purpose
    dot = sum(a * b for a, b in zip(u, v))
    nu = math.sqrt(sum(a * a for a in u))
    nv = math.sqrt(sum(b * b for b in v))
    return 0.0 if nu == 0 or nv == 0 else dot / (nu * nv)


FIXTURE_LEXICON = SentimentLexicon(
    valences={"terrible": -2, "bad": -1, "good": 1, "amazing": 2},
    negations=frozenset({"not"}),
)


class TestSyllables:
    @pytest.mark.parametrize(
        "word,expected",
        [
            ("cat", 1),
            ("monument", 3),
            ("place", 1),
            ("little", 2),
            ("early", 2),
            ("beautiful", 3),
            ("queue", 1),
            ("rhythm", 1),
        ],
    )
    def test_known_words(self, word, expected):
        assert count_syllables(word) == expected

    def test_empty_word_rejected(self):
        with pytest.raises(ValueError):
            count_syllables("")

    def test_minimum_one(self):
        assert count_syllables("tsk") == 1


class TestFlesch:
    def test_the_cat_sat(self):
        sent = make_sentence("The cat sat.")
        assert flesch_reading_ease(sent) == pytest.approx(119.19, abs=1e-3)

    def test_twenty_monosyllables(self):
        text = "The cat and the dog sat on the mat and the sun was hot and the day was good now."
        sent = make_sentence(text)
        assert sent.word_count == 20
        assert flesch_reading_ease(sent) == pytest.approx(101.935, abs=1e-3)

    def test_zero_words_error(self):
        sent = make_sentence("Fine.")
        broken = sent.__class__(**{**sent.__dict__, "word_count": 0})
        with pytest.raises(ValueError):
            flesch_reading_ease(broken)

    def test_invariant_under_reordering(self):
        a = make_sentence("The marble palace glows at sunrise.")
        b = make_sentence("At sunrise the marble palace glows.")
        assert flesch_reading_ease(a) == pytest.approx(flesch_reading_ease(b), abs=1e-12)


class TestSentiment:
    def test_no_hits_is_neutral(self):
        assert sentiment_polarity(make_sentence("The entrance fee."), FIXTURE_LEXICON) == 2

    def test_strong_negative(self):
        assert sentiment_polarity(make_sentence("Just terrible."), FIXTURE_LEXICON) == 0

    def test_negation_flips_next_hit(self):
        assert sentiment_polarity(make_sentence("Not bad."), FIXTURE_LEXICON) == 3

    def test_negation_applies_only_once(self):
        # flip consumes on "bad" (-1 -> +1); "terrible" then counts as is: sum -1
        sent = make_sentence("not bad but terrible")
        assert sentiment_polarity(sent, FIXTURE_LEXICON) == 1

    def test_double_negation_toggles(self):
        assert sentiment_polarity(make_sentence("not not good"), FIXTURE_LEXICON) == 3

    def test_sum_clamped_to_plus_minus_two(self):
        sent = make_sentence("amazing amazing amazing")
        assert sentiment_polarity(sent, FIXTURE_LEXICON) == 4

    @pytest.mark.parametrize("polarity,expected", [(2, 0), (0, 2), (4, 2), (3, 1), (1, 1)])
    def test_strength(self, polarity, expected):
        assert sentiment_strength(polarity) == expected

    def test_strength_symmetry(self):
        for p in range(5):
            assert sentiment_strength(p) == sentiment_strength(4 - p)

    def test_strength_range_check(self):
        with pytest.raises(ValueError):
            sentiment_strength(5)

    def test_default_lexicon_behaviors(self):
        lex = load_default_lexicon()
        assert sentiment_polarity(make_sentence("Simply terrible."), lex) == 0
        assert sentiment_polarity(make_sentence("Not bad at all."), lex) == 3

    def test_lexicon_file_parse_errors(self, tmp_path):
        bad = tmp_path / "lex.txt"
        bad.write_text("good\t1\nweird\tzero\n", encoding="utf-8")
        with pytest.raises(DataError, match="lex.txt:2"):
            load_lexicon(bad)

    def test_lexicon_valence_range_enforced(self, tmp_path):
        bad = tmp_path / "lex.txt"
        bad.write_text("meh\t0\n", encoding="utf-8")
        with pytest.raises(DataError):
            load_lexicon(bad)


class TestRelevance:
    def test_word_equal_to_aspect_embedding(self):
        table = table_from({"tickets": [2.0, 1.0]})
        aspects = [aspect("Cost", [2.0, 1.0])]
        sent = make_sentence("Buy tickets early")
        assert relevance(sent, aspects, table) == pytest.approx(1.0)

    def test_all_oov_sentence(self):
        table = table_from({"x": [1.0, 0.0]})
        sent = make_sentence("wonderful monument")
        assert relevance(sent, [aspect("A", [1.0, 0.0])], table) == 0.0

    def test_two_words_two_aspects_hand_enumeration(self):
        vectors = {"palace": [1.0, 0.0], "gate": [1.0, 1.0]}
        table = table_from(vectors)
        aspects = [aspect("A", [0.0, 1.0]), aspect("B", [1.0, 3.0])]
        sent = make_sentence("palace gate")
        expected = max(
            hand_cosine(vec, asp.embedding) for vec in vectors.values() for asp in aspects
        )
        assert expected == pytest.approx(4 / math.sqrt(20), abs=1e-12)
        assert relevance(sent, aspects, table) == pytest.approx(expected, abs=1e-12)

    def test_empty_aspect_selection_rejected(self):
        table = table_from({"x": [1.0, 0.0]})
        with pytest.raises(ValueError):
            relevance(make_sentence("x"), [], table)

    def test_monotone_in_aspect_set(self):
        rng = np.random.default_rng(11)
        for _ in range(100):
            vocab = {f"w{i}": rng.uniform(-1, 1, 3).tolist() for i in range(6)}
            table = table_from(vocab)
            aspects = [aspect(f"A{i}", rng.uniform(-1, 1, 3).tolist()) for i in range(4)]
            k = int(rng.integers(1, 4))
            sent = make_sentence("w0 w2 w4")
            small = relevance(sent, aspects[:k], table)
            large = relevance(sent, aspects, table)
            assert small <= large + 1e-12


class TestOpinionScore:
    TABLE = table_from({"palace": [1.0, 0.2], "terrible": [0.3, 0.9], "queue": [0.5, 0.5]})
    ASPECTS = [aspect("A", [1.0, 0.0]), aspect("B", [0.0, 1.0])]

    def test_end_to_end_matches_independent_recomputation(self):
        sent = make_sentence("The terrible queue at the palace.")
        got = opinion_score(sent, self.ASPECTS, FIXTURE_LEXICON, self.TABLE)

        raw_read = flesch_reading_ease(sent)
        readability = min(max(raw_read, 0.0), 100.0) / 100.0
        polarity = sentiment_polarity(sent, FIXTURE_LEXICON)
        strength = abs(polarity - 2) / 2.0
        raw_rel = max(
            hand_cosine(self.TABLE.get(w), a.embedding)
            for w in ("terrible", "queue", "palace")
            for a in self.ASPECTS
        )
        combined = readability * strength * max(raw_rel, 0.0)
        assert got.readability == pytest.approx(readability, abs=1e-12)
        assert got.polarity == polarity
        assert got.sentiment_strength == pytest.approx(strength, abs=1e-12)
        assert got.relevance_raw == pytest.approx(raw_rel, abs=1e-12)
        assert got.combined == pytest.approx(combined, abs=1e-12)

    def test_neutral_sentence_combined_zero(self):
        sent = make_sentence("The palace queue.")
        got = opinion_score(sent, self.ASPECTS, FIXTURE_LEXICON, self.TABLE)
        assert got.sentiment_strength == 0.0
        assert got.combined == 0.0

    def test_combined_in_unit_interval(self):
        rng = np.random.default_rng(3)
        lex = load_default_lexicon()
        texts = [
            "Terrible crowds everywhere.",
            "Lovely palace with amazing views!",
            "The gate is a gate.",
            "Not bad for the price.",
        ]
        for text in texts:
            sent = make_sentence(text)
            got = opinion_score(sent, self.ASPECTS, lex, self.TABLE)
            assert 0.0 <= got.combined <= 1.0
            if got.readability == 0 or got.sentiment_strength == 0 or got.relevance == 0:
                assert got.combined == 0.0

    def test_negative_relevance_clamped(self):
        table = table_from({"palace": [-1.0, 0.0]})
        aspects = [aspect("A", [1.0, 0.0])]
        got = opinion_score(make_sentence("Amazing palace!"), aspects, FIXTURE_LEXICON, table)
        assert got.relevance_raw == pytest.approx(-1.0)
        assert got.relevance == 0.0
        assert got.combined == 0.0
