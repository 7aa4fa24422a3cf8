import json

import pytest

from reviewsum.corpus import (
    CorpusStore,
    Gender,
    Review,
    build_place_corpus,
    compute_stats,
    ingest_reviews,
    iter_csv,
    iter_jsonl,
    load_default_abbreviations,
    load_default_stopwords,
    preprocess,
    segment_sentences,
    segment_text,
    tokenize,
)
from reviewsum.errors import DataError

STOPWORDS = load_default_stopwords()
ABBREV = load_default_abbreviations()


def record(i, gender="M", place="testville", text="A lovely spot. Great views!", likes=0):
    return {
        "id": f"r{i:04d}",
        "place": place,
        "text": text,
        "rating": 5,
        "likes": likes,
        "username": f"user{i}",
        "gender": gender,
    }


def stream(records):
    return [(lineno, rec, None) for lineno, rec in enumerate(records, start=1)]


def make_review(text, rid="r1", gender=Gender.MALE, likes=0, place="p"):
    return Review(
        id=rid, place=place, text=text, rating=4, likes=likes, username="u", gender=gender
    )


class TestIngest:
    def test_empty_stream_is_not_an_error(self):
        result = ingest_reviews([], "testville")
        assert result.reviews == [] and result.errors == []
        stats = compute_stats("testville", result.reviews, [])
        assert (stats.review_count, stats.female_count, stats.male_count) == (0, 0, 0)

    def test_missing_text_reported_with_line_number(self):
        records = stream([record(1), record(2), record(3)])
        del records[1][1]["text"]
        result = ingest_reviews(records, "testville")
        assert len(result.reviews) == 2
        assert len(result.errors) == 1
        assert result.errors[0].line == 2
        assert "text" in result.errors[0].message

    def test_thousand_reviews_with_known_gender_split(self):
        records = [record(i, gender="F" if i < 398 else "M") for i in range(1000)]
        result = ingest_reviews(stream(records), "testville")
        assert not result.errors
        stats = compute_stats("testville", result.reviews, [])
        assert stats.female_count == 398
        assert stats.male_count == 602

    def test_validation_failures(self):
        bad = [
            record(1) | {"rating": 9},
            record(2) | {"likes": -3},
            record(3) | {"gender": "X"},
            record(4) | {"id": ""},
            record(5) | {"text": "   "},
        ]
        result = ingest_reviews(stream(bad), "testville")
        assert not result.reviews
        assert [e.line for e in result.errors] == [1, 2, 3, 4, 5]

    def test_duplicate_ids_rejected(self):
        result = ingest_reviews(stream([record(7), record(7)]), "testville")
        assert len(result.reviews) == 1
        assert "duplicate" in result.errors[0].message

    def test_other_place_records_skipped(self):
        records = stream([record(1), record(2, place="elsewhere")])
        result = ingest_reviews(records, "testville")
        assert len(result.reviews) == 1
        assert result.skipped_other_place == 1

    def test_gender_codes_parse_case_insensitively(self):
        records = stream([record(1, gender="f"), record(2, gender="Male"), record(3, gender="U")])
        result = ingest_reviews(records, "testville")
        assert [r.gender for r in result.reviews] == [Gender.FEMALE, Gender.MALE, Gender.UNKNOWN]

    def test_determinism(self):
        records = [record(i, gender="F" if i % 3 else "M") for i in range(25)]
        a = ingest_reviews(stream(records), "testville")
        b = ingest_reviews(stream(records), "testville")
        assert a.reviews == b.reviews


class TestSegmentation:
    def test_two_terminal_punctuations(self):
        sents = segment_text("Great place. Go early!", ABBREV)
        assert sents == ["Great place.", "Go early!"]

    def test_no_terminal_punctuation_single_unit(self):
        assert segment_text("Amazing", ABBREV) == ["Amazing"]

    def test_abbreviation_does_not_split(self):
        assert segment_text("U.S. visitors loved it.", ABBREV) == ["U.S. visitors loved it."]

    def test_title_abbreviation_does_not_split(self):
        assert segment_text("Dr. Gupta guided us. Superb!", ABBREV) == [
            "Dr. Gupta guided us.",
            "Superb!",
        ]

    def test_wordless_text_yields_nothing(self):
        review = make_review("!!! ... ???")
        assert segment_sentences(review, STOPWORDS, ABBREV) == []

    def test_wordless_fragment_merges_into_neighbor(self):
        sents = segment_text("Wonderful!!! !!! Really.", ABBREV)
        assert len(sents) == 2
        assert sents[0].startswith("Wonderful")

    @pytest.mark.parametrize(
        "text",
        [
            "Great place. Go early!",
            "We waited 2 hrs. in line... then gave up. Sad!",
            "Mr. Smith (our guide) was great. 10/10 would return.",
            "One sentence only",
        ],
    )
    def test_concatenation_reconstructs_text_modulo_whitespace(self, text):
        sents = segment_text(text, ABBREV)
        assert "".join("".join(s.split()) for s in sents) == "".join(text.split())

    def test_sentences_have_words_and_inherit_gender(self):
        review = make_review("Great place. Go early!", gender=Gender.FEMALE)
        sents = segment_sentences(review, STOPWORDS, ABBREV)
        assert [s.word_count for s in sents] == [2, 2]
        assert all(s.gender is Gender.FEMALE for s in sents)
        assert [s.id for s in sents] == ["r1:0", "r1:1"]


class TestPreprocess:
    def test_example_sentence(self):
        tokens, content = preprocess("The guides were amazing!", STOPWORDS)
        assert tokens == ["the", "guides", "were", "amazing"]
        assert content == ["guides", "amazing"]

    def test_all_stopwords(self):
        _, content = preprocess("It is it.", STOPWORDS)
        assert content == []

    def test_empty_string(self):
        assert preprocess("", STOPWORDS) == ([], [])

    def test_order_preserved_and_subset(self):
        tokens, content = preprocess("the fort and the palace were beautiful", STOPWORDS)
        assert content == ["fort", "palace", "beautiful"]
        it = iter(tokens)
        assert all(c in it for c in content)  # content is an ordered subsequence

    def test_tokenize_strips_punctuation(self):
        assert tokenize("U.S. don't stop-by!") == ["us", "dont", "stopby"]


class TestCorpusBuild:
    def test_word_count_at_least_sentence_count(self):
        reviews = [make_review("Great place. Go early! Wonderful."), make_review("Nice", rid="r2")]
        corpus = build_place_corpus(reviews, "p")
        per_review: dict[str, list[int]] = {}
        for s in corpus.sentences:
            per_review.setdefault(s.review_id, []).append(s.word_count)
        for counts in per_review.values():
            assert sum(counts) >= len(counts)

    def test_zero_sentence_review_skipped(self):
        reviews = [make_review("..."), make_review("Fine place.", rid="r2")]
        corpus = build_place_corpus(reviews, "p")
        assert corpus.skipped_review_ids == ["r1"]
        assert corpus.stats.sentence_count == 1

    def test_stats_match_recount(self):
        reviews = [
            make_review("Good. Bad.", rid=f"r{i}", gender=g)
            for i, g in enumerate([Gender.FEMALE, Gender.MALE, Gender.UNKNOWN, Gender.FEMALE])
        ]
        corpus = build_place_corpus(reviews, "p")
        s = corpus.stats
        assert s.review_count == len(corpus.reviews) == 4
        assert s.female_count == sum(1 for r in corpus.reviews if r.gender is Gender.FEMALE) == 2
        assert s.male_count == 1 and s.unknown_count == 1
        assert s.sentence_count == len(corpus.sentences) == 8


class TestReaders:
    def test_jsonl_reader_reports_bad_lines(self, tmp_path):
        path = tmp_path / "reviews.jsonl"
        lines = [json.dumps(record(1)), "{not json", json.dumps(record(2))]
        path.write_text("\n".join(lines), encoding="utf-8")
        triples = list(iter_jsonl(path))
        assert triples[0][2] is None
        assert triples[1][0] == 2 and "JSON" in triples[1][2]
        result = ingest_reviews(triples, "testville")
        assert len(result.reviews) == 2 and len(result.errors) == 1

    def test_csv_adapter_matches_jsonl(self, tmp_path):
        recs = [record(i, gender="F" if i % 2 else "M", likes=i) for i in range(4)]
        jsonl = tmp_path / "r.jsonl"
        jsonl.write_text("\n".join(json.dumps(r) for r in recs), encoding="utf-8")
        csvfile = tmp_path / "r.csv"
        header = "id,place,text,rating,likes,username,gender"
        rows = [header] + [
            f"{r['id']},{r['place']},\"{r['text']}\",{r['rating']},{r['likes']},{r['username']},{r['gender']}"
            for r in recs
        ]
        csvfile.write_text("\n".join(rows), encoding="utf-8")
        from_jsonl = ingest_reviews(iter_jsonl(jsonl), "testville").reviews
        from_csv = ingest_reviews(iter_csv(csvfile), "testville").reviews
        assert from_jsonl == from_csv


class TestStore:
    def test_round_trip(self, tmp_path):
        reviews = [
            make_review("Great fort. Lovely views!", rid="a", gender=Gender.FEMALE, place="fort-city")
        ]
        corpus = build_place_corpus(reviews, "fort-city")
        store = CorpusStore(tmp_path)
        store.save(corpus)
        loaded = store.load("fort-city")
        assert loaded.place == corpus.place
        assert loaded.reviews == corpus.reviews
        assert loaded.sentences == corpus.sentences
        assert loaded.stats == corpus.stats
        assert store.places() == ["fort-city"]

    def test_bad_magic_rejected(self, tmp_path):
        path = tmp_path / "x.corpus"
        path.write_text("something else\n{}", encoding="utf-8")
        with pytest.raises(DataError, match="magic"):
            CorpusStore(tmp_path).load("x")

    def test_missing_place(self, tmp_path):
        with pytest.raises(DataError, match="no corpus"):
            CorpusStore(tmp_path).load("atlantis")
