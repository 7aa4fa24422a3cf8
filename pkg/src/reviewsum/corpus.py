"""Review ingestion, sentence segmentation, and tokenization.

A corpus is built per place: reviews come in as JSON Lines (or CSV with the
same column names), get validated, segmented into sentences, and tokenized.
The resulting :class:`PlaceCorpus` is immutable in practice and safe to share
across threads; :class:`CorpusStore` persists one versioned file per place.
"""

from __future__ import annotations

import csv
import json
import logging
import re
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from pathlib import Path
from typing import Iterable, Iterator, Mapping

from .errors import DataError

log = logging.getLogger(__name__)

MAGIC = "reviewsum-corpus v1"


class Gender(str, Enum):
    FEMALE = "F"
    MALE = "M"
    UNKNOWN = "U"


@dataclass(frozen=True)
class Review:
    id: str
    place: str
    text: str
    rating: int
    likes: int
    username: str
    gender: Gender
    country: str | None = None


@dataclass(frozen=True)
class Sentence:
    id: str
    review_id: str
    place: str
    text: str
    tokens: tuple[str, ...]
    content_tokens: tuple[str, ...]
    word_count: int
    gender: Gender

    @property
    def is_female(self) -> bool:
        # Unknown-gender reviewers count as male in the fairness term so that
        # unlabeled data still solves deterministically.
        return self.gender is Gender.FEMALE


@dataclass(frozen=True)
class CorpusStats:
    place: str
    review_count: int
    female_count: int
    male_count: int
    unknown_count: int
    sentence_count: int


@dataclass(frozen=True)
class RecordError:
    """One rejected input record, reported with its source line number."""

    line: int
    message: str


@dataclass
class IngestResult:
    reviews: list[Review]
    errors: list[RecordError]
    skipped_other_place: int = 0


# ---------------------------------------------------------------------------
# tokenization

_NON_ALNUM = re.compile(r"[^a-z0-9]+")


def tokenize(text: str) -> list[str]:
    """Lowercase, whitespace-split, and strip punctuation from each piece.

    The token count of a sentence is its word count (the l_i entering the
    length budget), so pieces that are pure punctuation vanish entirely.
    """
    tokens = []
    for piece in text.lower().split():
        word = _NON_ALNUM.sub("", piece)
        if word:
            tokens.append(word)
    return tokens


def preprocess(sentence_text: str, stopword_list: frozenset[str]) -> tuple[list[str], list[str]]:
    """Return (tokens, content_tokens) for a sentence.

    content_tokens are the tokens with stop-words and pronouns removed,
    original order preserved. May be empty.
    """
    tokens = tokenize(sentence_text)
    content = [t for t in tokens if t not in stopword_list]
    return tokens, content


def load_default_stopwords() -> frozenset[str]:
    text = (resources.files(__package__) / "data" / "stopwords.txt").read_text("utf-8")
    return frozenset(_data_lines(text))


def load_default_abbreviations() -> frozenset[str]:
    text = (resources.files(__package__) / "data" / "abbreviations.txt").read_text("utf-8")
    return frozenset(_data_lines(text))


def _data_lines(text: str) -> Iterator[str]:
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            yield line.lower()


# ---------------------------------------------------------------------------
# sentence segmentation

_BOUNDARY = re.compile(r"([.!?]+)(\s+)")
_DOTTED_INITIALISM = re.compile(r"^(?:[A-Za-z]\.)+[A-Za-z]?$")


def segment_text(text: str, abbreviations: frozenset[str]) -> list[str]:
    """Split raw text into sentence strings on terminal punctuation.

    Periods after known abbreviations ("Mr.", "etc.") and dotted initialisms
    ("U.S.") do not end a sentence. Segments with no word characters are
    merged into their neighbor, so joining the result reproduces the input
    modulo whitespace. Text with no words at all yields an empty list.
    """
    boundaries = []
    for m in _BOUNDARY.finditer(text):
        if "." in m.group(1) and len(m.group(1)) == 1:
            start = m.start(1)
            word_start = start
            while word_start > 0 and not text[word_start - 1].isspace():
                word_start -= 1
            word = text[word_start:start]
            dotted = word + "."
            if _DOTTED_INITIALISM.match(dotted):
                continue
            if word.strip(".").lower() in abbreviations:
                continue
        boundaries.append(m.end(1))

    pieces = []
    prev = 0
    for b in boundaries:
        pieces.append(text[prev:b])
        prev = b
    pieces.append(text[prev:])

    # merge segments that carry no words (e.g. stray "!!!") into a neighbor
    merged: list[str] = []
    pending = ""  # leading wordless text waits for the first real segment
    for piece in pieces:
        if tokenize(piece):
            merged.append(pending + piece)
            pending = ""
        elif merged:
            merged[-1] += piece
        else:
            pending += piece
    return [s.strip() for s in merged]


def segment_sentences(
    review: Review,
    stopwords: frozenset[str],
    abbreviations: frozenset[str],
) -> list[Sentence]:
    """Segment a review into Sentence records; empty result means skip."""
    sentences = []
    for idx, seg in enumerate(segment_text(review.text, abbreviations)):
        tokens, content = preprocess(seg, stopwords)
        if not tokens:
            continue
        sentences.append(
            Sentence(
                id=f"{review.id}:{idx}",
                review_id=review.id,
                place=review.place,
                text=seg,
                tokens=tuple(tokens),
                content_tokens=tuple(content),
                word_count=len(tokens),
                gender=review.gender,
            )
        )
    if not sentences:
        log.warning("review %s has no usable sentences, skipping", review.id)
    return sentences


# ---------------------------------------------------------------------------
# ingestion

_GENDER_CODES = {"f": Gender.FEMALE, "m": Gender.MALE, "u": Gender.UNKNOWN}


def ingest_reviews(records: Iterable[tuple[int, Mapping | None, str | None]], place: str) -> IngestResult:
    """Validate a stream of (line, record, parse_error) triples for one place.

    Malformed records are reported in the result, never silently dropped.
    Records tagged with a different place are counted and skipped; unknown
    fields are ignored. An empty stream is not an error.
    """
    reviews: list[Review] = []
    errors: list[RecordError] = []
    seen_ids: set[str] = set()
    skipped = 0

    for line, rec, parse_error in records:
        if parse_error is not None:
            errors.append(RecordError(line, parse_error))
            continue
        assert rec is not None
        rec_place = rec.get("place")
        if rec_place is not None and str(rec_place) != place:
            skipped += 1
            continue
        problem = _validate(rec)
        if problem:
            errors.append(RecordError(line, problem))
            continue
        rid = str(rec["id"])
        if rid in seen_ids:
            errors.append(RecordError(line, f"duplicate review id {rid!r}"))
            continue
        seen_ids.add(rid)
        country = rec.get("country")
        reviews.append(
            Review(
                id=rid,
                place=place,
                text=str(rec["text"]).strip(),
                rating=int(rec.get("rating", 3)),
                likes=int(rec.get("likes", 0)),
                username=str(rec.get("username", "")),
                gender=_GENDER_CODES[str(rec.get("gender", "U")).lower()[:1]],
                country=str(country) if country is not None else None,
            )
        )

    return IngestResult(reviews=reviews, errors=errors, skipped_other_place=skipped)


def _validate(rec: Mapping) -> str | None:
    if rec.get("id") in (None, ""):
        return "missing id"
    text = rec.get("text")
    if text is None or not str(text).strip():
        return "missing or empty text"
    rating = rec.get("rating", 3)
    try:
        rating = int(rating)
    except (TypeError, ValueError):
        return f"rating not an integer: {rating!r}"
    if not 1 <= rating <= 5:
        return f"rating out of range [1,5]: {rating}"
    likes = rec.get("likes", 0)
    try:
        likes = int(likes)
    except (TypeError, ValueError):
        return f"likes not an integer: {likes!r}"
    if likes < 0:
        return f"negative likes: {likes}"
    gender = str(rec.get("gender", "U")).lower()[:1]
    if gender not in _GENDER_CODES:
        return f"unrecognized gender code: {rec.get('gender')!r}"
    return None


def iter_jsonl(path: str | Path) -> Iterator[tuple[int, dict | None, str | None]]:
    """Yield (line_number, record, parse_error) triples from a JSONL file."""
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError as exc:
                yield lineno, None, f"invalid JSON: {exc.msg}"
                continue
            if not isinstance(rec, dict):
                yield lineno, None, "record is not a JSON object"
                continue
            yield lineno, rec, None


def iter_csv(path: str | Path) -> Iterator[tuple[int, dict | None, str | None]]:
    """CSV adapter with the same column names as the JSONL schema."""
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        for rec in reader:
            cleaned = {k: v for k, v in rec.items() if v not in (None, "")}
            yield reader.line_num, cleaned, None


# ---------------------------------------------------------------------------
# corpus assembly and persistence

@dataclass
class PlaceCorpus:
    place: str
    reviews: list[Review]
    sentences: list[Sentence]
    stats: CorpusStats
    skipped_review_ids: list[str] = field(default_factory=list)

    def review_by_id(self, review_id: str) -> Review:
        return self._review_index[review_id]

    def __post_init__(self):
        self._review_index = {r.id: r for r in self.reviews}


def compute_stats(place: str, reviews: list[Review], sentences: list[Sentence]) -> CorpusStats:
    female = sum(1 for r in reviews if r.gender is Gender.FEMALE)
    male = sum(1 for r in reviews if r.gender is Gender.MALE)
    unknown = sum(1 for r in reviews if r.gender is Gender.UNKNOWN)
    return CorpusStats(
        place=place,
        review_count=len(reviews),
        female_count=female,
        male_count=male,
        unknown_count=unknown,
        sentence_count=len(sentences),
    )


def build_place_corpus(
    reviews: list[Review],
    place: str,
    stopwords: frozenset[str] | None = None,
    abbreviations: frozenset[str] | None = None,
) -> PlaceCorpus:
    """Segment and tokenize validated reviews into an indexed sentence pool."""
    stopwords = stopwords if stopwords is not None else load_default_stopwords()
    abbreviations = abbreviations if abbreviations is not None else load_default_abbreviations()
    sentences: list[Sentence] = []
    skipped: list[str] = []
    for review in reviews:
        segd = segment_sentences(review, stopwords, abbreviations)
        if not segd:
            skipped.append(review.id)
            continue
        sentences.extend(segd)
    stats = compute_stats(place, reviews, sentences)
    return PlaceCorpus(place=place, reviews=reviews, sentences=sentences, stats=stats, skipped_review_ids=skipped)


class CorpusStore:
    """One versioned corpus file per place under a data directory."""

    def __init__(self, data_dir: str | Path):
        self.data_dir = Path(data_dir)

    def _path(self, place: str) -> Path:
        slug = re.sub(r"[^A-Za-z0-9_-]+", "_", place)
        return self.data_dir / f"{slug}.corpus"

    def save(self, corpus: PlaceCorpus) -> Path:
        self.data_dir.mkdir(parents=True, exist_ok=True)
        payload = {
            "place": corpus.place,
            "skipped_review_ids": corpus.skipped_review_ids,
            "reviews": [
                {
                    "id": r.id,
                    "place": r.place,
                    "text": r.text,
                    "rating": r.rating,
                    "likes": r.likes,
                    "username": r.username,
                    "gender": r.gender.value,
                    "country": r.country,
                }
                for r in corpus.reviews
            ],
            "sentences": [
                {
                    "id": s.id,
                    "review_id": s.review_id,
                    "text": s.text,
                    "tokens": list(s.tokens),
                    "content_tokens": list(s.content_tokens),
                    "gender": s.gender.value,
                }
                for s in corpus.sentences
            ],
        }
        path = self._path(corpus.place)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(MAGIC + "\n")
            json.dump(payload, fh, ensure_ascii=False)
        return path

    def load(self, place: str) -> PlaceCorpus:
        path = self._path(place)
        if not path.exists():
            raise DataError(f"no corpus for place {place!r} under {self.data_dir}")
        with open(path, encoding="utf-8") as fh:
            header = fh.readline().rstrip("\n")
            if header != MAGIC:
                raise DataError(f"{path}: bad magic header {header!r}, expected {MAGIC!r}")
            payload = json.load(fh)
        reviews = [
            Review(
                id=r["id"],
                place=payload["place"],
                text=r["text"],
                rating=r["rating"],
                likes=r["likes"],
                username=r["username"],
                gender=Gender(r["gender"]),
                country=r.get("country"),
            )
            for r in payload["reviews"]
        ]
        sentences = [
            Sentence(
                id=s["id"],
                review_id=s["review_id"],
                place=payload["place"],
                text=s["text"],
                tokens=tuple(s["tokens"]),
                content_tokens=tuple(s["content_tokens"]),
                word_count=len(s["tokens"]),
                gender=Gender(s["gender"]),
            )
            for s in payload["sentences"]
        ]
        stats = compute_stats(payload["place"], reviews, sentences)
        return PlaceCorpus(
            place=payload["place"],
            reviews=reviews,
            sentences=sentences,
            stats=stats,
            skipped_review_ids=payload.get("skipped_review_ids", []),
        )

    def places(self) -> list[str]:
        if not self.data_dir.is_dir():
            return []
        out = []
        for path in sorted(self.data_dir.glob("*.corpus")):
            with open(path, encoding="utf-8") as fh:
                if fh.readline().rstrip("\n") != MAGIC:
                    continue
                out.append(json.load(fh)["place"])
        return out
