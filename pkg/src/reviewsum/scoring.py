"""Per-sentence salience: readability, sentiment strength, aspect relevance.

The three signals are normalized to [0,1] and multiplied into a combined
opinion score. Raw values are kept on the score object for reporting.
Everything here is pure; scoring may fan out across sentences freely.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .aspects import AspectClass
from .corpus import Sentence
from .embedding import cosine, word_vector
from .errors import DataError

FLESCH_BASE = 206.835
FLESCH_PER_WORD = 1.015
FLESCH_PER_SYLLABLE = 84.6

NEUTRAL_POLARITY = 2
MAX_POLARITY = 4


@dataclass(frozen=True)
class OpinionScore:
    readability_raw: float
    readability: float
    polarity: int
    sentiment_strength_raw: int
    sentiment_strength: float
    relevance_raw: float
    relevance: float
    combined: float


@dataclass(frozen=True)
class SentimentLexicon:
    valences: dict[str, int]
    negations: frozenset[str]

    def __post_init__(self):
        if not self.valences:
            raise DataError("sentiment lexicon is empty")
        bad = {w: v for w, v in self.valences.items() if v not in (-2, -1, 1, 2)}
        if bad:
            raise DataError(f"lexicon valences outside {{-2,-1,+1,+2}}: {bad}")


def load_lexicon(path: str | Path) -> SentimentLexicon:
    """Parse a ``word<TAB>valence`` file with an optional [negations] section."""
    path = Path(path)
    valences: dict[str, int] = {}
    negations: set[str] = set()
    in_negations = False
    for lineno, line in enumerate(path.read_text("utf-8").splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line == "[negations]":
            in_negations = True
            continue
        if in_negations:
            negations.add(line.lower())
            continue
        word, sep, val = line.partition("\t")
        if not sep:
            raise DataError(f"{path}:{lineno}: expected 'word<TAB>valence'")
        try:
            valences[word.strip().lower()] = int(val)
        except ValueError:
            raise DataError(f"{path}:{lineno}: bad valence {val!r}") from None
    return SentimentLexicon(valences=valences, negations=frozenset(negations))


def load_default_lexicon() -> SentimentLexicon:
    return load_lexicon(Path(str(resources.files(__package__) / "data" / "sentiment_lexicon.txt")))


# ---------------------------------------------------------------------------
# readability

_VOWEL_GROUP = re.compile(r"[aeiouy]+")
_NON_ALPHA = re.compile(r"[^a-z]+")


def count_syllables(word: str) -> int:
    """Heuristic syllable count: vowel groups with a silent-e correction.

    "cat" -> 1, "monument" -> 3, "place" -> 2 groups minus the silent e -> 1.
    Never returns less than 1. Raises on words with no characters left after
    stripping non-letters; callers filter those out.
    """
    word = _NON_ALPHA.sub("", word.lower())
    if not word:
        raise ValueError("cannot count syllables of an empty word")
    groups = len(_VOWEL_GROUP.findall(word))
    if word.endswith("e") and not word.endswith("le") and groups > 1:
        groups -= 1
    return max(1, groups)


def flesch_reading_ease(sentence: Sentence) -> float:
    """Flesch Reading Ease of a single sentence (sentence count fixed at 1).

    May fall outside [0,100]; normalization happens when the combined score
    is assembled, so the raw metric stays inspectable.
    """
    words = sentence.word_count
    if words < 1:
        raise ValueError(f"sentence {sentence.id} has no words")
    syllables = 0
    for token in sentence.tokens:
        stripped = _NON_ALPHA.sub("", token)
        syllables += count_syllables(stripped) if stripped else 1
    return FLESCH_BASE - FLESCH_PER_WORD * words - FLESCH_PER_SYLLABLE * (syllables / words)


# ---------------------------------------------------------------------------
# sentiment

def sentiment_polarity(sentence: Sentence, lexicon: SentimentLexicon) -> int:
    """Lexicon polarity on the 0-4 scale (0 most negative, 4 most positive).

    Token valences are summed; a negation word flips the sign of the next
    lexicon hit. The sum is clamped to [-2,+2] and shifted by +2, so a
    sentence with no lexicon hits is neutral (2).
    """
    total = 0
    flip = False
    for token in sentence.tokens:
        if token in lexicon.negations:
            flip = not flip
            continue
        valence = lexicon.valences.get(token)
        if valence is None:
            continue
        total += -valence if flip else valence
        flip = False
    total = max(-2, min(2, total))
    return total + NEUTRAL_POLARITY


def sentiment_strength(polarity: int) -> int:
    """Distance of a 0-4 polarity from neutral: an integer in [0,2]."""
    if not 0 <= polarity <= MAX_POLARITY:
        raise ValueError(f"polarity {polarity} outside [0,{MAX_POLARITY}]")
    return abs(polarity - NEUTRAL_POLARITY)


# ---------------------------------------------------------------------------
# aspect relevance

def relevance(sentence: Sentence, selected_aspects: list[AspectClass], table) -> float:
    """Max over content words of max over chosen aspects of cosine similarity.

    Sentences with no in-vocabulary content token score 0. Raw value is in
    [-1,1]; clamping to [0,1] happens at score assembly.
    """
    if not selected_aspects:
        raise ValueError("relevance needs a non-empty aspect selection")
    best = None
    for token in sentence.content_tokens:
        vec = word_vector(table, token)
        if vec is None:
            continue
        for aspect in selected_aspects:
            sim = cosine(vec, aspect.embedding)
            if best is None or sim > best:
                best = sim
    return 0.0 if best is None else best


def best_aspect(sentence: Sentence, selected_aspects: list[AspectClass], table) -> str:
    """Label of the aspect achieving the relevance max; ties keep catalog order.

    Sentences with no in-vocabulary content token get "unassigned".
    """
    best_label, best_sim = None, None
    for aspect in selected_aspects:
        for token in sentence.content_tokens:
            vec = word_vector(table, token)
            if vec is None:
                continue
            sim = cosine(vec, aspect.embedding)
            if best_sim is None or sim > best_sim:
                best_label, best_sim = aspect.label, sim
    return best_label if best_label is not None else "unassigned"


# ---------------------------------------------------------------------------
# combination

def opinion_score(
    sentence: Sentence,
    selected_aspects: list[AspectClass],
    lexicon: SentimentLexicon,
    table,
) -> OpinionScore:
    """Populate the full score breakdown for one sentence.

    combined = clamp(flesch, 0, 100)/100 * |polarity - 2|/2 * max(relevance, 0),
    each factor normalized to [0,1] before multiplying so that no single
    scale dominates the downstream selection objective.
    """
    raw_read = flesch_reading_ease(sentence)
    readability = min(max(raw_read, 0.0), 100.0) / 100.0
    polarity = sentiment_polarity(sentence, lexicon)
    strength_raw = sentiment_strength(polarity)
    strength = strength_raw / 2.0
    raw_rel = relevance(sentence, selected_aspects, table)
    rel = max(raw_rel, 0.0)
    return OpinionScore(
        readability_raw=raw_read,
        readability=readability,
        polarity=polarity,
        sentiment_strength_raw=strength_raw,
        sentiment_strength=strength,
        relevance_raw=raw_rel,
        relevance=rel,
        combined=readability * strength * rel,
    )
