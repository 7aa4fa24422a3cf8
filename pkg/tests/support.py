"""Shared fixture builders for the test suite."""

from __future__ import annotations

import numpy as np

from reviewsum.corpus import Gender, Sentence, load_default_stopwords, preprocess
from reviewsum.embedding import WordVectorTable
from reviewsum.optimizer import SelectionProblem

STOPWORDS = load_default_stopwords()


def make_sentence(
    text: str,
    sid: str = "s1",
    review_id: str = "r1",
    gender: Gender = Gender.MALE,
    place: str = "p",
) -> Sentence:
    tokens, content = preprocess(text, STOPWORDS)
    return Sentence(
        id=sid,
        review_id=review_id,
        place=place,
        text=text,
        tokens=tuple(tokens),
        content_tokens=tuple(content),
        word_count=len(tokens),
        gender=gender,
    )


def table_from(entries: dict[str, list[float]]) -> WordVectorTable:
    dim = len(next(iter(entries.values())))
    return WordVectorTable(
        dimension=dim,
        entries={w: np.array(v, dtype=np.float64) for w, v in entries.items()},
    )


def random_problem(rng: np.random.Generator, n: int | None = None,
                   fp_choices=(0.0, 0.3, 0.5, 1.0)) -> SelectionProblem:
    """Seeded random instance in the acceptance-suite regime."""
    if n is None:
        n = int(rng.integers(1, 13))
    score = rng.uniform(0.0, 1.0, n).tolist()
    length = rng.integers(1, 16, n).tolist()
    is_female = (rng.uniform(0, 1, n) < 0.5).tolist()
    sim = np.zeros((n, n))
    upper = rng.uniform(0.0, 1.0, (n, n))
    for i in range(n):
        for j in range(i + 1, n):
            sim[i][j] = sim[j][i] = upper[i][j]
    budget = int(rng.integers(0, max(sum(length), 1) + 1))
    fp = float(rng.choice(fp_choices))
    return SelectionProblem(
        score=score,
        length=[int(l) for l in length],
        is_female=[bool(f) for f in is_female],
        sim=sim.tolist(),
        budget=budget,
        female_ratio=fp,
    )
