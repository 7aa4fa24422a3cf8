"""Word and sentence vectors behind a small provider contract.

A provider is anything with a ``dimension`` attribute and a
``get(word) -> ndarray | None`` method. :class:`WordVectorTable` loads the
usual text vector format; :class:`HashEmbeddings` generates deterministic
pseudo-random vectors per word (fixed seed) so the whole pipeline runs
without downloading real embeddings. All operations are pure; tables are
immutable after load.
"""

from __future__ import annotations

import hashlib
import logging
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .corpus import Sentence
from .errors import DataError

log = logging.getLogger(__name__)

DEFAULT_DIMENSION = 64
DEFAULT_SEED = 20240501


class WordVectorTable:
    """In-memory word -> vector mapping with a single fixed dimension."""

    def __init__(self, dimension: int, entries: dict[str, np.ndarray]):
        self.dimension = dimension
        self.entries = entries

    def __len__(self) -> int:
        return len(self.entries)

    def get(self, word: str) -> np.ndarray | None:
        return self.entries.get(word.lower())


class HashEmbeddings:
    """Deterministic per-word pseudo-random vectors, seeded once.

    The vector for a word depends only on (seed, word), not on lookup order,
    so runs are reproducible across processes and platforms. Every non-empty
    word is in-vocabulary by construction.
    """

    def __init__(self, dimension: int = DEFAULT_DIMENSION, seed: int = DEFAULT_SEED):
        self.dimension = dimension
        self.seed = seed
        self._cache: dict[str, np.ndarray] = {}

    def get(self, word: str) -> np.ndarray | None:
        word = word.lower()
        if not word:
            return None
        vec = self._cache.get(word)
        if vec is None:
            digest = hashlib.sha256(f"{self.seed}:{word}".encode("utf-8")).digest()
            rng = np.random.default_rng(int.from_bytes(digest[:8], "little"))
            vec = rng.uniform(-1.0, 1.0, self.dimension)
            vec.flags.writeable = False
            self._cache[word] = vec
        return vec


def load_word_vectors(path: str | Path) -> WordVectorTable:
    """Load a text vector file: ``word v1 ... vd`` per line, UTF-8.

    An optional first header line ``count dim`` is auto-detected. Duplicate
    words keep the last entry (with a warning); inconsistent dimensions or
    non-finite components fail the load, naming the offending line.
    """
    path = Path(path)
    dimension: int | None = None
    entries: dict[str, np.ndarray] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            parts = line.rstrip("\n").split(" ")
            parts = [p for p in parts if p]
            if not parts:
                continue
            if lineno == 1 and len(parts) == 2:
                try:
                    int(parts[0]), int(parts[1])
                    continue  # header line
                except ValueError:
                    pass
            word = parts[0].lower()
            try:
                vec = np.array([float(x) for x in parts[1:]], dtype=np.float64)
            except ValueError as exc:
                raise DataError(f"{path}:{lineno}: bad vector component ({exc})") from None
            if vec.size == 0:
                raise DataError(f"{path}:{lineno}: no vector components")
            if not np.all(np.isfinite(vec)):
                raise DataError(f"{path}:{lineno}: non-finite vector component")
            if dimension is None:
                dimension = vec.size
            elif vec.size != dimension:
                raise DataError(
                    f"{path}:{lineno}: dimension {vec.size} != {dimension} declared earlier"
                )
            if word in entries:
                log.warning("%s:%d: duplicate word %r, keeping last", path, lineno, word)
            vec.flags.writeable = False
            entries[word] = vec
    if dimension is None:
        raise DataError(f"{path}: no vector entries")
    return WordVectorTable(dimension=dimension, entries=entries)


def word_vector(table, word: str) -> np.ndarray | None:
    """Exact-match lookup on the lowercased form; None when out of vocabulary."""
    return table.get(word)


@dataclass(frozen=True)
class SentenceVector:
    vector: np.ndarray
    sentence_id: str
    embeddable: bool = True


def sentence_vector(table, sentence: Sentence) -> SentenceVector:
    """Mean of the vectors of in-vocabulary content tokens.

    A sentence whose content tokens are all out of vocabulary gets the zero
    vector and is flagged non-embeddable; with the zero-norm cosine
    convention it then scores 0 relevance and 0 similarity everywhere.
    """
    vecs = [v for v in (table.get(t) for t in sentence.content_tokens) if v is not None]
    if not vecs:
        return SentenceVector(np.zeros(table.dimension), sentence.id, embeddable=False)
    return SentenceVector(np.mean(vecs, axis=0), sentence.id, embeddable=True)


def cosine(u: np.ndarray, v: np.ndarray) -> float:
    """Cosine similarity in [-1, 1]; zero-norm inputs yield 0 by convention."""
    u = np.asarray(u, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    if u.shape != v.shape:
        raise ValueError(f"dimension mismatch: {u.shape} vs {v.shape}")
    nu = math.sqrt(float(np.dot(u, u)))
    nv = math.sqrt(float(np.dot(v, v)))
    if nu == 0.0 or nv == 0.0:
        return 0.0
    val = float(np.dot(u, v)) / (nu * nv)
    return max(-1.0, min(1.0, val))
