"""Controllable aspect-based extractive summarization of tourist reviews."""

from .aspects import AspectCatalog, AspectClass, load_catalog, load_default_catalog, resolve_selection
from .corpus import (
    CorpusStats,
    CorpusStore,
    Gender,
    PlaceCorpus,
    Review,
    Sentence,
    build_place_corpus,
    ingest_reviews,
)
from .embedding import HashEmbeddings, WordVectorTable, cosine, load_word_vectors, sentence_vector
from .errors import ControlsError, DataError, InfeasibleError, ReviewSumError
from .evaluation import build_proxy_gold, rouge_l_precision, rouge_n_precision, run_ablation
from .optimizer import (
    SelectionProblem,
    Solution,
    SolverConfig,
    brute_force_oracle,
    evaluate_objective,
    solve_exact,
    solve_heuristic,
)
from .scoring import (
    OpinionScore,
    SentimentLexicon,
    count_syllables,
    flesch_reading_ease,
    opinion_score,
    relevance,
    sentiment_polarity,
    sentiment_strength,
)
from .summarizer import ControlParams, Engine, Summary, build_engine, summarize

__version__ = "0.1.0"

__all__ = [
    "AspectCatalog",
    "AspectClass",
    "ControlParams",
    "ControlsError",
    "CorpusStats",
    "CorpusStore",
    "DataError",
    "Engine",
    "Gender",
    "HashEmbeddings",
    "InfeasibleError",
    "OpinionScore",
    "PlaceCorpus",
    "Review",
    "ReviewSumError",
    "SelectionProblem",
    "Sentence",
    "SentimentLexicon",
    "Solution",
    "SolverConfig",
    "Summary",
    "WordVectorTable",
    "brute_force_oracle",
    "build_engine",
    "build_place_corpus",
    "build_proxy_gold",
    "cosine",
    "count_syllables",
    "evaluate_objective",
    "flesch_reading_ease",
    "ingest_reviews",
    "load_catalog",
    "load_default_catalog",
    "load_word_vectors",
    "opinion_score",
    "relevance",
    "resolve_selection",
    "rouge_l_precision",
    "rouge_n_precision",
    "run_ablation",
    "sentence_vector",
    "sentiment_polarity",
    "sentiment_strength",
    "solve_exact",
    "solve_heuristic",
    "summarize",
]
