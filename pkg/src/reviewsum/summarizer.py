"""Pipeline orchestration: score, prune, solve, assemble.

One path serves the CLI and the HTTP service, so both produce identical
summaries (and identical serializations) for identical inputs. Shared
state (corpus, catalog, lexicon, vector provider) is immutable; concurrent
summarize calls are independent.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

from .aspects import AspectCatalog, AspectClass, resolve_selection
from .corpus import CorpusStore, Gender, PlaceCorpus, Sentence
from .embedding import cosine, sentence_vector
from .errors import ControlsError, UnknownPlaceError
from .optimizer import SelectionProblem, Solution, SolverConfig, solve_exact, solve_heuristic
from .scoring import OpinionScore, SentimentLexicon, best_aspect, opinion_score

UNASSIGNED_LABEL = "unassigned"


@dataclass
class ControlParams:
    """Reader-facing knobs plus solver passthrough."""

    place: str
    aspects: list[str] | str = "all"
    length_words: int = 100
    female_ratio: float = 0.5
    candidate_pool: int = 150
    penalty_weight: float = 1.0
    exact_limit: int = 40
    time_limit: float | None = 60.0
    sim_threshold: float = 0.0
    include_miscellaneous: bool = False
    # ablation switches; all True reproduces the full objective
    fairness_enabled: bool = True
    use_readability: bool = True
    use_sentiment: bool = True

    def validate(self) -> dict[str, str]:
        """Field-level problems, empty when the controls are usable."""
        problems: dict[str, str] = {}
        if not self.place:
            problems["place"] = "place must be a non-empty string"
        if self.length_words < 0:
            problems["length_words"] = f"length_words must be >= 0, got {self.length_words}"
        if not 0.0 <= self.female_ratio <= 1.0:
            problems["female_ratio"] = (
                f"female_ratio must be within [0, 1], got {self.female_ratio}"
            )
        if self.candidate_pool < 1:
            problems["candidate_pool"] = f"candidate_pool must be >= 1, got {self.candidate_pool}"
        if self.penalty_weight < 0:
            problems["penalty_weight"] = f"penalty_weight must be >= 0, got {self.penalty_weight}"
        if not 0.0 <= self.sim_threshold <= 1.0:
            problems["sim_threshold"] = f"sim_threshold must be within [0, 1], got {self.sim_threshold}"
        if isinstance(self.aspects, str) and self.aspects != "all":
            problems["aspects"] = "aspects must be 'all' or a list of labels"
        if isinstance(self.aspects, list) and not self.aspects:
            problems["aspects"] = "aspect list is empty; pass 'all' to select every aspect"
        return problems

    def checked(self) -> "ControlParams":
        problems = self.validate()
        if problems:
            raise ControlsError("; ".join(problems.values()), fields=problems)
        return self


@dataclass(frozen=True)
class SummaryEntry:
    sentence_id: str
    review_id: str
    text: str
    gender: str
    aspect: str
    word_count: int
    scores: OpinionScore


@dataclass
class Summary:
    place: str
    entries: list[SummaryEntry]
    total_words: int
    female_count: int
    male_count: int
    objective: float
    # objective decomposition, kept for reporting and post-hoc checks
    score_sum: float
    penalty_sum: float
    fairness_term: float
    solver_optimal: bool
    controls_echo: ControlParams
    diagnostic: str | None = None


@dataclass
class ProblemBuild:
    """Everything the solver sees, kept around for tests and reporting."""

    problem: SelectionProblem
    candidates: list[Sentence]
    scores: list[OpinionScore]
    ilp_scores: list[float]
    selected_aspects: list[AspectClass]


def dedupe_sentences(corpus: PlaceCorpus) -> list[Sentence]:
    """Drop exact duplicate sentences (same normalized token sequence).

    The kept instance is the one from the most-liked review; ties fall back
    to review id then corpus order, so the result is deterministic. The
    redundancy penalty already fights near-duplicates; exact duplicates
    would waste budget before the solver ever sees them.
    """
    best: dict[tuple[str, ...], tuple] = {}
    for pos, sent in enumerate(corpus.sentences):
        likes = corpus.review_by_id(sent.review_id).likes
        key = sent.tokens
        rank = (-likes, sent.review_id, pos)
        if key not in best or rank < best[key][0]:
            best[key] = (rank, pos, sent)
    return [sent for _, pos, sent in sorted(best.values(), key=lambda item: item[1])]


def build_selection_problem(
    corpus: PlaceCorpus,
    catalog: AspectCatalog,
    controls: ControlParams,
    lexicon: SentimentLexicon,
    provider,
) -> ProblemBuild | None:
    """Score, prune to the candidate pool, and assemble the solver input.

    Returns None when every sentence scores zero (nothing opinionated to
    select from). The ILP score is the product of the enabled factors; the
    full score breakdown is kept for reporting either way.
    """
    controls.checked()
    selected_aspects = resolve_selection(
        catalog, controls.aspects, include_miscellaneous=controls.include_miscellaneous
    )
    pool = dedupe_sentences(corpus)
    scored: list[tuple[Sentence, OpinionScore, float]] = []
    for sent in pool:
        score = opinion_score(sent, selected_aspects, lexicon, provider)
        ilp = (
            (score.readability if controls.use_readability else 1.0)
            * (score.sentiment_strength if controls.use_sentiment else 1.0)
            * score.relevance
        )
        scored.append((sent, score, ilp))
    if all(ilp == 0.0 for _, _, ilp in scored) or not scored:
        return None

    ranked = sorted(range(len(scored)), key=lambda i: (-scored[i][2], i))
    keep = sorted(ranked[: controls.candidate_pool])
    candidates = [scored[i][0] for i in keep]
    scores = [scored[i][1] for i in keep]
    ilp_scores = [scored[i][2] for i in keep]

    vectors = [sentence_vector(provider, sent).vector for sent in candidates]
    n = len(candidates)
    sim = [[0.0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            value = max(cosine(vectors[i], vectors[j]), 0.0)
            if value < controls.sim_threshold:
                value = 0.0
            sim[i][j] = sim[j][i] = value

    problem = SelectionProblem(
        score=ilp_scores,
        length=[s.word_count for s in candidates],
        is_female=[s.is_female for s in candidates],
        sim=sim,
        budget=controls.length_words,
        female_ratio=controls.female_ratio,
        penalty_weight=controls.penalty_weight,
        fairness_enabled=controls.fairness_enabled,
    )
    return ProblemBuild(
        problem=problem,
        candidates=candidates,
        scores=scores,
        ilp_scores=ilp_scores,
        selected_aspects=selected_aspects,
    )


def summarize(
    corpus: PlaceCorpus,
    catalog: AspectCatalog,
    controls: ControlParams,
    lexicon: SentimentLexicon,
    provider,
) -> Summary:
    """Produce an extractive summary for one place under the given controls."""
    build = build_selection_problem(corpus, catalog, controls, lexicon, provider)
    if build is None:
        return Summary(
            place=corpus.place,
            entries=[],
            total_words=0,
            female_count=0,
            male_count=0,
            objective=0.0,
            score_sum=0.0,
            penalty_sum=0.0,
            fairness_term=0.0,
            solver_optimal=True,
            controls_echo=controls,
            diagnostic="no scoreable sentences: every candidate has a zero opinion score",
        )
    config = SolverConfig(exact_limit=controls.exact_limit, time_limit=controls.time_limit)
    if build.problem.n <= config.exact_limit:
        solution = solve_exact(build.problem, config)
    else:
        solution = solve_heuristic(build.problem, config)
    return assemble_summary(corpus.place, build, solution, controls, provider)


def assemble_summary(
    place: str,
    build: ProblemBuild,
    solution: Solution,
    controls: ControlParams,
    provider,
) -> Summary:
    """Order selected sentences by aspect group (catalog order), best first."""
    picked = [
        (i, build.candidates[i], build.scores[i])
        for i in solution.indices
    ]
    entries: list[SummaryEntry] = []
    by_aspect: dict[str, list[SummaryEntry]] = {}
    for i, sent, score in picked:
        label = best_aspect(sent, build.selected_aspects, provider)
        entry = SummaryEntry(
            sentence_id=sent.id,
            review_id=sent.review_id,
            text=sent.text,
            gender=sent.gender.value,
            aspect=label,
            word_count=sent.word_count,
            scores=score,
        )
        by_aspect.setdefault(label, []).append(entry)
    for label in [c.label for c in build.selected_aspects] + [UNASSIGNED_LABEL]:
        group = by_aspect.get(label, [])
        group.sort(key=lambda e: -e.scores.combined)
        entries.extend(group)
    female = sum(1 for e in entries if e.gender == Gender.FEMALE.value)
    return Summary(
        place=place,
        entries=entries,
        total_words=solution.total_length,
        female_count=female,
        male_count=len(entries) - female,
        objective=solution.objective,
        score_sum=solution.score_sum,
        penalty_sum=solution.penalty_sum,
        fairness_term=solution.fairness_term,
        solver_optimal=solution.optimal,
        controls_echo=controls,
    )


# ---------------------------------------------------------------------------
# engine: shared immutable state behind the CLI and the HTTP service

def build_engine(
    data_dir,
    vectors_path=None,
    catalog_path=None,
    lexicon_path=None,
) -> "Engine":
    """Assemble an Engine from a data directory and optional override files.

    Without a vectors file the deterministic seeded hash provider is used,
    so the pipeline runs end to end with no external downloads.
    """
    from .aspects import load_catalog, load_default_catalog
    from .embedding import HashEmbeddings, load_word_vectors
    from .scoring import load_default_lexicon, load_lexicon

    provider = load_word_vectors(vectors_path) if vectors_path else HashEmbeddings()
    catalog = (
        load_catalog(catalog_path, provider) if catalog_path else load_default_catalog(provider)
    )
    lexicon = load_lexicon(lexicon_path) if lexicon_path else load_default_lexicon()
    return Engine(CorpusStore(data_dir), catalog, lexicon, provider)


class Engine:
    def __init__(self, store: CorpusStore, catalog: AspectCatalog,
                 lexicon: SentimentLexicon, provider):
        self.store = store
        self.catalog = catalog
        self.lexicon = lexicon
        self.provider = provider
        self._cache: dict[str, PlaceCorpus] = {}

    def places(self) -> list[str]:
        return self.store.places()

    def corpus(self, place: str) -> PlaceCorpus:
        if place not in self._cache:
            known = self.places()
            if place not in known:
                raise UnknownPlaceError(
                    f"unknown place {place!r}; known places: {', '.join(known) or '(none)'}"
                )
            self._cache[place] = self.store.load(place)
        return self._cache[place]

    def summarize(self, controls: ControlParams) -> Summary:
        corpus = self.corpus(controls.place)
        return summarize(corpus, self.catalog, controls, self.lexicon, self.provider)


# ---------------------------------------------------------------------------
# serialization (stable key names; CLI and HTTP share these bytes)

def controls_to_dict(controls: ControlParams) -> dict:
    d = asdict(controls)
    if isinstance(d["aspects"], list):
        d["aspects"] = list(d["aspects"])
    return d


def summary_to_dict(summary: Summary) -> dict:
    return {
        "place": summary.place,
        "entries": [
            {
                "sentence_id": e.sentence_id,
                "review_id": e.review_id,
                "text": e.text,
                "gender": e.gender,
                "aspect": e.aspect,
                "word_count": e.word_count,
                "scores": {
                    "readability_raw": e.scores.readability_raw,
                    "readability": e.scores.readability,
                    "polarity": e.scores.polarity,
                    "sentiment_strength_raw": e.scores.sentiment_strength_raw,
                    "sentiment_strength": e.scores.sentiment_strength,
                    "relevance_raw": e.scores.relevance_raw,
                    "relevance": e.scores.relevance,
                    "combined": e.scores.combined,
                },
            }
            for e in summary.entries
        ],
        "total_words": summary.total_words,
        "female_count": summary.female_count,
        "male_count": summary.male_count,
        "objective": summary.objective,
        "score_sum": summary.score_sum,
        "penalty_sum": summary.penalty_sum,
        "fairness_term": summary.fairness_term,
        "solver_optimal": summary.solver_optimal,
        "diagnostic": summary.diagnostic,
        "controls_echo": controls_to_dict(summary.controls_echo),
    }


def render_summary_json(summary: Summary) -> str:
    return json.dumps(summary_to_dict(summary), ensure_ascii=False)


def render_summary_text(summary: Summary) -> str:
    lines = [
        f"Summary for {summary.place} "
        f"({summary.total_words}/{summary.controls_echo.length_words} words, "
        f"{summary.female_count} female / {summary.male_count} male, "
        f"objective {summary.objective:.4f})"
    ]
    if summary.diagnostic:
        lines.append(f"note: {summary.diagnostic}")
    current = None
    for e in summary.entries:
        if e.aspect != current:
            current = e.aspect
            lines.append(f"[{current}]")
        lines.append(f"  ({e.scores.combined:.3f}) [{e.gender}] {e.text}")
    return "\n".join(lines)
