"""ROUGE precision against proxy-gold references, and the ablation grid.

Gold summaries do not exist for review corpora, so the ten most-liked
reviews of a place stand in as the reference. Scores are precision-only
ROUGE-1/2/L, macro-averaged across places. Tokenization mirrors the corpus
tokenizer (lowercased, punctuation stripped, no stemming); each place uses
a single concatenated reference.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import asdict, dataclass, replace

from .corpus import Review, tokenize
from .summarizer import ControlParams, Engine, Summary


def build_proxy_gold(reviews: list[Review]) -> str:
    """Concatenated text of the ten most-liked reviews, ties by id ascending."""
    if not reviews:
        raise ValueError("cannot build a reference from zero reviews")
    ranked = sorted(reviews, key=lambda r: (-r.likes, r.id))
    return " ".join(r.text for r in ranked[:10])


def rouge_n_precision(candidate: str, reference: str, n: int) -> float:
    """Clipped n-gram precision: matches never exceed reference multiplicity."""
    if n not in (1, 2):
        raise ValueError(f"n must be 1 or 2, got {n}")
    cand = tokenize(candidate)
    if not cand:
        raise ValueError("candidate text has no tokens")
    ref = tokenize(reference)
    if len(cand) < n:
        return 0.0
    cand_grams = Counter(_ngrams(cand, n))
    ref_grams = Counter(_ngrams(ref, n))
    matches = sum(min(count, ref_grams[gram]) for gram, count in cand_grams.items())
    return matches / sum(cand_grams.values())


def rouge_l_precision(candidate: str, reference: str) -> float:
    """Longest-common-subsequence length over candidate token count."""
    cand = tokenize(candidate)
    if not cand:
        raise ValueError("candidate text has no tokens")
    ref = tokenize(reference)
    return _lcs_length(cand, ref) / len(cand)


def _ngrams(tokens: list[str], n: int):
    return zip(*(tokens[i:] for i in range(n)))


def _lcs_length(a: list[str], b: list[str]) -> int:
    if not a or not b:
        return 0
    prev = [0] * (len(b) + 1)
    for x in a:
        cur = [0]
        for j, y in enumerate(b, start=1):
            cur.append(prev[j - 1] + 1 if x == y else max(prev[j], cur[j - 1]))
        prev = cur
    return prev[-1]


@dataclass(frozen=True)
class RougeScores:
    rouge1_p: float
    rouge2_p: float
    rougeL_p: float


def score_candidate(candidate: str, reference: str) -> RougeScores:
    return RougeScores(
        rouge1_p=rouge_n_precision(candidate, reference, 1),
        rouge2_p=rouge_n_precision(candidate, reference, 2),
        rougeL_p=rouge_l_precision(candidate, reference),
    )


def summary_text(summary: Summary) -> str:
    return " ".join(entry.text for entry in summary.entries)


def macro_average(per_place: dict[str, RougeScores]) -> RougeScores | None:
    """Unweighted mean over places; None when nothing scored."""
    if not per_place:
        return None
    k = len(per_place)
    return RougeScores(
        rouge1_p=sum(s.rouge1_p for s in per_place.values()) / k,
        rouge2_p=sum(s.rouge2_p for s in per_place.values()) / k,
        rougeL_p=sum(s.rougeL_p for s in per_place.values()) / k,
    )


# ---------------------------------------------------------------------------
# ablation grid

@dataclass(frozen=True)
class AblationVariant:
    label: str
    fairness_enabled: bool = True
    redundancy_enabled: bool = True
    use_readability: bool = True
    use_sentiment: bool = True


DEFAULT_GRID: tuple[AblationVariant, ...] = (
    AblationVariant("with all constraints"),
    AblationVariant("w/o Fairness", fairness_enabled=False),
    AblationVariant("w/o Redundancy", redundancy_enabled=False),
    AblationVariant("basic", fairness_enabled=False, redundancy_enabled=False),
    AblationVariant(
        "w/o Readability",
        fairness_enabled=False,
        redundancy_enabled=False,
        use_readability=False,
    ),
    AblationVariant(
        "w/o Sentiment",
        fairness_enabled=False,
        redundancy_enabled=False,
        use_sentiment=False,
    ),
    AblationVariant(
        "w/o both",
        fairness_enabled=False,
        redundancy_enabled=False,
        use_readability=False,
        use_sentiment=False,
    ),
)


@dataclass
class AblationRow:
    label: str
    per_place: dict[str, RougeScores]
    errors: dict[str, str]
    macro: RougeScores | None


@dataclass
class AblationReport:
    places: list[str]
    rows: list[AblationRow]


def apply_variant(controls: ControlParams, variant: AblationVariant) -> ControlParams:
    return replace(
        controls,
        fairness_enabled=variant.fairness_enabled,
        penalty_weight=controls.penalty_weight if variant.redundancy_enabled else 0.0,
        use_readability=variant.use_readability,
        use_sentiment=variant.use_sentiment,
    )


def run_ablation(
    engine: Engine,
    base_controls: ControlParams | None = None,
    grid: tuple[AblationVariant, ...] = DEFAULT_GRID,
    places: list[str] | None = None,
) -> AblationReport:
    """Summarize every place under every grid configuration and score it.

    A failing cell is recorded with its error and does not stop the rest of
    the grid.
    """
    places = places if places is not None else engine.places()
    base = base_controls or ControlParams(place="")
    rows: list[AblationRow] = []
    for variant in grid:
        per_place: dict[str, RougeScores] = {}
        errors: dict[str, str] = {}
        for place in places:
            controls = replace(apply_variant(base, variant), place=place)
            try:
                summary = engine.summarize(controls)
                reference = build_proxy_gold(engine.corpus(place).reviews)
                per_place[place] = score_candidate(summary_text(summary), reference)
            except Exception as exc:  # noqa: BLE001 - cell isolation is the contract
                errors[place] = f"{type(exc).__name__}: {exc}"
        rows.append(
            AblationRow(
                label=variant.label,
                per_place=per_place,
                errors=errors,
                macro=macro_average(per_place),
            )
        )
    return AblationReport(places=list(places), rows=rows)


def report_to_dict(report: AblationReport) -> dict:
    return {
        "places": report.places,
        "rows": [
            {
                "label": row.label,
                "macro": None if row.macro is None else asdict(row.macro),
                "per_place": {p: asdict(s) for p, s in row.per_place.items()},
                "errors": dict(row.errors),
            }
            for row in report.rows
        ],
    }
