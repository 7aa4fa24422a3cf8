"""Command line interface: ingest, summarize, eval, serve.

Exit codes: 0 success, 1 usage or control validation, 2 data error,
3 internal error. The data directory defaults to $REVIEWSUM_DATA, then
./data/corpora.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
import time
from pathlib import Path

from .corpus import build_place_corpus, ingest_reviews, iter_csv, iter_jsonl, CorpusStore
from .errors import ControlsError, DataError, ReviewSumError
from .evaluation import run_ablation
from .reports import format_table, write_ablation_outputs
from .summarizer import (
    ControlParams,
    build_engine,
    render_summary_json,
    render_summary_text,
)

log = logging.getLogger(__name__)

DEFAULT_DATA_DIR = "data/corpora"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; the CLI contract wants 1
    def error(self, message):
        raise _UsageError(message)


def _data_dir(args) -> str:
    return args.data_dir or os.environ.get("REVIEWSUM_DATA") or DEFAULT_DATA_DIR


def _add_common(parser: argparse.ArgumentParser):
    parser.add_argument("--data-dir", help="corpus data directory (env REVIEWSUM_DATA)")
    parser.add_argument("--vectors", help="word vector file; omit to use the seeded hash provider")
    parser.add_argument("--catalog", help="aspect catalog file; omit for the built-in default")
    parser.add_argument("--lexicon", help="sentiment lexicon file; omit for the built-in default")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="reviewsum", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_ingest = sub.add_parser("ingest", help="validate and index a review file for a place")
    p_ingest.add_argument("file", help="JSONL (or CSV) review file")
    p_ingest.add_argument("--place", required=True, help="place identifier")
    p_ingest.add_argument("--format", choices=["jsonl", "csv"], default=None)
    p_ingest.add_argument("--data-dir", help="corpus data directory (env REVIEWSUM_DATA)")
    p_ingest.set_defaults(func=cmd_ingest)

    p_sum = sub.add_parser("summarize", help="generate a summary for a place")
    p_sum.add_argument("--place", required=True)
    p_sum.add_argument("--aspects", default="all", help="'all' or comma-separated labels")
    p_sum.add_argument("--length", type=int, default=100, help="summary budget in words")
    p_sum.add_argument("--female-ratio", type=float, default=0.5)
    p_sum.add_argument("--candidate-pool", type=int, default=150)
    p_sum.add_argument("--penalty-weight", type=float, default=1.0)
    p_sum.add_argument("--exact-limit", type=int, default=40)
    p_sum.add_argument("--time-limit", type=float, default=60.0)
    p_sum.add_argument("--sim-threshold", type=float, default=0.0)
    p_sum.add_argument("--include-miscellaneous", action="store_true")
    p_sum.add_argument("--json", action="store_true", help="print the JSON serialization")
    _add_common(p_sum)
    p_sum.set_defaults(func=cmd_summarize)

    p_eval = sub.add_parser("eval", help="run the evaluation pipeline")
    p_eval.add_argument("--ablation", action="store_true", help="run the full configuration grid")
    p_eval.add_argument("--out", default="reports", help="output directory for report files")
    p_eval.add_argument("--length", type=int, default=100)
    p_eval.add_argument("--female-ratio", type=float, default=0.5)
    p_eval.add_argument("--places", help="comma-separated subset of places (default: all)")
    _add_common(p_eval)
    p_eval.set_defaults(func=cmd_eval)

    p_serve = sub.add_parser("serve", help="start the HTTP service")
    p_serve.add_argument("--port", type=int, default=int(os.environ.get("REVIEWSUM_PORT", "8080")))
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--ui-dir", help="static frontend directory to mount at /")
    _add_common(p_serve)
    p_serve.set_defaults(func=cmd_serve)

    return parser


def cmd_ingest(args) -> int:
    path = Path(args.file)
    fmt = args.format or ("csv" if path.suffix.lower() == ".csv" else "jsonl")
    reader = iter_csv if fmt == "csv" else iter_jsonl
    result = ingest_reviews(reader(path), args.place)
    for err in result.errors:
        print(f"{path}:{err.line}: {err.message}", file=sys.stderr)
    corpus = build_place_corpus(result.reviews, args.place)
    store = CorpusStore(_data_dir(args))
    out = store.save(corpus)
    s = corpus.stats
    print(
        f"ingested {s.review_count} reviews for {args.place}: "
        f"{s.female_count} female / {s.male_count} male / {s.unknown_count} unknown, "
        f"{s.sentence_count} sentences -> {out}"
    )
    if result.errors:
        print(f"{len(result.errors)} record(s) rejected", file=sys.stderr)
    if result.skipped_other_place:
        print(f"{result.skipped_other_place} record(s) for other places skipped", file=sys.stderr)
    return 0


def _controls_from_args(args) -> ControlParams:
    aspects: list[str] | str = "all"
    if args.aspects and args.aspects != "all":
        aspects = [label.strip() for label in args.aspects.split(",") if label.strip()]
    return ControlParams(
        place=args.place,
        aspects=aspects,
        length_words=args.length,
        female_ratio=args.female_ratio,
        candidate_pool=args.candidate_pool,
        penalty_weight=args.penalty_weight,
        exact_limit=args.exact_limit,
        time_limit=args.time_limit,
        sim_threshold=args.sim_threshold,
        include_miscellaneous=args.include_miscellaneous,
    ).checked()


def cmd_summarize(args) -> int:
    controls = _controls_from_args(args)
    engine = build_engine(_data_dir(args), args.vectors, args.catalog, args.lexicon)
    summary = engine.summarize(controls)
    if args.json:
        print(render_summary_json(summary))
    else:
        print(render_summary_text(summary))
    return 0


def cmd_eval(args) -> int:
    if not args.ablation:
        raise _UsageError("eval currently requires --ablation")
    engine = build_engine(_data_dir(args), args.vectors, args.catalog, args.lexicon)
    places = None
    if args.places:
        places = [p.strip() for p in args.places.split(",") if p.strip()]
    base = ControlParams(
        place="", length_words=args.length, female_ratio=args.female_ratio
    )
    started = time.monotonic()
    report = run_ablation(engine, base_controls=base, places=places)
    elapsed = time.monotonic() - started
    paths = write_ablation_outputs(report, args.out)
    print(format_table(report))
    print(f"report files written to {Path(args.out).resolve()} in {elapsed:.1f}s")
    for kind in ("json", "csv", "txt", "png"):
        log.info("wrote %s", paths[kind])
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    data_dir = Path(_data_dir(args))
    engine = None
    if data_dir.is_dir():
        engine = build_engine(data_dir, args.vectors, args.catalog, args.lexicon)
        for place in engine.places():
            engine.corpus(place)  # preload; state is immutable once serving
        if not engine.places():
            engine = None
    if engine is None:
        log.warning("no corpus data under %s; API will answer 503", data_dir)
    ui_dir = args.ui_dir or (Path("frontend/dist") if Path("frontend/dist").is_dir() else None)
    app = create_app(engine, ui_dir=ui_dir)
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 1
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ControlsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (DataError, FileNotFoundError) as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return 2
    except ReviewSumError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except Exception:
        log.exception("internal error")
        return 3


def entrypoint():
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
