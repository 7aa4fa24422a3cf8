from pathlib import Path

import pytest

from reviewsum.corpus import CorpusStore, build_place_corpus, ingest_reviews, iter_jsonl
from reviewsum.summarizer import build_engine

FIXTURES = Path(__file__).resolve().parents[1] / "data" / "fixtures"
DEMO_PLACES = ("taj-mahal", "petra")


@pytest.fixture(scope="session")
def demo_data_dir(tmp_path_factory):
    data_dir = tmp_path_factory.mktemp("demo-data")
    store = CorpusStore(data_dir)
    for place in DEMO_PLACES:
        result = ingest_reviews(iter_jsonl(FIXTURES / "demo_reviews.jsonl"), place)
        assert not result.errors
        store.save(build_place_corpus(result.reviews, place))
    return data_dir


@pytest.fixture(scope="session")
def demo_engine(demo_data_dir):
    return build_engine(demo_data_dir)


LANDMARK_PLACES = (
    "roman-colosseum",
    "christ-the-redeemer",
    "machu-picchu",
    "petra",
    "taj-mahal",
    "chichen-itza",
    "great-wall-of-china",
)


@pytest.fixture(scope="session")
def landmarks_data_dir(tmp_path_factory):
    data_dir = tmp_path_factory.mktemp("landmarks-data")
    store = CorpusStore(data_dir)
    for place in LANDMARK_PLACES:
        result = ingest_reviews(iter_jsonl(FIXTURES / "landmarks_reviews.jsonl"), place)
        assert not result.errors
        store.save(build_place_corpus(result.reviews, place))
    return data_dir


def pytest_runtest_logreport(report):
    # one visible pass/fail line per acceptance criterion
    if report.when != "call" or "test_acceptance" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    outcome = "PASS" if report.passed else "FAIL"
    print(f"\n[acceptance] {name}: {outcome}", flush=True)
