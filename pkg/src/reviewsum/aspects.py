"""Coarse-grained aspect catalog with vector-table-derived embeddings.

The catalog ships as an editable text file; each class embedding is the mean
of the vectors of its first ten in-vocabulary seed terms, computed against
whichever vector provider the catalog was loaded with. Catalogs are
immutable after load; to switch providers, reload.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

import numpy as np

from .errors import ControlsError, DataError

EMBEDDING_TERM_LIMIT = 10
MISCELLANEOUS_LABEL = "Miscellaneous"


@dataclass(frozen=True)
class AspectClass:
    label: str
    terms: tuple[str, ...]
    embedding: np.ndarray


@dataclass(frozen=True)
class AspectCatalog:
    classes: tuple[AspectClass, ...]

    @property
    def labels(self) -> list[str]:
        return [c.label for c in self.classes]

    def __getitem__(self, label: str) -> AspectClass:
        for c in self.classes:
            if c.label == label:
                return c
        raise KeyError(label)


def default_catalog_path() -> Path:
    return Path(str(resources.files(__package__) / "data" / "aspect_catalog.txt"))


def parse_catalog(text: str, source: str = "<catalog>") -> list[tuple[str, list[str]]]:
    records = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        label, sep, rest = line.partition(":")
        label = label.strip()
        if not sep or not label:
            raise DataError(f"{source}:{lineno}: expected 'Label: term, term, ...'")
        terms = [t.strip().lower() for t in rest.split(",") if t.strip()]
        if not terms:
            raise DataError(f"{source}:{lineno}: class {label!r} has no seed terms")
        records.append((label, terms))
    return records


def load_catalog(path: str | Path, provider) -> AspectCatalog:
    """Load a catalog file and compute class embeddings with the provider.

    Duplicate labels fail the load, as does a class with no in-vocabulary
    seed terms (its embedding would be undefined).
    """
    path = Path(path)
    records = parse_catalog(path.read_text("utf-8"), source=str(path))
    if not records:
        raise DataError(f"{path}: catalog is empty")
    seen: set[str] = set()
    classes = []
    for label, terms in records:
        if label in seen:
            raise DataError(f"{path}: duplicate aspect label {label!r}")
        seen.add(label)
        vecs = []
        for term in terms[:EMBEDDING_TERM_LIMIT]:
            v = provider.get(term)
            if v is not None:
                vecs.append(v)
        if not vecs:
            raise DataError(f"{path}: class {label!r} has no in-vocabulary seed terms")
        embedding = np.mean(vecs, axis=0)
        embedding.flags.writeable = False
        classes.append(AspectClass(label=label, terms=tuple(terms), embedding=embedding))
    return AspectCatalog(classes=tuple(classes))


def load_default_catalog(provider) -> AspectCatalog:
    return load_catalog(default_catalog_path(), provider)


def resolve_selection(
    catalog: AspectCatalog,
    requested: list[str] | str,
    include_miscellaneous: bool = False,
) -> list[AspectClass]:
    """Resolve a reader's aspect selection against the catalog.

    "all" returns the catalog in order, minus the Miscellaneous class unless
    the flag is set (its seed terms are nationalities and bare adjectives,
    not opinion targets). Explicit label lists are returned in catalog
    order; an unknown label raises with the valid labels and, when close
    enough, a spelling suggestion.
    """
    if requested == "all":
        classes = [
            c
            for c in catalog.classes
            if include_miscellaneous or c.label != MISCELLANEOUS_LABEL
        ]
        if not classes:
            raise ControlsError("catalog has no selectable aspect classes")
        return classes
    if isinstance(requested, str):
        raise ControlsError(f"aspects must be 'all' or a list of labels, got {requested!r}")
    if not requested:
        raise ControlsError("empty aspect list; pass 'all' to select every aspect")
    wanted = set()
    for label in requested:
        if label not in catalog.labels:
            hint = _suggest(label, catalog.labels)
            msg = f"unknown aspect {label!r}; valid labels: {', '.join(catalog.labels)}"
            if hint:
                msg += f" (did you mean {hint!r}?)"
            raise ControlsError(msg)
        wanted.add(label)
    return [c for c in catalog.classes if c.label in wanted]


def _suggest(label: str, labels: list[str], max_distance: int = 2) -> str | None:
    best, best_d = None, max_distance + 1
    for cand in labels:
        d = _edit_distance(label.lower(), cand.lower())
        if d < best_d:
            best, best_d = cand, d
    return best


def _edit_distance(a: str, b: str) -> int:
    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a, start=1):
        cur = [i]
        for j, cb in enumerate(b, start=1):
            cur.append(min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (ca != cb)))
        prev = cur
    return prev[-1]
