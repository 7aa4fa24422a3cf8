import numpy as np
import pytest

from reviewsum.aspects import (
    load_catalog,
    load_default_catalog,
    resolve_selection,
)
from reviewsum.embedding import HashEmbeddings
from reviewsum.errors import ControlsError, DataError
from support import table_from

PROVIDER = HashEmbeddings()


def write_catalog(tmp_path, text):
    path = tmp_path / "catalog.txt"
    path.write_text(text, encoding="utf-8")
    return path


class TestLoad:
    def test_default_catalog_has_eight_classes(self):
        catalog = load_default_catalog(PROVIDER)
        assert len(catalog.classes) == 8
        assert catalog.labels == [
            "Attractions",
            "Access",
            "Activities",
            "Amenities",
            "Culture",
            "Cost",
            "Negatives",
            "Miscellaneous",
        ]

    def test_single_class_embedding_is_term_vector(self, tmp_path):
        table = table_from({"tickets": [3.0, 4.0]})
        path = write_catalog(tmp_path, "Cost: tickets\n")
        catalog = load_catalog(path, table)
        assert len(catalog.classes) == 1
        assert np.allclose(catalog["Cost"].embedding, [3.0, 4.0])

    def test_embedding_uses_first_ten_in_vocab_terms(self, tmp_path):
        words = {f"t{i}": [float(i), 1.0] for i in range(12)}
        table = table_from(words)
        terms = ", ".join(f"t{i}" for i in range(12))
        catalog = load_catalog(write_catalog(tmp_path, f"Lots: {terms}\n"), table)
        expected = np.mean([words[f"t{i}"] for i in range(10)], axis=0)
        assert np.allclose(catalog["Lots"].embedding, expected)

    def test_oov_terms_are_skipped_in_embedding(self, tmp_path):
        table = table_from({"tickets": [1.0, 0.0]})
        catalog = load_catalog(write_catalog(tmp_path, "Cost: zorblax, tickets\n"), table)
        assert np.allclose(catalog["Cost"].embedding, [1.0, 0.0])

    def test_fully_oov_class_fails_load(self, tmp_path):
        table = table_from({"tickets": [1.0, 0.0]})
        path = write_catalog(tmp_path, "Cost: tickets\nGhosts: zorblax, vexquum\n")
        with pytest.raises(DataError, match="Ghosts"):
            load_catalog(path, table)

    def test_duplicate_labels_rejected(self, tmp_path):
        path = write_catalog(tmp_path, "Cost: tickets\nCost: money\n")
        with pytest.raises(DataError, match="duplicate"):
            load_catalog(path, PROVIDER)

    def test_empty_catalog_rejected(self, tmp_path):
        with pytest.raises(DataError, match="empty"):
            load_catalog(write_catalog(tmp_path, "# nothing here\n"), PROVIDER)

    def test_embeddings_deterministic(self, tmp_path):
        path = write_catalog(tmp_path, "Cost: tickets, money\nAccess: entrance\n")
        a = load_catalog(path, HashEmbeddings())
        b = load_catalog(path, HashEmbeddings())
        for ca, cb in zip(a.classes, b.classes):
            assert np.array_equal(ca.embedding, cb.embedding)


class TestResolveSelection:
    @pytest.fixture()
    def catalog(self):
        return load_default_catalog(PROVIDER)

    def test_all_excludes_miscellaneous_by_default(self, catalog):
        labels = [c.label for c in resolve_selection(catalog, "all")]
        assert "Miscellaneous" not in labels
        assert len(labels) == 7

    def test_all_with_flag_returns_every_class_once_in_order(self, catalog):
        labels = [c.label for c in resolve_selection(catalog, "all", include_miscellaneous=True)]
        assert labels == catalog.labels

    def test_explicit_subset_in_catalog_order(self, catalog):
        got = resolve_selection(catalog, ["Cost", "Access"])
        assert [c.label for c in got] == ["Access", "Cost"]

    def test_miscellaneous_can_be_requested_explicitly(self, catalog):
        got = resolve_selection(catalog, ["Miscellaneous"])
        assert [c.label for c in got] == ["Miscellaneous"]

    def test_typo_gets_a_suggestion(self, catalog):
        with pytest.raises(ControlsError, match="Access"):
            resolve_selection(catalog, ["Acces"])

    def test_unknown_label_lists_valid_ones(self, catalog):
        with pytest.raises(ControlsError, match="Attractions"):
            resolve_selection(catalog, ["Zebras"])

    def test_empty_explicit_list_rejected(self, catalog):
        with pytest.raises(ControlsError, match="all"):
            resolve_selection(catalog, [])
