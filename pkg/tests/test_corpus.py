import json

import pytest

from jordanmax.corpus import bundled_documents, bundled_names, bundled_path, curve_ordinary_point, curve_pair_family, write_bundled


def test_bundled_files_match_builders():
    docs = bundled_documents()
    assert sorted(docs) == bundled_names()
    for name, doc in docs.items():
        assert json.loads(bundled_path(name).read_text()) == doc, name


def test_write_bundled(tmp_path):
    written = write_bundled(tmp_path)
    assert sorted(p.name for p in written) == bundled_names()


def test_builder_guards():
    with pytest.raises(ValueError):
        curve_pair_family(1)
    doc = curve_ordinary_point(5)
    assert doc["flags"]["branches"] == 5
    assert sum(1 for s in doc["strata"] if "G" in s["I"]) == 5
