import json

import pytest

from ybalg import corpus
from ybalg.errors import AlgebraValidationError
from ybalg.fileio import (
    FileFormatError, algebra_from_json, algebra_to_json, algebra_to_text, matrix_from_json, read_matrix,
)
from ybalg.fields import GF
from ybalg.linalg import is_invertible


@pytest.mark.parametrize("name", corpus.names())
def test_bundled_file_round_trips(name):
    path = corpus.DATA_DIR / f"{name}.json"
    loaded = corpus.load(name)
    assert loaded == corpus.build(name)
    assert loaded.name == name
    assert algebra_to_text(loaded) == path.read_text(encoding="utf-8")
    assert algebra_from_json(json.loads(json.dumps(algebra_to_json(loaded)))) == loaded


def test_every_data_file_has_a_builder():
    stems = {p.stem for p in corpus.DATA_DIR.glob("*.json")}
    assert stems == set(corpus.names())


def test_seeded_matrix_file():
    m = read_matrix(corpus.DATA_DIR / "random_seed7.mat")
    assert m.field == GF(7) and m.shape == (4, 4) and is_invertible(m)


@pytest.mark.parametrize("doc, fragment", [
    ({"dimension": 1, "field": "Q"}, "missing field 'table'"),
    ({"dimension": 1, "field": "Q", "table": [[["1"]]], "colour": 1}, "unknown field"),
    ({"dimension": 0, "field": "Q", "table": []}, "positive integer"),
    ({"dimension": 1, "field": {"gf": 4}, "table": [[["1"]]]}, "field"),
    ({"dimension": 1, "field": "Q", "table": [[["1/0"]]]}, "table[0][0][0]"),
    ({"dimension": 1, "field": "Q", "table": [[[True]]]}, "table[0][0][0]"),
    ({"dimension": 1, "field": "Q", "table": [[["1"]]], "basis": [1]}, "'basis'"),
    ({"dimension": 1, "field": "Q", "table": [[["1"]]], "grading": [2]}, "'grading'"),
    ({"dimension": 2, "field": "Q", "table": [[["1", "0"]] * 2] * 2, "unit": ["1"]}, "'unit'"),
])
def test_malformed_documents(doc, fragment):
    with pytest.raises(FileFormatError) as exc:
        algebra_from_json(doc, "doc")
    assert fragment in str(exc.value)


def test_invalid_unit_is_a_file_error():
    doc = algebra_to_json(corpus.build("kx2"))
    doc["unit"] = ["0", "1"]
    with pytest.raises(FileFormatError):
        algebra_from_json(doc)
    assert issubclass(FileFormatError, ValueError) and not issubclass(AlgebraValidationError, FileFormatError)


def test_matrix_documents():
    m = matrix_from_json([["1", "-1/2"], [0, "3"]])
    assert str(m[0, 1]) == "-1/2" and m[1, 0] == 0
    with pytest.raises(FileFormatError):
        matrix_from_json([["1", "2"], ["3"]])
    with pytest.raises(FileFormatError):
        matrix_from_json({"field": "Q"})
