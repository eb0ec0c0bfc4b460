import json

import pytest

from bidouble import corpus, fileio
from bidouble.bialgebra import bialgebra
from bidouble.errors import ParseError
from bidouble.exactlin import Tensor
from bidouble.suite import aib_instances, ddb_instances


def test_l2_entries():
    obj = json.loads(fileio.dumps(corpus.get("L2")))
    assert obj["products"] == [[1, 0, 0, "1"], [1, 1, 1, "1"]]


def test_empty_products_give_zero_algebra():
    a = fileio.loads('{"type": "algebra", "kind": "associative", "dim": 2, "products": []}')
    assert a.mul.is_zero() and a.dim == 2


@pytest.mark.parametrize("text", [
    '{"type": "algebra", "kind": "associative", "dim": 1, "products": [[0, 0, 0, "1/0"]]}',
    '{"type": "algebra", "kind": "associative", "dim": 1, "products": [[0, 0, 0, "x"]]}',
    '{"type": "algebra", "kind": "associative", "dim": 1, "products": [[0, 0, 1, "1"]]}',
    '{"type": "algebra", "kind": "associative", "dim": 1, '
    '"products": [[0, 0, 0, "1"], [0, 0, 0, "2"]]}',
    '{"type": "algebra", "kind": "associative", "dim": 1, "products": [], "colour": 1}',
    '{"type": "algebra", "kind": "dendriform", "dim": 1, "products": []}',
    '{"type": "algebra", "kind": "loop", "dim": 1}',
    '{"type": "bialgebra", "kind": "AIB", "base": {"type": "algebra", "kind": "dendriform", '
    '"dim": 1}}',
    '{"type": "tensor", "shape": [2, 2], "entries": [[0, 2, "1"]]}',
    'not json',
])
def test_malformed_files_are_rejected(text):
    with pytest.raises(ParseError):
        fileio.loads(text)


def test_rationals_are_preserved():
    t = Tensor.of([[0, "3/4"], ["-1/6", 5]])
    text = fileio.dumps(t)
    assert fileio.loads(text) == t
    assert '"3/4"' in text and '"-1/6"' in text


def test_serialization_is_canonical():
    a = fileio.loads('{"type": "algebra", "kind": "associative", "dim": 2, '
                     '"products": [[1, 1, 1, "2/2"], [1, 0, 0, "1"]]}')
    assert fileio.dumps(a) == fileio.dumps(corpus.get("L2"))


def test_basis_names_are_labels_only():
    a = fileio.loads('{"type": "algebra", "kind": "associative", "dim": 1, '
                     '"basis": ["e"], "products": [[0, 0, 0, "1"]]}')
    assert a.basis == ("e",)
    assert fileio.loads(fileio.dumps(a)).basis == ("e",)


def test_whole_corpus_round_trips():
    values = []
    for kind in ("associative", "dendriform", "prelie", "lie"):
        values += list(corpus.algebras(kind).values())
    values += [b for _, b in aib_instances() + ddb_instances()]
    values.append(bialgebra("AIB", corpus.get("L2")))
    for v in values:
        text = fileio.dumps(v)
        back = fileio.loads(text)
        assert back == v
        assert fileio.dumps(back) == text
