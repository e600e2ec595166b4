import json
import random

import pytest

from tld.algebra import AlgebraElement, AlgebraKind, PolyDelta
from tld.diagram import PLAIN_A, Diagram, enumerate_admissible, enumerate_matchings
from tld.errors import TLDError


def test_bit_exact_format():
    d = Diagram.from_edges(2, [("t1", "b1"), ("t2", "b2")])
    assert d.to_json() == ('{"k": 2, "edges": [{"a": "t1", "b": "b1", "dec": 0}, '
                           '{"a": "t2", "b": "b2", "dec": 0}], "decorated_loop": false}')


@pytest.mark.parametrize("n", [4, 5])
def test_diagram_roundtrip(n):
    for d in enumerate_admissible(n):
        text = d.to_json()
        again = Diagram.from_json(text)
        assert again == d and again.to_json() == text


def test_plain_roundtrip():
    for d in enumerate_matchings(5, PLAIN_A):
        assert Diagram.from_json(d.to_json(), PLAIN_A) == d


def test_element_roundtrip():
    rng = random.Random(3)
    kind = AlgebraKind("dtl-d", 5)
    basis = enumerate_admissible(5)
    for _ in range(50):
        terms = [(rng.choice(basis), PolyDelta({rng.randrange(4): rng.randrange(-3, 4)}))
                 for _ in range(rng.randrange(5))]
        x = AlgebraElement(kind, terms)
        text = x.to_json()
        assert AlgebraElement.from_json(text) == x
        assert AlgebraElement.from_json(text).to_json() == text


def test_edge_order_is_canonical():
    shuffled = {"k": 3, "edges": [{"a": "b3", "b": "b2", "dec": 0},
                                  {"a": "t1", "b": "b1", "dec": 0},
                                  {"a": "t3", "b": "t2", "dec": 0}],
                "decorated_loop": False}
    d = Diagram.from_dict(shuffled)
    assert [e["a"] for e in d.to_dict()["edges"]] == ["t1", "t2", "b3"]


@pytest.mark.parametrize("text", [
    "{", "[]", '{"k": 2}', '{"k": 2, "edges": [{"a": "t1", "b": "b1", "dec": 2}, '
    '{"a": "t2", "b": "b2", "dec": 0}]}',
    '{"k": "2", "edges": []}',
])
def test_malformed(text):
    with pytest.raises((TLDError, ValueError)):
        Diagram.from_json(text)


def test_element_malformed():
    with pytest.raises(TLDError):
        AlgebraElement.from_json(json.dumps({"kind": "dtl-d", "rank": 4}))
