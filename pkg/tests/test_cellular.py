import json
import pathlib

import pytest

from tld.algebra import AlgebraElement
from tld.cellular import (
    ZERO_MINUS, ZERO_PLUS, C, CellLabel, HalfDiagram, build_cell_datum,
    half_leq, join, label_of, split, verify_cellularity,
)
from tld.coxeter import ONE_BAR
from tld.diagram import Diagram, enumerate_admissible, identity_diagram, simple_diagram
from tld.errors import DimensionError, ParityError, PreconditionError

GOLDEN = pathlib.Path(__file__).parent / "golden"


def half(k, cups, decorated=()):
    return HalfDiagram(k, tuple(cups), frozenset(decorated))


@pytest.fixture(scope="module")
def datum4():
    return build_cell_datum(4)


def test_half_diagram_validation():
    with pytest.raises(DimensionError):
        half(4, [(1, 3), (2, 4)])
    with pytest.raises(DimensionError):
        half(4, [(1, 4), (2, 3)], [(2, 3)])
    with pytest.raises(DimensionError):
        half(3, [(2, 3)], [(2, 3)])  # free node 1 blocks the left wall
    h = half(6, [(1, 4), (2, 3)], [(1, 4)])
    assert h.p == 2 and h.a == 2 and h.free == [5, 6]
    assert str(h) == "{14*,23}"


def test_labels():
    assert label_of(half(4, [])) == CellLabel(4)
    assert label_of(half(4, [(1, 2), (3, 4)])) == ZERO_PLUS
    assert label_of(half(4, [(1, 2), (3, 4)], [(1, 2)])) == ZERO_MINUS
    assert CellLabel(2) < CellLabel(4)
    assert ZERO_PLUS < CellLabel(2)
    assert not ZERO_PLUS < ZERO_MINUS and not ZERO_MINUS < ZERO_PLUS
    assert str(ZERO_PLUS) == "0+"


def test_split_examples():
    empty = half(4, [])
    assert split(identity_diagram(4)) == (empty, empty)
    cup = half(4, [(1, 2)], [(1, 2)])
    assert split(simple_diagram(4, ONE_BAR)) == (cup, cup)
    type1 = enumerate_admissible(4, "I")[0]
    with pytest.raises(PreconditionError):
        split(type1)


def test_join_golden():
    data = json.loads((GOLDEN / "lfd_d6_join.json").read_text())
    h1 = half(6, map(tuple, data["h1"]["cups"]), map(tuple, data["h1"]["decorated"]))
    h2 = half(6, map(tuple, data["h2"]["cups"]), map(tuple, data["h2"]["decorated"]))
    d = join(h1, h2)
    assert d.to_dict() == data["join"]
    assert split(d) == (h1, h2)


def test_join_errors():
    with pytest.raises(DimensionError):
        join(half(4, [(1, 2)]), half(4, []))
    with pytest.raises(ParityError):
        join(half(4, [(1, 2), (3, 4)], [(1, 2)]), half(4, [(1, 2), (3, 4)]))
    assert join(half(5, []), half(5, [])) == identity_diagram(5)


def test_half_leq():
    h = half(6, [(1, 4), (2, 3)], [(1, 4)])
    assert half_leq(h, half(6, [(1, 4), (2, 3), (5, 6)], [(1, 4)]))
    assert half_leq(h, h)
    assert not half_leq(half(4, [(1, 2)]), half(4, [(2, 3)]))


@pytest.mark.parametrize("n", [4, 5])
def test_join_split_identity(n):
    for d in enumerate_admissible(n, "II"):
        assert join(*split(d)) == d


def test_cell_datum_n4(datum4):
    assert datum4.m_sizes() == {"4": 1, "2": 4, "0+": 3, "0-": 3}
    assert sum(v * v for v in datum4.m_sizes().values()) == 35
    hasse = {(str(a), str(b)) for a, b in datum4.hasse()}
    assert hasse == {("2", "4"), ("0+", "2"), ("0-", "2")}


def test_cell_datum_odd_rank():
    datum = build_cell_datum(5)
    assert datum.m_sizes() == {"5": 1, "3": 5, "1": 10}


def test_C(datum4):
    top = CellLabel(4)
    h_id = half(4, [])
    assert C(datum4, top, h_id, h_id) == AlgebraElement.unit(datum4.kind)
    x = C(datum4, ZERO_MINUS, half(4, [(1, 2), (3, 4)], [(1, 2)]),
          half(4, [(1, 2), (3, 4)], [(3, 4)]))
    expected = Diagram.from_edges(4, [("t1", "t2", 1), ("t3", "t4"),
                                      ("b1", "b2"), ("b3", "b4", 1)])
    assert list(x.terms) == [expected]
    with pytest.raises(PreconditionError):
        C(datum4, top, half(4, [(1, 2)]), h_id)


def test_C_is_bijective(datum4):
    images = [join(S, T) for _, S, T in datum4.triples()]
    assert len(images) == 35
    assert set(images) == set(enumerate_admissible(4, "II"))


def test_verify_cellularity_n4(datum4):
    report = verify_cellularity(4, datum4)
    assert (report["axiom1"], report["axiom2"], report["axiom3"]) == ("pass",) * 3
    assert report["dim"] == 35
    assert set(report["epsilons"]) <= {"0", "1", "d"}
    assert "witnesses" not in report
