import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tld.coxeter import ONE_BAR, Word, build_graph, enumerate_fc
from tld.diagram import (
    PLAIN_A, Diagram, Edge, Mode, NodeRef, a_value, admissible_type, concat,
    diagram_of_word, enumerate_admissible, enumerate_matchings, identity_diagram,
    p_value, simple_diagram, star,
)
from tld.errors import InvalidGeneratorError, TLDError
from tld.heap import HeapType, classify_type

D4 = build_graph("D", 4)


def edges_of(d):
    return {(str(e.a), str(e.b), e.decorated) for e in d.edges}


def test_node_ref():
    assert NodeRef.parse("t3") == NodeRef("t", 3)
    assert str(NodeRef("b", 12)) == "b12"
    with pytest.raises(TLDError):
        NodeRef.parse("x1")


def test_identity():
    d = identity_diagram(1)
    assert edges_of(d) == {("t1", "b1", False)}
    d5 = identity_diagram(5)
    assert all(e.propagating for e in d5.edges)
    assert a_value(d5) == 0 and p_value(d5) == 5


def test_simple_diagrams():
    d = simple_diagram(6, ONE_BAR)
    assert edges_of(d) == {("t1", "t2", True), ("b2", "b1", True),
                           ("t3", "b3", False), ("t4", "b4", False),
                           ("t5", "b5", False), ("t6", "b6", False)}
    d2 = simple_diagram(6, 2)
    assert ("t2", "t3", False) in edges_of(d2)
    assert ("b3", "b2", False) in edges_of(d2)
    for g in build_graph("D", 6).generators:
        s = simple_diagram(6, g)
        assert a_value(s) == 1 and p_value(s) == 4
    with pytest.raises(InvalidGeneratorError):
        simple_diagram(4, 4)


def test_pseudo_diagram_values():
    # the loop of the pictured 5-diagram is a scalar, not part of the matching
    d = Diagram.from_edges(5, [("t1", "t4"), ("t2", "t3"), ("t5", "b3"),
                               ("b1", "b2"), ("b4", "b5")], kind=PLAIN_A)
    assert (a_value(d), p_value(d)) == (2, 1)


@pytest.mark.parametrize("k,edges,loop", [
    (2, [("t1", "t2")], False),                                   # nodes uncovered
    (2, [("t1", "b2"), ("t2", "b1")], False),                     # crossing
    (3, [("t1", "t2", 1), ("t3", "b3"), ("b1", "b2", 1)], True),  # loop with decorations
    (2, [("t1", "b1", 1), ("t2", "b2", 1)], False),               # D0
    (4, [("t1", "t4"), ("t2", "t3", 1), ("b1", "b2"), ("b3", "b4")], False),  # nested
    (2, [("t1", "t3"), ("b1", "b2")], False),                     # out of range
])
def test_invalid_diagrams(k, edges, loop):
    with pytest.raises(TLDError):
        Diagram.from_edges(k, edges, decorated_loop=loop)


def test_plain_diagrams_reject_decoration():
    with pytest.raises(TLDError):
        Diagram.from_edges(2, [("t1", "t2", 1), ("b1", "b2", 1)], kind=PLAIN_A)


def test_edge_canonical_order():
    d = Diagram.from_edges(2, [("b1", "b2"), ("t2", "t1")])
    assert [(str(e.a), str(e.b)) for e in d.edges] == [("t1", "t2"), ("b2", "b1")]
    assert isinstance(d.edges[0], Edge)


def test_concat_relations():
    for g in D4.generators:
        d = simple_diagram(4, g)
        sq = concat(d, d)
        assert sq.loop_power == 1 and sq.diagram == d
        e = concat(identity_diagram(4), d)
        assert e.loop_power == 0 and e.diagram == d
    assert concat(simple_diagram(4, 1), simple_diagram(4, ONE_BAR), Mode.LFD).is_zero
    d2, d1b = simple_diagram(4, 2), simple_diagram(4, ONE_BAR)
    first = concat(d2, d1b)
    assert concat(first.diagram, d2).diagram == d2


def test_admissible_examples():
    type1 = Diagram.from_edges(5, [("t1", "t2"), ("t4", "t5"), ("t3", "b3"),
                                   ("b1", "b2"), ("b4", "b5")], decorated_loop=True)
    type2 = Diagram.from_edges(5, [("t1", "t2"), ("t4", "t5"), ("t3", "b5", 1),
                                   ("b1", "b2", 1), ("b3", "b4")])
    assert admissible_type(type1) is HeapType.I
    assert admissible_type(type2) is HeapType.II
    assert admissible_type(identity_diagram(5)) is HeapType.II
    odd = Diagram.from_edges(4, [("t1", "t2", 1), ("t3", "b3"), ("t4", "b4"),
                                 ("b1", "b2")])
    assert admissible_type(odd) is None


def test_enumerate_admissible_n4():
    assert len(enumerate_admissible(4, "I")) == 13
    assert len(enumerate_admissible(4, "II")) == 35
    assert len(enumerate_admissible(4, "all")) == 48


def test_type_two_count_by_exposed_edges():
    total = 0
    matchings = enumerate_matchings(4, PLAIN_A)
    assert len(matchings) == 14
    for m in matchings:
        if a_value(m) == 0:
            total += 1
            continue
        exposed = sum(1 for depth in m.depth.values() if depth == 0)
        total += 2 ** (exposed - 1)
    assert total == 35


def test_star():
    assert star(identity_diagram(4)) == identity_diagram(4)
    for g in D4.generators:
        assert star(simple_diagram(4, g)) == simple_diagram(4, g)
    for d in enumerate_admissible(4):
        assert star(star(d)) == d


def test_diagram_of_word():
    assert diagram_of_word(Word.parse(D4, "")).diagram == identity_diagram(4)
    r = diagram_of_word(Word.parse(D4, "1bar,1"))
    assert r.loop_power == 0 and admissible_type(r.diagram) is HeapType.I
    assert edges_of(r.diagram) >= {("t1", "t2", False), ("b2", "b1", False)}
    assert r.diagram.decorated_loop


def test_word_diagram_bijection_d4():
    basis = set(enumerate_admissible(4))
    seen = set()
    for word in enumerate_fc(D4):
        r = diagram_of_word(word)
        assert r.loop_power == 0
        assert admissible_type(r.diagram) == classify_type(word)
        seen.add(r.diagram)
    assert seen == basis


def test_lfd_decorated_loop_vanishes():
    loop = diagram_of_word(Word.parse(D4, "1bar,1"), Mode.LFD)
    assert loop.is_zero


BASIS4 = enumerate_admissible(4)


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(BASIS4), st.sampled_from(BASIS4))
def test_two_a_plus_p(x, y):
    for d in (x, y):
        assert 2 * a_value(d) + p_value(d) == d.k
    r = concat(x, y)
    assert p_value(r.diagram) <= min(p_value(x), p_value(y))


def test_lfd_agrees_with_dtl_on_type_two():
    rng = random.Random(7)
    basis = enumerate_admissible(5, "II")
    for _ in range(500):
        x, y = rng.choice(basis), rng.choice(basis)
        dtl, lfd = concat(x, y, Mode.DTL), concat(x, y, Mode.LFD)
        if dtl.diagram.decorated_loop:
            assert lfd.is_zero
        else:
            assert lfd == dtl
