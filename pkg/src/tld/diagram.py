"""
Decorated planar diagrams in normal form and their concatenation product.

A diagram on ``k`` strands is a non-crossing perfect matching of its ``2k``
boundary nodes. Nodes are numbered internally by an integer id: top node
``t_i`` is ``i - 1`` and bottom node ``b_i`` is ``k + i - 1``. Cutting the box
boundary at the left wall gives the linear order ``t_1 .. t_k, b_k .. b_1``
used for planarity and for left-exposure (nesting depth 0).

Each edge carries one decoration bit (two decorations on an edge cancel).
Closed loops are never stored: undecorated loops become powers of delta and a
decorated loop is a single flag that strips all edge decorations.
"""

from __future__ import annotations

__all__ = [
    "PLAIN_A", "DECORATED_D", "Mode", "NodeRef", "Edge", "Diagram",
    "ScaledDiagram", "identity_diagram", "simple_diagram", "a_value",
    "p_value", "concat", "admissible_type", "enumerate_matchings",
    "enumerate_admissible", "star", "diagram_of_word",
]

import enum
import json
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Optional

from .coxeter import ONE_BAR, Word, format_generator
from .errors import DimensionError, InvalidGeneratorError, ParseError, TLDError
from .heap import HeapType

PLAIN_A = "A"
DECORATED_D = "D"


class Mode(enum.Enum):
    DTL = "DTL"  # decorated loop survives as a basis flag
    LFD = "LFD"  # decorated loop = 0


@dataclass(frozen=True, order=True)
class NodeRef:
    face: str  # "t" (north) or "b" (south)
    index: int

    def __str__(self):
        return f"{self.face}{self.index}"

    @classmethod
    def parse(cls, text: str) -> NodeRef:
        face, digits = text[:1], text[1:]
        if face not in ("t", "b") or not digits.isdigit():
            raise ParseError(f"bad node name {text!r}")
        return cls(face, int(digits))


@dataclass(frozen=True)
class Edge:
    a: NodeRef
    b: NodeRef
    decorated: bool = False

    @property
    def propagating(self) -> bool:
        return self.a.face != self.b.face


def _pos(x: int, k: int) -> int:
    """Linear position of node id ``x`` when the boundary is cut at the left wall."""
    return x if x < k else 3 * k - 1 - x


def _node_id(ref: NodeRef, k: int) -> int:
    if not 1 <= ref.index <= k:
        raise ParseError(f"node {ref} out of range for k={k}")
    return ref.index - 1 if ref.face == "t" else k + ref.index - 1


def _ref(x: int, k: int) -> NodeRef:
    return NodeRef("t", x + 1) if x < k else NodeRef("b", x - k + 1)


def _depths(partner: tuple[int, ...], k: int) -> Optional[dict[int, int]]:
    """
    Nesting depth of each edge keyed by its earlier node id, or None when the
    matching is not planar.
    """
    order = sorted(range(2 * k), key=lambda x: _pos(x, k))
    stack: list[int] = []
    depth = {}
    for x in order:
        y = partner[x]
        if _pos(y, k) > _pos(x, k):
            depth[x] = len(stack)
            stack.append(x)
        else:
            if not stack or stack[-1] != y:
                return None
            stack.pop()
    return depth


class InvalidDiagramError(TLDError):
    pass


@dataclass(frozen=True)
class Diagram:
    k: int
    partner: tuple[int, ...]
    dec: tuple[bool, ...]  # per node; both ends of an edge agree
    decorated_loop: bool = False
    kind: str = DECORATED_D

    def __post_init__(self):
        k, partner, dec = self.k, self.partner, self.dec
        if k < 1 or len(partner) != 2 * k or len(dec) != 2 * k:
            raise InvalidDiagramError("node arrays do not match k")
        for x, y in enumerate(partner):
            if y == x or not 0 <= y < 2 * k or partner[y] != x:
                raise InvalidDiagramError("edges do not form a perfect matching")
            if dec[x] != dec[y]:
                raise InvalidDiagramError("edge ends disagree on decoration")
        depth = _depths(partner, k)
        if depth is None:
            raise InvalidDiagramError("edges cross")
        if any(dec[x] and d > 0 for x, d in depth.items()):
            raise InvalidDiagramError("decorated edge is not left-exposed")
        decorated = any(dec)
        if self.kind == PLAIN_A and (decorated or self.decorated_loop):
            raise InvalidDiagramError("type A diagrams carry no decorations")
        if self.kind not in (PLAIN_A, DECORATED_D):
            raise InvalidDiagramError(f"unknown diagram kind {self.kind!r}")
        if self.decorated_loop and decorated:
            raise InvalidDiagramError("a decorated loop strips edge decorations")
        if a_value(self) == 0 and (decorated or self.decorated_loop):
            raise InvalidDiagramError("diagrams with a-value 0 are undecorated")

    @classmethod
    def from_edges(cls, k: int, edges: Iterable, decorated_loop: bool = False,
                   kind: str = DECORATED_D) -> Diagram:
        """
        Build from ``(a, b)`` or ``(a, b, decorated)`` tuples of node names.

        >>> d = Diagram.from_edges(2, [("t1", "t2", 1), ("b1", "b2", 1)])
        >>> a_value(d), p_value(d)
        (1, 0)
        """
        partner: list[Optional[int]] = [None] * (2 * k)
        dec = [False] * (2 * k)
        for e in edges:
            a, b, *rest = e
            x = _node_id(a if isinstance(a, NodeRef) else NodeRef.parse(a), k)
            y = _node_id(b if isinstance(b, NodeRef) else NodeRef.parse(b), k)
            if partner[x] is not None or partner[y] is not None:
                raise InvalidDiagramError("node used twice")
            partner[x], partner[y] = y, x
            dec[x] = dec[y] = bool(rest and rest[0])
        if any(p is None for p in partner):
            raise InvalidDiagramError("unmatched node")
        return cls(k, tuple(partner), tuple(dec), bool(decorated_loop), kind)

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        """Edges with endpoints in left-wall order, sorted by first endpoint."""
        k = self.k
        out = []
        for x in sorted(range(2 * k), key=lambda x: _pos(x, k)):
            y = self.partner[x]
            if _pos(x, k) < _pos(y, k):
                out.append(Edge(_ref(x, k), _ref(y, k), self.dec[x]))
        return tuple(out)

    @cached_property
    def depth(self) -> dict[int, int]:
        return _depths(self.partner, self.k)

    def n_decorations(self) -> int:
        return sum(self.dec) // 2

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "edges": [{"a": str(e.a), "b": str(e.b), "dec": int(e.decorated)}
                      for e in self.edges],
            "decorated_loop": self.decorated_loop,
        }

    @classmethod
    def from_dict(cls, data: dict, kind: str = DECORATED_D) -> Diagram:
        try:
            k = data["k"]
            edges = [(e["a"], e["b"], e["dec"]) for e in data["edges"]]
            loop = data.get("decorated_loop", False)
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed diagram: {exc}") from exc
        if not isinstance(k, int) or any(e[2] not in (0, 1) for e in edges) \
                or not isinstance(loop, bool):
            raise ParseError("malformed diagram fields")
        return cls.from_edges(k, edges, loop, kind)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str, kind: str = DECORATED_D) -> Diagram:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(str(exc)) from exc
        return cls.from_dict(data, kind)

    @cached_property
    def key(self) -> str:
        """Canonical serialization; the sort and dictionary key for terms."""
        return self.to_json()

    def __str__(self):
        parts = []
        for e in self.edges:
            parts.append(f"{e.a}-{e.b}{'*' if e.decorated else ''}")
        loop = " +loop*" if self.decorated_loop else ""
        return f"<{' '.join(parts)}{loop}>"


@dataclass(frozen=True)
class ScaledDiagram:
    """``delta**loop_power * diagram``, or zero when ``diagram`` is None."""
    loop_power: int
    diagram: Optional[Diagram]

    @property
    def is_zero(self) -> bool:
        return self.diagram is None

    def __str__(self):
        if self.is_zero:
            return "0"
        scalar = {0: "", 1: "d "}.get(self.loop_power, f"d^{self.loop_power} ")
        return f"{scalar}{self.diagram}"


def identity_diagram(k: int, kind: str = DECORATED_D) -> Diagram:
    if k < 1:
        raise DimensionError("k must be positive")
    return Diagram(k, tuple(range(k, 2 * k)) + tuple(range(k)),
                   (False,) * (2 * k), False, kind)


def simple_diagram(k: int, g: int, kind: str = DECORATED_D) -> Diagram:
    """
    Cup ``t_i t_{i+1}`` over cap ``b_i b_{i+1}``; for ``1bar`` both are the
    decorated versions at position 1.

    >>> print(simple_diagram(4, 0))
    <t1-t2* t3-b3 t4-b4 b2-b1*>
    """
    i = 1 if g == ONE_BAR else g
    if not 1 <= i < k or (g == ONE_BAR and kind != DECORATED_D):
        raise InvalidGeneratorError(
            f"{format_generator(g)} is not a simple diagram on {k} strands")
    decorated = g == ONE_BAR
    edges = [(f"t{i}", f"t{i + 1}", decorated), (f"b{i}", f"b{i + 1}", decorated)]
    edges += [(f"t{j}", f"b{j}") for j in range(1, k + 1) if j not in (i, i + 1)]
    return Diagram.from_edges(k, edges, kind=kind)


def a_value(d: Diagram) -> int:
    """Number of non-propagating edges in the north face."""
    k = d.k
    return sum(1 for x in range(k) if d.partner[x] < k) // 2


def p_value(d: Diagram) -> int:
    """Number of propagating edges."""
    k = d.k
    return sum(1 for x in range(k) if d.partner[x] >= k)


def concat(d1: Diagram, d2: Diagram, mode: Mode = Mode.DTL) -> ScaledDiagram:
    """
    The product ``d1 d2``: ``d1`` stacked on top of ``d2``.

    >>> d = simple_diagram(4, 2)
    >>> r = concat(d, d)
    >>> r.loop_power, r.diagram == d
    (1, True)
    """
    if d1.k != d2.k or d1.kind != d2.kind:
        raise DimensionError(
            f"cannot multiply {d1.kind}/{d1.k} by {d2.kind}/{d2.k} diagrams")
    k = d1.k
    p1, q1, p2, q2 = d1.partner, d1.dec, d2.partner, d2.dec
    partner = [0] * (2 * k)
    dec = [False] * (2 * k)
    done = [False] * (2 * k)
    seen_mid = [False] * k

    # d1 bottom id k+m and d2 top id m are the same middle point m
    def walk(x: int, upper: bool, stop_at_mid: Optional[int]):
        parity = False
        while True:
            if upper:
                parity ^= q1[x]
                y = p1[x]
                if y < k:
                    return y, parity
                m = y - k
                if m == stop_at_mid:
                    return None, parity
                seen_mid[m] = True
                x, upper = m, False
            else:
                parity ^= q2[x]
                y = p2[x]
                if y >= k:
                    return y, parity
                m = y
                if m == stop_at_mid:
                    return None, parity
                seen_mid[m] = True
                x, upper = k + m, True

    for o in range(2 * k):
        if done[o]:
            continue
        end, parity = walk(o, o < k, None)
        partner[o], partner[end] = end, o
        dec[o] = dec[end] = parity
        done[o] = done[end] = True

    even_loops = 0
    odd_loops = int(d1.decorated_loop) + int(d2.decorated_loop)
    for m in range(k):
        if seen_mid[m]:
            continue
        seen_mid[m] = True
        _, parity = walk(k + m, True, m)
        if parity:
            odd_loops += 1
        else:
            even_loops += 1

    if odd_loops and mode is Mode.LFD:
        return ScaledDiagram(0, None)
    if odd_loops:
        even_loops += odd_loops - 1
        dec = [False] * (2 * k)
    result = Diagram(k, tuple(partner), tuple(dec), odd_loops > 0, d1.kind)
    return ScaledDiagram(even_loops, result)


def admissible_type(d: Diagram) -> Optional[HeapType]:
    """
    Type I: one decorated loop and no other decoration. Type II: no loop and an
    even number of decorated edges. Returns None for anything else.
    """
    if d.decorated_loop:
        return HeapType.I if d.n_decorations() == 0 and a_value(d) > 0 else None
    return HeapType.II if d.n_decorations() % 2 == 0 else None


def _matchings(points: list[int]) -> Iterator[list[tuple[int, int]]]:
    if not points:
        yield []
        return
    first = points[0]
    for j in range(1, len(points), 2):
        for inside in _matchings(points[1:j]):
            for outside in _matchings(points[j + 1:]):
                yield [(first, points[j])] + inside + outside


def enumerate_matchings(k: int, kind: str = DECORATED_D) -> list[Diagram]:
    """All undecorated loop-free diagrams on ``k`` strands (Catalan many)."""
    order = sorted(range(2 * k), key=lambda x: _pos(x, k))
    out = []
    for pairs in _matchings(order):
        partner = [0] * (2 * k)
        for x, y in pairs:
            partner[x], partner[y] = y, x
        out.append(Diagram(k, tuple(partner), (False,) * (2 * k), False, kind))
    return sorted(out, key=lambda d: d.key)


def enumerate_admissible(n: int, which: str = "all") -> list[Diagram]:
    """
    D-admissible diagrams for rank ``n`` (on ``n`` strands).

    ``which`` is ``"I"``, ``"II"`` or ``"all"``. Type II decorates every
    even-size subset of the depth-0 edges; type I puts a decorated loop on
    every undecorated matching with ``a > 0``.
    """
    if which not in ("I", "II", "all"):
        raise ValueError(f"which must be 'I', 'II' or 'all', not {which!r}")
    out = []
    for base in enumerate_matchings(n):
        if which in ("I", "all") and a_value(base) > 0:
            out.append(Diagram(n, base.partner, base.dec, True))
        if which in ("II", "all"):
            exposed = [x for x, d in base.depth.items() if d == 0]
            if a_value(base) == 0:
                exposed = []
            for r in range(0, len(exposed) + 1, 2):
                for chosen in combinations(exposed, r):
                    dec = [False] * (2 * n)
                    for x in chosen:
                        dec[x] = dec[base.partner[x]] = True
                    out.append(Diagram(n, base.partner, tuple(dec)))
    return sorted(out, key=lambda d: d.key)


def star(d: Diagram) -> Diagram:
    """Top-bottom flip."""
    k = d.k
    flip = [x + k if x < k else x - k for x in range(2 * k)]
    partner = [0] * (2 * k)
    dec = [False] * (2 * k)
    for x in range(2 * k):
        partner[flip[x]] = flip[d.partner[x]]
        dec[flip[x]] = d.dec[x]
    return Diagram(k, tuple(partner), tuple(dec), d.decorated_loop, d.kind)


def strands_for(graph) -> tuple[int, str]:
    """Strand count and diagram kind for a Coxeter graph."""
    if graph.family == "A":
        return graph.rank + 1, PLAIN_A
    return graph.rank, DECORATED_D


def diagram_of_word(word: Word, mode: Mode = Mode.DTL) -> ScaledDiagram:
    """Product of the simple diagrams of the letters, left to right."""
    k, kind = strands_for(word.graph)
    current = ScaledDiagram(0, identity_diagram(k, kind))
    for s in word.letters:
        step = concat(current.diagram, simple_diagram(k, s, kind), mode)
        if step.is_zero:
            return step
        current = ScaledDiagram(current.loop_power + step.loop_power, step.diagram)
    return current
