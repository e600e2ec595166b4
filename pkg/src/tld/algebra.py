"""
Exact arithmetic in Z[delta] and in the diagram algebras DTL(A_n), DTL(D_n)
and LFD(D_n).
"""

from __future__ import annotations

__all__ = [
    "PolyDelta", "DELTA", "ONE", "ZERO", "AlgebraKind", "AlgebraElement",
    "poly_add", "poly_mul", "poly_eq", "elem_add", "elem_scale", "elem_mul",
    "generator_element", "word_to_element", "verify_presentation", "dimension",
]

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Optional, Union

from .coxeter import ONE_BAR, CoxeterGraph, Word, build_graph, format_generator
from .diagram import (
    DECORATED_D, PLAIN_A, Diagram, Mode, admissible_type, concat, enumerate_admissible,
    enumerate_matchings, identity_diagram, simple_diagram,
)
from .errors import DimensionError, InvalidRankError, ParseError
from .heap import HeapType


class PolyDelta:
    """
    Integer polynomial in delta, stored sparsely as ``{exponent: coeff}``.

    >>> p = PolyDelta({1: 1, 0: 1})
    >>> p * p
    PolyDelta('1 + 2d + d^2')
    """
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[int, int], int, None] = None):
        if terms is None:
            terms = {}
        elif isinstance(terms, int):
            terms = {0: terms}
        clean = {}
        for e, c in terms.items():
            if not isinstance(e, int) or e < 0:
                raise ValueError(f"bad delta exponent {e!r}")
            if c:
                clean[e] = int(c)
        self._terms = tuple(sorted(clean.items()))
        self._hash = hash(self._terms)

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> PolyDelta:
        return cls({exponent: coeff})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        return self._terms[-1][0] if self._terms else -1

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = PolyDelta(other)
        if not isinstance(other, PolyDelta):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return self._hash

    def __add__(self, other):
        if isinstance(other, int):
            other = PolyDelta(other)
        out = dict(self._terms)
        for e, c in other._terms:
            out[e] = out.get(e, 0) + c
        return PolyDelta(out)

    __radd__ = __add__

    def __neg__(self):
        return PolyDelta({e: -c for e, c in self._terms})

    def __sub__(self, other):
        return self + (-PolyDelta(other) if isinstance(other, int) else -other)

    def __mul__(self, other):
        if isinstance(other, int):
            other = PolyDelta(other)
        if not isinstance(other, PolyDelta):
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return PolyDelta(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = ONE
        for _ in range(n):
            result = result * self
        return result

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self._terms:
            mono = "" if e == 0 else ("d" if e == 1 else f"d^{e}")
            if e == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"PolyDelta('{self}')"

    def to_dict(self) -> dict[str, int]:
        return {str(e): c for e, c in self._terms}

    @classmethod
    def from_dict(cls, data: Mapping[str, int]) -> PolyDelta:
        try:
            return cls({int(e): int(c) for e, c in data.items()})
        except (TypeError, ValueError, AttributeError) as exc:
            raise ParseError(f"bad coefficient map {data!r}") from exc


ZERO = PolyDelta()
ONE = PolyDelta(1)
DELTA = PolyDelta.monomial(1)


def poly_add(p: PolyDelta, q: PolyDelta) -> PolyDelta:
    return p + q


def poly_mul(p: PolyDelta, q: PolyDelta) -> PolyDelta:
    return p * q


def poly_eq(p: PolyDelta, q: PolyDelta) -> bool:
    return p == q


_KINDS = ("dtl-a", "dtl-d", "lfd-d")


@dataclass(frozen=True)
class AlgebraKind:
    """``dtl-a`` rank n lives on n+1 strands; ``dtl-d`` and ``lfd-d`` on n."""
    name: str
    rank: int

    def __post_init__(self):
        if self.name not in _KINDS:
            raise ParseError(f"unknown algebra {self.name!r}")
        minimum = 1 if self.name == "dtl-a" else 4
        if not isinstance(self.rank, int) or self.rank < minimum:
            raise InvalidRankError(f"{self.name} needs rank >= {minimum}")

    @property
    def strands(self) -> int:
        return self.rank + 1 if self.name == "dtl-a" else self.rank

    @property
    def diagram_kind(self) -> str:
        return PLAIN_A if self.name == "dtl-a" else DECORATED_D

    @property
    def mode(self) -> Mode:
        return Mode.LFD if self.name == "lfd-d" else Mode.DTL

    @cached_property
    def graph(self) -> CoxeterGraph:
        return build_graph("A" if self.name == "dtl-a" else "D", self.rank)


class AlgebraElement:
    """
    Finite linear combination of basis diagrams with Z[delta] coefficients.
    Terms are kept sorted by the canonical diagram key.
    """
    __slots__ = ("kind", "_terms")

    def __init__(self, kind: AlgebraKind, terms: Union[Mapping[Diagram, PolyDelta],
                                                       Iterable] = ()):
        self.kind = kind
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Diagram, PolyDelta] = {}
        for d, c in items:
            if not isinstance(c, PolyDelta):
                c = PolyDelta(c)
            self._check(d)
            acc[d] = acc.get(d, ZERO) + c
        self._terms = tuple(sorted(((d, c) for d, c in acc.items() if c),
                                   key=lambda t: t[0].key))

    def _check(self, d: Diagram) -> None:
        kind = self.kind
        if d.k != kind.strands or d.kind != kind.diagram_kind:
            raise DimensionError(f"diagram {d} does not belong to {kind.name}({kind.rank})")
        t = admissible_type(d) if d.kind == DECORATED_D else HeapType.II
        if t is None or (kind.name == "lfd-d" and t is HeapType.I):
            raise DimensionError(f"diagram {d} is not a basis diagram of {kind.name}")

    @classmethod
    def zero(cls, kind: AlgebraKind) -> AlgebraElement:
        return cls(kind)

    @classmethod
    def unit(cls, kind: AlgebraKind) -> AlgebraElement:
        return cls(kind, {identity_diagram(kind.strands, kind.diagram_kind): ONE})

    @classmethod
    def basis(cls, kind: AlgebraKind, d: Diagram) -> AlgebraElement:
        return cls(kind, {d: ONE})

    @property
    def terms(self) -> dict[Diagram, PolyDelta]:
        return dict(self._terms)

    def items(self):
        return iter(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.kind == other.kind and self._terms == other._terms

    def __hash__(self):
        return hash((self.kind, self._terms))

    def _same_kind(self, other: AlgebraElement) -> None:
        if self.kind != other.kind:
            raise DimensionError(f"{self.kind} vs {other.kind}")

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        self._same_kind(other)
        return AlgebraElement(self.kind, list(self._terms) + list(other._terms))

    def __neg__(self):
        return AlgebraElement(self.kind, [(d, -c) for d, c in self._terms])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, p: Union[PolyDelta, int]) -> AlgebraElement:
        p = PolyDelta(p) if isinstance(p, int) else p
        return AlgebraElement(self.kind, [(d, p * c) for d, c in self._terms])

    def __mul__(self, other):
        if isinstance(other, (int, PolyDelta)):
            return self.scale(other)
        self._same_kind(other)
        mode = self.kind.mode
        acc: dict[Diagram, PolyDelta] = {}
        for d1, c1 in self._terms:
            for d2, c2 in other._terms:
                r = concat(d1, d2, mode)
                if r.is_zero:
                    continue
                c = c1 * c2 * PolyDelta.monomial(r.loop_power)
                acc[r.diagram] = acc.get(r.diagram, ZERO) + c
        return AlgebraElement(self.kind, acc)

    def __rmul__(self, other):
        if isinstance(other, (int, PolyDelta)):
            return self.scale(other)
        return NotImplemented

    def __repr__(self):
        if not self._terms:
            return f"AlgebraElement({self.kind.name}({self.kind.rank}), 0)"
        body = " + ".join(f"({c}){d}" for d, c in self._terms)
        return f"AlgebraElement({self.kind.name}({self.kind.rank}), {body})"

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.name,
            "rank": self.kind.rank,
            "terms": [{"coeff": c.to_dict(), "diagram": d.to_dict()}
                      for d, c in self._terms],
        }

    @classmethod
    def from_dict(cls, data: dict) -> AlgebraElement:
        try:
            kind = AlgebraKind(data["kind"], data["rank"])
            terms = [(Diagram.from_dict(t["diagram"], kind.diagram_kind),
                      PolyDelta.from_dict(t["coeff"])) for t in data["terms"]]
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed algebra element: {exc}") from exc
        return cls(kind, terms)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> AlgebraElement:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(str(exc)) from exc
        return cls.from_dict(data)


def elem_add(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    return x + y


def elem_scale(p: PolyDelta, x: AlgebraElement) -> AlgebraElement:
    return x.scale(p)


def elem_mul(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    return x * y


def generator_element(kind: AlgebraKind, s: int) -> AlgebraElement:
    return AlgebraElement.basis(kind, simple_diagram(kind.strands, s, kind.diagram_kind))


def word_to_element(word: Union[Word, str], kind: AlgebraKind) -> AlgebraElement:
    """
    Monomial ``b_{x1} ... b_{xm}`` as a diagram combination.

    >>> k = AlgebraKind("dtl-d", 4)
    >>> word_to_element("1,2,1", k) == word_to_element("1", k)
    True
    """
    if isinstance(word, str):
        word = Word.parse(kind.graph, word)
    elif word.graph != kind.graph:
        raise DimensionError(f"word over {word.graph} used in {kind.name}({kind.rank})")
    x = AlgebraElement.unit(kind)
    for s in word.letters:
        x = x * generator_element(kind, s)
    return x


def _as_kind(kind: Union[AlgebraKind, str], n: Optional[int]) -> AlgebraKind:
    if isinstance(kind, AlgebraKind):
        if n is not None and n != kind.rank:
            raise DimensionError(f"rank {n} given with {kind}")
        return kind
    if n is None:
        raise InvalidRankError("rank required")
    return AlgebraKind(kind, n)


def verify_presentation(kind: Union[AlgebraKind, str], n: Optional[int] = None) -> dict:
    """
    Check every instance of the defining relations on the generators:
    ``b_i^2 = delta b_i``; ``b_i b_j = b_j b_i`` for commuting pairs;
    ``b_i b_j b_i = b_i`` for adjacent pairs; and in LFD also
    ``b_1 b_1bar = 0``.
    """
    kind = _as_kind(kind, n)
    graph = kind.graph
    gens = {s: generator_element(kind, s) for s in graph.generators}
    families: dict[str, dict] = {}

    def record(name, label, ok):
        fam = families.setdefault(name, {"checked": 0, "failed": []})
        fam["checked"] += 1
        if not ok:
            fam["failed"].append(label)

    for s, b in gens.items():
        record("square", format_generator(s), b * b == b.scale(DELTA))
    for s in graph.generators:
        for t in graph.generators:
            if s == t:
                continue
            label = f"{format_generator(s)},{format_generator(t)}"
            if graph.m(s, t) == 2:
                record("commute", label, gens[s] * gens[t] == gens[t] * gens[s])
            else:
                record("braid", label, gens[s] * gens[t] * gens[s] == gens[s])
    if kind.name == "lfd-d":
        record("pair_free", "1,1bar", (gens[1] * gens[ONE_BAR]).is_zero())
    return {
        "kind": kind.name,
        "rank": kind.rank,
        "relations": families,
        "pass": all(not f["failed"] for f in families.values()),
    }


def dimension(kind: Union[AlgebraKind, str], n: Optional[int] = None) -> int:
    """Size of the diagram basis of the algebra."""
    kind = _as_kind(kind, n)
    if kind.name == "dtl-a":
        return len(enumerate_matchings(kind.strands, PLAIN_A))
    which = "II" if kind.name == "lfd-d" else "all"
    return len(enumerate_admissible(kind.rank, which))
