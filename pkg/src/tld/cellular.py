"""
Half-diagrams and the cell datum (Lambda, M, C, *) of LFD(D_n), with an
exhaustive check of the three cellular-algebra axioms.
"""

from __future__ import annotations

__all__ = [
    "HalfDiagram", "CellLabel", "CellDatum", "split", "join", "half_leq",
    "label_of", "build_cell_datum", "C", "verify_cellularity",
]

from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional

from .algebra import AlgebraElement, AlgebraKind, PolyDelta
from .coxeter import build_graph
from .diagram import (
    Diagram, Mode, admissible_type, concat, enumerate_admissible, p_value,
    simple_diagram, star,
)
from .errors import DimensionError, ParityError, PreconditionError
from .heap import HeapType

Cup = tuple[int, int]


@dataclass(frozen=True)
class HalfDiagram:
    """
    One face of a diagram with its propagating edges removed: non-crossing cups
    on nodes ``1..k``; unmatched nodes are where propagating edges attach.
    """
    k: int
    cups: tuple[Cup, ...]
    decorated: frozenset[Cup] = frozenset()

    def __post_init__(self):
        cups = tuple(sorted(tuple(sorted(c)) for c in self.cups))
        object.__setattr__(self, "cups", cups)
        object.__setattr__(self, "decorated", frozenset(tuple(sorted(c)) for c in self.decorated))
        used = [x for c in cups for x in c]
        if len(set(used)) != len(used) or any(not 1 <= x <= self.k for x in used):
            raise DimensionError(f"bad cups {cups} on {self.k} nodes")
        if not self.decorated <= set(cups):
            raise DimensionError("decoration on a missing cup")
        for a, b in cups:
            for c, d in cups:
                if a < c < b < d:
                    raise DimensionError(f"cups {a}{b} and {c}{d} cross")
        for c in self.decorated:
            if not self.exposed(c):
                raise DimensionError(f"decorated cup {c} is not left-exposed")

    def exposed(self, cup: Cup) -> bool:
        """No enclosing cup and no propagating node to its left."""
        a, b = cup
        if any(c < a and b < d for c, d in self.cups):
            return False
        return all(x in self.matched for x in range(1, a))

    @cached_property
    def matched(self) -> frozenset[int]:
        return frozenset(x for c in self.cups for x in c)

    @property
    def free(self) -> list[int]:
        return [x for x in range(1, self.k + 1) if x not in self.matched]

    @property
    def p(self) -> int:
        return self.k - 2 * len(self.cups)

    @property
    def a(self) -> int:
        return len(self.cups)

    def n_decorations(self) -> int:
        return len(self.decorated)

    def sort_key(self):
        return (self.cups, tuple(c in self.decorated for c in self.cups))

    def __str__(self):
        body = ",".join(f"{a}{b}{'*' if (a, b) in self.decorated else ''}"
                        for a, b in self.cups)
        return "{" + body + "}"


@dataclass(frozen=True)
class CellLabel:
    size: int
    sign: str = ""  # "+" or "-" for size 0

    def __str__(self):
        return f"{self.size}{self.sign}"

    def __lt__(self, other):
        """Poset order: strictly smaller size. Zero labels are incomparable."""
        return self.size < other.size

    def __le__(self, other):
        return self == other or self < other

    def __gt__(self, other):
        return other < self

    def __ge__(self, other):
        return other <= self


ZERO_PLUS = CellLabel(0, "+")
ZERO_MINUS = CellLabel(0, "-")


def label_of(h: HalfDiagram) -> CellLabel:
    if h.p > 0:
        return CellLabel(h.p)
    return ZERO_PLUS if h.n_decorations() % 2 == 0 else ZERO_MINUS


def split(d: Diagram) -> tuple[HalfDiagram, HalfDiagram]:
    """
    ``(top, bottom)`` halves of a type II diagram; the bottom is read as if
    reflected upward, so node ``b_i`` becomes ``i``.
    """
    if admissible_type(d) is not HeapType.II:
        raise PreconditionError(f"{d} is not a type II admissible diagram")
    k = d.k
    top, bottom = [], []
    top_dec, bottom_dec = [], []
    for x in range(2 * k):
        y = d.partner[x]
        if x < y and y < k:
            top.append((x + 1, y + 1))
            if d.dec[x]:
                top_dec.append((x + 1, y + 1))
        elif k <= x < y:
            cup = (x - k + 1, y - k + 1)
            bottom.append(cup)
            if d.dec[x]:
                bottom_dec.append(cup)
    return (HalfDiagram(k, tuple(top), frozenset(top_dec)),
            HalfDiagram(k, tuple(bottom), frozenset(bottom_dec)))


def join(h1: HalfDiagram, h2: HalfDiagram) -> Diagram:
    """
    ``h1`` on top, ``h2`` reflected underneath, free nodes joined in order.
    The leftmost propagating edge absorbs the decoration parity.
    """
    if h1.k != h2.k or h1.p != h2.p:
        raise DimensionError(f"cannot join {h1} and {h2}")
    odd = (h1.n_decorations() + h2.n_decorations()) % 2 == 1
    if odd and h1.p == 0:
        raise ParityError(f"{h1} and {h2} have different decoration parity")
    edges = [(f"t{a}", f"t{b}", (a, b) in h1.decorated) for a, b in h1.cups]
    edges += [(f"b{a}", f"b{b}", (a, b) in h2.decorated) for a, b in h2.cups]
    for m, (x, y) in enumerate(zip(h1.free, h2.free)):
        edges.append((f"t{x}", f"b{y}", odd and m == 0))
    return Diagram.from_edges(h1.k, edges)


def half_leq(h: HalfDiagram, h2: HalfDiagram) -> bool:
    """Every cup of ``h``, decoration included, is a cup of ``h2``."""
    if h.k != h2.k:
        raise DimensionError("half-diagrams on different node counts")
    return set(h.cups) <= set(h2.cups) and all(
        (c in h.decorated) == (c in h2.decorated) for c in h.cups)


@dataclass
class CellDatum:
    n: int
    labels: list[CellLabel]
    M: dict[CellLabel, list[HalfDiagram]]
    basis_index: dict[Diagram, tuple[CellLabel, HalfDiagram, HalfDiagram]] = field(repr=False)

    @property
    def kind(self) -> AlgebraKind:
        return AlgebraKind("lfd-d", self.n)

    def m_sizes(self) -> dict[str, int]:
        return {str(lam): len(self.M[lam]) for lam in self.labels}

    def triples(self) -> Iterable[tuple[CellLabel, HalfDiagram, HalfDiagram]]:
        for lam in self.labels:
            for S in self.M[lam]:
                for T in self.M[lam]:
                    yield lam, S, T

    def hasse(self) -> list[tuple[CellLabel, CellLabel]]:
        """Cover relations ``(lower, upper)`` of the label poset."""
        out = []
        for lo in self.labels:
            for hi in self.labels:
                if lo < hi and not any(lo < mid < hi for mid in self.labels):
                    out.append((lo, hi))
        return out


def build_cell_datum(n: int) -> CellDatum:
    build_graph("D", n)  # rank check
    halves: set[HalfDiagram] = set()
    for d in enumerate_admissible(n, "II"):
        top, bottom = split(d)
        halves.update((top, bottom))
    M: dict[CellLabel, list[HalfDiagram]] = defaultdict(list)
    for h in halves:
        M[label_of(h)].append(h)
    for lam in M:
        M[lam].sort(key=HalfDiagram.sort_key)
    labels = [CellLabel(m) for m in range(n, 0, -2)]
    if n % 2 == 0:
        labels += [ZERO_PLUS, ZERO_MINUS]
    basis_index = {}
    for lam in labels:
        for S in M[lam]:
            for T in M[lam]:
                basis_index[join(S, T)] = (lam, S, T)
    return CellDatum(n, labels, {lam: M[lam] for lam in labels}, basis_index)


def C(datum: CellDatum, lam: CellLabel, S: HalfDiagram, T: HalfDiagram) -> AlgebraElement:
    if S not in datum.M.get(lam, ()) or T not in datum.M.get(lam, ()):
        raise PreconditionError(f"{S}, {T} not both in M({lam})")
    return AlgebraElement.basis(datum.kind, join(S, T))


def _epsilon_str(power: Optional[int]) -> str:
    return "0" if power is None else str(PolyDelta.monomial(power))


def verify_cellularity(n: int, datum: Optional[CellDatum] = None) -> dict:
    """
    Exhaustive check of the cell datum of LFD(D_n).

    Axiom 3 is checked for left multiplication by every simple diagram; terms
    with fewer propagating edges than ``|lambda|`` are dropped as elements of
    ``A(<lambda)``.
    """
    datum = datum or build_cell_datum(n)
    witnesses: list[str] = []
    basis = enumerate_admissible(n, "II")

    # axiom 1
    images = [join(S, T) for _, S, T in datum.triples()]
    ok1 = len(set(images)) == len(images) and set(images) == set(basis)
    if not ok1:
        witnesses.append(f"axiom1: {len(set(images))} distinct images, "
                         f"{len(images)} triples, basis {len(basis)}")

    # axiom 2
    ok2 = True
    for lam, S, T in datum.triples():
        if star(join(S, T)) != join(T, S):
            ok2 = False
            witnesses.append(f"axiom2: star C({lam},{S},{T}) != C({lam},{T},{S})")
    for x in basis:
        if star(star(x)) != x:
            ok2 = False
            witnesses.append(f"axiom2: star not an involution on {x}")
        for y in basis:
            lhs = concat(x, y, Mode.LFD)
            rhs = concat(star(y), star(x), Mode.LFD)
            flipped = None if lhs.is_zero else star(lhs.diagram)
            if flipped != rhs.diagram or (not lhs.is_zero and lhs.loop_power != rhs.loop_power):
                ok2 = False
                witnesses.append(f"axiom2: star(xy) != star(y)star(x) for {x}, {y}")

    # axiom 3
    ok3 = True
    epsilons: set[str] = set()
    graph = build_graph("D", n)
    for g in graph.generators:
        a = simple_diagram(n, g)
        for lam in datum.labels:
            for S in datum.M[lam]:
                rows = {}
                for T in datum.M[lam]:
                    row, problems, eps = _act(datum, a, lam, S, T)
                    epsilons.add(eps)
                    for p in problems:
                        ok3 = False
                        witnesses.append(f"axiom3: d_{g} on C({lam},{S},{T}): {p}")
                    rows[T] = row
                if len(set(rows.values())) > 1:
                    ok3 = False
                    witnesses.append(f"axiom3: r_{g}(-,{S}) depends on T at {lam}")
    if not epsilons <= {"0", "1", "d"}:
        ok3 = False
        witnesses.append(f"axiom3: epsilon values {sorted(epsilons)}")

    report = {
        "rank": n,
        "axiom1": "pass" if ok1 else "fail",
        "axiom2": "pass" if ok2 else "fail",
        "axiom3": "pass" if ok3 else "fail",
        "m_sizes": datum.m_sizes(),
        "dim": len(basis),
        "epsilons": sorted(epsilons),
    }
    if witnesses:
        report["witnesses"] = witnesses
    return report


def _act(datum, a, lam, S, T):
    """
    Row ``{S': r_a(S', S)}`` of ``a * C(lam, S, T)`` modulo ``A(<lam)``,
    plus any violated expectations and the scalar epsilon.
    """
    problems = []
    result = concat(a, join(S, T), Mode.LFD)
    if result.is_zero:
        return frozenset(), problems, "0"
    d2, power = result.diagram, result.loop_power
    eps = _epsilon_str(power)
    top, bottom = split(d2)
    if not half_leq(T, bottom):
        problems.append(f"{T} is not a sub-half-diagram of {bottom}")
    if p_value(d2) > lam.size:
        problems.append(f"propagating count grew to {p_value(d2)}")
    if p_value(d2) < lam.size:
        return frozenset(), problems, eps
    entry = datum.basis_index.get(d2)
    if entry is None or entry[0] != lam or entry[2] != T:
        problems.append(f"product {d2} is not C({lam}, S', {T})")
        return frozenset(), problems, eps
    return frozenset({(entry[1], PolyDelta.monomial(power))}), problems, eps
