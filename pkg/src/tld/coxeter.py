"""
Coxeter systems of types A and D: words, group elements, commutation classes
and fully commutative elements.

Generators are plain integers. ``i >= 1`` stands for ``s_i`` and ``0`` (the
constant :data:`ONE_BAR`) stands for the extra type D generator ``s_1bar``.
The natural integer order is therefore the fixed generator order
``1bar < 1 < 2 < ...`` used for canonical words.

Group elements are modelled faithfully as permutations: type ``A_n`` acts on
``{1, ..., n+1}`` and type ``D_n`` by even signed permutations of
``{1, ..., n}``.

>>> g = build_graph("A", 4)
>>> w = Word.parse(g, "1,2,1,4,2")
>>> is_reduced(w), length(element_of(w))
(False, 3)
"""

from __future__ import annotations

__all__ = [
    "Generator", "ONE_BAR", "CoxeterGraph", "Word", "GroupElement",
    "build_graph", "format_generator", "parse_generator", "element_of",
    "length", "cayley_lengths", "is_reduced", "descents", "reduced_word",
    "support", "commutation_class", "canonical_word", "is_fully_commutative",
    "enumerate_fc",
]

import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, NewType

from .errors import InvalidGeneratorError, InvalidRankError, ParseError, PreconditionError

Generator = NewType("Generator", int)

ONE_BAR = Generator(0)

_TOKEN_SPLIT = re.compile(r"[\s,]+")


def format_generator(s: int) -> str:
    """
    >>> format_generator(0), format_generator(3)
    ('1bar', '3')
    """
    return "1bar" if s == ONE_BAR else str(s)


def parse_generator(token: str) -> Generator:
    token = token.strip().lower()
    if token in ("1bar", "1b", "1̄"):
        return ONE_BAR
    if not token.isdigit() or int(token) < 1:
        raise ParseError(f"bad generator token {token!r}")
    return Generator(int(token))


@dataclass(frozen=True)
class CoxeterGraph:
    """Coxeter graph of type ``A_n`` (``n >= 1``) or ``D_n`` (``n >= 4``)."""
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in ("A", "D"):
            raise InvalidRankError(f"unknown family {self.family!r}")
        minimum = 1 if self.family == "A" else 4
        if not isinstance(self.rank, int) or self.rank < minimum:
            raise InvalidRankError(
                f"type {self.family} needs rank >= {minimum}, got {self.rank}")

    @cached_property
    def generators(self) -> tuple[Generator, ...]:
        if self.family == "A":
            return tuple(Generator(i) for i in range(1, self.rank + 1))
        return (ONE_BAR,) + tuple(Generator(i) for i in range(1, self.rank))

    @property
    def degree(self) -> int:
        """Size of the set the group permutes."""
        return self.rank + 1 if self.family == "A" else self.rank

    def check(self, s: int) -> None:
        if s not in self.generators:
            raise InvalidGeneratorError(
                f"{format_generator(s)} is not a generator of {self}")

    def m(self, s: int, t: int) -> int:
        """Coxeter matrix entry; always 1, 2 or 3 in types A and D."""
        self.check(s)
        self.check(t)
        if s == t:
            return 1
        if ONE_BAR in (s, t):
            other = t if s == ONE_BAR else s
            return 3 if other == 2 else 2
        return 3 if abs(s - t) == 1 else 2

    def commute(self, s: int, t: int) -> bool:
        """True for ``m(s, t) <= 2``; a generator commutes with itself."""
        return self.m(s, t) != 3

    def __str__(self):
        return f"{self.family}_{self.rank}"


def build_graph(family: str, rank: int) -> CoxeterGraph:
    """
    >>> build_graph("D", 4).m(0, 2)
    3
    """
    return CoxeterGraph(family.upper(), rank)


@dataclass(frozen=True)
class Word:
    graph: CoxeterGraph
    letters: tuple[Generator, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        for s in self.letters:
            self.graph.check(s)

    @classmethod
    def parse(cls, graph: CoxeterGraph, text: str) -> Word:
        """
        Parse comma- or space-separated tokens, e.g. ``"1bar,3,2,1"``.

        >>> str(Word.parse(build_graph("D", 4), " 1BAR 3, 2 "))
        '1bar,3,2'
        """
        tokens = [t for t in _TOKEN_SPLIT.split(text.strip()) if t]
        return cls(graph, tuple(parse_generator(t) for t in tokens))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self):
        return ",".join(format_generator(s) for s in self.letters)

    def __repr__(self):
        return f"Word({self.graph}, '{self}')"

    def append(self, s: int) -> Word:
        return Word(self.graph, self.letters + (Generator(s),))


@dataclass(frozen=True)
class GroupElement:
    """
    Element of ``W(A_n)`` or ``W(D_n)`` in one-line notation: ``images[i-1]``
    is the (signed) image of ``i``.
    """
    graph: CoxeterGraph
    images: tuple[int, ...]

    @classmethod
    def identity(cls, graph: CoxeterGraph) -> GroupElement:
        return cls(graph, tuple(range(1, graph.degree + 1)))

    def right_mul(self, s: int) -> GroupElement:
        """``self * s``: permutes positions."""
        self.graph.check(s)
        w = list(self.images)
        if s == ONE_BAR:
            w[0], w[1] = -w[1], -w[0]
        else:
            w[s - 1], w[s] = w[s], w[s - 1]
        return GroupElement(self.graph, tuple(w))

    def left_mul(self, s: int) -> GroupElement:
        """``s * self``: permutes values."""
        self.graph.check(s)
        if s == ONE_BAR:
            table = {1: -2, 2: -1, -1: 2, -2: 1}
        else:
            table = {s: s + 1, s + 1: s, -s: -s - 1, -s - 1: -s}
        return GroupElement(self.graph, tuple(table.get(x, x) for x in self.images))

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, len(self.images) + 1))


def element_of(word: Word) -> GroupElement:
    """
    >>> element_of(Word.parse(build_graph("A", 4), "1")).images
    (2, 1, 3, 4, 5)
    """
    g = GroupElement.identity(word.graph)
    for s in word.letters:
        g = g.right_mul(s)
    return g


def length(g: GroupElement) -> int:
    """
    Coxeter length from the inversion statistics of the permutation model.

    Type A counts inversions; type D adds the pairs ``i < j`` with
    ``w(i) + w(j) < 0``. Agreement with :func:`cayley_lengths` is a test.
    """
    w = g.images
    n = len(w)
    inv = sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])
    if g.graph.family == "A":
        return inv
    return inv + sum(1 for i in range(n) for j in range(i + 1, n) if w[i] + w[j] < 0)


@lru_cache(maxsize=None)
def cayley_lengths(graph: CoxeterGraph) -> dict[tuple[int, ...], int]:
    """Breadth-first search of the Cayley graph; maps images to length."""
    start = GroupElement.identity(graph)
    dist = {start.images: 0}
    queue = deque([start])
    while queue:
        g = queue.popleft()
        for s in graph.generators:
            h = g.right_mul(s)
            if h.images not in dist:
                dist[h.images] = dist[g.images] + 1
                queue.append(h)
    return dist


def is_reduced(word: Word) -> bool:
    """
    >>> is_reduced(Word.parse(build_graph("A", 4), "2,1,4"))
    True
    """
    return len(word) == length(element_of(word))


def descents(g: GroupElement, side: str = "left") -> frozenset[Generator]:
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    ell = length(g)
    mul = g.left_mul if side == "left" else g.right_mul
    return frozenset(s for s in g.graph.generators if length(mul(s)) < ell)


def reduced_word(g: GroupElement) -> Word:
    """Some reduced word for ``g``, built by peeling off right descents."""
    letters = []
    while not g.is_identity():
        s = min(descents(g, "right"))
        letters.append(s)
        g = g.right_mul(s)
    return Word(g.graph, tuple(reversed(letters)))


def support(g: GroupElement) -> frozenset[Generator]:
    return frozenset(reduced_word(g).letters)


def _require_reduced(word: Word) -> None:
    if not is_reduced(word):
        raise PreconditionError(f"word {word!r} is not reduced")


def _commutation_closure(word: Word) -> set[tuple[Generator, ...]]:
    graph = word.graph
    seen = {word.letters}
    stack = [word.letters]
    while stack:
        w = stack.pop()
        for i in range(len(w) - 1):
            s, t = w[i], w[i + 1]
            if s != t and graph.m(s, t) == 2:
                v = w[:i] + (t, s) + w[i + 2:]
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
    return seen


def commutation_class(word: Word) -> tuple[Word, ...]:
    """
    All words reachable by swapping adjacent commuting letters, sorted
    lexicographically.

    >>> len(commutation_class(Word.parse(build_graph("A", 4), "3,1,2,4,3")))
    5
    """
    _require_reduced(word)
    return tuple(Word(word.graph, w) for w in sorted(_commutation_closure(word)))


def canonical_word(word: Word) -> Word:
    """
    Lexicographically least member of the commutation class of ``word``.

    Greedy: repeatedly pull forward the smallest letter that commutes with
    everything still in front of it.
    """
    graph = word.graph
    rest = list(word.letters)
    out = []
    while rest:
        best = None
        for i, s in enumerate(rest):
            if all(graph.commute(s, t) and s != t for t in rest[:i]):
                if best is None or s < rest[best]:
                    best = i
        out.append(rest.pop(best))
    return Word(graph, tuple(out))


def is_fully_commutative(word: Word) -> bool:
    """
    Word-level test: no member of the commutation class contains a factor
    ``s t s`` with ``m(s, t) = 3``.

    >>> g = build_graph("A", 4)
    >>> is_fully_commutative(Word.parse(g, "3,1,2,3,4"))
    False
    """
    _require_reduced(word)
    return _class_is_fc(word.graph, word.letters)


_FC_CACHE: dict[tuple[CoxeterGraph, tuple[Generator, ...]], bool] = {}


def _class_is_fc(graph: CoxeterGraph, letters: tuple[Generator, ...]) -> bool:
    key = (graph, letters)
    if key in _FC_CACHE:
        return _FC_CACHE[key]
    members = _commutation_closure(Word(graph, letters))
    result = not any(
        w[i] == w[i + 2] and graph.m(w[i], w[i + 1]) == 3
        for w in members
        for i in range(len(w) - 2)
    )
    # every member shares the answer
    for w in members:
        _FC_CACHE[(graph, w)] = result
    return result


def _gaps_ok(graph: CoxeterGraph, letters: Iterable[Generator]) -> bool:
    """
    For a reduced word: between consecutive occurrences of each letter there
    are at least two letters that do not commute with it.
    """
    between: dict[Generator, int] = {}
    for s in letters:
        if s in between and between[s] < 2:
            return False
        between[s] = 0
        for t in between:
            if t != s and graph.m(s, t) == 3:
                between[t] += 1
    return True


def enumerate_fc(graph: CoxeterGraph) -> list[Word]:
    """
    One canonical reduced word per fully commutative element, the identity
    (empty word) included. Sorted by length, then lexicographically.

    >>> len(enumerate_fc(build_graph("A", 3)))
    14
    """
    identity = GroupElement.identity(graph)
    found = {identity.images: ()}
    frontier = [((), identity, 0)]
    while frontier:
        next_frontier = []
        for letters, g, ell in frontier:
            for s in graph.generators:
                h = g.right_mul(s)
                if h.images in found or length(h) != ell + 1:
                    continue
                candidate = letters + (s,)
                if not _gaps_ok(graph, candidate):
                    continue
                canon = canonical_word(Word(graph, candidate)).letters
                found[h.images] = canon
                next_frontier.append((canon, h, ell + 1))
        frontier = next_frontier
    return sorted((Word(graph, w) for w in found.values()),
                  key=lambda w: (len(w), w.letters))
