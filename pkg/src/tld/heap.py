"""
Heaps of reduced words.

The heap of a reduced word is the labelled poset on its letters in which an
earlier letter lies above every later letter it does not commute with (equal
letters never commute). Entries are indexed by word position, so entry 0 is a
maximal element.
"""

from __future__ import annotations

__all__ = [
    "HeapType", "Heap", "HeapLayout", "heap_of", "heaps_equal",
    "fc_by_pattern", "classify_type", "layout",
]

import enum
from dataclasses import dataclass
from functools import cached_property

from .coxeter import (
    ONE_BAR, CoxeterGraph, Generator, Word, commutation_class, is_reduced,
)
from .errors import PreconditionError


class HeapType(enum.Enum):
    I = "I"
    II = "II"


@dataclass(frozen=True)
class Heap:
    graph: CoxeterGraph
    labels: tuple[Generator, ...]
    # (i, j): entry i covers entry j
    covers: frozenset[tuple[int, int]]

    def __len__(self):
        return len(self.labels)

    @cached_property
    def below(self) -> tuple[frozenset[int], ...]:
        """``below[i]``: entries strictly below entry ``i``."""
        n = len(self.labels)
        down: list[set[int]] = [set() for _ in range(n)]
        lower = {i: [] for i in range(n)}
        for i, j in self.covers:
            lower[i].append(j)
        for i in reversed(range(n)):
            for j in lower[i]:
                down[i].add(j)
                down[i] |= down[j]
        return tuple(frozenset(s) for s in down)

    def less(self, a: int, b: int) -> bool:
        """True if entry ``a`` lies strictly below entry ``b``."""
        return a in self.below[b]

    def maximal(self) -> list[int]:
        covered = {j for _, j in self.covers}
        return [i for i in range(len(self.labels)) if i not in covered]

    def canonical_form(self):
        """
        Label-preserving invariant: entries renamed ``(label, rank)`` with rank
        counted from the top among equal labels.
        """
        seen: dict[Generator, int] = {}
        names = []
        for s in self.labels:
            names.append((s, seen.get(s, 0)))
            seen[s] = seen.get(s, 0) + 1
        return (frozenset(names),
                frozenset((names[i], names[j]) for i, j in self.covers))


def heap_of(word: Word) -> Heap:
    """
    >>> from tld.coxeter import build_graph
    >>> h = heap_of(Word.parse(build_graph("A", 5), "2,1,3,2,4,5"))
    >>> sorted(h.covers)
    [(0, 1), (0, 2), (1, 3), (2, 3), (2, 4), (4, 5)]
    """
    if not is_reduced(word):
        raise PreconditionError(f"word {word!r} is not reduced")
    graph, labels = word.graph, word.letters
    n = len(labels)
    relation = {(i, j) for i in range(n) for j in range(i + 1, n)
                if graph.m(labels[i], labels[j]) != 2}
    below: list[set[int]] = [set() for _ in range(n)]
    for i in reversed(range(n)):
        for j in range(i + 1, n):
            if (i, j) in relation:
                below[i].add(j)
                below[i] |= below[j]
    covers = frozenset(
        (i, j) for i in range(n) for j in below[i]
        if not any(j in below[k] for k in below[i])
    )
    return Heap(graph, labels, covers)


def heaps_equal(h1: Heap, h2: Heap) -> bool:
    return h1.graph == h2.graph and h1.canonical_form() == h2.canonical_form()


def fc_by_pattern(h: Heap) -> bool:
    """
    Poset test for full commutativity.

    Between two consecutive entries labelled ``s`` the heap must hold at least
    two entries whose labels do not commute with ``s``. Exactly one such entry
    is the impermissible convex chain ``s < t < s`` with ``m(s, t) = 3``; none
    would make the word non-reduced.
    """
    graph = h.graph
    by_label: dict[Generator, list[int]] = {}
    for i, s in enumerate(h.labels):
        by_label.setdefault(s, []).append(i)
    for s, entries in by_label.items():
        for upper, lower in zip(entries, entries[1:]):
            between = [y for y in h.below[upper] if h.less(lower, y)]
            blockers = [y for y in between if graph.m(s, h.labels[y]) == 3]
            if len(blockers) < 2:
                return False
    return True


def _has_adjacent_pair(letters) -> bool:
    return any({a, b} == {ONE_BAR, 1} for a, b in zip(letters, letters[1:]))


def classify_type(word: Word, method: str = "scan") -> HeapType:
    """
    Type I when some reduced expression has ``s_1bar s_1`` (either order) as
    adjacent letters, type II otherwise.

    ``method="scan"`` looks for an occurrence of ``1bar`` and one of ``1`` with
    no ``2`` between them; ``method="class"`` searches the commutation class.
    """
    if word.graph.family != "D":
        raise PreconditionError("heap types are defined in type D only")
    if not fc_by_pattern(heap_of(word)):
        raise PreconditionError(f"word {word!r} is not fully commutative")
    if method == "class":
        found = any(_has_adjacent_pair(w.letters)
                    for w in commutation_class(word))
    elif method == "scan":
        found = False
        last_seen = None  # the most recent 1bar / 1 since the last 2
        for s in word.letters:
            if s == 2:
                last_seen = None
            elif s in (ONE_BAR, 1):
                if last_seen is not None and last_seen != s:
                    found = True
                    break
                last_seen = s
    else:
        raise ValueError(f"unknown method {method!r}")
    return HeapType.I if found else HeapType.II


@dataclass(frozen=True)
class HeapLayout:
    # per entry: (column, level, channel); level 0 is the top row
    coordinates: tuple[tuple[int, int, int], ...]


def _column(graph: CoxeterGraph, s: Generator) -> tuple[int, int]:
    if graph.family == "D" and s in (ONE_BAR, 1):
        return 1, (-1 if s == ONE_BAR else 1)
    return s, 0


def layout(h: Heap) -> HeapLayout:
    """
    Canonical drawing: maximal entries (the left descents) share the top
    level and every other entry sits as high as its covers allow.
    """
    level: dict[int, int] = {}
    above: dict[int, list[int]] = {i: [] for i in range(len(h.labels))}
    for i, j in h.covers:
        above[j].append(i)
    # word order is a linear extension, so parents are placed first
    for i in range(len(h.labels)):
        level[i] = 1 + max((level[p] for p in above[i]), default=-1)
    coords = []
    for i, s in enumerate(h.labels):
        col, channel = _column(h.graph, s)
        coords.append((col, level[i], channel))
    return HeapLayout(tuple(coords))
