"""Deterministic ASCII and SVG drawings of diagrams and heaps."""

from __future__ import annotations

__all__ = ["diagram_ascii", "diagram_svg", "heap_ascii", "heap_svg"]

from .coxeter import ONE_BAR, format_generator
from .diagram import Diagram
from .heap import Heap, layout

_CELL = 4
_MARGIN = 4


def _cup_heights(cups: list[tuple[int, int]]) -> dict[tuple[int, int], int]:
    """Height 1 for innermost cups, one more than the tallest cup inside otherwise."""
    heights = {}
    for a, b in sorted(cups, key=lambda c: c[1] - c[0]):
        inner = [heights[c] for c in heights if a < c[0] and c[1] < b]
        heights[(a, b)] = 1 + max(inner, default=0)
    return heights


def _faces(d: Diagram):
    k = d.k
    top, bottom, prop = [], [], []
    for x in range(2 * k):
        y = d.partner[x]
        if x > y:
            continue
        if y < k:
            top.append(((x + 1, y + 1), d.dec[x]))
        elif x >= k:
            bottom.append(((x - k + 1, y - k + 1), d.dec[x]))
        else:
            prop.append((x + 1, y - k + 1, d.dec[x]))
    return top, bottom, sorted(prop)


def _col(i: int) -> int:
    return _MARGIN + _CELL * (i - 1)


def _half_rows(cups, k, prop_cols, height):
    """Rows of one face, nearest the nodes first."""
    heights = _cup_heights([c for c, _ in cups])
    width = _col(k) + 1
    rows = [[" "] * width for _ in range(height)]
    for (a, b), decorated in cups:
        h = heights[(a, b)]
        xa, xb = _col(a), _col(b)
        for r in range(h - 1):
            rows[r][xa] = rows[r][xb] = "|"
        line = rows[h - 1]
        line[xa] = line[xb] = "+"
        for x in range(xa + 1, xb):
            line[x] = "-"
        if decorated:
            line[xa + 1] = "*"
    for x in prop_cols:
        for r in range(height):
            rows[r][_col(x)] = "|"
    return rows


def diagram_ascii(d: Diagram) -> str:
    """
    Nodes are ``o``; cups and caps are ``+--+`` brackets, decorations ``*``,
    and a decorated loop is ``(*)`` in the left margin.

    >>> from tld.diagram import identity_diagram
    >>> print(diagram_ascii(identity_diagram(3)))
        o   o   o
        |   |   |
        o   o   o
    """
    k = d.k
    top, bottom, prop = _faces(d)
    top_h = max(_cup_heights([c for c, _ in top]).values(), default=0)
    bot_h = max(_cup_heights([c for c, _ in bottom]).values(), default=0)
    upper = _half_rows(top, k, [t for t, _, _ in prop], top_h)
    lower = _half_rows(bottom, k, [b for _, b, _ in prop], bot_h)
    width = _col(k) + 1
    span = max([abs(_col(t) - _col(b)) for t, b, _ in prop] + [1])
    middle = [[" "] * width for _ in range(span)]
    for t, b, decorated in prop:
        x0, x1 = _col(t), _col(b)
        char = "|" if x0 == x1 else ("\\" if x1 > x0 else "/")
        for r in range(span):
            x = x0 + round((x1 - x0) * (r + 0.5) / span)
            middle[r][x] = "*" if decorated and r == span // 2 else char
    if d.decorated_loop:
        row = middle[len(middle) // 2]
        row[0:3] = list("(*)")
    node_row = [" "] * width
    for i in range(1, k + 1):
        node_row[_col(i)] = "o"
    lines = [node_row] + upper + middle + list(reversed(lower)) + [node_row[:]]
    return "\n".join("".join(r).rstrip() for r in lines)


def diagram_svg(d: Diagram) -> str:
    k = d.k
    step, top_y, bot_y = 40, 20, 160
    width = step * (k + 1)
    mid = (top_y + bot_y) / 2
    top, bottom, prop = _faces(d)
    th = _cup_heights([c for c, _ in top])
    bh = _cup_heights([c for c, _ in bottom])
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{bot_y + 20}" '
        f'viewBox="0 0 {width} {bot_y + 20}">',
        f'<rect x="{step // 2}" y="{top_y}" width="{step * k}" height="{bot_y - top_y}" '
        'fill="none" stroke="#999" stroke-dasharray="4 3"/>',
    ]
    dots = []

    def x(i):
        return step * i

    for (a, b), decorated in top:
        depth = 18 * th[(a, b)]
        parts.append(f'<path d="M {x(a)} {top_y} C {x(a)} {top_y + depth} {x(b)} '
                     f'{top_y + depth} {x(b)} {top_y}" fill="none" stroke="black" stroke-width="2"/>')
        if decorated:
            dots.append((x(a) + (x(b) - x(a)) * 0.25, top_y + 0.7 * depth))
    for (a, b), decorated in bottom:
        depth = 18 * bh[(a, b)]
        parts.append(f'<path d="M {x(a)} {bot_y} C {x(a)} {bot_y - depth} {x(b)} '
                     f'{bot_y - depth} {x(b)} {bot_y}" fill="none" stroke="black" stroke-width="2"/>')
        if decorated:
            dots.append((x(a) + (x(b) - x(a)) * 0.25, bot_y - 0.7 * depth))
    for t, b, decorated in prop:
        parts.append(f'<path d="M {x(t)} {top_y} C {x(t)} {mid} {x(b)} {mid} {x(b)} {bot_y}" '
                     'fill="none" stroke="black" stroke-width="2"/>')
        if decorated:
            dots.append(((x(t) + x(b)) / 2 - 6, mid))
    if d.decorated_loop:
        parts.append(f'<ellipse cx="{step * 0.85}" cy="{mid}" rx="10" ry="14" '
                     'fill="none" stroke="black" stroke-width="2"/>')
        dots.append((step * 0.85 - 10, mid))
    for cx, cy in dots:
        parts.append(f'<circle cx="{cx:g}" cy="{cy:g}" r="5" fill="#1ab"/>')
    for i in range(1, k + 1):
        for y in (top_y, bot_y):
            parts.append(f'<circle cx="{x(i)}" cy="{y}" r="3" fill="black"/>')
    parts.append("</svg>")
    return "\n".join(parts)


def _heap_columns(h: Heap) -> list[int]:
    if h.graph.family == "D":
        return [ONE_BAR] + list(range(1, h.graph.rank))
    return list(range(1, h.graph.rank + 1))


def heap_ascii(h: Heap) -> str:
    """
    One column per generator (``1bar`` gets its own column in type D), levels
    top-down, entries shown as ``[s]``.
    """
    columns = _heap_columns(h)
    lay = layout(h).coordinates
    depth = 1 + max((c[1] for c in lay), default=-1)
    cell = max(len(format_generator(s)) for s in columns) + 3
    grid = [[" " * cell for _ in columns] for _ in range(depth)]
    for s, (_, level, _) in zip(h.labels, lay):
        grid[level][columns.index(s)] = f"[{format_generator(s)}]".center(cell)
    header = "".join(format_generator(s).center(cell) for s in columns)
    return "\n".join([header.rstrip()] + ["".join(r).rstrip() for r in grid])


def heap_svg(h: Heap) -> str:
    lay = layout(h).coordinates
    size = 36
    cols = h.graph.rank + 1
    depth = 1 + max((c[1] for c in lay), default=-1)
    width, height = size * (cols + 1), size * (depth + 1)
    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
             f'viewBox="0 0 {width} {height}">']
    for s, (col, level, channel) in zip(h.labels, lay):
        x = size * col - size / 2 + channel * size / 4
        y = size * level + size / 2
        parts.append(f'<rect x="{x:g}" y="{y:g}" width="{size}" height="{size}" '
                     'fill="#eef" stroke="black"/>')
        parts.append(f'<text x="{x + size / 2:g}" y="{y + size * 0.65:g}" '
                     f'text-anchor="middle" font-family="monospace" font-size="12">'
                     f'{format_generator(s)}</text>')
    parts.append("</svg>")
    return "\n".join(parts)
