"""Deterministic SVG rendering of snakes, weight systems, and embeddings.

One unit cell is 32 px.  Weights are printed at edge midpoints and the
head cell is tinted.  Output contains no timestamps, so repeated runs
are byte-identical.
"""

from __future__ import annotations

CELL = 32
HEAD_FILL = "#cde7f0"
CELL_FILL = "#ffffff"
STROKE = "#333333"


def _svg(width: int, height: int, parts) -> str:
    header = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">'
    )
    return "\n".join([header, *parts, "</svg>"]) + "\n"


def _rect(x, y, fill) -> str:
    return (
        f'<rect x="{x}" y="{y}" width="{CELL}" height="{CELL}" '
        f'fill="{fill}" stroke="{STROKE}"/>'
    )


def _text(x, y, s) -> str:
    return (
        f'<text x="{x}" y="{y}" font-size="10" text-anchor="middle" '
        f'dominant-baseline="middle">{s}</text>'
    )


def render_cells(cells, head=None) -> str:
    """Squares (lattice cells) with y pointing up; head cell tinted."""
    cells = [tuple(c) for c in cells]
    if not cells:
        return _svg(CELL, CELL, [])
    head = tuple(head) if head is not None else cells[0]
    xs = [c[0] for c in cells]
    ys = [c[1] for c in cells]
    x0, y1 = min(xs), max(ys)
    width = (max(xs) - x0 + 1) * CELL
    height = (y1 - min(ys) + 1) * CELL
    parts = []
    for c in cells:
        px = (c[0] - x0) * CELL
        py = (y1 - c[1]) * CELL
        parts.append(_rect(px, py, HEAD_FILL if c == head else CELL_FILL))
    return _svg(width, height, parts)


def render_wug(snake) -> str:
    """Two vertex rows of the bipartite graph; weights at edge midpoints."""
    n = snake.n
    width = (n + 1) * CELL
    height = 3 * CELL
    parts = []

    def u_pos(i):
        return (i * CELL, CELL // 2 + 4)

    def v_pos(j):
        return (j * CELL, height - CELL // 2 - 4)

    edges = [((i, j), w) for (i, j), w in sorted(snake.weights.items())]
    edges += [((j + 1, j), 1) for j in range(1, n)]
    for (i, j), w in edges:
        x1, y1 = u_pos(i)
        x2, y2 = v_pos(j)
        parts.append(
            f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
            f'stroke="{STROKE}"/>'
        )
        parts.append(_text((x1 + x2) // 2, (y1 + y2) // 2, w))
    for i in range(1, n + 1):
        x, y = u_pos(i)
        parts.append(f'<circle cx="{x}" cy="{y}" r="4" fill="{STROKE}"/>')
        x, y = v_pos(i)
        parts.append(f'<circle cx="{x}" cy="{y}" r="4" fill="none" '
                     f'stroke="{STROKE}"/>')
    return _svg(width, height, parts)


def render_embedding2(e) -> str:
    return render_cells(e.cells, head=e.head_cell)


def render_embedding3(e) -> str:
    """Cells projected to the plane along (1,1,1)-ish oblique axes."""
    projected = []
    for x, y, z in e.cells:
        projected.append((z + x, y + x))
    head = projected[0]
    # dedupe while keeping order so overlapping cells draw once
    seen = []
    for c in projected:
        if c not in seen:
            seen.append(c)
    return render_cells(seen, head=head)
