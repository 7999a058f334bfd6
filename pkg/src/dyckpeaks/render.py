"""ASCII and SVG pictures of a path on the diagonal-marked grid.

The SVG follows the usual figure conventions: light grid, the diagonal
y=x, a bold path, and filled dots on the peaks.  The ASCII picture uses
`_` for down steps, `|` for up steps, `.` for the diagonal and `o` for
peaks, with y increasing upward.
"""

from __future__ import annotations

from .paths import DOWN, UP, peak_coordinates, semilength

SVG_UNIT = 20
_SVG_MARGIN = 10


def render_ascii(word: str) -> str:
    n = semilength(word)
    if n == 0:
        return ""
    # grid[r][c] covers the lattice point (c, n - r)
    grid = [[" "] * (n + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        grid[n - i][i] = "."
    x, y = 0, 0
    for step in word:
        if step == UP:
            y += 1
            grid[n - y][x] = "|"
        else:
            x += 1
            grid[n - y][x] = "_"
    for px, py in peak_coordinates(word):
        grid[n - py][px] = "o"
    return "\n".join("".join(row).rstrip() for row in grid)


def render_svg(word: str) -> str:
    n = semilength(word)
    u = SVG_UNIT
    size = n * u + 2 * _SVG_MARGIN

    def pt(x, y):
        return _SVG_MARGIN + x * u, _SVG_MARGIN + (n - y) * u

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{size}" height="{size}" viewBox="0 0 {size} {size}">'
    ]
    for i in range(n + 1):
        (x0, y0), (x1, y1) = pt(i, 0), pt(i, n)
        lines.append(
            f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}" '
            f'stroke="#cccccc" stroke-width="1"/>'
        )
        (x0, y0), (x1, y1) = pt(0, i), pt(n, i)
        lines.append(
            f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}" '
            f'stroke="#cccccc" stroke-width="1"/>'
        )
    (x0, y0), (x1, y1) = pt(0, 0), pt(n, n)
    lines.append(
        f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}" '
        f'stroke="#888888" stroke-width="1" stroke-dasharray="4 3"/>'
    )
    pts = []
    x, y = 0, 0
    pts.append(pt(x, y))
    for step in word:
        if step == UP:
            y += 1
        else:
            x += 1
        pts.append(pt(x, y))
    path = " ".join(f"{px},{py}" for px, py in pts)
    lines.append(
        f'<polyline points="{path}" fill="none" stroke="#000000" stroke-width="2.5"/>'
    )
    for px, py in peak_coordinates(word):
        cx, cy = pt(px, py)
        lines.append(f'<circle cx="{cx}" cy="{cy}" r="3.5" fill="#000000"/>')
    lines.append("</svg>")
    return "\n".join(lines)
