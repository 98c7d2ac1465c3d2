"""SVG drawings of front event words."""
from __future__ import annotations

from .errors import EngelToriError, InvalidFront
from .knots import FrontWord, orient_front, validate_front

COL = 60
ROW = 28
PAD = 24


def _y(slot: int) -> float:
    return PAD + slot * ROW


def _curve(x0, y0, x1, y1) -> str:
    xm = (x0 + x1) / 2
    return f"M {x0:g} {y0:g} C {xm:g} {y0:g} {xm:g} {y1:g} {x1:g} {y1:g}"


def _branch(cx, cy, x1, y1) -> str:
    # both branches leave the cusp point tangent to the horizontal
    c1 = cx + (x1 - cx) * 0.6
    return f"M {cx:g} {cy:g} C {c1:g} {cy:g} {c1:g} {y1:g} {x1:g} {y1:g}"


def front_paths(f: FrontWord) -> list:
    """SVG path strings, one per drawn piece, in event order."""
    report = validate_front(f)
    if not report.valid:
        raise InvalidFront("; ".join(report.problems))
    paths = []
    k = 0
    for c, e in enumerate(f.events):
        x0, x1 = PAD + c * COL, PAD + (c + 1) * COL
        p = e.pos
        if e.kind == "L":
            cx, cy = x0 + COL * 0.25, (_y(p) + _y(p + 1)) / 2
            paths += [_branch(cx, cy, x1, _y(p)), _branch(cx, cy, x1, _y(p + 1))]
            moves = [(s, s if s < p else s + 2) for s in range(k)]
            k += 2
        elif e.kind == "R":
            cx, cy = x1 - COL * 0.25, (_y(p) + _y(p + 1)) / 2
            paths += [_branch(cx, cy, x0, _y(p)), _branch(cx, cy, x0, _y(p + 1))]
            moves = [(s, s if s < p else s - 2) for s in range(k) if s not in (p, p + 1)]
            k -= 2
        else:
            moves = [(s, {p: p + 1, p + 1: p}.get(s, s)) for s in range(k)]
        paths += [_curve(x0, _y(a), x1, _y(b)) for a, b in moves]
    return paths


def front_svg(f: FrontWord, title: str = "") -> str:
    paths = front_paths(f)
    counts = f.strand_counts()
    width = 2 * PAD + len(f.events) * COL
    height = 2 * PAD + max(max(counts) - 1, 1) * ROW
    labels = []
    try:
        o = orient_front(f)
    except EngelToriError:
        o = None
    if o is not None:
        for c, (e, lab) in enumerate(zip(f.events, o.labels)):
            if e.kind == "X":
                x = PAD + (c + 0.5) * COL
                y = (_y(e.pos) + _y(e.pos + 1)) / 2
                text = "+" if lab > 0 else "-"
                labels.append(f'<text x="{x:g}" y="{y - 6:g}" font-size="11" '
                              f'text-anchor="middle" fill="#b22">{text}</text>')
    body = "\n".join(f'  <path d="{d}"/>' for d in paths)
    head = f"  <title>{title or f}</title>\n"
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">\n{head}'
        f'  <g fill="none" stroke="black" stroke-width="1.6">\n{body}\n  </g>\n'
        + "".join(f"  {t}\n" for t in labels)
        + "</svg>\n"
    )
