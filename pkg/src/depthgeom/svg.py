"""Deterministic SVG rendering of run reports (planar instances).

Layers: data points, the query point, partition color classes, the bisecting
line, and for projection-style reports the far line h with the projected
images.  Output is a function of the report alone, with fixed float
formatting, so identical reports render byte-identically.
"""

from __future__ import annotations

from fractions import Fraction

PART_COLORS = ["#e41a1c", "#377eb8", "#4daf4a", "#984ea3"]
POINT_COLOR = "#555555"
QUERY_COLOR = "#000000"
LINE_COLOR = "#ff7f00"
H_COLOR = "#a65628"
IMAGE_COLOR = "#1f78b4"


def _f(x) -> str:
    return f"{float(x):.4f}"


def render_svg(report: dict, path: str) -> None:
    inst = report.get("instance", {})
    rows = inst.get("points") or []
    pts = [(float(Fraction(r[0])), float(Fraction(r[1]))) for r in rows] if rows else []
    q = None
    if inst.get("query"):
        q = (float(Fraction(inst["query"][0])), float(Fraction(inst["query"][1])))
    for key in ("red", "blue"):
        sub = inst.get(key)
        if sub and sub.get("points"):
            pts += [(float(Fraction(r[0])), float(Fraction(r[1]))) for r in sub["points"]]
    fam = inst.get("family") or []
    for body in fam:
        pts += [
            (float(Fraction(r[0])), float(Fraction(r[1]))) for r in body["vertices"]
        ]

    width, height = 640.0, 640.0
    if not pts and q is None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(
                f'<svg xmlns="http://www.w3.org/2000/svg" width="{int(width)}" '
                f'height="{int(height)}" viewBox="0 0 {int(width)} {int(height)}"/>\n'
            )
        return
    allpts = pts + ([q] if q is not None else [])
    xs = [p[0] for p in allpts]
    ys = [p[1] for p in allpts]
    lo_x, hi_x = min(xs), max(xs)
    lo_y, hi_y = min(ys), max(ys)
    span = max(hi_x - lo_x, hi_y - lo_y, 1e-9)
    pad = 0.12 * span
    lo_x -= pad
    lo_y -= pad
    span += 2 * pad

    def sx(x):
        return (x - lo_x) / span * width

    def sy(y):
        return height - (y - lo_y) / span * height

    out = []
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{int(width)}" '
        f'height="{int(height)}" viewBox="0 0 {int(width)} {int(height)}">'
    )

    def line_svg(normal, offset, color, dash=None, layer="line"):
        nx, ny = float(Fraction(normal[0])), float(Fraction(normal[1]))
        c = float(Fraction(offset))
        # clip n.x = c against the viewport in data space
        cands = []
        for t in (lo_x, lo_x + span):
            if abs(ny) > 1e-12:
                cands.append((t, (c - nx * t) / ny))
        for t in (lo_y, lo_y + span):
            if abs(nx) > 1e-12:
                cands.append(((c - ny * t) / nx, t))
        seg = [
            p
            for p in cands
            if lo_x - 1e-6 <= p[0] <= lo_x + span + 1e-6
            and lo_y - 1e-6 <= p[1] <= lo_y + span + 1e-6
        ]
        if len(seg) < 2:
            return
        seg = sorted(seg)[:: len(seg) - 1]
        d = f' stroke-dasharray="{dash}"' if dash else ""
        out.append(
            f'<g id="{layer}"><line x1="{_f(sx(seg[0][0]))}" y1="{_f(sy(seg[0][1]))}" '
            f'x2="{_f(sx(seg[1][0]))}" y2="{_f(sy(seg[1][1]))}" stroke="{color}" '
            f'stroke-width="1.5"{d}/></g>'
        )

    guarantee = report.get("outputs", {}).get("guarantee") or {}
    parts = report.get("outputs", {}).get("parts")
    part_of = {}
    if parts:
        for pi, idxs in enumerate(parts):
            for i in idxs:
                part_of[int(i)] = pi

    for body in fam:
        ring = " ".join(
            f"{_f(sx(float(Fraction(r[0]))))},{_f(sy(float(Fraction(r[1]))))}"
            for r in body["vertices"]
        )
        out.append(
            f'<g id="body"><polygon points="{ring}" fill="none" '
            f'stroke="{POINT_COLOR}" stroke-width="1"/></g>'
        )

    if guarantee.get("bisect"):
        normal, offset = guarantee["bisect"]
        line_svg(normal, offset, LINE_COLOR, layer="bisecting-line")

    wpi = report.get("outputs", {}).get("witness_pi")
    if wpi:
        line_svg(wpi["normal"], wpi["offset"], LINE_COLOR, layer="witness-pi")

    # far projection line h and image points (projection through q onto a
    # horizontal line below the data, as in the planar partition method)
    if rows and q is not None and guarantee.get("method") == "planar_sigma":
        h_y = lo_y + 0.04 * span
        out.append(
            f'<g id="projection-line-h"><line x1="0" y1="{_f(sy(h_y))}" '
            f'x2="{_f(width)}" y2="{_f(sy(h_y))}" stroke="{H_COLOR}" '
            f'stroke-width="1" stroke-dasharray="4 3"/></g>'
        )
        out.append('<g id="images">')
        for px, py in pts:
            if abs(py - q[1]) > 1e-12:
                t = (h_y - q[1]) / (py - q[1])
                cx = q[0] + t * (px - q[0])
                if lo_x <= cx <= lo_x + span:
                    out.append(
                        f'<circle cx="{_f(sx(cx))}" cy="{_f(sy(h_y))}" '
                        f'r="2.2" fill="{IMAGE_COLOR}"/>'
                    )
        out.append("</g>")

    wl = report.get("outputs", {}).get("witness_line_direction")
    if wl and q is not None:
        dx, dy = float(Fraction(wl[0])), float(Fraction(wl[1]))
        mag = max((dx * dx + dy * dy) ** 0.5, 1e-12)
        ext = span * 2 / mag
        out.append(
            f'<g id="witness-line"><line x1="{_f(sx(q[0] - dx * ext))}" '
            f'y1="{_f(sy(q[1] - dy * ext))}" x2="{_f(sx(q[0] + dx * ext))}" '
            f'y2="{_f(sy(q[1] + dy * ext))}" stroke="{LINE_COLOR}" '
            f'stroke-width="1" stroke-dasharray="6 3"/></g>'
        )

    out.append('<g id="points">')
    for i, (px, py) in enumerate(pts):
        color = PART_COLORS[part_of[i] % len(PART_COLORS)] if i in part_of else POINT_COLOR
        out.append(f'<circle cx="{_f(sx(px))}" cy="{_f(sy(py))}" r="3" fill="{color}"/>')
    out.append("</g>")

    if q is not None:
        out.append(
            f'<g id="query"><path d="M {_f(sx(q[0]) - 5)} {_f(sy(q[1]))} '
            f'L {_f(sx(q[0]) + 5)} {_f(sy(q[1]))} M {_f(sx(q[0]))} {_f(sy(q[1]) - 5)} '
            f'L {_f(sx(q[0]))} {_f(sy(q[1]) + 5)}" stroke="{QUERY_COLOR}" '
            f'stroke-width="2"/></g>'
        )
    out.append("</svg>")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(out) + "\n")
