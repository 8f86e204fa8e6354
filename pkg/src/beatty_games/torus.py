"""Existence of orbit points of ``i -> ({gamma + i*alpha}, {delta + i*beta})``
in half-open rectangles of the 2-torus.

When ``alpha, beta, 1`` are rationally independent the orbit is dense and a
rectangle is hit iff it has nonempty interior.  Otherwise the orbit is dense
in the closed curve ``p*x + q*y = c (mod 1)`` and the question becomes
whether that curve meets the rectangle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .beatty import Tuple4
from .exactreal import (
    PrecisionExhausted,
    RealNumber,
    UnsupportedField,
    as_real,
    integer_translate,
    rational_dependence,
)
from .sturmian import CircleInterval

__all__ = [
    "DEFAULT_SCAN_BUDGET",
    "Intersection",
    "LineSpec",
    "NotDependent",
    "Rectangle",
    "ScanBudgetExceeded",
    "TorusAnswer",
    "line_closure",
    "orbit_hits",
    "orbit_point",
    "rect_line_intersect",
    "scan_orbit",
    "torus_svg",
]

DEFAULT_SCAN_BUDGET = 10**7
_CHUNK = 1 << 16
_TWO64 = 1 << 64


class ScanBudgetExceeded(RuntimeError):
    pass


class NotDependent(ValueError):
    pass


@dataclass(eq=False)
class Rectangle:
    I: CircleInterval
    J: CircleInterval

    def is_empty(self) -> bool:
        return self.I.is_empty() or self.J.is_empty()

    def contains(self, x, y) -> bool:
        return self.I.contains(x) and self.J.contains(y)

    def __repr__(self) -> str:
        return f"Rectangle({self.I!r} x {self.J!r})"


@dataclass(frozen=True, eq=False)
class LineSpec:
    """``{(x, y) : p*x + q*y = c (mod 1)}`` with ``p*alpha + q*beta = r``."""

    p: int
    q: int
    r: int
    c: RealNumber

    @property
    def direction(self) -> tuple[int, int]:
        return (-self.q, self.p) if self.q < 0 else (self.q, -self.p)

    def contains(self, x, y) -> bool:
        v = as_real(x) * self.p + as_real(y) * self.q - self.c
        return (v - v.floor()).sign() == 0


@dataclass
class Intersection:
    """``kind`` is ``arc``, ``points`` or ``empty``; ``points`` lists corner
    points ``(x, y)`` of the closed rectangle that lie on the line and inside
    the half-open rectangle."""

    kind: str
    points: list = field(default_factory=list)


@dataclass
class TorusAnswer:
    """``verdict`` is ``Hit``, ``NoHit`` or ``BoundaryIndeterminate``;
    ``case`` is ``Dense`` or ``Line``."""

    verdict: str
    case: str
    witness: Optional[int] = None
    detail: str = ""

    @property
    def hit(self) -> bool:
        return self.verdict == "Hit"

    def as_dict(self) -> dict:
        return {"verdict": self.verdict, "case": self.case, "witness": self.witness, "detail": self.detail}


def orbit_point(t: Tuple4, i: int) -> tuple[RealNumber, RealNumber]:
    return (t.gamma + t.alpha * i).frac(), (t.delta + t.beta * i).frac()


def line_closure(t, start=None) -> LineSpec:
    """Closed curve carrying the orbit.  ``t`` is a Tuple4 or an
    ``(alpha, beta)`` pair; ``start`` defaults to ``(gamma, delta)``."""
    if isinstance(t, Tuple4):
        alpha, beta = t.alpha, t.beta
        dep = t.dependence
        if start is None:
            start = (t.gamma, t.delta)
    else:
        alpha, beta = (as_real(v) for v in t)
        dep = rational_dependence(alpha, beta)
    if dep is None:
        raise NotDependent("alpha, beta, 1 are rationally independent")
    if start is None:
        raise ValueError("start point required")
    p, q, r = dep
    x, y = start
    if hasattr(x, "x"):
        x, y = x.x, x.y
    c = (as_real(x) * p + as_real(y) * q).frac()
    return LineSpec(p, q, r, c)


def rect_line_intersect(line: LineSpec, rect: Rectangle) -> Intersection:
    """Exact position of the line relative to a half-open rectangle.

    Each non-wrapping box piece ``[x0,x1) x [y0,y1)`` is tested against the
    parallel lifts ``p*x + q*y = c + k``.  A lift strictly between the extreme
    corner values crosses the open box; otherwise the line can only touch a
    corner, and only the lower-left corner belongs to the half-open box.
    """
    if rect.is_empty():
        return Intersection("empty")
    p, q, c = line.p, line.q, line.c
    points = []
    for x0, x1 in rect.I.pieces:
        for y0, y1 in rect.J.pieces:
            xs = (x0 * p, x1 * p)
            ys = (y0 * q, y1 * q)
            lo = (xs[0] if xs[0] <= xs[1] else xs[1]) + (ys[0] if ys[0] <= ys[1] else ys[1]) - c
            hi = (xs[1] if xs[0] <= xs[1] else xs[0]) + (ys[1] if ys[0] <= ys[1] else ys[0]) - c
            if lo.floor() + 1 < hi:
                return Intersection("arc")
            v = x0 * p + y0 * q - c
            if (v - v.floor()).sign() == 0:
                points.append((x0, y0))
    return Intersection("points", points) if points else Intersection("empty")


def _fixed_frac(x: RealNumber) -> tuple[int, int]:
    lo, hi = x.frac().fixed(64)
    return lo, hi


def scan_orbit(
    t: Tuple4,
    rect: Rectangle,
    from_index: int = 1,
    budget: int = DEFAULT_SCAN_BUDGET,
) -> Optional[int]:
    """Least ``i`` in ``[from_index, from_index + budget)`` with the orbit
    point in ``rect``, by 64-bit fixed-point scan with exact confirmation of
    every point that falls near an endpoint."""
    if rect.is_empty():
        return None
    ax, ax_hi = _fixed_frac(t.alpha)
    by, by_hi = _fixed_frac(t.beta)
    gx, gx_hi = _fixed_frac(t.gamma)
    dy, dy_hi = _fixed_frac(t.delta)
    last = from_index + budget
    slack = max(ax_hi - ax, by_hi - by, gx_hi - gx, dy_hi - dy, 1)
    margin = 2 * slack * (last + 1) + 8
    if margin >= _TWO64 // 4:
        raise PrecisionExhausted("scan index too large for 64-bit fixed point")

    def ends(interval):
        return [(a.fixed(64)[0], b.fixed(64)[0]) for a, b in interval.pieces]

    Ipieces, Jpieces = ends(rect.I), ends(rect.J)
    m = np.uint64(margin)
    top = np.uint64(_TWO64 - margin)

    def approx(arr, pieces):
        inside = np.zeros(arr.shape, dtype=bool)
        near = np.zeros(arr.shape, dtype=bool)
        for a, b in pieces:
            cond = arr >= np.uint64(a)
            if b < _TWO64:
                cond &= arr < np.uint64(b)
            inside |= cond
            for e in (a, b):
                d = arr - np.uint64(e % _TWO64)
                near |= (d < m) | (d > top)
        return inside, near

    AX, BY = np.uint64(ax), np.uint64(by)
    GX, DY = np.uint64(gx), np.uint64(dy)
    start = from_index
    with np.errstate(over="ignore"):
        while start < last:
            stop = min(start + _CHUNK, last)
            idx = np.arange(start, stop, dtype=np.uint64)
            xs = GX + idx * AX
            ys = DY + idx * BY
            inx, nx = approx(xs, Ipieces)
            iny, ny = approx(ys, Jpieces)
            cand = np.flatnonzero((inx | nx) & (iny | ny))
            for k in cand:
                i = start + int(k)
                if not nx[k] and not ny[k]:
                    return i
                x, y = orbit_point(t, i)
                if rect.contains(x, y):
                    return i
            start = stop
    return None


def orbit_hits(
    t: Tuple4,
    rect: Rectangle,
    from_index: int = 1,
    budget: int = DEFAULT_SCAN_BUDGET,
    witness: bool = True,
) -> TorusAnswer:
    """Is there ``i >= from_index`` with ``R^i(gamma, delta)`` in ``rect``?

    With ``witness=True`` a Hit carries the least such ``i`` (found by
    forward scan).  Raises :class:`ScanBudgetExceeded` if existence is
    proved but the scan does not find a witness within ``budget`` steps.
    """
    if from_index < 0:
        raise ValueError("from_index must be >= 0")
    dep = t.dependence
    case = "Dense" if dep is None else "Line"
    if rect.is_empty():
        return TorusAnswer("NoHit", case, detail="empty rectangle")

    def found(detail):
        if not witness:
            return TorusAnswer("Hit", case, detail=detail)
        i = scan_orbit(t, rect, from_index, budget)
        if i is None:
            raise ScanBudgetExceeded(f"no witness within {budget} steps ({detail})")
        return TorusAnswer("Hit", case, i, detail)

    if dep is None:
        return found("nonempty interior, dense orbit")
    line = line_closure(t)
    inter = rect_line_intersect(line, rect)
    if inter.kind == "arc":
        return found("line crosses rectangle interior")
    if inter.kind == "empty":
        return TorusAnswer("NoHit", case, detail="line misses rectangle")
    for x0, y0 in inter.points:
        try:
            i = integer_translate(t.alpha, t.gamma - x0)
        except UnsupportedField:
            return TorusAnswer("BoundaryIndeterminate", case, detail="corner solve outside supported fields")
        if i is None or i < from_index:
            continue
        if ((t.delta + t.beta * i) - y0).frac().sign() == 0:
            return TorusAnswer("Hit", case, i, "orbit passes exactly through a corner")
    return TorusAnswer("NoHit", case, detail="line touches rectangle only at corners the orbit avoids")


def torus_svg(
    t: Tuple4,
    steps: int,
    rect: Optional[Rectangle] = None,
    size: int = 480,
    show_line: bool = True,
) -> str:
    """SVG of the unit square split into the regions a..d with orbit points
    ``0..steps`` labelled, optional rectangle, and the closed line if any."""
    pad = 30
    S = size

    def X(v):
        return pad + v * S

    def Y(v):
        return pad + (1 - v) * S

    cx = 1 - float(t.alpha.frac())
    cy = 1 - float(t.beta.frac())
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{S + 2 * pad}" height="{S + 2 * pad}" '
        f'font-family="sans-serif" font-size="11">',
        f'<rect x="{pad}" y="{pad}" width="{S}" height="{S}" fill="white" stroke="black"/>',
        f'<line x1="{X(cx):.2f}" y1="{Y(0):.2f}" x2="{X(cx):.2f}" y2="{Y(1):.2f}" stroke="gray" stroke-dasharray="4 3"/>',
        f'<line x1="{X(0):.2f}" y1="{Y(cy):.2f}" x2="{X(1):.2f}" y2="{Y(cy):.2f}" stroke="gray" stroke-dasharray="4 3"/>',
    ]
    for lab, (u, v) in {"a": (cx / 2, cy / 2), "b": (cx / 2, (1 + cy) / 2),
                        "c": ((1 + cx) / 2, cy / 2), "d": ((1 + cx) / 2, (1 + cy) / 2)}.items():
        out.append(f'<text x="{X(u):.2f}" y="{Y(v):.2f}" font-size="18" fill="#bbb" '
                   f'text-anchor="middle">{lab}</text>')
    if rect is not None:
        for x0, x1 in rect.I.float_pieces():
            for y0, y1 in rect.J.float_pieces():
                out.append(f'<rect x="{X(x0):.2f}" y="{Y(y1):.2f}" width="{(x1 - x0) * S:.2f}" '
                           f'height="{(y1 - y0) * S:.2f}" fill="orange" fill-opacity="0.3" stroke="orange"/>')
    if show_line and t.dependence is not None:
        line = line_closure(t)
        p, q, c = line.p, line.q, float(line.c)
        kmin = min(0, p) + min(0, q) - 1
        kmax = max(0, p) + max(0, q) + 1
        for k in range(kmin, kmax + 1):
            seg = _clip_line(p, q, c + k)
            if seg:
                (u0, v0), (u1, v1) = seg
                out.append(f'<line x1="{X(u0):.2f}" y1="{Y(v0):.2f}" x2="{X(u1):.2f}" y2="{Y(v1):.2f}" '
                           f'stroke="steelblue" stroke-width="0.8"/>')
    for i in range(steps + 1):
        x, y = orbit_point(t, i)
        fx, fy = float(x), float(y)
        out.append(f'<circle cx="{X(fx):.2f}" cy="{Y(fy):.2f}" r="3" fill="crimson"/>')
        out.append(f'<text x="{X(fx) + 4:.2f}" y="{Y(fy) - 4:.2f}">{i}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _clip_line(p: int, q: int, s: float):
    """Segment of ``p*x + q*y = s`` inside the unit square, or None."""
    pts = []
    for x in (0.0, 1.0):
        y = (s - p * x) / q
        if -1e-12 <= y <= 1 + 1e-12:
            pts.append((x, min(max(y, 0.0), 1.0)))
    for y in (0.0, 1.0):
        x = (s - q * y) / p
        if -1e-12 <= x <= 1 + 1e-12:
            pts.append((min(max(x, 0.0), 1.0), y))
    if len(pts) < 2:
        return None
    pts.sort()
    if pts[0] == pts[-1]:
        return None
    return pts[0], pts[-1]
