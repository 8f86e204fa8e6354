"""Mechanical words, circle intervals and rotation codings."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .exactreal import LinearFloor, RealNumber, as_real

__all__ = [
    "CircleInterval",
    "TorusPoint",
    "factor_interval",
    "heavy_light_interval",
    "heavy_count",
    "is_balanced",
    "is_heavy",
    "letter_interval",
    "mech_letter",
    "mechanical_word",
    "parse_word",
    "region_letter",
    "region_coding",
    "rotate",
    "word_to_str",
]

ZERO = RealNumber(0)
ONE = RealNumber(1)


@dataclass(frozen=True, eq=False)
class TorusPoint:
    """A point of the 1- or 2-torus; coordinates are reduced into [0, 1)."""

    x: RealNumber
    y: Optional[RealNumber] = None

    def __post_init__(self):
        object.__setattr__(self, "x", as_real(self.x).frac())
        if self.y is not None:
            object.__setattr__(self, "y", as_real(self.y).frac())

    def __eq__(self, other) -> bool:
        if not isinstance(other, TorusPoint):
            return NotImplemented
        if (self.y is None) != (other.y is None):
            return False
        return self.x == other.x and (self.y is None or self.y == other.y)

    def __hash__(self) -> int:
        return hash((self.x, self.y))


class CircleInterval:
    """Half-open subset of the circle [0, 1), kept as sorted disjoint pieces.

    ``CircleInterval(lo, hi)`` is ``[lo, hi)`` read on the circle, so
    ``lo > hi`` wraps through 0 and ``lo == hi`` is empty.  Use
    :meth:`full` for the whole circle.
    """

    __slots__ = ("pieces",)

    def __init__(self, lo=None, hi=None, *, pieces=None):
        if pieces is not None:
            self.pieces = _normalize(pieces)
            return
        lo, hi = as_real(lo).frac(), as_real(hi)
        if hi != ONE:
            hi = hi.frac()
        if lo < hi:
            self.pieces = [(lo, hi)]
        elif lo == hi or (lo == ZERO and hi == ZERO):
            self.pieces = []
        else:
            self.pieces = _normalize([(lo, ONE), (ZERO, hi)])

    @classmethod
    def full(cls) -> "CircleInterval":
        return cls(pieces=[(ZERO, ONE)])

    @classmethod
    def empty(cls) -> "CircleInterval":
        return cls(pieces=[])

    def is_empty(self) -> bool:
        return not self.pieces

    def is_full(self) -> bool:
        return len(self.pieces) == 1 and self.pieces[0][0] == ZERO and self.pieces[0][1] == ONE

    @property
    def lo(self) -> RealNumber:
        """Start of the arc (the wrapping piece starts at its upper part)."""
        if not self.pieces:
            raise ValueError("empty interval")
        if len(self.pieces) == 2 and self.pieces[0][0] == ZERO and self.pieces[1][1] == ONE:
            return self.pieces[1][0]
        if len(self.pieces) != 1:
            raise ValueError("not a single arc")
        return self.pieces[0][0]

    @property
    def hi(self) -> RealNumber:
        if not self.pieces:
            raise ValueError("empty interval")
        if len(self.pieces) == 2 and self.pieces[0][0] == ZERO and self.pieces[1][1] == ONE:
            return self.pieces[0][1]
        if len(self.pieces) != 1:
            raise ValueError("not a single arc")
        return self.pieces[0][1]

    def length(self) -> RealNumber:
        total = ZERO
        for a, b in self.pieces:
            total = total + (b - a)
        return total

    def contains(self, x) -> bool:
        x = as_real(x).frac()
        for a, b in self.pieces:
            if a <= x and x < b:
                return True
        return False

    __contains__ = contains

    def shift(self, t) -> "CircleInterval":
        """Image under ``x -> {x + t}``."""
        t = as_real(t)
        out = []
        for a, b in self.pieces:
            start = (a + t).frac()
            end = start + (b - a)
            if end <= ONE:
                out.append((start, end))
            else:
                out.append((start, ONE))
                out.append((ZERO, end - 1))
        return CircleInterval(pieces=out)

    def intersect(self, other: "CircleInterval") -> "CircleInterval":
        out = []
        for a, b in self.pieces:
            for c, d in other.pieces:
                lo = a if a >= c else c
                hi = b if b <= d else d
                if lo < hi:
                    out.append((lo, hi))
        return CircleInterval(pieces=out)

    __and__ = intersect

    def complement(self) -> "CircleInterval":
        out, cur = [], ZERO
        for a, b in self.pieces:
            if cur < a:
                out.append((cur, a))
            cur = b
        if cur < ONE:
            out.append((cur, ONE))
        return CircleInterval(pieces=out)

    def float_pieces(self) -> list[tuple[float, float]]:
        return [(float(a), float(b)) for a, b in self.pieces]

    def __eq__(self, other) -> bool:
        if not isinstance(other, CircleInterval):
            return NotImplemented
        if len(self.pieces) != len(other.pieces):
            return False
        return all(a == c and b == d for (a, b), (c, d) in zip(self.pieces, other.pieces))

    def __hash__(self) -> int:
        return hash(len(self.pieces))

    def __repr__(self) -> str:
        if not self.pieces:
            return "CircleInterval(empty)"
        body = " u ".join(f"[{a}, {b})" for a, b in self.pieces)
        return f"CircleInterval({body})"


def _normalize(pieces) -> list[tuple[RealNumber, RealNumber]]:
    items = []
    for a, b in pieces:
        a, b = as_real(a), as_real(b)
        if a < b:
            items.append((a, b))
    if not items:
        return []
    items.sort(key=lambda p: p[0].enclose(64)[0])
    # the float-key sort can misorder pieces whose starts agree to 64 bits
    items = _exact_sort(items)
    merged = [items[0]]
    for a, b in items[1:]:
        pa, pb = merged[-1]
        if a <= pb:
            merged[-1] = (pa, b if b > pb else pb)
        else:
            merged.append((a, b))
    return merged


def _exact_sort(items):
    for i in range(1, len(items)):
        j = i
        while j > 0 and items[j][0] < items[j - 1][0]:
            items[j], items[j - 1] = items[j - 1], items[j]
            j -= 1
    return items


def mech_letter(lam, rho, n: int) -> int:
    """``floor((n+1)*lam + rho) - floor(n*lam + rho)``."""
    lam, rho = as_real(lam), as_real(rho)
    if lam.sign() <= 0:
        raise ValueError("slope must be positive")
    return (lam * (n + 1) + rho).floor() - (lam * n + rho).floor()


def mechanical_word(lam, rho, length: int, start: int = 0) -> list[int]:
    """Letters ``s(start), ..., s(start + length - 1)``."""
    lam, rho = as_real(lam), as_real(rho)
    if lam.sign() <= 0:
        raise ValueError("slope must be positive")
    f = LinearFloor(lam, rho).values(start, start + length + 1)
    return [f[i + 1] - f[i] for i in range(length)]


def rotate(lam, p: TorusPoint, mu=None) -> TorusPoint:
    """``x -> {x + lam}`` (and ``y -> {y + mu}`` on the 2-torus)."""
    lam = as_real(lam)
    if p.y is None:
        return TorusPoint(p.x + lam)
    if mu is None:
        raise ValueError("2-torus rotation needs a second angle")
    return TorusPoint(p.x + lam, p.y + as_real(mu))


def letter_interval(lam, letter: int) -> CircleInterval:
    """Set of ``rho`` in [0,1) for which the first letter is ``letter``."""
    lam = as_real(lam)
    fl = lam.floor()
    cut = 1 - lam.frac()
    if letter == fl:
        return CircleInterval(pieces=[(ZERO, cut)])
    if letter == fl + 1:
        return CircleInterval(pieces=[(cut, ONE)])
    raise ValueError(f"letter {letter} not in {{{fl}, {fl + 1}}}")


def factor_interval(v: Sequence[int], lam) -> CircleInterval:
    """Points ``x`` with ``v`` occurring at the orbit position whose point is ``x``.

    Intersection over ``k`` of ``R^{-k}`` of the letter interval of ``v[k]``.
    """
    lam = as_real(lam)
    if not len(v):
        raise ValueError("empty factor")
    fl = lam.floor()
    if any(c not in (fl, fl + 1) for c in v):
        return CircleInterval.empty()
    acc = CircleInterval.full()
    for k, c in enumerate(v):
        acc = acc.intersect(letter_interval(lam, c).shift(-lam * k))
        if acc.is_empty():
            break
    return acc


def heavy_count(lam, length: int) -> int:
    """Sum of the letters of a heavy factor of the given length."""
    lam = as_real(lam)
    return length * lam.floor() + -((-lam.frac() * length).floor())


def is_heavy(lam, u: Sequence[int]) -> bool:
    """Heavy iff the letter sum is maximal among factors of that length."""
    return sum(u) == heavy_count(lam, len(u))


def heavy_light_interval(lam, length: int, kind: str) -> CircleInterval:
    """``[1 - {length*lam}, 1)`` for heavy, ``[0, 1 - {length*lam})`` for light."""
    if length < 1:
        raise ValueError("length must be >= 1")
    lam = as_real(lam)
    cut = 1 - (lam * length).frac()
    k = kind.lower()
    if k in ("heavy", "h"):
        return CircleInterval(pieces=[(cut, ONE)])
    if k in ("light", "l"):
        return CircleInterval(pieces=[(ZERO, cut)])
    raise ValueError("kind must be Heavy or Light")


def is_balanced(segment: Sequence, window: int) -> bool:
    """All same-length factors up to ``window`` have letter counts within 1."""
    seg = list(segment)
    if window > len(seg):
        raise ValueError("window exceeds segment length")
    letters = sorted(set(seg))
    if len(letters) > 2:
        return False
    if len(letters) < 2:
        return True
    top = letters[1]
    pref = [0]
    for c in seg:
        pref.append(pref[-1] + (c == top))
    for L in range(1, window + 1):
        counts = [pref[i + L] - pref[i] for i in range(len(seg) - L + 1)]
        if max(counts) - min(counts) > 1:
            return False
    return True


_REGION = {(0, 0): "a", (0, 1): "b", (1, 0): "c", (1, 1): "d"}


def region_letter(alpha, beta, p: TorusPoint) -> str:
    """Which of the four product regions a..d the torus point lies in."""
    alpha, beta = as_real(alpha), as_real(beta)
    hx = 0 if p.x < 1 - alpha.frac() else 1
    hy = 0 if p.y < 1 - beta.frac() else 1
    return _REGION[(hx, hy)]


def region_coding(alpha, beta, start: TorusPoint, steps: int) -> str:
    """Regions visited by ``R^i(start)`` for ``i = 0..steps``."""
    out = []
    p = start
    for _ in range(steps + 1):
        out.append(region_letter(alpha, beta, p))
        p = rotate(alpha, p, beta)
    return "".join(out)


def word_to_str(letters: Iterable[int]) -> str:
    letters = list(letters)
    if all(0 <= c < 10 for c in letters):
        return "".join(str(c) for c in letters)
    return ",".join(str(c) for c in letters)


def parse_word(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    if "," in text:
        return [int(c) for c in text.split(",")]
    return [int(c) for c in text]
