"""The product word over {a, b, c, d, e} encoding consecutive differences of a
Beatty pair: ``w_n = (A_{n+1} - A_n, B_{n+1} - B_n)``."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .beatty import Tuple4

__all__ = [
    "LETTERS",
    "Letter",
    "ParikhVector",
    "ProductWord",
    "build_word",
    "letter_pair",
    "parikh",
    "prefix_sums",
    "word_table_tsv",
]

LETTERS = "abcd"


class Letter(NamedTuple):
    symbol: str
    pi1: int
    pi2: int


class ParikhVector(NamedTuple):
    a: int = 0
    b: int = 0
    c: int = 0
    d: int = 0

    def __add__(self, other):
        return ParikhVector(*(x + y for x, y in zip(self, other)))

    def __sub__(self, other):
        return ParikhVector(*(x - y for x, y in zip(self, other)))


def letter_pair(symbol: str, floor_beta: int, B1: int | None = None) -> tuple[int, int]:
    """The pair ``(pi1, pi2)`` a letter stands for."""
    if symbol == "e":
        if B1 is None:
            raise ValueError("letter e needs B1")
        return (1, B1)
    i = LETTERS.index(symbol)
    return (1 + i // 2, floor_beta + i % 2)


def _symbol(pair: tuple[int, int], floor_beta: int) -> str:
    x, y = pair
    if x not in (1, 2) or y not in (floor_beta, floor_beta + 1):
        raise ValueError(f"pair {pair} outside the a..d alphabet")
    return LETTERS[2 * (x - 1) + (y - floor_beta)]


def parikh(u: Iterable[str]) -> ParikhVector:
    counts = [0, 0, 0, 0]
    for ch in u:
        if ch == "e":
            raise ValueError("Parikh vectors are over {a,b,c,d}; got e")
        counts[LETTERS.index(ch)] += 1
    return ParikhVector(*counts)


class ProductWord:
    """Lazily extended prefix of the product word of a tuple.

    ``sign`` is ``'+'`` for gamma > 0 and ``'-'`` for gamma < 0.
    """

    def __init__(self, t: Tuple4, length: int = 0):
        self.tuple = t
        self.sign = "+" if t.gamma.sign() > 0 else "-"
        self._text = ""
        self._lock = threading.Lock()
        if length:
            self.extend(length)

    def extend(self, length: int) -> None:
        if len(self._text) >= length:
            return
        with self._lock:
            start = len(self._text)
            if start >= length:
                return
            t = self.tuple
            A, B = t.A_upto(length), t.B_upto(length)
            fb = t.floor_beta
            out = []
            for n in range(start, length):
                pair = (A[n + 1] - A[n], B[n + 1] - B[n])
                if n == 0 and self.sign == "+" and pair[1] < fb:
                    out.append("e")
                else:
                    out.append(_symbol(pair, fb))
            self._text += "".join(out)

    def prefix(self, length: int) -> str:
        self.extend(length)
        return self._text[:length]

    def __len__(self) -> int:
        return len(self._text)

    def __getitem__(self, idx):
        if isinstance(idx, slice):
            stop = idx.stop if idx.stop is not None else len(self._text)
            self.extend(stop)
        else:
            self.extend(idx + 1)
        return self._text[idx]

    def __str__(self) -> str:
        return self._text

    def pair(self, n: int) -> tuple[int, int]:
        return letter_pair(self[n], self.tuple.floor_beta, self.tuple.B1)

    def pi1(self, start: int = 0, stop: int | None = None) -> list[int]:
        stop = len(self._text) if stop is None else stop
        return [self.pair(n)[0] for n in range(start, stop)]

    def pi2(self, start: int = 0, stop: int | None = None) -> list[int]:
        stop = len(self._text) if stop is None else stop
        return [self.pair(n)[1] for n in range(start, stop)]


def build_word(t: Tuple4, length: int) -> ProductWord:
    if length < 1:
        raise ValueError("length must be >= 1")
    return ProductWord(t, length)


def prefix_sums(w: ProductWord, i: int, j: int) -> tuple[int, int]:
    """Componentwise sum of letters ``w_i .. w_j`` (inclusive)."""
    if not 0 <= i <= j:
        raise ValueError("need 0 <= i <= j")
    sx = sy = 0
    for n in range(i, j + 1):
        x, y = w.pair(n)
        sx += x
        sy += y
    return sx, sy


def word_table_tsv(w: ProductWord, length: int) -> str:
    """Three rows: A differences, B differences, letters."""
    w.extend(length)
    pairs = [w.pair(n) for n in range(length)]
    rows = [
        ["A_{n+1}-A_n"] + [str(p[0]) for p in pairs],
        ["B_{n+1}-B_n"] + [str(p[1]) for p in pairs],
        ["w" + w.sign] + list(w.prefix(length)),
    ]
    return "\n".join("\t".join(r) for r in rows) + "\n"
