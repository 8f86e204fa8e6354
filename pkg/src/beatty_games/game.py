"""Invariant two-pile games: P-position sets from a Beatty pair, the maximal
move set ``N^2 minus (P - P)``, and a brute-force P/N grid solver."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .beatty import Tuple4
from .sturmian import heavy_light_interval
from .torus import Rectangle, orbit_hits

__all__ = [
    "InsufficientPSet",
    "InvarianceReport",
    "MoveSet",
    "PGrid",
    "PSet",
    "build_moveset",
    "build_pset",
    "difference_set",
    "moveset_from_predicate",
    "nim_moves",
    "solve_pgrid",
    "verify_invariance",
    "window_differences",
    "wythoff_moves",
    "wythoff_pairs",
]


class InsufficientPSet(ValueError):
    pass


@dataclass
class PSet:
    """P-positions ``(A_n, B_n)`` and ``(B_n, A_n)`` with both coordinates <= bound."""

    tuple: Optional[Tuple4]
    bound: int
    pairs: list[tuple[int, int]]
    mask: np.ndarray

    def __contains__(self, cell) -> bool:
        x, y = cell
        return 0 <= x <= self.bound and 0 <= y <= self.bound and bool(self.mask[x, y])

    def cells(self) -> list[tuple[int, int]]:
        xs, ys = np.nonzero(self.mask)
        return sorted(zip(xs.tolist(), ys.tolist()))


def build_pset(t: Tuple4, N: int) -> PSet:
    if N < 0:
        raise ValueError("N must be >= 0")
    mask = np.zeros((N + 1, N + 1), dtype=bool)
    pairs = []
    n = 0
    while True:
        a, b = t.A(n), t.B(n)
        if a > N:
            break
        if b <= N:
            pairs.append((a, b))
            mask[a, b] = mask[b, a] = True
        n += 1
    return PSet(t, N, pairs, mask)


@dataclass
class MoveSet:
    """Boolean mask over ``[0,N]^2``; ``mask[x, y]`` marks an allowed move."""

    bound: int
    mask: np.ndarray

    def __contains__(self, m) -> bool:
        x, y = m
        return 0 <= x <= self.bound and 0 <= y <= self.bound and bool(self.mask[x, y])


def moveset_from_predicate(N: int, allowed: Callable[[int, int], bool]) -> MoveSet:
    mask = np.zeros((N + 1, N + 1), dtype=bool)
    for x in range(N + 1):
        for y in range(N + 1):
            if (x or y) and allowed(x, y):
                mask[x, y] = True
    return MoveSet(N, mask)


def nim_moves(N: int) -> MoveSet:
    mask = np.zeros((N + 1, N + 1), dtype=bool)
    mask[1:, 0] = True
    mask[0, 1:] = True
    return MoveSet(N, mask)


def wythoff_moves(N: int) -> MoveSet:
    ms = nim_moves(N)
    idx = np.arange(1, N + 1)
    ms.mask[idx, idx] = True
    return ms


def wythoff_pairs(N: int) -> set[tuple[int, int]]:
    """``(floor(n*tau), floor(n*tau^2))`` and swaps with coordinates <= N, exactly."""
    from math import isqrt

    out = set()
    n = 0
    while True:
        a = (n + isqrt(5 * n * n)) // 2
        b = a + n
        if a > N:
            break
        if b <= N:
            out.add((a, b))
            out.add((b, a))
        n += 1
    return out


def _sequences_until(t: Tuple4, pred) -> tuple[list[int], list[int]]:
    n = 1
    while not pred(n):
        n *= 2
    return t.A_upto(n), t.B_upto(n)


def difference_set(t: Tuple4, N: int) -> np.ndarray:
    """Exact ``(P - P)`` restricted to ``[0,N]^2`` as a boolean mask.

    Differences ``(A_n - A_m, B_n - B_m)`` with ``m >= 1`` are sums of a
    length-``n-m`` factor of the direct product of two Sturmian words, and
    the four heavy/light classes of such sums are decided on the torus.  The
    ``m = 0`` sums and the mixed differences ``(A_n - B_m, B_n - A_m)`` are
    enumerated directly (the latter need ``B_m - A_m <= N``, finitely many).
    """
    D = np.zeros((N + 1, N + 1), dtype=bool)
    D[0, 0] = True
    fa, fb = t.alpha.floor(), t.floor_beta

    def put(x, y):
        if 0 <= x <= N and 0 <= y <= N:
            D[x, y] = True
            D[y, x] = True

    for l in range(1, N + 1):
        sa_h = l * fa + -((-t.alpha.frac() * l).floor())
        sb_h = l * fb + -((-t.beta.frac() * l).floor())
        al, bl = t.A(l), t.B(l)
        if (sa_h - 1 > N and al > N) or (sb_h - 1 > N and bl > N):
            break
        put(al, bl)  # the factor at position 0
        for xk, sx in (("Heavy", sa_h), ("Light", sa_h - 1)):
            for yk, sy in (("Heavy", sb_h), ("Light", sb_h - 1)):
                if sx > N or sy > N:
                    continue
                rect = Rectangle(heavy_light_interval(t.alpha, l, xk), heavy_light_interval(t.beta, l, yk))
                ans = orbit_hits(t, rect, from_index=1, witness=False)
                if ans.verdict == "BoundaryIndeterminate":
                    raise InsufficientPSet(f"cannot decide factor class at length {l}: {ans.detail}")
                if ans.hit:
                    put(sx, sy)

    # mixed differences (A_n - B_m, B_n - A_m), n, m >= 1
    A, B = _sequences_until(t, lambda n: t.B(n) - t.A(n) > N)
    m = 1
    while B[m] - A[m] <= N:
        n = m
        while True:
            if n >= len(B):
                A, B = t.A_upto(2 * n), t.B_upto(2 * n)
            y = B[n] - A[m]
            if y > N:
                break
            x = A[n] - B[m]
            if x >= 0:
                put(x, y)
            n += 1
        m += 1
        if m >= len(B):
            A, B = t.A_upto(2 * m), t.B_upto(2 * m)
    return D


def window_differences(t: Tuple4, length: int, N: int) -> set[tuple[int, int]]:
    """``(A_n - A_m, B_n - B_m)`` inside ``[0,N]^2`` for ``0 <= m < n <= length``,
    by sliding sums over the sequence prefix (brute force)."""
    A = np.asarray(t.A_upto(length), dtype=np.int64)
    B = np.asarray(t.B_upto(length), dtype=np.int64)
    out = set()
    for l in range(1, N + 1):
        dx = A[l:] - A[:-l]
        dy = B[l:] - B[:-l]
        keep = (dx <= N) & (dy <= N)
        if not keep.any():
            if dx.min() > N:
                break
            continue
        out.update(zip(dx[keep].tolist(), dy[keep].tolist()))
    return out


def build_moveset(p: PSet, N: Optional[int] = None) -> MoveSet:
    """Maximal move set ``[0,N]^2`` minus ``(P - P)``."""
    N = p.bound if N is None else N
    if p.tuple is None:
        raise InsufficientPSet("move set needs the generating tuple")
    D = difference_set(p.tuple, N)
    return MoveSet(N, ~D)


@dataclass
class PGrid:
    bound: int
    P: np.ndarray

    def cells(self) -> list[tuple[int, int]]:
        xs, ys = np.nonzero(self.P)
        return sorted(zip(xs.tolist(), ys.tolist()))

    def to_pbm(self) -> str:
        """Plain PBM, row ``y`` from top = ``bound``; P cells are black."""
        n = self.bound + 1
        rows = ["P1", f"{n} {n}"]
        for y in range(self.bound, -1, -1):
            rows.append(" ".join("1" if self.P[x, y] else "0" for x in range(n)))
        return "\n".join(rows) + "\n"

    def to_tsv(self) -> str:
        return "x\ty\n" + "".join(f"{x}\t{y}\n" for x, y in self.cells())


def solve_pgrid(m: MoveSet, N: Optional[int] = None) -> PGrid:
    """P/N classification of ``[0,N]^2`` by anti-diagonals.

    A cell is P iff no allowed move lands on a P cell.  Moves never increase
    a coordinate, so every cell of the grid is classified exactly.
    """
    N = m.bound if N is None else N
    if N > m.bound:
        raise ValueError("move set smaller than grid")
    M = m.mask
    P = np.zeros((N + 1, N + 1), dtype=bool)
    px = np.zeros(0, dtype=np.int64)
    py = np.zeros(0, dtype=np.int64)
    for s in range(2 * N + 1):
        x = np.arange(max(0, s - N), min(s, N) + 1, dtype=np.int64)
        y = s - x
        if px.size:
            dx = x[:, None] - px[None, :]
            dy = y[:, None] - py[None, :]
            ok = (dx >= 0) & (dy >= 0)
            reach = np.zeros(dx.shape, dtype=bool)
            reach[ok] = M[dx[ok], dy[ok]]
            isP = ~reach.any(axis=1)
        else:
            isP = np.ones(x.shape, dtype=bool)
        P[x[isP], y[isP]] = True
        px = np.concatenate([px, x[isP]])
        py = np.concatenate([py, y[isP]])
    return PGrid(N, P)


@dataclass
class InvarianceReport:
    """``status`` is MATCH or MISMATCH on the region ``x + y <= N``."""

    status: str
    bound: int
    first_mismatch: Optional[tuple[int, int]] = None
    mismatches: list = field(default_factory=list)
    obstructions: list = field(default_factory=list)
    pset_size: int = 0

    def as_dict(self) -> dict:
        return {
            "status": self.status,
            "bound": self.bound,
            "first_mismatch": self.first_mismatch,
            "mismatches": self.mismatches,
            "obstructions": self.obstructions,
            "pset_size": self.pset_size,
        }


def _obstructions(pset: PSet, M: np.ndarray, N: int) -> list[tuple[int, int]]:
    """Cells outside P (in ``x + y <= N``) with no allowed move into P."""
    cells = np.array(pset.cells(), dtype=np.int64)
    out = []
    for x in range(N + 1):
        for y in range(N + 1 - x):
            if pset.mask[x, y]:
                continue
            dx = x - cells[:, 0]
            dy = y - cells[:, 1]
            ok = (dx >= 0) & (dy >= 0)
            if not M[dx[ok], dy[ok]].any():
                out.append((x, y))
    return out


def verify_invariance(t: Tuple4, N: int, max_list: int = 50) -> InvarianceReport:
    """Compare the solved grid of the maximal invariant game with the P set."""
    pset = build_pset(t, N)
    ms = build_moveset(pset, N)
    grid = solve_pgrid(ms, N)
    xs, ys = np.indices((N + 1, N + 1))
    safe = xs + ys <= N
    diff = (grid.P != pset.mask) & safe
    bad = sorted(zip(*[a.tolist() for a in np.nonzero(diff)]), key=lambda c: (c[0] + c[1], c[0]))
    rep = InvarianceReport("MATCH" if not bad else "MISMATCH", N, pset_size=int((pset.mask & safe).sum()))
    if bad:
        rep.first_mismatch = bad[0]
        rep.mismatches = [
            {"cell": c, "grid": "P" if grid.P[c] else "N", "pset": "P" if pset.mask[c] else "N"}
            for c in bad[:max_list]
        ]
        rep.obstructions = _obstructions(pset, ms.mask, N)[:max_list]
    return rep
