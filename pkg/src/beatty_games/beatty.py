"""Complementary non-homogeneous Beatty pairs ``A_n = floor(n*alpha + gamma)``,
``B_n = floor(n*beta + delta)`` with ``A_0 = B_0 = 0``."""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional

from .exactreal import (
    LinearFloor,
    RealNumber,
    UnsupportedField,
    as_real,
    classify,
    integer_translate,
    rational_dependence,
)

__all__ = [
    "Check",
    "InvalidTuple",
    "PartitionReport",
    "SuperadditivityReport",
    "Tuple4",
    "ValidationReport",
    "WitnessNotFound",
    "a_n",
    "b_n",
    "check_partition",
    "check_superadditivity",
    "derive_tuple",
    "make_tuple",
    "sequence_table_tsv",
    "tuple_from_record",
    "tuple_record",
    "validate_tuple",
]

SUPERADDITIVITY_CAP = 1 << 20
NONINTEGRAL_SCAN = 10_000


class InvalidTuple(ValueError):
    def __init__(self, report: "ValidationReport"):
        self.report = report
        failed = ", ".join(c.name for c in report.failures)
        super().__init__(f"invalid 4-tuple: {failed}")


class WitnessNotFound(RuntimeError):
    pass


class _Sequence:
    """Memoised ``floor(n*slope + offset)`` for ``n >= 1``; index 0 is 0."""

    def __init__(self, slope: RealNumber, offset: RealNumber):
        self._floor = LinearFloor(slope, offset)
        self._vals = [0]
        self._lock = threading.Lock()

    def upto(self, n: int) -> list[int]:
        if len(self._vals) <= n:
            with self._lock:
                start = len(self._vals)
                if start <= n:
                    self._vals.extend(self._floor.values(start, n + 1))
        return self._vals

    def __getitem__(self, n: int) -> int:
        return self.upto(n)[n]


@dataclass(frozen=True, eq=False)
class Tuple4:
    """The four reals defining a Beatty pair.

    Construction does not validate; use :func:`derive_tuple`,
    :func:`make_tuple` or :func:`validate_tuple` for that.
    """

    alpha: RealNumber
    beta: RealNumber
    gamma: RealNumber
    delta: RealNumber

    @cached_property
    def _a(self) -> _Sequence:
        return _Sequence(self.alpha, self.gamma)

    @cached_property
    def _b(self) -> _Sequence:
        return _Sequence(self.beta, self.delta)

    @cached_property
    def B1(self) -> int:
        return self._b[1]

    @cached_property
    def floor_beta(self) -> int:
        return self.beta.floor()

    @cached_property
    def gamma_sign(self) -> str:
        s = self.gamma.sign()
        return {1: "positive", -1: "negative", 0: "zero"}[s]

    @cached_property
    def dependence(self) -> Optional[tuple[int, int, int]]:
        return rational_dependence(self.alpha, self.beta)

    def A(self, n: int) -> int:
        return self._a[n]

    def B(self, n: int) -> int:
        return self._b[n]

    def A_upto(self, n: int) -> list[int]:
        return self._a.upto(n)[: n + 1]

    def B_upto(self, n: int) -> list[int]:
        return self._b.upto(n)[: n + 1]

    def __repr__(self) -> str:
        return (
            f"Tuple4(alpha={str(self.alpha)!r}, beta={str(self.beta)!r}, "
            f"gamma={str(self.gamma)!r}, delta={str(self.delta)!r})"
        )


def a_n(t: Tuple4, n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    return t.A(n)


def b_n(t: Tuple4, n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    return t.B(n)


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""
    witness: object = None


@dataclass
class ValidationReport:
    checks: list[Check] = field(default_factory=list)
    B1: Optional[int] = None
    undecided_regime: bool = False
    nonintegral_unverified: bool = False

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "B1": self.B1,
            "undecided_regime": self.undecided_regime,
            "nonintegral_unverified": self.nonintegral_unverified,
            "checks": [
                {"name": c.name, "ok": c.ok, "detail": c.detail, "witness": c.witness}
                for c in self.checks
            ],
        }


def _nonintegral_check(beta: RealNumber, delta: RealNumber) -> tuple[Check, bool]:
    """No n >= 1 with n*beta + delta an integer."""
    try:
        n = integer_translate(beta, delta)
    except UnsupportedField:
        for n in range(1, NONINTEGRAL_SCAN + 1):
            x = beta * n + delta
            if (x - x.floor()).sign() == 0:
                return Check("nonintegral", False, f"{n}*beta + delta is an integer", n), False
        return Check("nonintegral", True, f"no integer value for n <= {NONINTEGRAL_SCAN} (unverified beyond)"), True
    if n is not None and n >= 1:
        return Check("nonintegral", False, f"{n}*beta + delta is an integer", n), False
    return Check("nonintegral", True, "radical parts never cancel for n >= 1"), False


def validate_tuple(t: Tuple4) -> ValidationReport:
    """Check the standing assumptions on ``(alpha, beta, gamma, delta)``.

    Never raises for a bad tuple: failures are recorded in the report.
    """
    rep = ValidationReport()
    add = rep.checks.append
    al, be, ga, de = t.alpha, t.beta, t.gamma, t.delta

    irr = classify(al).kind != "Rational" and classify(be).kind != "Rational"
    add(Check("irrational", irr, "alpha and beta irrational"))
    order = al > 1 and al < 2 and be > 2
    add(Check("order", order, "1 < alpha < 2 < beta"))
    recip = (1 / al + 1 / be - 1).sign() == 0 if order else False
    add(Check("reciprocal_sum", recip, "1/alpha + 1/beta = 1"))
    offsets = (ga / al + de / be).sign() == 0 if order else False
    add(Check("offset_relation", offsets, "gamma/alpha + delta/beta = 0"))
    gs = ga.sign()
    add(Check("gamma_nonzero", gs != 0, "gamma = 0 is the homogeneous case"))
    if not (order and irr):
        return rep
    a1 = t.A(1)
    add(Check("A1_is_one", a1 == 1, f"A_1 = {a1}", a1))
    b1 = t.B(1)
    rep.B1 = b1
    add(Check("B1_at_least_two", b1 >= 2, f"B_1 = {b1}", b1))
    rep.undecided_regime = b1 == 2
    in_range = ga >= 1 - al and ga < 2 - al
    add(Check("gamma_range", in_range, "1 - alpha <= gamma < 2 - alpha"))
    if gs > 0:
        signs = de.sign() <= 0
        detail = "gamma > 0 requires delta <= 0"
    elif gs < 0:
        signs = de.sign() > 0 and de < 1
        detail = "gamma < 0 requires 0 < delta < 1"
    else:
        signs, detail = True, "n/a"
    add(Check("offset_signs", signs, detail))
    chk, unverified = _nonintegral_check(be, de)
    add(chk)
    rep.nonintegral_unverified = unverified
    return rep


def derive_tuple(
    beta,
    gamma=None,
    delta=None,
    *,
    validate: bool = True,
) -> Tuple4:
    """Complete ``(alpha, beta, gamma, delta)`` from beta and one of gamma/delta.

    ``alpha = beta/(beta - 1)`` and the missing shift comes from
    ``gamma/alpha + delta/beta = 0``.  Raises :class:`InvalidTuple` when the
    result fails validation (unless ``validate=False``).
    """
    if (gamma is None) == (delta is None):
        raise ValueError("give exactly one of gamma and delta")
    be = as_real(beta)
    if be <= 2 or classify(be).kind == "Rational":
        raise ValueError("beta must be irrational and > 2")
    al = be / (be - 1)
    if gamma is not None:
        ga = as_real(gamma)
        de = -be * ga / al
    else:
        de = as_real(delta)
        ga = -al * de / be
    t = Tuple4(al, be, ga, de)
    if validate:
        rep = validate_tuple(t)
        if not rep.ok:
            raise InvalidTuple(rep)
    return t


def make_tuple(alpha, beta, gamma, delta, *, validate: bool = True) -> Tuple4:
    t = Tuple4(as_real(alpha), as_real(beta), as_real(gamma), as_real(delta))
    if validate:
        rep = validate_tuple(t)
        if not rep.ok:
            raise InvalidTuple(rep)
    return t


def tuple_record(t: Tuple4) -> dict:
    """Structured record: the four exact expressions plus derived integers."""
    return {
        "alpha": str(t.alpha),
        "beta": str(t.beta),
        "gamma": str(t.gamma),
        "delta": str(t.delta),
        "B1": t.B1,
        "floor_beta": t.floor_beta,
        "gamma_sign": t.gamma_sign,
        "dependence": list(t.dependence) if t.dependence else None,
        "approx": {
            "alpha": round(float(t.alpha), 6),
            "beta": round(float(t.beta), 6),
            "gamma": round(float(t.gamma), 6),
            "delta": round(float(t.delta), 6),
        },
    }


def tuple_from_record(rec: dict, *, validate: bool = True) -> Tuple4:
    return make_tuple(rec["alpha"], rec["beta"], rec["gamma"], rec["delta"], validate=validate)


def sequence_table_tsv(t: Tuple4, n_max: int) -> str:
    """TSV rows ``n, A_n, B_n, A_{n+1}-A_n, B_{n+1}-B_n`` for ``n = 0..n_max``."""
    A, B = t.A_upto(n_max + 1), t.B_upto(n_max + 1)
    lines = ["n\tA_n\tB_n\tA_diff\tB_diff"]
    for n in range(n_max + 1):
        lines.append(f"{n}\t{A[n]}\t{B[n]}\t{A[n + 1] - A[n]}\t{B[n + 1] - B[n]}")
    return "\n".join(lines) + "\n"


@dataclass
class PartitionReport:
    ok: bool
    horizon: int
    defect: Optional[dict] = None


def check_partition(t: Tuple4, horizon: int) -> PartitionReport:
    """Do ``{A_n}`` and ``{B_n}`` (n >= 1) cover ``1..horizon`` exactly once?"""
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    owners: dict[int, list[tuple[str, int]]] = {}
    for name, get in (("A", t.A), ("B", t.B)):
        n = 1
        while True:
            v = get(n)
            if v > horizon:
                break
            owners.setdefault(v, []).append((name, n))
            n += 1
    for k in range(1, horizon + 1):
        got = owners.get(k, [])
        if len(got) == 1:
            continue
        kind = "missing" if not got else "duplicate"
        return PartitionReport(False, horizon, {"value": k, "kind": kind, "hits": got})
    return PartitionReport(True, horizon)


@dataclass
class SuperadditivityReport:
    """``status`` is ``B1_superadditive``, ``superadditive_only`` or ``not_superadditive``."""

    status: str
    horizon: int
    lower_witness: Optional[tuple[int, int]] = None
    upper_witness: Optional[tuple[int, int]] = None
    upper_witnesses: list[tuple[int, int]] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "status": self.status,
            "horizon": self.horizon,
            "lower_witness": self.lower_witness,
            "upper_witness": self.upper_witness,
            "upper_witnesses": self.upper_witnesses,
        }


def check_superadditivity(
    t: Tuple4, horizon: int, cap: int = SUPERADDITIVITY_CAP, max_witnesses: int = 32
) -> SuperadditivityReport:
    """Scan ``B_m + B_n <= B_{m+n} < B_m + B_n + B_1`` for ``m + n <= horizon``.

    ``lower_witness`` is the first ``(m, n)`` with ``B_m + B_n > B_{m+n}``;
    ``upper_witness`` the first with ``B_{m+n} >= B_m + B_n + B_1``.  For
    gamma < 0 a lower witness must exist; the diagonal ``m == n`` is searched
    up to ``cap`` before raising :class:`WitnessNotFound`.
    """
    if horizon < 2:
        raise ValueError("horizon must be >= 2")
    B = t.B_upto(horizon)
    b1 = B[1]
    lower = upper = None
    uppers: list[tuple[int, int]] = []
    for s in range(2, horizon + 1):
        for m in range(1, s // 2 + 1):
            n = s - m
            if lower is None and B[m] + B[n] > B[s]:
                lower = (m, n)
            if B[s] >= B[m] + B[n] + b1:
                if upper is None:
                    upper = (m, n)
                if len(uppers) < max_witnesses:
                    uppers.append((m, n))
    if lower is None and t.gamma.sign() < 0:
        n = horizon // 2 + 1
        while 2 * n <= cap:
            if 2 * t.B(n) > t.B(2 * n):
                lower = (n, n)
                break
            n += 1
        else:
            raise WitnessNotFound(f"no superadditivity violation with 2n <= {cap}")
    if lower is not None:
        status = "not_superadditive"
    elif upper is not None:
        status = "superadditive_only"
    else:
        status = "B1_superadditive"
    return SuperadditivityReport(status, horizon, lower, upper, uppers)
