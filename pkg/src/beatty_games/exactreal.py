"""Exact real numbers built from rationals with ``+ - * /`` and square roots.

A value whose radicals are all square roots of rationals lives in some
multi-quadratic field Q(sqrt(s1), ..., sqrt(sk)).  Such values are stored as a
linear combination ``sum c_s * sqrt(s)`` over square-free radicands ``s``
(``s == 1`` carries the rational part).  The square roots of distinct
square-free integers are linearly independent over Q, so this form makes zero
tests exact and lets signs be decided symbolically.

Anything else (a square root of an irrational that does not denest) is kept as
an expression DAG and decided by interval refinement, raising
:class:`PrecisionExhausted` when the precision cap is reached.
"""

from __future__ import annotations

import contextlib
import contextvars
import math
import re
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Optional, Union

__all__ = [
    "as_real",
    "AlgebraicClass",
    "LinearFloor",
    "ParseError",
    "PrecisionExhausted",
    "RealNumber",
    "UnsupportedField",
    "classify",
    "floor_of",
    "frac_of",
    "get_precision_cap",
    "integer_translate",
    "parse_real",
    "precision_cap",
    "quadratic_sign",
    "rational_dependence",
    "sign_of",
    "sqrt",
]

DEFAULT_PRECISION_CAP = 4096

_cap_var: contextvars.ContextVar[int] = contextvars.ContextVar(
    "precision_cap", default=DEFAULT_PRECISION_CAP
)
_cache_lock = threading.Lock()


class PrecisionExhausted(ArithmeticError):
    """Interval refinement hit the precision cap without deciding a question."""


class UnsupportedField(ArithmeticError):
    """The value does not live in a multi-quadratic field."""


class ParseError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


def get_precision_cap() -> int:
    return _cap_var.get()


@contextlib.contextmanager
def precision_cap(bits: int) -> Iterator[None]:
    """Temporarily change the maximum number of refinement bits."""
    if bits < 64:
        raise ValueError("precision cap must be at least 64 bits")
    token = _cap_var.set(bits)
    try:
        yield
    finally:
        _cap_var.reset(token)


# ---------------------------------------------------------------------------
# integer helpers

@lru_cache(maxsize=4096)
def _squarefree_split(n: int) -> tuple[int, int]:
    """Return ``(f, s)`` with ``n == f*f*s`` and ``s`` square-free (n >= 1)."""
    f, s = 1, 1
    m = n
    p = 2
    # primes up to the cube root; what is left has at most two prime factors
    while p * p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            f *= p ** (e // 2)
            if e % 2:
                s *= p
        p += 1 if p == 2 else 2
    r = math.isqrt(m)
    if r * r == m and m > 1:
        f *= r
    else:
        s *= m
    return f, s


def _coprime_base(nums) -> list[int]:
    """Pairwise coprime integers such that every input is a product of them."""
    base: list[int] = []
    for n in nums:
        x = n
        new = []
        for b in base:
            g = math.gcd(x, b)
            if g == 1:
                new.append(b)
            else:
                new.append(g)
                if b // g > 1:
                    new.append(b // g)
                x //= g
        if x > 1:
            new.append(x)
        base = new
    return base


# ---------------------------------------------------------------------------
# multi-quadratic field elements: sorted tuples of (radicand, coefficient)

Terms = tuple  # tuple[tuple[int, Fraction], ...]


def _terms(d: dict) -> Terms:
    return tuple(sorted((s, c) for s, c in d.items() if c))


def _t_add(x: Terms, y: Terms, k: Fraction = Fraction(1)) -> Terms:
    d = dict(x)
    for s, c in y:
        d[s] = d.get(s, 0) + k * c
    return _terms(d)


def _t_scale(x: Terms, k) -> Terms:
    if not k:
        return ()
    return tuple((s, c * k) for s, c in x)


def _t_mul(x: Terms, y: Terms) -> Terms:
    d: dict = {}
    for s, c in x:
        for t, e in y:
            g = math.gcd(s, t)
            r = (s // g) * (t // g)
            d[r] = d.get(r, 0) + c * e * g
    return _terms(d)


def _t_conj(x: Terms, b: int) -> Terms:
    return tuple((s, -c if s % b == 0 else c) for s, c in x)


def _t_inv(x: Terms) -> Terms:
    if not x:
        raise ZeroDivisionError("division by zero")
    num: Terms = ((1, Fraction(1)),)
    den = x
    for b in _coprime_base(s for s, _ in x if s != 1):
        cj = _t_conj(den, b)
        num = _t_mul(num, cj)
        den = _t_mul(den, cj)
    assert len(den) == 1 and den[0][0] == 1, den
    return _t_scale(num, 1 / den[0][1])


def _sgn(v) -> int:
    return (v > 0) - (v < 0)


def _t_sign(x: Terms) -> int:
    """Exact sign by recursive splitting over a coprime radicand base."""
    if not x:
        return 0
    if len(x) == 1 and x[0][0] == 1:
        return _sgn(x[0][1])
    b = _coprime_base(s for s, _ in x if s != 1)[0]
    y = tuple((s, c) for s, c in x if s % b)
    z = tuple((s // b, c) for s, c in x if s % b == 0)
    sy, sz = _t_sign(y), _t_sign(z)
    if sy == 0:
        return sz
    if sz == 0 or sy == sz:
        return sy
    # y + z*sqrt(b) with opposite signs: compare y^2 against b*z^2
    d = _t_sign(_t_add(_t_mul(y, y), _t_mul(z, z), Fraction(-b)))
    return sy if d > 0 else sz


def _t_sqrt(x: Terms) -> Optional[Terms]:
    """Square root inside a multi-quadratic field, or None if it leaves it."""
    if not x:
        return ()
    if len(x) == 1 and x[0][0] == 1:
        r = x[0][1]
        f, s = _squarefree_split(r.numerator * r.denominator)
        return ((s, Fraction(f, r.denominator)),)
    radicands = {s for s, _ in x if s != 1}
    if len(radicands) == 1:
        # denest sqrt(a + b sqrt(d)) when a^2 - b^2 d is a rational square
        (d,) = radicands
        a = dict(x).get(1, Fraction(0))
        b = dict(x)[d]
        disc = a * a - b * b * d
        if disc >= 0 and a > 0:
            rc = _t_sqrt(((1, disc),)) if disc else ()
            if len(rc) <= 1 and (not rc or rc[0][0] == 1):
                c = rc[0][1] if rc else Fraction(0)
                u, v = (a + c) / 2, (a - c) / 2
                su, sv = _t_sqrt(((1, u),)), _t_sqrt(((1, v),)) if v else ()
                return _t_add(su, sv, Fraction(_sgn(b)))
    return None


def _t_enclose(x: Terms, bits: int) -> tuple[Fraction, Fraction]:
    lo = hi = Fraction(0)
    if not x:
        return lo, hi
    mag = sum(abs(c) for s, c in x if s != 1)
    k = bits + 2 + (int(mag) + 1).bit_length()
    scale = 1 << k
    for s, c in x:
        if s == 1:
            lo += c
            hi += c
            continue
        r = math.isqrt(s << (2 * k))
        a, b = c * Fraction(r, scale), c * Fraction(r + 1, scale)
        if c > 0:
            lo, hi = lo + a, hi + b
        else:
            lo, hi = lo + b, hi + a
    return lo, hi


def _frac_str(c: Fraction) -> str:
    return str(c)


def _t_str(x: Terms) -> str:
    if not x:
        return "0"
    parts = []
    for s, c in x:
        if s == 1:
            body = _frac_str(abs(c))
        elif abs(c) == 1:
            body = f"sqrt({s})"
        else:
            body = f"{_frac_str(abs(c))}*sqrt({s})"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


# ---------------------------------------------------------------------------
# dyadic rounding for DAG interval arithmetic

def _down(v: Fraction, k: int) -> Fraction:
    return Fraction(math.floor(v * (1 << k)), 1 << k)


def _up(v: Fraction, k: int) -> Fraction:
    return Fraction(math.ceil(v * (1 << k)), 1 << k)


class _NeedMore(Exception):
    pass


Number = Union["RealNumber", int, Fraction]


class RealNumber:
    """An exact real number.

    Instances are immutable apart from a cached enclosing interval that only
    ever shrinks.  Arithmetic with ``int`` and ``Fraction`` is supported;
    ``float`` operands are refused so that no precision is lost silently.
    """

    __slots__ = ("_t", "_node", "_enc")

    def __init__(self, value: Union[int, Fraction, str] = 0):
        if isinstance(value, str):
            other = parse_real(value)
            self._t, self._node = other._t, other._node
        elif isinstance(value, (int, Fraction)):
            self._t = _terms({1: Fraction(value)})
            self._node = None
        else:
            raise TypeError(f"cannot build RealNumber from {type(value).__name__}")
        self._enc: Optional[tuple[Fraction, Fraction]] = None

    @classmethod
    def _from_terms(cls, t: Terms) -> "RealNumber":
        r = cls.__new__(cls)
        r._t, r._node, r._enc = t, None, None
        return r

    @classmethod
    def _from_node(cls, node: tuple) -> "RealNumber":
        r = cls.__new__(cls)
        r._t, r._node, r._enc = None, node, None
        return r

    # -- structure -------------------------------------------------------

    @property
    def terms(self) -> Optional[dict[int, Fraction]]:
        """``{radicand: coefficient}`` if the value is multi-quadratic."""
        return None if self._t is None else dict(self._t)

    @property
    def is_multiquadratic(self) -> bool:
        return self._t is not None

    @property
    def is_rational(self) -> bool:
        return self._t is not None and all(s == 1 for s, _ in self._t)

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is not rational")
        return self._t[0][1] if self._t else Fraction(0)

    # -- arithmetic ------------------------------------------------------

    @staticmethod
    def _coerce(v) -> "RealNumber":
        if isinstance(v, RealNumber):
            return v
        if isinstance(v, (int, Fraction)) and not isinstance(v, bool):
            return RealNumber(v)
        raise TypeError(f"unsupported operand type {type(v).__name__}")

    def __add__(self, other: Number) -> "RealNumber":
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        if self._t is not None and o._t is not None:
            return RealNumber._from_terms(_t_add(self._t, o._t))
        return RealNumber._from_node(("add", self, o))

    __radd__ = __add__

    def __neg__(self) -> "RealNumber":
        if self._t is not None:
            return RealNumber._from_terms(_t_scale(self._t, -1))
        return RealNumber._from_node(("neg", self))

    def __pos__(self) -> "RealNumber":
        return self

    def __sub__(self, other: Number) -> "RealNumber":
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Number) -> "RealNumber":
        return self._coerce(other) - self

    def __mul__(self, other: Number) -> "RealNumber":
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        if self._t is not None and o._t is not None:
            return RealNumber._from_terms(_t_mul(self._t, o._t))
        return RealNumber._from_node(("mul", self, o))

    __rmul__ = __mul__

    def __truediv__(self, other: Number) -> "RealNumber":
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        if o._t is not None:
            return self * RealNumber._from_terms(_t_inv(o._t))
        if o.sign() == 0:
            raise ZeroDivisionError("division by zero")
        return RealNumber._from_node(("div", self, o))

    def __rtruediv__(self, other: Number) -> "RealNumber":
        return self._coerce(other) / self

    def sqrt(self) -> "RealNumber":
        s = self.sign()
        if s < 0:
            raise ValueError(f"square root of negative value {self}")
        if s == 0:
            return RealNumber(0)
        if self._t is not None:
            t = _t_sqrt(self._t)
            if t is not None:
                return RealNumber._from_terms(t)
        return RealNumber._from_node(("sqrt", self))

    # -- enclosures ------------------------------------------------------

    def _raw_interval(self, k: int) -> tuple[Fraction, Fraction]:
        if self._t is not None:
            return _t_enclose(self._t, k)
        op = self._node[0]
        if op == "neg":
            lo, hi = self._node[1]._raw_interval(k)
            return -hi, -lo
        if op == "sqrt":
            lo, hi = self._node[1]._raw_interval(k)
            lo = max(lo, Fraction(0))
            scale = 1 << k
            a = math.isqrt(math.floor(lo * scale * scale))
            b = math.isqrt(math.ceil(hi * scale * scale)) + 1
            return Fraction(a, scale), Fraction(b, scale)
        alo, ahi = self._node[1]._raw_interval(k)
        blo, bhi = self._node[2]._raw_interval(k)
        if op == "add":
            lo, hi = alo + blo, ahi + bhi
        elif op == "mul":
            ps = (alo * blo, alo * bhi, ahi * blo, ahi * bhi)
            lo, hi = min(ps), max(ps)
        elif op == "div":
            if blo <= 0 <= bhi:
                raise _NeedMore
            ps = (alo / blo, alo / bhi, ahi / blo, ahi / bhi)
            lo, hi = min(ps), max(ps)
        else:  # pragma: no cover
            raise AssertionError(op)
        return _down(lo, k + 8), _up(hi, k + 8)

    def enclose(self, bits: int = 64) -> tuple[Fraction, Fraction]:
        """Return ``(lo, hi)`` with ``lo <= self <= hi`` and ``hi - lo <= 2**-bits``.

        The result is intersected with every enclosure computed before, so
        repeated calls never widen the cached interval.
        """
        target = Fraction(1, 1 << bits)
        enc = self._enc
        if enc is not None and enc[1] - enc[0] <= target:
            return enc
        cap = get_precision_cap()
        k = bits + 8
        while True:
            try:
                lo, hi = self._raw_interval(k)
                if hi - lo <= target:
                    break
            except _NeedMore:
                pass
            if self._t is not None and k > 4 * cap:  # pragma: no cover
                raise PrecisionExhausted(f"cannot enclose {self}")
            if self._t is None and k >= cap:
                raise PrecisionExhausted(
                    f"no {bits}-bit enclosure of {self} within {cap} bits"
                )
            k = min(2 * k, cap) if self._t is None else 2 * k
        with _cache_lock:
            if self._enc is not None:
                lo, hi = max(lo, self._enc[0]), min(hi, self._enc[1])
            self._enc = (lo, hi)
        return lo, hi

    def fixed(self, bits: int) -> tuple[int, int]:
        """Integers ``lo <= self * 2**bits <= hi`` with ``hi - lo <= 2``."""
        lo, hi = self.enclose(bits + 2)
        return math.floor(lo * (1 << bits)), math.ceil(hi * (1 << bits))

    def __float__(self) -> float:
        lo, hi = self.enclose(64)
        return float((lo + hi) / 2)

    # -- decisions -------------------------------------------------------

    def sign(self) -> int:
        if self._t is not None:
            if not self._t:
                return 0
            if len(self._t) == 1:
                return _sgn(self._t[0][1])
            lo, hi = self.enclose(64)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            return _t_sign(self._t)
        bits = 32
        cap = get_precision_cap()
        while True:
            try:
                lo, hi = self.enclose(bits)
            except PrecisionExhausted:
                break
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            if bits >= cap:
                break
            bits = min(2 * bits, cap)
        raise PrecisionExhausted(
            f"sign of {self} unresolved at {cap} bits and no symbolic zero test applies"
        )

    def floor(self) -> int:
        if self.is_rational:
            return math.floor(self.as_fraction())
        bits = 32
        while True:
            lo, hi = self.enclose(bits)
            if hi - lo < 1:
                break
            bits *= 2
        a, b = math.floor(lo), math.floor(hi)
        if a == b:
            return a
        return b if (self - b).sign() >= 0 else a

    def __floor__(self) -> int:
        return self.floor()

    def frac(self) -> "RealNumber":
        return self - self.floor()

    def _cmp(self, other) -> int:
        return (self - self._coerce(other)).sign()

    def __lt__(self, other) -> bool:
        return self._cmp(other) < 0

    def __le__(self, other) -> bool:
        return self._cmp(other) <= 0

    def __gt__(self, other) -> bool:
        return self._cmp(other) > 0

    def __ge__(self, other) -> bool:
        return self._cmp(other) >= 0

    def __eq__(self, other) -> bool:
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return (self - o).sign() == 0

    def __hash__(self) -> int:
        # non-multi-quadratic values all share a bucket; equality stays exact
        if self._t is None:
            return 0x5EED
        if self.is_rational:
            return hash(self.as_fraction())
        return hash(self._t)

    def __bool__(self) -> bool:
        return self.sign() != 0

    def __str__(self) -> str:
        if self._t is not None:
            return _t_str(self._t)
        op = self._node[0]
        if op == "neg":
            return f"-({self._node[1]})"
        if op == "sqrt":
            return f"sqrt({self._node[1]})"
        sym = {"add": "+", "mul": "*", "div": "/"}[op]
        return f"({self._node[1]}) {sym} ({self._node[2]})"

    def __repr__(self) -> str:
        return f"RealNumber({str(self)!r})"


def as_real(v) -> RealNumber:
    """Accept a RealNumber, int, Fraction or expression string."""
    if isinstance(v, str):
        return parse_real(v)
    return RealNumber._coerce(v)


def sqrt(x: Number) -> RealNumber:
    return RealNumber._coerce(x).sqrt()


def sign_of(x: RealNumber) -> int:
    """Exact sign of ``x``: -1, 0 or +1."""
    return RealNumber._coerce(x).sign()


def floor_of(x: RealNumber) -> int:
    return RealNumber._coerce(x).floor()


def frac_of(x: RealNumber) -> RealNumber:
    """``x - floor(x)``, always in ``[0, 1)``."""
    return RealNumber._coerce(x).frac()


def quadratic_sign(a: Fraction, b: Fraction, d: int) -> int:
    """Sign of ``a + b*sqrt(d)`` by comparing ``a**2`` with ``b**2 * d``."""
    sa, sb = _sgn(a), _sgn(b)
    if sb == 0 or d == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    return sa * _sgn(a * a - b * b * d)


# ---------------------------------------------------------------------------
# algebraic classification


@dataclass(frozen=True)
class AlgebraicClass:
    """``Rational``, ``Quadratic`` (``a + b*sqrt(d)``) or ``Other``."""

    kind: str
    a: Optional[Fraction] = None
    b: Optional[Fraction] = None
    d: Optional[int] = None

    def minimal_polynomial(self) -> tuple[int, ...]:
        """Integer coefficients, highest degree first, primitive with positive lead."""
        if self.kind == "Rational":
            return (self.a.denominator, -self.a.numerator)
        if self.kind != "Quadratic":
            raise ValueError("minimal polynomial only available for degree <= 2")
        # x^2 - 2a x + (a^2 - b^2 d)
        coeffs = [Fraction(1), -2 * self.a, self.a * self.a - self.b * self.b * self.d]
        den = math.lcm(*(c.denominator for c in coeffs))
        ints = [int(c * den) for c in coeffs]
        g = math.gcd(*ints)
        return tuple(c // g for c in ints)


def classify(x: RealNumber) -> AlgebraicClass:
    t = x.terms
    if t is None:
        return AlgebraicClass("Other")
    rad = [s for s in t if s != 1]
    if not rad:
        return AlgebraicClass("Rational", a=t.get(1, Fraction(0)))
    if len(rad) == 1:
        return AlgebraicClass("Quadratic", a=t.get(1, Fraction(0)), b=t[rad[0]], d=rad[0])
    return AlgebraicClass("Other")


def _irrational_part(t: dict) -> dict:
    return {s: c for s, c in t.items() if s != 1}


def rational_dependence(alpha: RealNumber, beta: RealNumber) -> Optional[tuple[int, int, int]]:
    """Primitive ``(p, q, r)`` with ``p*alpha + q*beta == r``, or None.

    The witness is normalised so that ``p > 0`` (or ``p == 0`` and ``q > 0``).
    Values outside multi-quadratic fields are treated as independent.
    """
    ta, tb = alpha.terms, beta.terms
    if ta is None or tb is None:
        return None
    ia, ib = _irrational_part(ta), _irrational_part(tb)
    if not ia or not ib:
        raise ValueError("rational_dependence expects irrational arguments")
    if set(ia) != set(ib):
        return None
    s0 = next(iter(ia))
    k = ib[s0] / ia[s0]  # irr(beta) == k * irr(alpha)
    if any(ib[s] != k * ia[s] for s in ia):
        return None
    # k.numerator*alpha - k.denominator*beta is rational
    p, q = k.numerator, -k.denominator
    rat = p * ta.get(1, Fraction(0)) + q * tb.get(1, Fraction(0))
    m = rat.denominator
    p, q, r = p * m, q * m, rat.numerator
    if p < 0 or (p == 0 and q < 0):
        p, q, r = -p, -q, -r
    return p, q, r


def integer_translate(step: RealNumber, offset: RealNumber) -> Optional[int]:
    """The unique integer ``n`` with ``n*step + offset`` an integer, or None.

    ``step`` must be irrational.  Raises :class:`UnsupportedField` when either
    value lies outside the multi-quadratic fields.
    """
    ts, to = step.terms, offset.terms
    if ts is None or to is None:
        raise UnsupportedField("integer_translate needs multi-quadratic values")
    isx, iox = _irrational_part(ts), _irrational_part(to)
    if not isx:
        raise ValueError("step must be irrational")
    if not iox:
        n = Fraction(0)
    else:
        if set(isx) != set(iox):
            return None
        s0 = next(iter(isx))
        n = -iox[s0] / isx[s0]
        if any(iox[s] != -n * isx[s] for s in isx):
            return None
    if n.denominator != 1:
        return None
    n = int(n)
    rat = n * ts.get(1, Fraction(0)) + to.get(1, Fraction(0))
    return n if rat.denominator == 1 else None


class LinearFloor:
    """Fast exact ``floor(n*slope + offset)`` for integer ``n``.

    Uses fixed-point enclosures and falls back to exact arithmetic only when
    the enclosure straddles an integer.
    """

    def __init__(self, slope: RealNumber, offset: RealNumber, bits: int = 128):
        self.slope = RealNumber._coerce(slope)
        self.offset = RealNumber._coerce(offset)
        self.bits = bits
        self._s = self.slope.fixed(bits)
        self._o = self.offset.fixed(bits)

    def __call__(self, n: int) -> int:
        sl, sh = self._s
        if n < 0:
            sl, sh = sh, sl
        lo = (n * sl + self._o[0]) >> self.bits
        hi = (n * sh + self._o[1]) >> self.bits
        if lo == hi:
            return lo
        return (self.slope * n + self.offset).floor()

    def values(self, start: int, stop: int) -> list[int]:
        return [self(n) for n in range(start, stop)]


# ---------------------------------------------------------------------------
# parser

_TOKEN = re.compile(r"\s*(?:(\d+(?:\.\d*)?|\.\d+)|(sqrt)|([-+*/()]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            while pos < n and text[pos].isspace():
                pos += 1
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        if m.group(1):
            out.append(("num", m.group(1), m.start(1)))
        elif m.group(2):
            out.append(("sqrt", "sqrt", m.start(2)))
        else:
            out.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    out.append(("end", "", n))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, v, pos = self.take()
        if v != value:
            found = "end of input" if kind == "end" else repr(v)
            raise ParseError(f"expected {value!r}, found {found}", pos, self.text)

    def expr(self) -> RealNumber:
        val = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self) -> RealNumber:
        val = self.factor()
        while self.peek()[1] in ("*", "/") and self.peek()[0] == "op":
            _, op, pos = self.take()
            rhs = self.factor()
            if op == "*":
                val = val * rhs
            else:
                if rhs.sign() == 0:
                    raise ParseError("division by zero", pos, self.text)
                val = val / rhs
        return val

    def factor(self) -> RealNumber:
        kind, v, pos = self.take()
        if kind == "num":
            return RealNumber(Fraction(v))
        if kind == "sqrt":
            self.expect("(")
            arg_pos = self.peek()[2]
            arg = self.expr()
            self.expect(")")
            if arg.sign() < 0:
                raise ParseError(f"square root of negative value {arg}", arg_pos, self.text)
            return arg.sqrt()
        if v == "(":
            val = self.expr()
            self.expect(")")
            return val
        if v == "-":
            return -self.factor()
        found = "end of input" if kind == "end" else repr(v)
        raise ParseError(f"unexpected {found}", pos, self.text)


def parse_real(text: str) -> RealNumber:
    """Parse an expression such as ``"3.99 + sqrt(5)/2"`` into an exact value.

    Decimals are read as exact rationals, so ``"3.99"`` is ``399/100``.
    """
    p = _Parser(text)
    val = p.expr()
    kind, v, pos = p.peek()
    if kind != "end":
        raise ParseError(f"unexpected {v!r}", pos, text)
    return val
