"""Decide whether a 4-tuple is good, i.e. whether some invariant game has the
pairs ``(A_n, B_n)``, ``(B_n, A_n)`` as its P-positions.

For gamma > 0 a short prefix ``w_0 u`` of the product word must not be *bad*;
for gamma < 0 a short prefix in ``{a,b}*`` must not be *suffix-bad* (every
suffix has property B.1, or every suffix of length >= 2 has property B.2).
Existence of the witnessing factors reduces to orbit questions on the torus.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .beatty import Tuple4
from .exactreal import PrecisionExhausted, UnsupportedField
from .productword import ParikhVector, ProductWord, build_word, parikh
from .sturmian import factor_interval, heavy_count, heavy_light_interval
from .torus import DEFAULT_SCAN_BUDGET, Rectangle, orbit_hits

__all__ = [
    "GoodnessVerdict",
    "Undecidable",
    "decide_good",
    "is_bad_prefix",
    "is_palindrome",
    "is_suffix_bad",
    "offending_prefixes",
    "satisfies_B1",
    "satisfies_B2",
    "word_is_suffix_bad",
    "word_satisfies_B1",
    "word_satisfies_B2",
]

# Parikh offsets of the witnessing factor for each case of a bad prefix
BAD_OFFSETS = {
    "i": (ParikhVector(0, -1, 1, 0), ParikhVector(1, -2, 0, 1)),
    "ii": (ParikhVector(-1, 0, 1, 0), ParikhVector(0, -1, 0, 1)),
    "iii": (ParikhVector(-1, 0, 0, 1), ParikhVector(-2, 1, 1, 0)),
}
B2_OFFSETS = (ParikhVector(0, -1, 1, 0), ParikhVector(1, -2, 0, 1))


class Undecidable(RuntimeError):
    pass


@dataclass
class GoodnessVerdict:
    """``verdict`` is GOOD, NOT_GOOD or UNDECIDED."""

    verdict: str
    tuple_sign: str
    B1: int
    certificate: dict = field(default_factory=dict)
    trace: list = field(default_factory=list)

    @property
    def obstruction(self) -> Optional[tuple[int, int]]:
        cell = self.certificate.get("obstruction_cell")
        return tuple(cell) if cell else None

    def as_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "gamma_sign": self.tuple_sign,
            "B1": self.B1,
            "certificate": self.certificate,
            "trace": self.trace,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=2)


def is_palindrome(s: str) -> bool:
    return s == s[::-1]


def _pi2_sum(u: str, fb: int) -> int:
    return sum(fb + (c in "bd") for c in u)


def _pi2_heavy(t: Tuple4, u: str) -> bool:
    return _pi2_sum(u, t.floor_beta) == heavy_count(t.beta, len(u))


def _query(t: Tuple4, I, J, budget: int):
    ans = orbit_hits(t, Rectangle(I, J), from_index=1, budget=budget)
    if ans.verdict == "BoundaryIndeterminate":
        raise Undecidable(ans.detail)
    return ans


# ---------------------------------------------------------------------------
# gamma > 0


def is_bad_prefix(t: Tuple4, w: ProductWord, n: int, budget: int = DEFAULT_SCAN_BUDGET) -> tuple[bool, dict]:
    """Is ``w_0 w_1 .. w_n`` bad?  Returns ``(bad, record)``."""
    if t.gamma.sign() <= 0:
        raise ValueError("bad prefixes are defined for gamma > 0")
    if n < 1:
        raise ValueError("n must be >= 1")
    u = w[1:n + 1]
    rec: dict = {"prefix": w[0] + u, "n": n, "u": u}
    if any(c not in "ab" for c in u):
        rec.update(bad=False, reason="u not in {a,b}*")
        return False, rec
    if not is_palindrome(u[:-1]):
        rec.update(bad=False, reason="u_1..u_{n-1} not a palindrome")
        return False, rec
    last = t.floor_beta + (u[-1] == "b")
    diff = 2 * t.B1 - last
    rec["2B1"] = 2 * t.B1
    rec["pi2_last"] = last
    if diff not in (-1, 0, 1):
        rec.update(bad=False, reason=f"2B1 = {2 * t.B1} not in {{{last - 1}, {last}, {last + 1}}}")
        return False, rec
    case = {-1: "i", 0: "ii", 1: "iii"}[diff]
    heavy2 = _pi2_heavy(t, u)
    rec["case"] = case
    rec["pi2_u"] = "heavy" if heavy2 else "light"
    psi = parikh(u)
    targets = [psi + off for off in BAD_OFFSETS[case]]
    # the factor at position 0 is not part of the direct product
    if w[0] != "e":
        v0 = w[0:n]
        if "e" not in v0 and parikh(v0) in targets:
            rec.update(bad=True, witness_index=0, factor=v0)
            return True, rec
    if case == "i" and not heavy2:
        rec.update(bad=False, reason="case (i) needs pi2(u) heavy")
        return False, rec
    if case == "iii" and heavy2:
        rec.update(bad=False, reason="case (iii) needs pi2(u) light")
        return False, rec
    ykind = {"i": "Light", "iii": "Heavy"}.get(case, "Heavy" if heavy2 else "Light")
    I = heavy_light_interval(t.alpha, n, "Heavy")
    J = heavy_light_interval(t.beta, n, ykind)
    ans = _query(t, I, J, budget)
    rec["torus"] = {"I": f"H_alpha({n})", "J": f"{ykind[0]}_beta({n})", **ans.as_dict()}
    if ans.hit:
        i = ans.witness
        v = w[i:i + n]
        if parikh(v) not in targets:
            raise AssertionError(f"torus witness {i} gives factor {v!r} with wrong Parikh vector")
        rec.update(bad=True, witness_index=i, factor=v)
        return True, rec
    rec.update(bad=False, reason="no factor with the required Parikh vector")
    return False, rec


# ---------------------------------------------------------------------------
# gamma < 0


def satisfies_B1(t: Tuple4, u: str, w: Optional[ProductWord] = None, budget: int = DEFAULT_SCAN_BUDGET) -> tuple[bool, dict]:
    """Is there a factor in ``{a,b}*`` of the same length with fewer b's?"""
    n = len(u)
    rec: dict = {"u": u, "property": "B.1"}
    if n == 0 or any(c not in "ab" for c in u):
        raise ValueError("u must be a nonempty word over {a,b}")
    if not _pi2_heavy(t, u):
        rec.update(holds=False, reason="pi2(u) light")
        return False, rec
    w = w if w is not None else build_word(t, n)
    v0 = w[0:n]
    if all(c in "ab" for c in v0) and v0.count("b") < u.count("b"):
        rec.update(holds=True, witness_index=0, factor=v0)
        return True, rec
    I = factor_interval([1] * n, t.alpha)
    if I.is_empty():
        rec.update(holds=False, reason=f"1^{n} is not a factor of the alpha word")
        return False, rec
    J = heavy_light_interval(t.beta, n, "Light")
    ans = _query(t, I, J, budget)
    rec["torus"] = {"I": f"I_1^{n}", "J": f"L_beta({n})", **ans.as_dict()}
    if ans.hit:
        i = ans.witness
        v = w[i:i + n]
        if any(c not in "ab" for c in v) or v.count("b") >= u.count("b"):
            raise AssertionError(f"B.1 witness {i} gives factor {v!r}")
        rec.update(holds=True, witness_index=i, factor=v)
        return True, rec
    rec.update(holds=False, reason="no light pi2 factor over {a,b}")
    return False, rec


def satisfies_B2(t: Tuple4, u: str, w: Optional[ProductWord] = None, budget: int = DEFAULT_SCAN_BUDGET) -> tuple[bool, dict]:
    """Is there a factor ``v'`` of length ``|u| - 1`` obtained from
    ``u_1..u_{n-1}`` by replacing one b with c, or two b's with a and d?"""
    n = len(u)
    if n == 0 or any(c not in "ab" for c in u):
        raise ValueError("u must be a nonempty word over {a,b}")
    up, m = u[:-1], n - 1
    rec: dict = {"u": u, "property": "B.2"}
    if m == 0:
        rec.update(holds=False, reason="empty u_1..u_{n-1} admits no factor with the required counts")
        return False, rec
    if not _pi2_heavy(t, up):
        rec.update(holds=False, reason="pi2(u_1..u_{n-1}) light")
        return False, rec
    k = -((-t.alpha.frac() * m).floor())
    if k > 2:
        rec.update(holds=False, reason=f"every alpha factor of length {m} has >= 2 letters 2")
        return False, rec
    psi = parikh(up)
    targets = [psi + off for off in B2_OFFSETS]
    w = w if w is not None else build_word(t, m)
    v0 = w[0:m]
    if "e" not in v0 and parikh(v0) in targets:
        rec.update(holds=True, witness_index=0, factor=v0)
        return True, rec
    xkind = "Heavy" if k == 1 else "Light"
    I = heavy_light_interval(t.alpha, m, xkind)
    J = heavy_light_interval(t.beta, m, "Light")
    ans = _query(t, I, J, budget)
    rec["torus"] = {"I": f"{xkind[0]}_alpha({m})", "J": f"L_beta({m})", **ans.as_dict()}
    if ans.hit:
        i = ans.witness
        v = w[i:i + m]
        if parikh(v) not in targets:
            raise AssertionError(f"B.2 witness {i} gives factor {v!r}")
        rec.update(holds=True, witness_index=i, factor=v)
        return True, rec
    rec.update(holds=False, reason="no factor with the required Parikh vector")
    return False, rec


def is_suffix_bad(t: Tuple4, u: str, w: Optional[ProductWord] = None, budget: int = DEFAULT_SCAN_BUDGET) -> tuple[bool, dict]:
    """All suffixes satisfy B.1, or (length >= 2 and) all suffixes of length
    >= 2 satisfy B.2.  The B.2 branch is false for a single letter."""
    if t.gamma.sign() >= 0:
        raise ValueError("suffix-bad prefixes are defined for gamma < 0")
    w = w if w is not None else build_word(t, len(u))
    n = len(u)
    rec: dict = {"prefix": u, "n": n, "B1_chain": [], "B2_chain": []}
    all1 = True
    for j in range(n):
        ok, r = satisfies_B1(t, u[j:], w, budget)
        rec["B1_chain"].append(r)
        if not ok:
            all1 = False
            break
    if all1:
        rec.update(suffix_bad=True, branch="B.1")
        return True, rec
    all2 = n >= 2
    if all2:
        for j in range(n - 1):
            ok, r = satisfies_B2(t, u[j:], w, budget)
            rec["B2_chain"].append(r)
            if not ok:
                all2 = False
                break
    if all2:
        rec.update(suffix_bad=True, branch="B.2")
        return True, rec
    rec.update(suffix_bad=False)
    return False, rec


# ---------------------------------------------------------------------------
# explicit finite words


def _factors(word: str, n: int) -> set[str]:
    return {word[i:i + n] for i in range(len(word) - n + 1)}


def word_satisfies_B1(word: str, u: str) -> Optional[str]:
    """Witness factor of ``word`` for property B.1 of ``u``, or None."""
    nb = u.count("b")
    for v in sorted(_factors(word, len(u))):
        if set(v) <= {"a", "b"} and v.count("b") < nb:
            return v
    return None


def word_satisfies_B2(word: str, u: str) -> Optional[str]:
    """Witness factor of ``word`` for property B.2 of ``u``, or None."""
    m = len(u) - 1
    if m <= 0:
        return None
    psi = parikh(u[:-1])
    targets = [psi + off for off in B2_OFFSETS]
    for v in sorted(_factors(word, m)):
        if "e" not in v and parikh(v) in targets:
            return v
    return None


def word_is_suffix_bad(word: str, u: str) -> bool:
    n = len(u)
    if all(word_satisfies_B1(word, u[j:]) for j in range(n)):
        return True
    return n >= 2 and all(word_satisfies_B2(word, u[j:]) for j in range(n - 1))


# ---------------------------------------------------------------------------


def decide_good(t: Tuple4, budget: int = DEFAULT_SCAN_BUDGET) -> GoodnessVerdict:
    """Scan the short prefixes and return a verdict with certificate.

    NOT_GOOD reports the shortest offending prefix and the cell from which
    no move of the maximal invariant game reaches a P-position.
    """
    b1 = t.B1
    sign = t.gamma_sign
    if b1 == 2:
        return GoodnessVerdict("UNDECIDED", sign, b1, {"reason": "B1 = 2 is not characterised"})
    if b1 < 2 or sign == "zero":
        return GoodnessVerdict("UNDECIDED", sign, b1, {"reason": "tuple outside the standing assumptions"})
    w = build_word(t, max(b1, 2))
    trace: list = []
    try:
        if sign == "positive":
            for k in range(1, b1 - 1):
                if w[k] not in "ab":
                    trace.append({"prefix": w[0:k + 1], "stop": "letter outside {a,b}"})
                    break
                bad, rec = is_bad_prefix(t, w, k, budget)
                trace.append(rec)
                if bad:
                    cell = [k + 1, t.B(k) + b1]
                    cert = {"prefix": rec["prefix"], "case": rec["case"], "record": rec,
                            "obstruction_cell": cell, "obstruction_shape": "(n, B_{n-1} + B1)"}
                    return GoodnessVerdict("NOT_GOOD", sign, b1, cert, trace)
        else:
            for k in range(1, b1):
                if w[k - 1] not in "ab":
                    trace.append({"prefix": w[0:k], "stop": "letter outside {a,b}"})
                    break
                sbad, rec = is_suffix_bad(t, w[0:k], w, budget)
                trace.append(rec)
                if sbad:
                    if rec["branch"] == "B.1":
                        cell, shape = [k, t.B(k) - 1], "(n, B_n - 1)"
                    else:
                        cell, shape = [k, t.B(k - 1) - 1], "(n, B_{n-1} - 1)"
                    cert = {"prefix": w[0:k], "branch": rec["branch"], "record": rec,
                            "obstruction_cell": cell, "obstruction_shape": shape}
                    return GoodnessVerdict("NOT_GOOD", sign, b1, cert, trace)
    except (Undecidable, PrecisionExhausted, UnsupportedField) as exc:
        return GoodnessVerdict("UNDECIDED", sign, b1, {"reason": str(exc)}, trace)
    tested = [r["prefix"] for r in trace if "stop" not in r]
    return GoodnessVerdict("GOOD", sign, b1, {"tested_prefixes": tested}, trace)


def offending_prefixes(t: Tuple4, budget: int = DEFAULT_SCAN_BUDGET) -> list[dict]:
    """Every offending short prefix with each branch that makes it offend,
    and the cell predicted to have no move into P."""
    b1 = t.B1
    w = build_word(t, max(b1, 2))
    out = []
    if t.gamma.sign() > 0:
        for k in range(1, b1 - 1):
            if w[k] not in "ab":
                break
            bad, rec = is_bad_prefix(t, w, k, budget)
            if bad:
                out.append({"prefix": rec["prefix"], "branch": "case " + rec["case"],
                            "cell": (k + 1, t.B(k) + b1)})
        return out
    for k in range(1, b1):
        u = w[0:k]
        if u[-1] not in "ab":
            break
        if all(satisfies_B1(t, u[j:], w, budget)[0] for j in range(k)):
            out.append({"prefix": u, "branch": "B.1", "cell": (k, t.B(k) - 1)})
        if k >= 2 and all(satisfies_B2(t, u[j:], w, budget)[0] for j in range(k - 1)):
            out.append({"prefix": u, "branch": "B.2", "cell": (k, t.B(k - 1) - 1)})
    return out
