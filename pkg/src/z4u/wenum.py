"""Complete, symmetrized, and Lee weight enumerators and their transforms.

For a code C of length n:

  * the complete enumerator (CWE) counts, per codeword, how often each of
    the 16 ring elements appears: a sparse homogeneous degree-n polynomial
    in 16 variables indexed by the canonical element order;
  * the symmetrized enumerator (SWE) merges variables by Lee weight class
    into (X, Y, Z, W, S) = weights (0, 4, 3, 1, 2);
  * the Lee enumerator collects codewords by total Lee weight w into
    W^(4n-w) X^w, a dense length-(4n+1) coefficient vector.

Each enumerator has an exact dual transform scaled by 1/|C|:

  * CWE: substitute T.(X_1..X_16), T the 16x16 character table.  Kept
    evaluation-only (16-variable symbolic expansion is combinatorial);
    equality of the two sides is certified at random Gaussian points.
  * SWE: substitute five linear forms, obtained here by summing the
    columns of T over weight classes (the row sums are constant on each
    class, which is what makes the symmetrization well defined).
  * Lee: substitute (W+X, W-X), a binomial convolution.

All division by |C| is exact integer division; a remainder raises
NonExactDivision, which almost always means the supplied cardinality was
not the true |C|.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from . import ring
from .code import DEFAULT_BUDGET, LinearCode, lee_weight_vector
from .errors import ExpansionTooLarge, NonExactDivision
from .scalars import GaussianInt, GaussianRational

SWE_VARS = ("X", "Y", "Z", "W", "S")

#: Lee weight of the element class behind each SWE variable.
SWE_CLASS_WEIGHT = (0, 4, 3, 1, 2)

#: SWE class of each ring element (index into SWE_VARS), by Lee weight.
ELEMENT_CLASS = tuple({0: 0, 4: 1, 3: 2, 1: 3, 2: 4}[ring.lee_weight(x)]
                      for x in ring.ELEMENTS)

_EXPANSION_GUARD = 24


def _coerce_point(point: Sequence) -> tuple[list, object]:
    """Return (values, one) in GaussianInt when every entry is one, else
    in GaussianRational; both types share +, * and .scale(int)."""
    vals = list(point)
    if all(isinstance(p, GaussianInt) for p in vals):
        return vals, GaussianInt(1, 0)
    return [GaussianRational.of(p) for p in vals], GaussianRational.of(1)


@dataclass(frozen=True)
class CWE:
    """Sparse 16-variable composition census: exponent vector -> count."""

    length: int
    terms: dict[tuple[int, ...], int]

    def evaluate(self, point: Sequence):
        """Value at a 16-tuple of Gaussian integers or rationals.

        Stays in exact integer arithmetic when the point is integral.
        """
        vals, one = _coerce_point(point)
        pows = []
        for i in range(16):
            m = max((e[i] for e in self.terms), default=0)
            col = [one]
            for _ in range(m):
                col.append(col[-1] * vals[i])
            pows.append(col)
        out = one.scale(0)
        for exps, coeff in self.terms.items():
            prod = one
            for i, e in enumerate(exps):
                if e:
                    prod = prod * pows[i][e]
            out = out + prod.scale(coeff)
        return out

    def format_lines(self) -> list[str]:
        return [f"{','.join(map(str, exps))} : {self.terms[exps]}"
                for exps in sorted(self.terms)]


@dataclass(frozen=True)
class SWE:
    """Sparse 5-variable enumerator in (X, Y, Z, W, S)."""

    length: int
    terms: dict[tuple[int, int, int, int, int], int]

    def format_lines(self) -> list[str]:
        return [f"{','.join(map(str, exps))} : {self.terms[exps]}"
                for exps in sorted(self.terms)]

    def format_polynomial(self) -> str:
        parts = []
        for exps in sorted(self.terms):
            factors = [] if self.terms[exps] == 1 and any(exps) else [str(self.terms[exps])]
            for var, e in zip(SWE_VARS, exps):
                if e == 1:
                    factors.append(var)
                elif e > 1:
                    factors.append(f"{var}^{e}")
            parts.append("*".join(factors))
        return " + ".join(parts)


@dataclass(frozen=True)
class LeePoly:
    """Dense Lee enumerator: coeffs[w] counts codewords of Lee weight w."""

    length: int
    coeffs: tuple[int, ...]  # index 0..4n

    def __post_init__(self):
        assert len(self.coeffs) == 4 * self.length + 1

    def total(self) -> int:
        return sum(self.coeffs)

    def min_nonzero_weight(self) -> int | None:
        for w in range(1, len(self.coeffs)):
            if self.coeffs[w]:
                return w
        return None

    def format_lines(self) -> list[str]:
        n4 = 4 * self.length
        return [f"{n4 - w},{w} : {c}" for w, c in enumerate(self.coeffs) if c]

    def format_polynomial(self) -> str:
        n4 = 4 * self.length
        parts = []
        for w, c in enumerate(self.coeffs):
            if not c:
                continue
            factors = [] if c == 1 else [str(c)]
            if n4 - w:
                factors.append(f"W^{n4 - w}" if n4 - w > 1 else "W")
            if w:
                factors.append(f"X^{w}" if w > 1 else "X")
            parts.append("*".join(factors) if factors else "1")
        return " + ".join(parts)


# ---------------------------------------------------------------------------
# Building enumerators from codes
# ---------------------------------------------------------------------------

def cwe(code: LinearCode, budget: int = DEFAULT_BUDGET) -> CWE:
    """Exact composition census over every codeword (each counted once)."""
    terms: dict[tuple[int, ...], int] = {}
    for word in code.iter_codewords(budget):
        counts = [0] * 16
        for x in word:
            counts[x] += 1
        key = tuple(counts)
        terms[key] = terms.get(key, 0) + 1
    return CWE(code.n, terms)


def cwe_to_swe(e: CWE) -> SWE:
    terms: dict[tuple[int, int, int, int, int], int] = {}
    for exps, coeff in e.terms.items():
        merged = [0, 0, 0, 0, 0]
        for x, cnt in enumerate(exps):
            merged[ELEMENT_CLASS[x]] += cnt
        key = tuple(merged)
        terms[key] = terms.get(key, 0) + coeff
    return SWE(e.length, terms)


def swe(code: LinearCode, budget: int = DEFAULT_BUDGET) -> SWE:
    return cwe_to_swe(cwe(code, budget))


def swe_to_lee(e: SWE) -> LeePoly:
    coeffs = [0] * (4 * e.length + 1)
    for exps, coeff in e.terms.items():
        w = sum(cw * ex for cw, ex in zip(SWE_CLASS_WEIGHT, exps))
        coeffs[w] += coeff
    return LeePoly(e.length, tuple(coeffs))


def lee(code: LinearCode, budget: int = DEFAULT_BUDGET, threads: int = 1) -> LeePoly:
    """Lee enumerator straight from the weight census kernel."""
    hist = code.lee_census(budget, threads)
    return LeePoly(code.n, tuple(int(c) for c in hist))


def lee_of_words(words, length: int) -> LeePoly:
    coeffs = [0] * (4 * length + 1)
    for w in words:
        coeffs[lee_weight_vector(w)] += 1
    return LeePoly(length, tuple(coeffs))


def cwe_of_words(words, length: int) -> CWE:
    terms: dict[tuple[int, ...], int] = {}
    for word in words:
        counts = [0] * 16
        for x in word:
            counts[x] += 1
        key = tuple(counts)
        terms[key] = terms.get(key, 0) + 1
    return CWE(length, terms)


def swe_of_words(words, length: int) -> SWE:
    return cwe_to_swe(cwe_of_words(words, length))


# ---------------------------------------------------------------------------
# MacWilliams transforms
# ---------------------------------------------------------------------------

def macwilliams_cwe_eval(e: CWE, size: int,
                         point: Sequence) -> GaussianRational:
    """Dual CWE evaluated at `point`: (1/size) * cwe(T . point), exact.

    For a Gaussian-integer point the value of the dual enumerator is a
    Gaussian integer, so the 1/size scaling must divide exactly; a
    remainder raises NonExactDivision (the supplied size was not |C|).
    """
    table = ring.character_table()
    pts, one = _coerce_point(point)
    image = []
    for i in range(16):
        acc = one.scale(0)
        for j in range(16):
            acc = acc + pts[j] * table[i][j]
        image.append(acc)
    val = e.evaluate(image)
    if isinstance(val, GaussianInt):
        qr, rr = divmod(val.re, size)
        qi, ri = divmod(val.im, size)
        if rr or ri:
            raise NonExactDivision(f"CWE transform value {val} not divisible by {size}")
        return GaussianRational.of(GaussianInt(qr, qi))
    return val / GaussianRational.of(size)


def swe_transform_forms() -> tuple[tuple[int, ...], ...]:
    """5x5 integer matrix F with row c giving the linear form that replaces
    SWE variable c in the dual transform: F[c][c'] = sum of T(i_c, j) over
    j in class c', for any representative i_c of class c.

    Derived from the character table; constancy across representatives and
    vanishing imaginary parts are asserted, not assumed.
    """
    table = ring.character_table()
    forms: list[tuple[int, ...] | None] = [None] * 5
    for i in range(16):
        sums = [GaussianInt(0, 0)] * 5
        for j in range(16):
            sums[ELEMENT_CLASS[j]] = sums[ELEMENT_CLASS[j]] + table[i][j]
        if any(s.im != 0 for s in sums):
            raise AssertionError("class sums of the character table must be real")
        row = tuple(s.re for s in sums)
        c = ELEMENT_CLASS[i]
        if forms[c] is None:
            forms[c] = row
        elif forms[c] != row:
            raise AssertionError("character class sums differ within a weight class")
    return tuple(forms)  # type: ignore[arg-type]


def _poly_mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            key = tuple(a + b for a, b in zip(e1, e2))
            out[key] = out.get(key, 0) + c1 * c2
    return {k: v for k, v in out.items() if v}


def _poly_pow(p: dict, n: int) -> dict:
    out = {(0, 0, 0, 0, 0): 1}
    base = p
    while n:
        if n & 1:
            out = _poly_mul(out, base)
        base = _poly_mul(base, base)
        n >>= 1
    return out


def macwilliams_swe(e: SWE, size: int) -> SWE:
    """Fully expanded dual SWE: (1/size) * swe(five substituted forms)."""
    if e.length > _EXPANSION_GUARD:
        raise ExpansionTooLarge(f"SWE transform expansion guarded at n <= {_EXPANSION_GUARD}")
    forms = swe_transform_forms()
    form_polys = []
    for c in range(5):
        poly = {}
        for c2 in range(5):
            if forms[c][c2]:
                poly[(0,) * c2 + (1,) + (0,) * (4 - c2)] = forms[c][c2]
        form_polys.append(poly)
    acc: dict = {}
    pow_cache: list[dict[int, dict]] = [dict() for _ in range(5)]
    for exps, coeff in e.terms.items():
        prod = {(0, 0, 0, 0, 0): 1}
        for c, ex in enumerate(exps):
            if not ex:
                continue
            if ex not in pow_cache[c]:
                pow_cache[c][ex] = _poly_pow(form_polys[c], ex)
            prod = _poly_mul(prod, pow_cache[c][ex])
        for key, v in prod.items():
            acc[key] = acc.get(key, 0) + coeff * v
    out: dict = {}
    for key, v in acc.items():
        if v == 0:
            continue
        q, r = divmod(v, size)
        if r:
            raise NonExactDivision(f"SWE transform coefficient {v} not divisible by {size}")
        out[key] = q
    return SWE(e.length, out)


def macwilliams_lee(p: LeePoly, size: int) -> LeePoly:
    """Dual Lee enumerator: (1/size) * p(W+X, W-X), exact."""
    n4 = 4 * p.length
    out = [0] * (n4 + 1)
    for w, c in enumerate(p.coeffs):
        if not c:
            continue
        # (W+X)^(n4-w) (W-X)^w: coefficient of X^v
        for v in range(n4 + 1):
            s = 0
            for j in range(max(0, v - (n4 - w)), min(w, v) + 1):
                s += (-1) ** j * math.comb(w, j) * math.comb(n4 - w, v - j)
            out[v] += c * s
    coeffs = []
    for v, val in enumerate(out):
        q, r = divmod(val, size)
        if r:
            raise NonExactDivision(f"Lee transform coefficient {val} not divisible by {size}")
        coeffs.append(q)
    return LeePoly(p.length, tuple(coeffs))


def is_formally_self_dual(code: LinearCode, budget: int = DEFAULT_BUDGET,
                          threads: int = 1) -> bool:
    """Lee enumerator equals its own dual transform (Lee-level equality).

    This is the Lee-enumerator notion; CWE/SWE-level equality is strictly
    stronger and not what the dual-transform fixed point asks for here.
    """
    p = lee(code, budget, threads)
    return macwilliams_lee(p, code.cardinality(budget)) == p
