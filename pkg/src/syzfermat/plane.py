"""Homogeneous polynomials in K[X, Y] over F_p and minimal syzygy degrees for
triples (X^a1, Y^a2, f).

A HomogPoly of degree D stores only its nonzero coefficients, keyed by the
X-exponent i (the Y-exponent is D - i).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .ffield import FieldCtx, binom_mod_p
from .linalg import kernel_vector


class HomogPoly:
    __slots__ = ("degree", "coeffs", "p")

    def __init__(self, degree: int, coeffs: dict[int, int] | None, p: int):
        clean = {}
        for i, c in (coeffs or {}).items():
            c %= p
            if c:
                if not 0 <= i <= degree:
                    raise ValueError(f"X-exponent {i} outside 0..{degree}")
                clean[i] = c
        self.degree = degree
        self.coeffs = clean
        self.p = p

    @classmethod
    def zero(cls, degree: int, p: int) -> HomogPoly:
        return cls(degree, None, p)

    @classmethod
    def monomial(cls, i: int, j: int, p: int, c: int = 1) -> HomogPoly:
        """c * X^i Y^j"""
        return cls(i + j, {i: c}, p)

    def is_zero(self) -> bool:
        return not self.coeffs

    def terms(self):
        """(x_exp, y_exp, coeff) with descending X-exponent."""
        for i in sorted(self.coeffs, reverse=True):
            yield i, self.degree - i, self.coeffs[i]

    def _check(self, other: HomogPoly):
        if self.p != other.p:
            raise ValueError("polynomials over different fields")

    def __add__(self, other: HomogPoly) -> HomogPoly:
        self._check(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.degree != other.degree:
            raise ValueError(f"adding degree {self.degree} to degree {other.degree}")
        out = dict(self.coeffs)
        for i, c in other.coeffs.items():
            out[i] = out.get(i, 0) + c
        return HomogPoly(self.degree, out, self.p)

    def __neg__(self) -> HomogPoly:
        return HomogPoly(self.degree, {i: -c for i, c in self.coeffs.items()}, self.p)

    def __sub__(self, other: HomogPoly) -> HomogPoly:
        return self + (-other)

    def __mul__(self, other) -> HomogPoly:
        if isinstance(other, int):
            return HomogPoly(self.degree, {i: c * other for i, c in self.coeffs.items()}, self.p)
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, HomogPoly):
            return NotImplemented
        if self.p != other.p or self.coeffs != other.coeffs:
            return False
        return self.is_zero() or self.degree == other.degree

    def __repr__(self) -> str:
        return f"HomogPoly({format_poly(self)}, deg={self.degree}, p={self.p})"


def poly_mul(f: HomogPoly, g: HomogPoly) -> HomogPoly:
    f._check(g)
    p = f.p
    out: dict[int, int] = {}
    for i, a in f.coeffs.items():
        for j, b in g.coeffs.items():
            out[i + j] = (out.get(i + j, 0) + a * b) % p
    return HomogPoly(f.degree + g.degree, out, p)


def fermat_power(d: int, k: int, ctx: FieldCtx) -> HomogPoly:
    """(X^d + Y^d)^k, coefficients read off by Lucas."""
    if k < 0:
        raise ValueError("negative exponent")
    coeffs = {d * (k - j): binom_mod_p(k, j, ctx) for j in range(k + 1)}
    return HomogPoly(d * k, coeffs, ctx.p)


def div_monomial(f: HomogPoly, i: int, j: int) -> HomogPoly:
    """Exact division by X^i Y^j; every term of f must be divisible."""
    out = {}
    for x, y, c in f.terms():
        if x < i or y < j:
            raise ValueError("not divisible")
        out[x - i] = c
    return HomogPoly(f.degree - i - j, out, f.p)


@dataclass(frozen=True)
class MonomialIdeal2:
    """The ideal (X^a1, Y^a2) in K[X, Y]."""

    a1: int
    a2: int

    def __post_init__(self):
        if self.a1 < 1 or self.a2 < 1:
            raise ValueError("ideal exponents must be positive")

    def contains_monomial(self, i: int, j: int) -> bool:
        return i >= self.a1 or j >= self.a2


def reduce_mod_ideal(f: HomogPoly, ideal: MonomialIdeal2) -> HomogPoly:
    keep = {i: c for i, c in f.coeffs.items() if not ideal.contains_monomial(i, f.degree - i)}
    return HomogPoly(f.degree, keep, f.p)


@dataclass
class MultiplierResult:
    degree: int | None  # None: no multiplier within the bound
    witness: HomogPoly | None
    bound: int


def _blocks(f: HomogPoly, e: int) -> list[list[int]]:
    """Partition the X-exponents 0..e of a multiplier H into classes that f
    never mixes: f's X-exponents all agree modulo `step`."""
    exps = sorted(f.coeffs)
    step = 0
    for x in exps[1:]:
        step = gcd(step, x - exps[0])
    if step == 0:
        step = e + 1
    return [list(range(e - ((e - c) % step), -1, -step)) for c in range(min(step, e + 1))]


def multiplier_at_degree(ideal: MonomialIdeal2, f: HomogPoly, e: int) -> HomogPoly | None:
    """Nonzero H of degree e with H*f in the ideal, or None.

    The map H -> H*f mod ideal splits into independent blocks by X-exponent
    class; any block with a kernel yields a witness. The first such block (by
    class) is used, and the witness is scaled so its leading X-term is 1.
    """
    p = f.p
    total = e + f.degree
    for cols in _blocks(f, e):
        rows: dict[int, int] = {}
        entries = []
        for col, i in enumerate(cols):
            for fx, c in f.coeffs.items():
                x = i + fx
                if ideal.contains_monomial(x, total - x):
                    continue
                r = rows.setdefault(x, len(rows))
                entries.append((r, col, c))
        if not rows:
            v = [0] * len(cols)
            v[0] = 1
        else:
            a = np.zeros((len(rows), len(cols)), dtype=np.int64 if p < (1 << 31) else object)
            for r, col, c in entries:
                a[r, col] = c
            v = kernel_vector(a, p)
            if v is None:
                continue
        lead = next(c for c in v if c)
        inv = pow(lead, -1, p)
        return HomogPoly(e, {i: c * inv for i, c in zip(cols, v)}, p)
    return None


def default_search_bound(a1: int, a2: int, f: HomogPoly) -> int:
    return max(a1 + a2 - f.degree, 0)


def min_multiplier_degree(ideal: MonomialIdeal2, f: HomogPoly, search_bound: int | None = None) -> MultiplierResult:
    """Least e <= search_bound admitting a nonzero H of degree e with H*f in
    the ideal.

    Existence is monotone in e (multiply a witness by X), so the least degree
    is located by bisection; the witness is recomputed at that degree.
    """
    if f.is_zero():
        raise ValueError("f must be nonzero")
    if search_bound is None:
        search_bound = default_search_bound(ideal.a1, ideal.a2, f)
    if search_bound < 0 or multiplier_at_degree(ideal, f, search_bound) is None:
        return MultiplierResult(None, None, search_bound)
    lo, hi = 0, search_bound
    while lo < hi:
        mid = (lo + hi) // 2
        if multiplier_at_degree(ideal, f, mid) is None:
            lo = mid + 1
        else:
            hi = mid
    return MultiplierResult(lo, multiplier_at_degree(ideal, f, lo), search_bound)


@dataclass
class PlaneSyzygy:
    """F*X^a1 + G*Y^a2 + H*f = 0 of total degree `degree`.

    When `capped` is set the search bound was hit: `degree` is only an upper
    bound and the true minimum is at least `lower_bound`.
    """

    degree: int
    F: HomogPoly
    G: HomogPoly
    H: HomogPoly
    a1: int
    a2: int
    f: HomogPoly
    capped: bool = False
    lower_bound: int | None = None

    def verify(self) -> bool:
        return verify_plane(self.F, self.G, self.H, self.a1, self.a2, self.f, self.degree)


def verify_plane(F, G, H, a1, a2, f, m) -> bool:
    if F.is_zero() and G.is_zero() and H.is_zero():
        return False
    p = f.p
    for poly, shift in ((F, a1), (G, a2), (H, f.degree)):
        if not poly.is_zero() and poly.degree + shift != m:
            return False
    total = (
        F * HomogPoly.monomial(a1, 0, p)
        + G * HomogPoly.monomial(0, a2, p)
        + H * f
    )
    return total.is_zero()


def syzygy_from_multiplier(a1: int, a2: int, f: HomogPoly, H: HomogPoly) -> tuple[HomogPoly, HomogPoly]:
    """Solve F*X^a1 + G*Y^a2 = -H*f; terms divisible by X^a1 go to F."""
    prod = H * f
    p = f.p
    m = prod.degree
    xs, ys = {}, {}
    for x, y, c in prod.terms():
        if x >= a1:
            xs[x - a1] = -c
        elif y >= a2:
            ys[x] = -c
        else:
            raise ValueError("H*f is not in the ideal")
    return HomogPoly(m - a1, xs, p), HomogPoly(m - a2, ys, p)


def delta_plane(a1: int, a2: int, f: HomogPoly, search_bound: int | None = None) -> PlaneSyzygy:
    """Minimal total degree of a nontrivial syzygy for (X^a1, Y^a2, f)."""
    ideal = MonomialIdeal2(a1, a2)
    p = f.p
    full = default_search_bound(a1, a2, f)
    res = min_multiplier_degree(ideal, f, search_bound)
    koszul = a1 + a2
    if res.degree is not None and f.degree + res.degree <= koszul:
        H = res.witness
        F, G = syzygy_from_multiplier(a1, a2, f, H)
        return PlaneSyzygy(f.degree + res.degree, F, G, H, a1, a2, f)
    lower = min(f.degree + res.bound + 1, koszul)
    capped = res.bound < full and lower < koszul
    return PlaneSyzygy(
        koszul,
        HomogPoly.monomial(0, a2, p),
        HomogPoly.monomial(a1, 0, p, -1),
        HomogPoly.zero(koszul - f.degree, p),
        a1,
        a2,
        f,
        capped=capped,
        lower_bound=lower if capped else None,
    )


def _signed(c: int, p: int) -> int:
    return c - p if c > p // 2 else c


def _term(x: int, y: int, z: int = 0) -> str:
    s = ""
    for name, e in (("X", x), ("Y", y), ("Z", z)):
        if e == 1:
            s += name
        elif e > 1:
            s += f"{name}^{e}"
    return s


def format_terms(terms, p: int) -> str:
    """Render [(x, y, z, c)] with symmetric coefficient representatives, e.g.
    -(X^6+2XY^5). An all-negative polynomial is written as -(...)."""
    terms = [(x, y, z, _signed(c, p)) for x, y, z, c in terms if c % p]
    if not terms:
        return "0"
    neg = all(c < 0 for *_, c in terms)
    if neg:
        terms = [(x, y, z, -c) for x, y, z, c in terms]
    parts = []
    for x, y, z, c in terms:
        mono = _term(x, y, z)
        mag = abs(c)
        body = mono if mag == 1 and mono else f"{mag}{mono}"
        parts.append(("-" if c < 0 else "+") + body)
    s = "".join(parts).lstrip("+")
    if neg:
        return f"-({s})" if len(terms) > 1 else f"-{s}"
    return s


def format_poly(f: HomogPoly) -> str:
    return format_terms([(x, y, 0, c) for x, y, c in f.terms()], f.p)
