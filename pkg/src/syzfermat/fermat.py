"""Syzygies of (X^a1, Y^a2, Z^a3) on the Fermat curve Z^d = X^d + Y^d.

Elements of the coordinate ring F_p[X, Y, Z]/(Z^d - X^d - Y^d) are kept in
Z-adic form: a homogeneous element of degree m is sum_l parts[l] * Z^l with
parts[l] in K[X, Y] of degree m - l and l < d.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .ffield import FieldCtx
from .linalg import det_mod_p, kernel_vector
from .plane import (
    HomogPoly,
    MonomialIdeal2,
    PlaneSyzygy,
    delta_plane,
    fermat_power,
    format_terms,
    reduce_mod_ideal,
)

DEFAULT_COST_CEILING = 600


class NotSmoothError(ValueError):
    """Raised when the characteristic divides the curve degree."""


def require_smooth(d: int, ctx: FieldCtx):
    if d < 1:
        raise ValueError("curve degree must be positive")
    if d % ctx.p == 0:
        raise NotSmoothError(f"p={ctx.p} divides d={d}: the Fermat curve is singular")


@dataclass(frozen=True)
class DegreeSplit:
    a: int
    d: int

    @property
    def k(self) -> int:
        return self.a // self.d

    @property
    def t(self) -> int:
        return self.a % self.d


class CurveElem:
    __slots__ = ("d", "degree", "parts", "p")

    def __init__(self, d: int, degree: int, parts: dict[int, HomogPoly], p: int):
        self.d = d
        self.degree = degree
        self.p = p
        self.parts = {}
        for l, f in parts.items():
            if f.is_zero():
                continue
            if not 0 <= l < d:
                raise ValueError(f"Z-exponent {l} outside 0..{d - 1}")
            if f.degree + l != degree:
                raise ValueError("inhomogeneous curve element")
            self.parts[l] = f

    @classmethod
    def zero(cls, d: int, degree: int, p: int) -> CurveElem:
        return cls(d, degree, {}, p)

    @classmethod
    def from_plane(cls, f: HomogPoly, d: int, z: int = 0) -> CurveElem:
        """f * Z^z with 0 <= z < d."""
        return cls(d, f.degree + z, {z: f}, f.p)

    @classmethod
    def monomial(cls, i: int, j: int, l: int, d: int, p: int, c: int = 1) -> CurveElem:
        """c X^i Y^j Z^l; any Z^d is rewritten as X^d + Y^d."""
        f = HomogPoly.monomial(i, j, p, c)
        while l >= d:
            f = f * HomogPoly(d, {d: 1, 0: 1}, p)
            l -= d
        return cls.from_plane(f, d, l)

    def is_zero(self) -> bool:
        return not self.parts

    def __add__(self, other: CurveElem) -> CurveElem:
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if other.degree != self.degree:
            raise ValueError("adding curve elements of different degree")
        parts = dict(self.parts)
        for l, f in other.parts.items():
            parts[l] = parts[l] + f if l in parts else f
        return CurveElem(self.d, self.degree, parts, self.p)

    def __neg__(self) -> CurveElem:
        return CurveElem(self.d, self.degree, {l: -f for l, f in self.parts.items()}, self.p)

    def __sub__(self, other: CurveElem) -> CurveElem:
        return self + (-other)

    def __mul__(self, other) -> CurveElem:
        if isinstance(other, int):
            return CurveElem(self.d, self.degree, {l: f * other for l, f in self.parts.items()}, self.p)
        return curve_mul(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CurveElem):
            return NotImplemented
        return (self - other).is_zero()

    def terms(self):
        """(x, y, z, coeff), grouped by Z-exponent then descending X."""
        for l in sorted(self.parts):
            for x, y, c in self.parts[l].terms():
                yield x, y, l, c

    def __str__(self) -> str:
        return format_curve(self)

    def __repr__(self) -> str:
        return f"CurveElem({self}, deg={self.degree}, d={self.d}, p={self.p})"


def format_curve(u: CurveElem) -> str:
    """Compact rendering with Z-powers factored out: (X^5-Y^5)Z."""
    if u.is_zero():
        return "0"
    out = []
    for l in sorted(u.parts):
        body = format_terms([(x, y, 0, c) for x, y, c in u.parts[l].terms()], u.p)
        if l == 0:
            out.append(body)
            continue
        z = "Z" if l == 1 else f"Z^{l}"
        if body == "1":
            out.append(z)
        elif body == "-1":
            out.append("-" + z)
        elif len(u.parts[l].coeffs) > 1 and not body.startswith("-("):
            out.append(f"({body}){z}")
        else:
            out.append(body + z)
    s = out[0]
    for piece in out[1:]:
        s += piece if piece.startswith("-") else "+" + piece
    return s


def curve_mul(u: CurveElem, v: CurveElem) -> CurveElem:
    """Product in the curve ring; each Z^d that appears becomes X^d + Y^d."""
    if u.d != v.d or u.p != v.p:
        raise ValueError("curve elements from different rings")
    d, p = u.d, u.p
    fermat = None
    out: dict[int, HomogPoly] = {}
    for l1, f1 in u.parts.items():
        for l2, f2 in v.parts.items():
            prod = f1 * f2
            l = l1 + l2
            if l >= d:
                if fermat is None:
                    fermat = HomogPoly(d, {d: 1, 0: 1}, p)
                prod = prod * fermat
                l -= d
            out[l] = out[l] + prod if l in out else prod
    return CurveElem(d, u.degree + v.degree, out, p)


def curve_pow(u: CurveElem, e: int) -> CurveElem:
    result = CurveElem.monomial(0, 0, 0, u.d, u.p)
    base = u
    while e:
        if e & 1:
            result = curve_mul(result, base)
        e >>= 1
        if e:
            base = curve_mul(base, base)
    return result


def generator_powers(a1: int, a2: int, a3: int, d: int, p: int) -> tuple[CurveElem, CurveElem, CurveElem]:
    """X^a1, Y^a2, Z^a3 as ring elements (Z^a3 via repeated multiplication)."""
    x = CurveElem.monomial(a1, 0, 0, d, p)
    y = CurveElem.monomial(0, a2, 0, d, p)
    z = curve_pow(CurveElem.monomial(0, 0, 1, d, p), a3)
    return x, y, z


@dataclass
class SyzygyWitness:
    m: int
    F: CurveElem
    G: CurveElem
    H: CurveElem
    a1: int
    a2: int
    a3: int

    def components(self):
        return (self.F, self.G, self.H)

    def scaled(self, c: int) -> SyzygyWitness:
        return SyzygyWitness(self.m, self.F * c, self.G * c, self.H * c, self.a1, self.a2, self.a3)


def verify_witness(w: SyzygyWitness, d: int, ctx: FieldCtx) -> bool:
    """Degree bookkeeping plus F*X^a1 + G*Y^a2 + H*Z^a3 == 0 in the curve ring."""
    comps = w.components()
    if all(c.is_zero() for c in comps):
        return False
    for c, a in zip(comps, (w.a1, w.a2, w.a3)):
        if c.d != d or c.p != ctx.p:
            return False
        if not c.is_zero() and c.degree + a != w.m:
            return False
    x, y, z = generator_powers(w.a1, w.a2, w.a3, d, ctx.p)
    total = curve_mul(w.F, x) + curve_mul(w.G, y) + curve_mul(w.H, z)
    return total.is_zero()


@dataclass
class FermatSyzygy:
    """Result of a minimal-degree search on the curve.

    `capped` marks a result where a search bound was hit and the minimum is
    only known to lie in [lower_bound, degree].
    """

    degree: int | None
    witness: SyzygyWitness | None
    split: DegreeSplit | None = None
    branch: str | None = None  # "k" or "k+1": which plane problem won
    capped: bool = False
    lower_bound: int | None = None
    plane: PlaneSyzygy | None = None


def _lift_next(ps: PlaneSyzygy, split: DegreeSplit, a1, a2, d) -> SyzygyWitness:
    # plane syzygy for P^(k+1): H picks up Z^(d-t), degree unchanged
    p = ps.f.p
    zpow = CurveElem.monomial(0, 0, d - split.t, d, p)
    H = curve_mul(CurveElem.from_plane(ps.H, d), zpow) if not ps.H.is_zero() else CurveElem.zero(d, ps.degree - split.a, p)
    return SyzygyWitness(
        ps.degree, CurveElem.from_plane(ps.F, d), CurveElem.from_plane(ps.G, d), H, a1, a2, split.a
    )


def _lift_same(ps: PlaneSyzygy, split: DegreeSplit, a1, a2, d) -> SyzygyWitness:
    # plane syzygy for P^k: F and G pick up Z^t, degree rises by t
    p = ps.f.p
    t = split.t

    def up(f: HomogPoly) -> CurveElem:
        if f.is_zero():
            return CurveElem.zero(d, f.degree + t, p)
        return CurveElem.from_plane(f, d, t)

    H = CurveElem.from_plane(ps.H, d) if not ps.H.is_zero() else CurveElem.zero(d, ps.H.degree, p)
    return SyzygyWitness(ps.degree + t, up(ps.F), up(ps.G), H, a1, a2, split.a)


def delta_fermat(a1: int, a2: int, a3: int, d: int, ctx: FieldCtx, search_bound: int | None = None) -> FermatSyzygy:
    """Minimal syzygy degree for (X^a1, Y^a2, Z^a3) on the Fermat curve.

    With a3 = d*k + t the answer is the smaller of two plane problems:
    delta(X^a1, Y^a2, P^k) + t and delta(X^a1, Y^a2, P^(k+1)), P = X^d + Y^d.
    On a tie the P^(k+1) witness is kept.
    """
    require_smooth(d, ctx)
    if min(a1, a2, a3) < 1:
        raise ValueError("exponents must be positive")
    split = DegreeSplit(a3, d)
    same = delta_plane(a1, a2, fermat_power(d, split.k, ctx), search_bound)
    nxt = delta_plane(a1, a2, fermat_power(d, split.k + 1, ctx), search_bound)
    v_same = same.degree + split.t
    v_next = nxt.degree
    if v_next <= v_same:
        branch, ps, witness = "k+1", nxt, _lift_next(nxt, split, a1, a2, d)
    else:
        branch, ps, witness = "k", same, _lift_same(same, split, a1, a2, d)
    best = min(v_same, v_next)
    lower = min(
        same.lower_bound + split.t if same.capped else v_same,
        nxt.lower_bound if nxt.capped else v_next,
    )
    if not verify_witness(witness, d, ctx):
        raise AssertionError("lifted witness failed verification")
    capped = lower < best
    return FermatSyzygy(best, witness, split, branch, capped, lower if capped else None, ps)


def _basis(n: int, d: int) -> list[tuple[int, int, int]]:
    if n < 0:
        return []
    return [(i, n - l - i, l) for l in range(min(d - 1, n) + 1) for i in range(n - l, -1, -1)]


def syzygy_system(a1, a2, a3, d, ctx: FieldCtx, m: int, gens=None):
    """Matrix of (F, G, H) -> F*X^a1 + G*Y^a2 + H*Z^a3 at total degree m,
    in the monomial basis X^i Y^j Z^l (l < d). Returns (matrix, column labels)."""
    p = ctx.p
    gens = gens or generator_powers(a1, a2, a3, d, p)
    rows = {mono: r for r, mono in enumerate(_basis(m, d))}
    cols = []
    entries = []
    for slot, (a, g) in enumerate(zip((a1, a2, a3), gens)):
        for mono in _basis(m - a, d):
            c = len(cols)
            cols.append((slot, mono))
            img = curve_mul(CurveElem.monomial(*mono, d, p), g)
            for x, y, z, coef in img.terms():
                entries.append((rows[(x, y, z)], c, coef))
    mat = np.zeros((len(rows), len(cols)), dtype=np.int64 if p < (1 << 31) else object)
    for r, c, coef in entries:
        mat[r, c] = (mat[r, c] + coef) % p
    return mat, cols


def delta_fermat_oracle(a1: int, a2: int, a3: int, d: int, ctx: FieldCtx, m_max: int) -> FermatSyzygy:
    """Brute-force minimal syzygy degree: scan m upward and solve the full
    linear system in the curve ring until a kernel appears."""
    require_smooth(d, ctx)
    p = ctx.p
    gens = generator_powers(a1, a2, a3, d, p)
    for m in range(min(a1, a2, a3), m_max + 1):
        mat, cols = syzygy_system(a1, a2, a3, d, ctx, m, gens)
        if not cols:
            continue
        v = kernel_vector(mat, p) if mat.shape[0] else [1] + [0] * (len(cols) - 1)
        if v is None:
            continue
        comps = [CurveElem.zero(d, m - a, p) for a in (a1, a2, a3)]
        for (slot, mono), c in zip(cols, v):
            if c:
                comps[slot] = comps[slot] + CurveElem.monomial(*mono, d, p, c)
        return FermatSyzygy(m, SyzygyWitness(m, *comps, a1, a2, a3))
    return FermatSyzygy(None, None)


def twist_degree(m: int, d1: int, d2: int, d3: int, d: int) -> int:
    """Degree of Syz(f1, f2, f3)(m) on a plane curve of degree d."""
    return (2 * m - d1 - d2 - d3) * d


def numcrit_predicate(d: int, b: int) -> int | None:
    """Predicted destabilizing degree d(k + 1 + k/2) when b = dk + t with k
    even and 3t > 2d; otherwise None."""
    split = DegreeSplit(b, d)
    if split.k % 2 == 0 and 3 * split.t > 2 * d:
        return d * (split.k + 1 + split.k // 2)
    return None


def numcrittwo_predicate(d: int, q: int) -> bool:
    s = q % d
    return 2 * s < d < 3 * s


@dataclass
class LevelRecord:
    e: int
    q: int
    residue: int
    criterion: bool
    mode: str  # "direct" or "criterion-only"
    delta: int | None = None
    twist: int | None = None
    destabilized: bool | None = None
    witness: SyzygyWitness | None = None


@dataclass
class ScanVerdict:
    d: int
    p: int
    e_max: int
    cost_ceiling: int
    levels: list[LevelRecord] = field(default_factory=list)
    direct_e: int | None = None
    criterion_e: int | None = None

    @property
    def first_e(self) -> int | None:
        found = [e for e in (self.direct_e, self.criterion_e) if e is not None]
        return min(found) if found else None

    @property
    def status(self) -> str:
        return "destabilized" if self.first_e is not None else "undetermined"

    @property
    def criterion_only(self) -> bool:
        return self.first_e is not None and self.direct_e != self.first_e


def strong_semistability_scan(
    d: int, ctx: FieldCtx, e_max: int = 3, cost_ceiling: int = DEFAULT_COST_CEILING
) -> ScanVerdict:
    """Walk the Frobenius pull-backs Syz(X^2q, Y^2q, Z^2q), q = p^e.

    Each level gets the congruence test on q mod d and, while 2q stays under
    the cost ceiling, a direct minimal-degree computation; a syzygy of degree
    below 3q sits in a negative twist and destabilizes.
    """
    require_smooth(d, ctx)
    verdict = ScanVerdict(d, ctx.p, e_max, cost_ceiling)
    for e in range(e_max + 1):
        q = ctx.p**e
        residue = pow(ctx.p, e, d)
        crit = numcrittwo_predicate(d, residue)
        rec = LevelRecord(e, q, residue, crit, "criterion-only")
        if 2 * q <= cost_ceiling:
            res = delta_fermat(2 * q, 2 * q, 2 * q, d, ctx)
            rec.mode = "direct"
            rec.delta = res.degree
            rec.twist = twist_degree(res.degree, 2 * q, 2 * q, 2 * q, d)
            rec.destabilized = res.degree < 3 * q
            if rec.destabilized:
                rec.witness = res.witness
                if verdict.direct_e is None:
                    verdict.direct_e = e
        if crit and verdict.criterion_e is None:
            verdict.criterion_e = e
        verdict.levels.append(rec)
    return verdict


@dataclass
class RemainderOneMatrix:
    d: int
    ell: int
    p: int
    matrix: list[list[int]]
    det: int

    @property
    def q(self) -> int:
        return self.d * self.ell + 1


def remainder_one_matrix(d: int, ell: int, ctx: FieldCtx) -> RemainderOneMatrix:
    """Coefficient matrix for q = d*ell + 1: row i is X^(d(ell-i)) Y^(di) * P^(2 ell)
    reduced mod (X^2q, Y^2q), written in the monomials X^(d(2ell-j)) Y^(d(ell+j)).

    A zero determinant means a syzygy of degree 3*d*ell for X^2q, Y^2q, P^(2 ell).
    """
    require_smooth(d, ctx)
    if ell < 0:
        raise ValueError("ell must be nonnegative")
    p = ctx.p
    q = d * ell + 1
    ideal = MonomialIdeal2(2 * q, 2 * q)
    power = fermat_power(d, 2 * ell, ctx)
    col_of = {d * (2 * ell - j): j for j in range(ell + 1)}
    matrix = []
    for i in range(ell + 1):
        red = reduce_mod_ideal(HomogPoly.monomial(d * (ell - i), d * i, p) * power, ideal)
        row = [0] * (ell + 1)
        for x, _, c in red.terms():
            row[col_of[x]] = c
        matrix.append(row)
    det = det_mod_p(np.array(matrix, dtype=object), p)
    return RemainderOneMatrix(d, ell, p, matrix, det)


def remainder_one_levels(d: int, ctx: FieldCtx, e_max: int) -> list[RemainderOneMatrix]:
    """Determinant tests for every level e <= e_max with p^e = 1 mod d."""
    out = []
    for e in range(1, e_max + 1):
        q = ctx.p**e
        if q % d == 1:
            out.append(remainder_one_matrix(d, (q - 1) // d, ctx))
    return out
