"""Residues mod d with a power in the window M = {s : d/3 < s < d/2}, and the
resulting lower bounds on the density of bad primes."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt

import numpy as np

from .ffield import element_order, is_prime, is_quadratic_residue, primes_up_to, totient


def window_M(d: int) -> list[int]:
    if d < 1:
        raise ValueError("d must be positive")
    return [s for s in range(d // 3 + 1, (d + 1) // 2) if 2 * s < d < 3 * s]


def units(d: int) -> list[int]:
    return [r for r in range(1, d) if gcd(r, d) == 1]


def cyclic_subgroup(r: int, d: int) -> list[int]:
    out, x = [], 1
    while True:
        x = x * r % d
        out.append(x)
        if x == 1:
            return sorted(out)


@dataclass
class UnitGroupReport:
    d: int
    M: list[int]
    covered: list[int]
    phi_d: int

    @property
    def covered_count(self) -> int:
        return len(self.covered)

    @property
    def uncovered(self) -> list[int]:
        cov = set(self.covered)
        return [r for r in units(self.d) if r not in cov]

    @property
    def density_lower_bound(self) -> Fraction:
        return Fraction(self.covered_count, self.phi_d)


def covered_remainders(d: int) -> UnitGroupReport:
    """Units r mod d such that some power r^e lies in M, by walking each
    r through one full period."""
    if d < 2:
        raise ValueError("d must be >= 2")
    M = window_M(d)
    in_M = set(M)
    covered = []
    for r in units(d):
        x = r
        for _ in range(element_order(r, d)):
            if x in in_M:
                covered.append(r)
                break
            x = x * r % d
    return UnitGroupReport(d, M, covered, totient(d))


@dataclass
class SubgroupTally:
    order: int
    generator: int  # smallest generator
    elements_in_M: list[int]
    generators: int  # phi(order)


def subgroup_tallies(d: int) -> list[SubgroupTally]:
    """Distinct cyclic subgroups <r> meeting M, with their generator counts."""
    in_M = set(window_M(d))
    seen: set[tuple[int, ...]] = set()
    out = []
    for r in units(d):
        h = tuple(cyclic_subgroup(r, d))
        if h in seen:
            continue
        seen.add(h)
        hit = [s for s in h if s in in_M]
        if hit:
            out.append(SubgroupTally(len(h), r, hit, totient(len(h))))
    return out


def covered_count_via_subgroups(d: int) -> int:
    """Sum of phi(|H|) over cyclic subgroups H with H n M nonempty."""
    if d < 2:
        raise ValueError("d must be >= 2")
    return sum(t.generators for t in subgroup_tallies(d))


@dataclass(frozen=True)
class SophieGermainPair:
    h: int

    def __post_init__(self):
        if not (is_prime(self.h) and is_prime(2 * self.h + 1)):
            raise ValueError(f"{self.h} is not a Sophie Germain prime")

    @property
    def d(self) -> int:
        return 2 * self.h + 1


def sophie_germain_primes(limit: int) -> list[SophieGermainPair]:
    if limit < 2:
        return []
    sieve = np.zeros(2 * limit + 2, dtype=bool)
    sieve[primes_up_to(2 * limit + 1)] = True
    return [SophieGermainPair(int(h)) for h in range(2, limit + 1) if sieve[h] and sieve[2 * h + 1]]


@dataclass
class SquareInM:
    exists: bool
    witness: int | None
    construction: int | None = None  # n with n^2 in M, for d > 75
    construction_ok: bool | None = None


def square_in_M_exists(d: int) -> SquareInM:
    """Is some unit s in M a square mod d? For d > 75 the least integer n with
    n^2 > d/3 already has n^2 in M; that n^2 is preferred as witness."""
    M = window_M(d)
    squares = {x * x % d for x in range(1, d) if gcd(x, d) == 1}
    witness = next((s for s in M if s in squares), None)
    out = SquareInM(witness is not None, witness)
    if d > 75:
        n = isqrt(d // 3)
        while 3 * n * n <= d:
            n += 1
        out.construction = n
        out.construction_ok = 2 * n * n < d and gcd(n, d) == 1
        if out.construction_ok:
            out.witness = n * n
    return out


@dataclass
class GermainCheck:
    h: int
    d: int
    orders_ok: bool
    M_has_residue: bool
    M_has_nonresidue: bool
    covered_count: int
    covered_ok: bool
    density: Fraction
    density_ok: bool
    hypothesis_holds: bool  # h > 5
    primitive_in_M: list[int] = field(default_factory=list)
    residues_in_M: list[int] = field(default_factory=list)
    nonresidues_in_M: list[int] = field(default_factory=list)

    @property
    def mixed_window(self) -> bool:
        return self.M_has_residue and self.M_has_nonresidue


def germainfact_check(h: int) -> GermainCheck:
    pair = SophieGermainPair(h)
    if h < 5:
        raise ValueError("need h >= 5")
    d = pair.d
    M = window_M(d)
    orders = {r: element_order(r, d) for r in range(1, d)}
    report = covered_remainders(d)
    residues = [s for s in M if is_quadratic_residue(s, d)]
    nonresidues = [s for s in M if s not in residues]
    density = report.density_lower_bound
    return GermainCheck(
        h=h,
        d=d,
        orders_ok=set(orders.values()) <= {1, 2, h, 2 * h},
        M_has_residue=bool(residues),
        M_has_nonresidue=bool(nonresidues),
        covered_count=report.covered_count,
        covered_ok=report.covered_count == 2 * h - 2,
        density=density,
        density_ok=density == 1 - Fraction(1, h),
        hypothesis_holds=h > 5,
        primitive_in_M=[s for s in M if orders[s] == 2 * h],
        residues_in_M=residues,
        nonresidues_in_M=nonresidues,
    )


def exceptional_degrees(limit: int) -> list[int]:
    """Degrees d in [5, limit] with no s in M coprime to d."""
    if limit < 5:
        raise ValueError("limit must be >= 5")
    return [d for d in range(5, limit + 1) if not any(gcd(s, d) == 1 for s in window_M(d))]


@dataclass
class PrimeClassReport:
    d: int
    p_limit: int
    counts: dict[int, int]  # residue -> number of primes <= p_limit
    covered: list[int]
    total: int
    bound: Fraction

    @property
    def covered_primes(self) -> int:
        return sum(self.counts.get(r, 0) for r in self.covered)

    @property
    def empirical_fraction(self) -> float:
        return self.covered_primes / self.total if self.total else 0.0


def prime_class_report(d: int, p_limit: int) -> PrimeClassReport:
    if d < 2:
        raise ValueError("d must be >= 2")
    primes = primes_up_to(p_limit)
    hist = np.bincount(primes % d, minlength=d)
    counts = {r: int(c) for r, c in enumerate(hist) if c}
    report = covered_remainders(d)
    return PrimeClassReport(d, p_limit, counts, report.covered, int(primes.size), report.density_lower_bound)
