"""Prime-field arithmetic and small number-theoretic helpers."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

MAX_MODULUS = 1 << 63

# Deterministic Miller-Rabin witness set, valid for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    s, m = 0, n - 1
    while m % 2 == 0:
        s += 1
        m //= 2
    for a in _MR_BASES:
        x = pow(a, m, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldCtx:
    """The coefficient field F_p."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not 2 <= self.p < MAX_MODULUS:
            raise ValueError(f"modulus out of supported range: {self.p!r}")
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    def __call__(self, a: int) -> int:
        return a % self.p


def mod_add(a: int, b: int, ctx: FieldCtx) -> int:
    return (a + b) % ctx.p


def mod_sub(a: int, b: int, ctx: FieldCtx) -> int:
    return (a - b) % ctx.p


def mod_mul(a: int, b: int, ctx: FieldCtx) -> int:
    return a * b % ctx.p


def mod_inv(a: int, ctx: FieldCtx) -> int:
    if a % ctx.p == 0:
        raise ZeroDivisionError(f"0 has no inverse mod {ctx.p}")
    return pow(a, -1, ctx.p)


def mod_pow(a: int, e: int, ctx: FieldCtx) -> int:
    if e < 0:
        raise ValueError("negative exponent")
    return pow(a, e, ctx.p)


def binom_mod_p(n: int, k: int, ctx: FieldCtx) -> int:
    """C(n, k) mod p via Lucas: product of digit-wise binomials in base p."""
    if k < 0 or n < 0 or k > n:
        return 0
    p = ctx.p
    result = 1
    while n or k:
        ni, ki = n % p, k % p
        if ki > ni:
            return 0
        result = result * _small_binom(ni, ki, p) % p
        n //= p
        k //= p
    return result


def _small_binom(n: int, k: int, p: int) -> int:
    # n < p, so every factor of k! is invertible
    k = min(k, n - k)
    num = den = 1
    for i in range(k):
        num = num * (n - i) % p
        den = den * (i + 1) % p
    return num * pow(den, -1, p) % p


def factorize(n: int) -> dict[int, int]:
    """Trial division; fine for the group orders met here (n <= ~10^12)."""
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    out: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def totient(n: int) -> int:
    result = n
    for q in factorize(n):
        result -= result // q
    return result


def carmichael(n: int) -> int:
    """Exponent of the unit group (Z/n)^x."""
    lam = 1
    for q, e in factorize(n).items():
        if q == 2 and e >= 3:
            part = 1 << (e - 2)
        else:
            part = (q - 1) * q ** (e - 1)
        lam = lam * part // gcd(lam, part)
    return lam


def element_order(r: int, d: int) -> int:
    """Multiplicative order of r modulo d, found by stripping prime factors
    off the group exponent."""
    if d < 2:
        raise ValueError("modulus must be >= 2")
    r %= d
    if gcd(r, d) != 1:
        raise ValueError(f"{r} is not a unit mod {d}")
    order = carmichael(d)
    for q in factorize(order):
        while order % q == 0 and pow(r, order // q, d) == 1:
            order //= q
    return order


def is_quadratic_residue(s: int, d: int) -> bool:
    """Euler's criterion; d an odd prime and s a unit."""
    if d < 3 or d % 2 == 0:
        raise ValueError("Euler's criterion needs an odd prime modulus")
    if s % d == 0:
        raise ValueError(f"{s} is not a unit mod {d}")
    return pow(s, (d - 1) // 2, d) == 1


def primes_up_to(n: int):
    """Sieve of Eratosthenes; returns a numpy array of primes <= n."""
    import numpy as np

    if n < 2:
        return np.zeros(0, dtype=np.int64)
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for i in range(2, int(n**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = False
    return np.flatnonzero(sieve)
