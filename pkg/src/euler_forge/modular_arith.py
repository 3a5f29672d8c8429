"""Prime sieving and mod-p primitives.

Residues are stored canonically in [0, p); the balanced representative in
(-p/2, p/2] is a read-only view used when reporting signed constants.
`PrimeContext` carries the per-prime factorial tables and the quadratic
character value chi_p = (-1)^((p-1)/2); it is immutable after construction,
so contexts for distinct primes can be built and used fully in parallel.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "Residue",
    "PrimeContext",
    "is_prime",
    "sieve_primes",
    "chi_minus_one",
    "mod_pow",
    "power_sum",
    "odd_power_sum",
    "wolstenholme_check",
]


@dataclass(frozen=True)
class Residue:
    """An integer mod p in canonical form: 0 <= value < modulus."""

    value: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 2:
            raise ValueError("modulus must be >= 2")
        if not 0 <= self.value < self.modulus:
            raise ValueError(f"{self.value} not canonical mod {self.modulus}")

    @property
    def balanced(self) -> int:
        """The representative in (-modulus/2, modulus/2]."""
        if self.value <= self.modulus // 2:
            return self.value
        return self.value - self.modulus

    def __int__(self) -> int:
        return self.value


def is_prime(n: int) -> bool:
    """Trial division; adequate for the desk-scale primes used here."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def sieve_primes(lo: int, hi: int) -> list[int]:
    """All primes in [lo, hi], ascending, by a plain Eratosthenes sieve.

    An empty range (lo > hi) yields an empty list; lo below 2 is rejected.
    """
    if lo < 2:
        raise ValueError("lo must be >= 2")
    if hi < lo:
        return []
    mark = bytearray(b"\x01") * (hi + 1)
    mark[0:2] = b"\x00\x00"
    for i in range(2, int(hi**0.5) + 1):
        if mark[i]:
            mark[i * i :: i] = b"\x00" * len(mark[i * i :: i])
    return [n for n in range(lo, hi + 1) if mark[n]]


def chi_minus_one(j: int) -> int:
    """(-1)^((j-1)/2) for odd j >= 1, i.e. +1 for j = 1 mod 4, -1 for j = 3 mod 4."""
    if j < 1 or j % 2 == 0:
        raise ValueError("j must be a positive odd integer")
    return 1 if j % 4 == 1 else -1


def mod_pow(base: Residue, exponent: int) -> Residue:
    """base**exponent in the base's modulus (square-and-multiply via builtin pow).

    Exponent 0 yields 1 even for base 0; the 0^0 = 1 convention makes j^k
    with k = 0 count every j once in the character sums.
    """
    if exponent < 0:
        raise ValueError("exponent must be >= 0")
    return Residue(pow(base.value, exponent, base.modulus), base.modulus)


class PrimeContext:
    """Per-prime precomputation: k! mod p, inverse factorials, and chi_p.

    fact[k] * inv_fact[k] = 1 (mod p) for 0 <= k < p, and binomial
    coefficients C(n, k) with n < p reduce through the tables directly.
    """

    __slots__ = ("p", "fact", "inv_fact", "chi_p")

    def __init__(self, p: int) -> None:
        if p < 3 or p % 2 == 0 or not is_prime(p):
            raise ValueError(f"p must be an odd prime, got {p}")
        self.p = p
        fact = [1] * p
        for k in range(1, p):
            fact[k] = fact[k - 1] * k % p
        inv_fact = [1] * p
        inv_fact[p - 1] = pow(fact[p - 1], p - 2, p)
        for k in range(p - 1, 0, -1):
            inv_fact[k - 1] = inv_fact[k] * k % p
        self.fact = tuple(fact)
        self.inv_fact = tuple(inv_fact)
        self.chi_p = chi_minus_one(p)

    def residue(self, x: int) -> Residue:
        return Residue(x % self.p, self.p)

    def binomial(self, n: int, k: int) -> int:
        """C(n, k) mod p through the factorial tables; valid for 0 <= n < p."""
        if not 0 <= n < self.p:
            raise ValueError("binomial tables cover 0 <= n < p only")
        if k < 0 or k > n:
            return 0
        return self.fact[n] * self.inv_fact[k] % self.p * self.inv_fact[n - k] % self.p

    def __repr__(self) -> str:
        return f"PrimeContext(p={self.p})"


def power_sum(ctx: PrimeContext, e: int) -> Residue:
    """sum_{j=1}^{p-1} j^e mod p.

    Equals p-1 when (p-1) divides e (including e = 0) and 0 otherwise.
    """
    if e < 0:
        raise ValueError("e must be >= 0")
    p = ctx.p
    total = 0
    for j in range(1, p):
        total += pow(j, e, p)
    return Residue(total % p, p)


def odd_power_sum(ctx: PrimeContext, e: int) -> Residue:
    """sum over odd j in (0, p) of j^e mod p."""
    if e < 0:
        raise ValueError("e must be >= 0")
    p = ctx.p
    total = 0
    for j in range(1, p, 2):
        total += pow(j, e, p)
    return Residue(total % p, p)


def wolstenholme_check(ctx: PrimeContext) -> Residue:
    """sum_{k=1}^{p-1} k^{-2} mod p; 0 for every prime p >= 5.

    p = 3 is rejected outright: the congruence fails there and nothing in
    this package needs the p = 3 value.
    """
    p = ctx.p
    if p < 5:
        raise ValueError("wolstenholme_check requires p >= 5")
    total = 0
    for k in range(1, p):
        total += pow(k, p - 3, p)  # k^(p-3) = k^(-2) by Fermat
    return Residue(total % p, p)
