"""Euler numbers mod p by three independent routes.

The three routes are deliberately redundant:

* exact reduction: reduce the exact integer table mod p;
* recurrence: run the defining recurrence in Z/p using factorial tables,
  valid for indices below p where C(n, k) mod p needs no Lucas step;
* character sum: E_k = 2 * sum over odd j in (0, p) of (-1)^((j-1)/2) j^k,
  plus (-1)^((p-1)/2) when k = 0, valid for every even k >= 0.

Agreement across routes is what the test suite leans on; the character sum
is also the only route that reaches indices beyond the exact table.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CacheBoundError
from .euler_exact import EulerCache
from .modular_arith import PrimeContext, Residue, chi_minus_one

__all__ = [
    "ModularEulerTable",
    "euler_mod_by_reduction",
    "euler_mod_by_recurrence",
    "euler_mod_by_charsum",
    "euler_mod_any",
]


@dataclass(frozen=True)
class ModularEulerTable:
    """Residues of E_0 .. E_limit for one prime, tagged with how they were made."""

    ctx: PrimeContext
    residues: tuple[int, ...]
    method: str

    def __post_init__(self) -> None:
        if self.method not in ("exact-reduction", "recurrence", "charsum"):
            raise ValueError(f"unknown method {self.method!r}")

    @property
    def limit(self) -> int:
        return len(self.residues) - 1

    def entry(self, n: int) -> Residue:
        if not 0 <= n <= self.limit:
            raise CacheBoundError(f"index {n} outside table limit {self.limit}")
        return Residue(self.residues[n], self.ctx.p)


def euler_mod_by_reduction(cache: EulerCache, ctx: PrimeContext, limit: int) -> ModularEulerTable:
    """Reduce the exact table mod p up to the given index."""
    if limit < 0:
        raise ValueError("limit must be >= 0")
    if limit > cache.max_index:
        raise CacheBoundError(f"limit {limit} exceeds cache max_index {cache.max_index}")
    p = ctx.p
    residues = tuple(cache.values[n] % p for n in range(limit + 1))
    return ModularEulerTable(ctx=ctx, residues=residues, method="exact-reduction")


def euler_mod_by_recurrence(ctx: PrimeContext, limit: int) -> ModularEulerTable:
    """Run the defining recurrence entirely in Z/p.

    Requires limit < p so every C(n, k) reduces through the factorial
    tables; past that point the recurrence would need Lucas' theorem and
    the character-sum route is cheaper anyway.
    """
    if limit < 0:
        raise ValueError("limit must be >= 0")
    if limit >= ctx.p:
        raise ValueError(f"limit {limit} must be below p = {ctx.p}")
    p = ctx.p
    residues = [0] * (limit + 1)
    residues[0] = 1
    for n in range(2, limit + 1, 2):
        acc = 0
        for k in range(2, n + 1, 2):
            acc += ctx.binomial(n, k) * residues[n - k]
        residues[n] = -acc % p
    return ModularEulerTable(ctx=ctx, residues=tuple(residues), method="recurrence")


def euler_mod_by_charsum(ctx: PrimeContext, k: int) -> Residue:
    """E_k mod p from the character sum; k must be even (odd E_k vanish)."""
    if k < 0 or k % 2 != 0:
        raise ValueError("k must be an even integer >= 0")
    p = ctx.p
    total = 0
    for j in range(1, p, 2):
        total += chi_minus_one(j) * pow(j, k, p)
    total *= 2
    if k == 0:
        total += ctx.chi_p
    return Residue(total % p, p)


def euler_mod_any(cache: EulerCache, ctx: PrimeContext, k: int) -> Residue:
    """E_k mod p for any k >= 0: table reduction when the index is cached,
    character sum beyond that. No periodicity shortcut is taken here, so
    this stays a fair independent check of the periodicity statements."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k % 2 == 1:
        return Residue(0, ctx.p)
    if k <= cache.max_index:
        return Residue(cache.values[k] % ctx.p, ctx.p)
    return euler_mod_by_charsum(ctx, k)
