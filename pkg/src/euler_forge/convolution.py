"""Convolution sums mod p and CRT recovery of the triple-convolution constants.

The residue of a convolution at one prime is cheap; the integer constant
behind a family of such residues is recovered by accumulating primes into a
CRT state until the balanced representative stops moving. Stability is
declared after `stability` consecutive pushes that leave the balanced lift
unchanged, which is the usual poor-man's certificate that the modulus
product has outgrown the constant.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import StabilizationError
from .euler_exact import (
    EulerCache,
    pair_convolution_exact,
    triple_convolution_exact,
)
from .modular_arith import PrimeContext, Residue, sieve_primes

__all__ = [
    "pair_convolution_mod",
    "triple_convolution_mod",
    "delta",
    "CrtAccumulator",
    "crt_push",
    "TReconstruction",
    "reconstruct_t",
    "reconstruct_t_details",
]


def pair_convolution_mod(cache: EulerCache, ctx: PrimeContext, N: int) -> Residue:
    """sum_{k=0}^{N} E_k E_{N-k} mod p, reduced from the exact value."""
    return ctx.residue(pair_convolution_exact(N, cache))


def triple_convolution_mod(cache: EulerCache, ctx: PrimeContext, N: int) -> Residue:
    """sum over i+j+k = N of E_i E_j E_k mod p, reduced from the exact value."""
    return ctx.residue(triple_convolution_exact(N, cache))


def delta(p: int, n: int) -> int:
    """1 when n > 0 and (p - 1) divides 2n, else 0.

    This is the correction term that switches on exactly when the power sums
    behind the pairwise congruence hit the (p-1) | exponent resonance.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if p < 3:
        raise ValueError("p must be an odd prime >= 3")
    return 1 if n > 0 and (2 * n) % (p - 1) == 0 else 0


@dataclass(frozen=True)
class CrtAccumulator:
    """Running CRT state over pairwise-distinct odd primes.

    combined_residue is canonical mod modulus_product; last_balanced is the
    balanced lift after the most recent push (None while empty), and
    stable_count counts consecutive pushes that left it unchanged.
    """

    modulus_product: int = 1
    combined_residue: int = 0
    stable_count: int = 0
    last_balanced: int | None = None

    @property
    def balanced(self) -> int:
        if self.combined_residue <= self.modulus_product // 2:
            return self.combined_residue
        return self.combined_residue - self.modulus_product


def crt_push(acc: CrtAccumulator, p: int, r: Residue) -> CrtAccumulator:
    """Fold one fresh prime's residue into the accumulator.

    The prime must not divide the existing modulus product; combining uses
    the one-step Garner form x = a + M * ((r - a) / M mod p).
    """
    if r.modulus != p:
        raise ValueError(f"residue modulus {r.modulus} does not match p = {p}")
    if acc.modulus_product % p == 0:
        raise ValueError(f"prime {p} already pushed")
    m = acc.modulus_product
    lift = (r.value - acc.combined_residue) * pow(m, -1, p) % p
    combined = acc.combined_residue + m * lift
    product = m * p
    balanced = combined if combined <= product // 2 else combined - product
    if acc.last_balanced is not None and balanced == acc.last_balanced:
        stable = acc.stable_count + 1
    else:
        stable = 0
    return CrtAccumulator(
        modulus_product=product,
        combined_residue=combined,
        stable_count=stable,
        last_balanced=balanced,
    )


@dataclass(frozen=True)
class TReconstruction:
    """Outcome of one constant recovery: the value and the primes consumed."""

    n: int
    value: int
    primes: tuple[int, ...]


def reconstruct_t_details(n: int, cache: EulerCache, stability: int = 3) -> TReconstruction:
    """Recover the integer constant t(n) behind the triple convolution at
    index p - 1 + 2n, pushing primes p > 2n + 1 in ascending order until the
    balanced lift survives `stability` consecutive pushes unchanged.

    Raises StabilizationError when the cache runs out of usable primes
    first; a larger cache or smaller stability is the way out.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if stability < 1:
        raise ValueError("stability must be >= 1")
    usable = [p for p in sieve_primes(3, cache.max_index) if p > 2 * n + 1 and p - 1 + 2 * n <= cache.max_index]
    acc = CrtAccumulator()
    used: list[int] = []
    for p in usable:
        ctx = PrimeContext(p)
        acc = crt_push(acc, p, triple_convolution_mod(cache, ctx, p - 1 + 2 * n))
        used.append(p)
        if acc.stable_count >= stability:
            return TReconstruction(n=n, value=acc.last_balanced, primes=tuple(used))
    raise StabilizationError(
        f"t({n}) did not stabilize after {len(used)} primes (max_index {cache.max_index})"
    )


def reconstruct_t(n: int, cache: EulerCache, stability: int = 3) -> int:
    """The integer constant t(n); see reconstruct_t_details."""
    return reconstruct_t_details(n, cache, stability).value
