"""Exact Euler numbers and their convolution sums.

The Euler numbers E_0, E_1, E_2, ... are the integers fixed by E_0 = 1
together with, for every n >= 1,

    sum over even k with 0 <= k <= n of  C(n,k) * E_{n-k}  =  0.

All odd-index values are 0, the even-index values alternate in sign, and
E_{2n} = (-1)^n * (2n)! * [x^{2n}] sec x, which gives an independent route
to the same integers through formal power-series division.

This module keeps everything in exact arithmetic (Python ints, and
`fractions.Fraction` inside the secant-series oracle).  The table type
`EulerCache` is immutable after construction; every operation here is a
pure function, so concurrent readers need no coordination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .errors import CacheBoundError

__all__ = [
    "MAX_BUILD_INDEX",
    "EulerCache",
    "build_euler_cache",
    "secant_oracle",
    "binomial_convolution",
    "s_constant",
    "pair_convolution_exact",
    "triple_convolution_exact",
]

# The recurrence is quadratic in the index and the entries grow like (2n)!,
# so tables beyond this point stop being a desk-scale computation.  Requests
# above the cap fail fast instead of grinding.
MAX_BUILD_INDEX = 10_000


@dataclass(frozen=True, eq=False)
class EulerCache:
    """Immutable table of Euler numbers; ``values[n]`` holds E_n.

    ``eq=False`` keeps identity-based hashing, which lets the memoized
    convolution functions below key on the table object itself.
    """

    values: tuple[int, ...]
    max_index: int

    def __post_init__(self) -> None:
        if len(self.values) != self.max_index + 1:
            raise ValueError("values length must be max_index + 1")

    def entry(self, n: int) -> int:
        """E_n, or raise CacheBoundError when n is outside the table."""
        if not 0 <= n <= self.max_index:
            raise CacheBoundError(
                f"index {n} outside Euler table (max_index={self.max_index})"
            )
        return self.values[n]


def build_euler_cache(max_index: int) -> EulerCache:
    """Build E_0..E_max_index from the defining recurrence.

    Binomial coefficients come from an in-place Pascal-row update, one row
    per n, so the whole build is exact integer arithmetic with no factorial
    bookkeeping.  Odd-index entries come out 0 on their own.
    """
    if max_index < 0:
        raise ValueError("max_index must be >= 0")
    if max_index > MAX_BUILD_INDEX:
        raise ValueError(
            f"max_index {max_index} exceeds the supported cap {MAX_BUILD_INDEX}"
        )

    values = [0] * (max_index + 1)
    values[0] = 1
    row = [1]  # Pascal row: row[k] == C(n, k) for the current n
    for n in range(1, max_index + 1):
        row.append(1)
        for k in range(n - 1, 0, -1):
            row[k] += row[k - 1]
        # E_n = -sum_{k even, k >= 2} C(n,k) E_{n-k}   (the k=0 term is E_n)
        acc = 0
        for k in range(2, n + 1, 2):
            acc += row[k] * values[n - k]
        values[n] = -acc
    return EulerCache(values=tuple(values), max_index=max_index)


def secant_oracle(max_even_index: int) -> list[int]:
    """E_0, E_2, ..., E_{max_even_index} by inverting the cosine series.

    Computes sec x = 1 / cos x as a formal power series in x^2 over exact
    rationals, then reads off E_{2n} = (-1)^n (2n)! [x^{2n}] sec x.  This
    shares nothing with the recurrence in `build_euler_cache`, which is the
    point: the two routes cross-check each other.

    Raises ArithmeticError if a coefficient fails to clear to an integer
    (cannot happen for correct series arithmetic; the check is the oracle's
    own safety net against rounding-style bugs).
    """
    if max_even_index < 0:
        raise ValueError("max_even_index must be >= 0")
    if max_even_index % 2 != 0:
        raise ValueError("max_even_index must be even")
    if max_even_index > MAX_BUILD_INDEX:
        raise ValueError(
            f"max_even_index {max_even_index} exceeds the supported cap {MAX_BUILD_INDEX}"
        )

    terms = max_even_index // 2 + 1
    # cos x = sum_m cos_coeffs[m] * x^(2m)
    cos_coeffs = [Fraction((-1) ** m, factorial(2 * m)) for m in range(terms)]
    # Reciprocal series: sum_{i+j=m} sec_coeffs[i] * cos_coeffs[j] = [m == 0]
    sec_coeffs: list[Fraction] = [Fraction(1)]
    for m in range(1, terms):
        conv = sum(sec_coeffs[i] * cos_coeffs[m - i] for i in range(m))
        sec_coeffs.append(-conv)  # cos_coeffs[0] == 1

    out: list[int] = []
    for m, coeff in enumerate(sec_coeffs):
        value = (-1) ** m * factorial(2 * m) * coeff
        if value.denominator != 1:
            raise ArithmeticError(f"secant coefficient at x^{2 * m} is not integral")
        out.append(int(value))
    return out


def binomial_convolution(n: int, cache: EulerCache) -> int:
    """sum_{k=0}^{n} C(n,k) E_k E_{n-k}, exactly.

    Zero for every odd n: each term then carries an odd-index factor.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    cache.entry(n)
    if n % 2 == 1:
        return 0
    vals = cache.values
    return sum(comb(n, k) * vals[k] * vals[n - k] for k in range(0, n + 1, 2))


@lru_cache(maxsize=None)
def s_constant(n: int, cache: EulerCache) -> int:
    """s(n) = sum_{k=0}^{n} E_{2k} E_{2n-2k}, exactly.

    This is the even-index autocorrelation of the Euler sequence; it equals
    the full pairwise convolution at index 2n because odd terms vanish.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    cache.entry(2 * n)
    vals = cache.values
    return sum(vals[2 * k] * vals[2 * n - 2 * k] for k in range(n + 1))


@lru_cache(maxsize=None)
def pair_convolution_exact(n: int, cache: EulerCache) -> int:
    """sum_{k=0}^{n} E_k E_{n-k}, exactly (only even k can contribute)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    cache.entry(n)
    if n % 2 == 1:
        return 0
    vals = cache.values
    return sum(vals[k] * vals[n - k] for k in range(0, n + 1, 2))


@lru_cache(maxsize=None)
def triple_convolution_exact(n: int, cache: EulerCache) -> int:
    """sum over ordered triples (i, j, k) with i+j+k = n of E_i E_j E_k.

    Evaluated as the convolution of the Euler sequence with the pairwise
    sums, so filling all indices up to n costs O(n^2) multiplications
    overall (the pairwise layer is memoized).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    cache.entry(n)
    if n % 2 == 1:
        return 0
    vals = cache.values
    return sum(
        vals[m] * pair_convolution_exact(n - m, cache) for m in range(0, n + 1, 2)
    )
