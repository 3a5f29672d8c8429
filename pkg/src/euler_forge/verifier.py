"""Congruence checks over prime ranges, reported as structured records.

Each check compares a convolution residue against its predicted closed form
at one prime (and, where applicable, one parameter n). Checks outside an
identity's applicability bound produce skip records carrying the bound as
text, never silent omissions. `run_suite` fans the checks out over a prime
range, optionally in parallel, and returns a deterministically sorted list.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Mapping

from .convolution import (
    delta,
    pair_convolution_mod,
    reconstruct_t,
    triple_convolution_mod,
)
from .errors import CacheBoundError
from .euler_exact import EulerCache, build_euler_cache, s_constant
from .euler_mod import euler_mod_any
from .modular_arith import PrimeContext, Residue, sieve_primes

__all__ = [
    "IDENTITY_TAGS",
    "KNOWN_T_VALUES",
    "CongruenceReport",
    "build_t_table",
    "verify_1_1",
    "verify_1_2",
    "verify_example_1_1",
    "verify_cor_1_1",
    "verify_1_8",
    "verify_1_9",
    "run_suite",
]

# Short keys are what callers select by; tags are what reports carry.
IDENTITY_TAGS = {
    "1.1": "T1.1-(1.1)",
    "1.2": "T1.1-(1.2)",
    "1.4": "Ex-(1.4)",
    "1.5": "Ex-(1.5)",
    "1.6": "Ex-(1.6)",
    "1.7": "C1.1-(1.7)",
    "1.8": "T1.2-(1.8)",
    "1.9": "T1.2-(1.9)",
}

# Published triple-convolution constants; indices past 3 are reconstructed.
KNOWN_T_VALUES = {0: 3, 1: -9, 2: 68, 3: -1068}


@dataclass(frozen=True)
class CongruenceReport:
    """One check at one prime: both sides as residues plus the verdict.

    Skip records carry no residues (lhs and rhs are None) and always carry
    a reason; graded records satisfy outcome = pass iff lhs = rhs.
    """

    identity: str
    p: int
    n: int | None
    lhs: Residue | None
    rhs: Residue | None
    outcome: str
    skip_reason: str | None = None

    def __post_init__(self) -> None:
        if self.identity not in IDENTITY_TAGS.values():
            raise ValueError(f"unknown identity tag {self.identity!r}")
        if self.outcome not in ("pass", "fail", "skip"):
            raise ValueError(f"unknown outcome {self.outcome!r}")
        if self.outcome == "skip":
            if self.lhs is not None or self.rhs is not None:
                raise ValueError("skip records carry no residues")
            if not self.skip_reason:
                raise ValueError("skip records need a reason")
        else:
            if self.lhs is None or self.rhs is None:
                raise ValueError("graded records need both residues")
            if self.skip_reason is not None:
                raise ValueError("graded records carry no skip reason")
            if (self.outcome == "pass") != (self.lhs == self.rhs):
                raise ValueError("outcome contradicts the residues")


def _graded(identity: str, p: int, n: int | None, lhs: Residue, rhs: Residue) -> CongruenceReport:
    outcome = "pass" if lhs == rhs else "fail"
    return CongruenceReport(identity=identity, p=p, n=n, lhs=lhs, rhs=rhs, outcome=outcome)


def _skipped(identity: str, p: int, n: int | None, reason: str) -> CongruenceReport:
    return CongruenceReport(
        identity=identity, p=p, n=n, lhs=None, rhs=None, outcome="skip", skip_reason=reason
    )


def verify_1_1(cache: EulerCache, ctx: PrimeContext) -> CongruenceReport:
    """Pairwise convolution at index p-3 against 2 chi_p E_{p-3}."""
    p = ctx.p
    lhs = pair_convolution_mod(cache, ctx, p - 3)
    rhs = ctx.residue(2 * ctx.chi_p * euler_mod_any(cache, ctx, p - 3).value)
    return _graded(IDENTITY_TAGS["1.1"], p, None, lhs, rhs)


def verify_1_2(cache: EulerCache, ctx: PrimeContext, n: int) -> CongruenceReport:
    """Pairwise convolution at index p-1+2n against s(n) + delta(p, n).

    Holds for every odd prime and every n >= 0, so there is no skip arm.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    p = ctx.p
    lhs = pair_convolution_mod(cache, ctx, p - 1 + 2 * n)
    rhs = ctx.residue(s_constant(n, cache) + delta(p, n))
    return _graded(IDENTITY_TAGS["1.2"], p, n, lhs, rhs)


# which -> (n in the p-1+2n index, fixed right side, largest inapplicable p)
_EXAMPLE_CASES = {
    "1.4": (0, 1, None),
    "1.5": (1, -2, 3),
    "1.6": (2, 11, 5),
}


def verify_example_1_1(cache: EulerCache, ctx: PrimeContext, which: str) -> CongruenceReport:
    """The three fixed-constant specializations of the pairwise congruence:
    the convolution at p-1 is 1 for every odd prime, at p+1 it is -2 once
    p > 3, and at p+3 it is 11 once p > 5."""
    if which not in _EXAMPLE_CASES:
        raise ValueError(f"which must be one of {sorted(_EXAMPLE_CASES)}, got {which!r}")
    n, constant, bound = _EXAMPLE_CASES[which]
    p = ctx.p
    if bound is not None and p <= bound:
        return _skipped(IDENTITY_TAGS[which], p, None, f"requires p>{bound}")
    lhs = pair_convolution_mod(cache, ctx, p - 1 + 2 * n)
    rhs = ctx.residue(constant)
    return _graded(IDENTITY_TAGS[which], p, None, lhs, rhs)


def verify_cor_1_1(cache: EulerCache, ctx: PrimeContext, q: int, r: int) -> CongruenceReport:
    """Periodicity of s mod p: s((p-1)/2 q + r) against s(r) + (q-1)[r=0].

    r ranges over [0, (p-3)/2]; the report's n column records the composite
    index (p-1)/2 q + r actually evaluated.
    """
    p = ctx.p
    if q < 1:
        raise ValueError("q must be >= 1")
    if not 0 <= r <= (p - 3) // 2:
        raise ValueError(f"r must lie in [0, {(p - 3) // 2}] for p = {p}")
    n = (p - 1) // 2 * q + r
    lhs = ctx.residue(s_constant(n, cache))
    rhs = ctx.residue(s_constant(r, cache) + (q - 1) * (1 if r == 0 else 0))
    return _graded(IDENTITY_TAGS["1.7"], p, n, lhs, rhs)


def verify_1_8(cache: EulerCache, ctx: PrimeContext) -> CongruenceReport:
    """Triple convolution at index p-3 against -2 E_{p-3}."""
    p = ctx.p
    lhs = triple_convolution_mod(cache, ctx, p - 3)
    rhs = ctx.residue(-2 * euler_mod_any(cache, ctx, p - 3).value)
    return _graded(IDENTITY_TAGS["1.8"], p, None, lhs, rhs)


def verify_1_9(
    cache: EulerCache, ctx: PrimeContext, n: int, t_table: Mapping[int, int]
) -> CongruenceReport:
    """Triple convolution at index p-1+2n against the constant t(n).

    The constant only governs primes beyond 2n+1; smaller primes are skips.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    p = ctx.p
    if p <= 2 * n + 1:
        return _skipped(IDENTITY_TAGS["1.9"], p, n, "requires p>2n+1")
    lhs = triple_convolution_mod(cache, ctx, p - 1 + 2 * n)
    rhs = ctx.residue(t_table[n])
    return _graded(IDENTITY_TAGS["1.9"], p, n, lhs, rhs)


def build_t_table(n_max: int, cache: EulerCache, stability: int = 3) -> dict[int, int]:
    """t(0..n_max) as plain integers: published values through n = 3,
    CRT reconstruction beyond."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    table: dict[int, int] = {}
    for n in range(n_max + 1):
        if n in KNOWN_T_VALUES:
            table[n] = KNOWN_T_VALUES[n]
        else:
            table[n] = reconstruct_t(n, cache, stability)
    return table


def _sort_key(report: CongruenceReport) -> tuple[str, int, int]:
    return (report.identity, report.p, report.n if report.n is not None else -1)


def run_suite(
    prime_lo: int,
    prime_hi: int,
    n_max: int,
    identities: set[str],
    *,
    q_max: int = 4,
    max_index: int = 600,
    stability: int = 3,
    threads: int | None = None,
    cache: EulerCache | None = None,
    t_table: Mapping[int, int] | None = None,
) -> list[CongruenceReport]:
    """Run the selected identities for every odd prime in [prime_lo, prime_hi].

    Identities are the short keys ("1.1" .. "1.9"); p = 2 never applies and
    is dropped from the range silently. Parameterized identities sweep
    n = 0..n_max; the periodicity check sweeps q = 1..q_max over its full
    r range, quietly capping combinations that would overrun the cache.
    Reports come back sorted by (identity, p, n), so the output is
    byte-stable no matter how many threads carried the work.
    """
    if prime_lo > prime_hi:
        raise ValueError("prime range is empty")
    if prime_lo < 2:
        raise ValueError("prime_lo must be >= 2")
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if q_max < 1:
        raise ValueError("q_max must be >= 1")
    unknown = set(identities) - set(IDENTITY_TAGS)
    if unknown:
        raise ValueError(f"unknown identities: {sorted(unknown)}")

    if cache is None:
        cache = build_euler_cache(max_index)
    if "1.9" in identities and t_table is None:
        t_table = build_t_table(n_max, cache, stability)

    primes = [p for p in sieve_primes(prime_lo, prime_hi) if p > 2]
    selected = sorted(identities)

    def for_prime(p: int) -> list[CongruenceReport]:
        ctx = PrimeContext(p)
        out: list[CongruenceReport] = []
        key = ""
        n: int | None = None
        try:
            for key in selected:
                if key == "1.1":
                    n = None
                    out.append(verify_1_1(cache, ctx))
                elif key == "1.2":
                    for n in range(n_max + 1):
                        out.append(verify_1_2(cache, ctx, n))
                elif key in _EXAMPLE_CASES:
                    n = None
                    out.append(verify_example_1_1(cache, ctx, key))
                elif key == "1.7":
                    for q in range(1, q_max + 1):
                        for r in range((p - 3) // 2 + 1):
                            n = (p - 1) // 2 * q + r
                            if 2 * n > cache.max_index:
                                continue
                            out.append(verify_cor_1_1(cache, ctx, q, r))
                elif key == "1.8":
                    n = None
                    out.append(verify_1_8(cache, ctx))
                else:
                    assert t_table is not None
                    for n in range(n_max + 1):
                        out.append(verify_1_9(cache, ctx, n, t_table))
        except CacheBoundError as exc:
            where = f"p={p}" if n is None else f"p={p}, n={n}"
            raise CacheBoundError(f"identity {key} at {where}: {exc}") from None
        return out

    if threads is not None and threads > 1 and len(primes) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(for_prime, primes))
    else:
        chunks = [for_prime(p) for p in primes]

    reports = [report for chunk in chunks for report in chunk]
    reports.sort(key=_sort_key)
    return reports
