"""Exact and mod-p arithmetic for Euler numbers.

The package builds exact integer tables of Euler numbers, evaluates their
pairwise and triple convolution sums, checks the congruences those sums
satisfy at odd primes, and recovers the integer constants behind the triple
sums by Chinese-remainder accumulation across primes. Everything is plain
Python integers end to end; nothing here rounds.
"""

from __future__ import annotations

from .convolution import (
    CrtAccumulator,
    TReconstruction,
    crt_push,
    delta,
    pair_convolution_mod,
    reconstruct_t,
    reconstruct_t_details,
    triple_convolution_mod,
)
from .errors import CacheBoundError, StabilizationError
from .euler_exact import (
    EulerCache,
    binomial_convolution,
    build_euler_cache,
    pair_convolution_exact,
    s_constant,
    secant_oracle,
    triple_convolution_exact,
)
from .euler_mod import (
    ModularEulerTable,
    euler_mod_any,
    euler_mod_by_charsum,
    euler_mod_by_recurrence,
    euler_mod_by_reduction,
)
from .modular_arith import (
    PrimeContext,
    Residue,
    chi_minus_one,
    is_prime,
    mod_pow,
    odd_power_sum,
    power_sum,
    sieve_primes,
    wolstenholme_check,
)
from .verifier import (
    IDENTITY_TAGS,
    KNOWN_T_VALUES,
    CongruenceReport,
    build_t_table,
    run_suite,
    verify_1_1,
    verify_1_2,
    verify_1_8,
    verify_1_9,
    verify_cor_1_1,
    verify_example_1_1,
)

__version__ = "0.1.0"

__all__ = [
    "CacheBoundError",
    "StabilizationError",
    "EulerCache",
    "build_euler_cache",
    "secant_oracle",
    "binomial_convolution",
    "s_constant",
    "pair_convolution_exact",
    "triple_convolution_exact",
    "Residue",
    "PrimeContext",
    "is_prime",
    "sieve_primes",
    "chi_minus_one",
    "mod_pow",
    "power_sum",
    "odd_power_sum",
    "wolstenholme_check",
    "ModularEulerTable",
    "euler_mod_by_reduction",
    "euler_mod_by_recurrence",
    "euler_mod_by_charsum",
    "euler_mod_any",
    "pair_convolution_mod",
    "triple_convolution_mod",
    "delta",
    "CrtAccumulator",
    "crt_push",
    "TReconstruction",
    "reconstruct_t",
    "reconstruct_t_details",
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
    "__version__",
]
