"""Exact rational Korselt sets of squarefree semiprimes, with claim verifiers."""

from .numtheory import (
    NotSquarefree,
    Rational,
    ZeroDenominator,
    divisors,
    factor_squarefree,
    factorize,
    format_rational,
    is_prime,
    make_rational,
    parse_rational,
    primes_upto,
    signed_divisors,
)
from .core import (
    ORACLE_LIMIT,
    KorseltSet,
    NotSemiprime,
    ScaleGuard,
    Semiprime,
    is_base,
    is_carmichael,
    is_korselt_base,
    iter_semiprimes,
    korselt_weights,
    q_korselt_set,
    q_korselt_set_oracle,
    semiprime,
    semiprime_from_n,
    z_korselt_set,
)
from .theorems import (
    CLAIMS,
    ClaimCheck,
    GeneratorOutcome,
    HypothesisNotMet,
    RangeError,
    ScanReport,
    StructureCheck,
    check_integer_links,
    check_multiple_containment,
    check_structure,
    converse_counterexample,
    expected_table1,
    expected_table2,
    gen_from_ceil_multiple,
    gen_from_coprime,
    gen_from_floor_multiple,
    gen_from_gap_base,
    reproduce_table1,
    reproduce_table2,
    scan_containment,
    scan_coprime_generator,
    scan_ceil_generator,
    scan_floor_generator,
    scan_gap_generator,
    scan_integer_links,
    scan_main,
    scan_parity,
    scan_structure,
    scan_universal,
    table_diff,
)

__version__ = "0.1.0"
