"""Executable claims about integer and fractional Korselt sets of semiprimes.

Every verifier REPORTS rather than aborts: a failed claim becomes a violation
row in a ScanReport, never an exception.  Scans are pure per-semiprime and may
run on a process pool; results are merged in ascending n, so output does not
depend on the number of workers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from math import gcd
from multiprocessing import Pool
from time import perf_counter

from .core import (
    Semiprime,
    is_base,
    iter_semiprimes,
    korselt_weights,
    q_korselt_set,
    semiprime,
    z_korselt_set,
)

__all__ = [
    "RangeError",
    "HypothesisNotMet",
    "GeneratorOutcome",
    "ClaimCheck",
    "StructureCheck",
    "ScanReport",
    "gen_from_coprime",
    "gen_from_floor_multiple",
    "gen_from_ceil_multiple",
    "gen_from_gap_base",
    "check_integer_links",
    "check_multiple_containment",
    "check_structure",
    "converse_counterexample",
    "scan_main",
    "scan_universal",
    "scan_structure",
    "scan_integer_links",
    "scan_containment",
    "scan_coprime_generator",
    "scan_floor_generator",
    "scan_ceil_generator",
    "scan_gap_generator",
    "scan_parity",
    "CLAIMS",
    "reproduce_table1",
    "reproduce_table2",
    "expected_table1",
    "expected_table2",
    "table_diff",
]


class RangeError(ValueError):
    """q/p falls outside the range a claim is stated for."""


class HypothesisNotMet(ValueError):
    """A claim's hypothesis fails, so the claim says nothing here."""


@dataclass(frozen=True)
class GeneratorOutcome:
    """Result of mapping one integer base to a candidate fractional base.

    generated is present only when all hypotheses hold; member records
    whether the generated value is a fractional base of n.  k1 is the
    integer witness (p-1)/s resp. (p-1)/(p-s) where applicable.
    """

    source: int
    hypotheses_met: bool
    failed_hypotheses: tuple[str, ...] = ()
    generated: Fraction | None = None
    member: bool | None = None
    k1: int | None = None


@dataclass(frozen=True)
class ClaimCheck:
    n: int
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class StructureCheck:
    n: int
    case: str
    covered: bool
    ok: bool
    detail: str = ""


@dataclass
class ScanReport:
    """Outcome of checking one claim over all semiprimes in a range."""

    claim: str
    p_max: int
    q_max: int
    checked: int
    violations: list[tuple[int, str]] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations


# ---------------------------------------------------------------------------
# generator maps: integer base -> fractional base
# ---------------------------------------------------------------------------


def _gen_coprime(sp: Semiprime, beta: int, zset: set[int]) -> GeneratorOutcome:
    p, q, n = sp.p, sp.q, sp.n
    m = p + q - beta
    failed = []
    if sp.i != 1:
        failed.append("q not below 2p")
    if beta == p + q - 1:
        failed.append("source is the universal base")
    if gcd(p, beta) != 1:
        failed.append("gcd(p, source) > 1")
    if gcd(n, m) != 1:
        failed.append("gcd(n, p+q-source) > 1")
    if beta not in zset:
        failed.append("source not an integer base")
    if failed:
        return GeneratorOutcome(beta, False, tuple(failed))
    generated = Fraction(n, m)
    member = generated.denominator >= 2 and is_base(sp, generated)
    return GeneratorOutcome(beta, True, (), generated, member)


def gen_from_coprime(sp: Semiprime, beta: int) -> GeneratorOutcome:
    """Map beta to n/(p+q-beta) when p < q < 2p and beta is coprime to n.

    Membership transfers in both directions; the reverse direction is
    covered by scan_coprime_generator, which walks the fractional set.
    """
    return _gen_coprime(sp, beta, set(z_korselt_set(sp)))


def _gen_floor(sp: Semiprime, zset: set[int]) -> GeneratorOutcome:
    p, q, i, s = sp.p, sp.q, sp.i, sp.s
    source = i * p
    if source not in zset:
        return GeneratorOutcome(source, False, ("floor multiple is not an integer base",))
    # membership of i*p forces s | p-1 (and i-1 | q-1)
    assert (p - 1) % s == 0, f"i*p in the integer set of {sp.n} but s = {s} does not divide p-1"
    k1 = (p - 1) // s
    generated = Fraction((k1 + 1) * q, i * k1 + 1)
    member = generated.denominator >= 2 and is_base(sp, generated)
    return GeneratorOutcome(source, True, (), generated, member, k1)


def gen_from_floor_multiple(sp: Semiprime) -> GeneratorOutcome:
    """From the base i*p derive (k1+1)q / (i*k1+1) with k1 = (p-1)/s.

    k1 = 1 (s = p-1) is recorded rather than excluded; the generated value
    is emitted and tested either way.
    """
    return _gen_floor(sp, set(z_korselt_set(sp)))


def _gen_ceil(sp: Semiprime, zset: set[int]) -> GeneratorOutcome:
    p, q, i, s = sp.p, sp.q, sp.i, sp.s
    source = (i + 1) * p
    failed = []
    if source not in zset:
        failed.append("ceil multiple is not an integer base")
    if s <= 1:
        failed.append("s = 1")
    if failed:
        return GeneratorOutcome(source, False, tuple(failed))
    # membership of (i+1)*p forces p-s | p-1 (and i | q-1)
    assert (p - 1) % (p - s) == 0, f"(i+1)p in the integer set of {sp.n} but p-s = {p - s} does not divide p-1"
    k1 = (p - 1) // (p - s)
    generated = Fraction((k1 - 1) * q, (i + 1) * k1 - 1)
    member = generated.denominator >= 2 and is_base(sp, generated)
    return GeneratorOutcome(source, True, (), generated, member, k1)


def gen_from_ceil_multiple(sp: Semiprime) -> GeneratorOutcome:
    """From the base (i+1)*p with s > 1 derive (k1-1)q / ((i+1)k1-1), k1 = (p-1)/(p-s)."""
    return _gen_ceil(sp, set(z_korselt_set(sp)))


def _gen_gap(sp: Semiprime, zset: set[int]) -> GeneratorOutcome:
    p, q, n = sp.p, sp.q, sp.n
    source = q - p + 1
    failed = []
    if not 2 * p < q < 4 * p:
        failed.append("q outside (2p, 4p)")
    if gcd(q + 1, p) != 1:
        failed.append("p divides q+1")
    if source not in zset:
        failed.append("gap base is not an integer base")
    if failed:
        return GeneratorOutcome(source, False, tuple(failed))
    generated = Fraction(n, 2 * p - 1)
    member = generated.denominator >= 2 and is_base(sp, generated)
    return GeneratorOutcome(source, True, (), generated, member)


def gen_from_gap_base(sp: Semiprime) -> GeneratorOutcome:
    """From the base q-p+1 (2p < q < 4p, p coprime to q+1) derive n/(2p-1).

    The coprimality hypothesis is load-bearing: without it, n = 95 has
    q-p+1 = 15 as an integer base while 95/9 is not a base at all.
    """
    return _gen_gap(sp, set(z_korselt_set(sp)))


# ---------------------------------------------------------------------------
# intra-integer-set claims
# ---------------------------------------------------------------------------


def check_integer_links(sp: Semiprime) -> ClaimCheck:
    """Membership links inside the integer set when 2p < q < 3p.

    (a) (2p+q-1)/2 is a base iff q-p+1 is;
    (b) if 3q-5p+3 is a base then so is q-p+1;
    (c) (2p+q-1)/2 is a base iff s+1 divides q-1.
    """
    p, q, s, n = sp.p, sp.q, sp.s, sp.n
    if not 2 * p < q < 3 * p:
        raise RangeError(f"need 2p < q < 3p, got p={p}, q={q}")
    zset = set(z_korselt_set(sp))
    half = (2 * p + q - 1) // 2  # q is odd here, so 2p+q-1 is even
    in_half = half in zset
    in_gap = (q - p + 1) in zset
    in_combo = (3 * q - 5 * p + 3) in zset
    divides = (q - 1) % (s + 1) == 0
    problems = []
    if in_half != in_gap:
        problems.append(f"(2p+q-1)/2 = {half} in set: {in_half}, q-p+1 = {q - p + 1} in set: {in_gap}")
    if in_combo and not in_gap:
        problems.append(f"3q-5p+3 = {3 * q - 5 * p + 3} in set but q-p+1 = {q - p + 1} is not")
    if in_half != divides:
        problems.append(f"(2p+q-1)/2 membership is {in_half} but s+1 | q-1 is {divides}")
    return ClaimCheck(n, not problems, "; ".join(problems))


def check_multiple_containment(sp: Semiprime) -> ClaimCheck:
    """If q > 2p and q-p+1 is not an integer base, the integer set lies in {ip, (i+1)p, p+q-1}."""
    p, q, i, n = sp.p, sp.q, sp.i, sp.n
    if q < 2 * p:
        raise HypothesisNotMet(f"need q > 2p, got p={p}, q={q}")
    zset = z_korselt_set(sp)
    if q - p + 1 in zset:
        raise HypothesisNotMet(f"q-p+1 = {q - p + 1} is an integer base of {n}")
    allowed = {i * p, (i + 1) * p, p + q - 1}
    extras = [b for b in zset if b not in allowed]
    detail = f"elements outside {sorted(allowed)}: {extras}" if extras else ""
    return ClaimCheck(n, not extras, detail)


def _contained(n: int, case: str, zset: list[int], allowed: set[int]) -> StructureCheck:
    extras = [b for b in zset if b not in allowed]
    detail = f"elements outside {sorted(allowed)}: {extras}" if extras else ""
    return StructureCheck(n, case, True, not extras, detail)


def _equals(n: int, case: str, zset: list[int], expected: set[int]) -> StructureCheck:
    ok = set(zset) == expected
    detail = "" if ok else f"integer set {zset} != {sorted(expected)}"
    return StructureCheck(n, case, True, ok, detail)


def check_structure(sp: Semiprime) -> StructureCheck:
    """Containment for the integer set, case-split on the size of q/p.

    The q = 4p-3 branch asserts set equality.  All cases use strict
    inequalities; a semiprime matching none of them (only possible for
    p < 5) is reported as uncovered, not checked.
    """
    p, q, n, i = sp.p, sp.q, sp.n, sp.i
    zset = z_korselt_set(sp)
    u = p + q - 1
    if p < q < 2 * p:
        bad = [b for b in zset if b != u and not (2 <= b <= 2 * p and b != p)]
        detail = f"elements outside {{{u}}} u [2, {2 * p}] minus {{{p}}}: {bad}" if bad else ""
        return StructureCheck(n, "p<q<2p", True, not bad, detail)
    if 2 * p < q < 3 * p:
        allowed = {2 * p, 3 * p, 3 * q - 5 * p + 3, q - p + 1, u}
        if (2 * p + q - 1) % 2 == 0:
            allowed.add((2 * p + q - 1) // 2)
        return _contained(n, "2p<q<3p", zset, allowed)
    if 3 * p < q < 4 * p:
        if q == 4 * p - 3:
            if p % 3 == 1:
                return _equals(n, "q=4p-3, p=1 mod 3", zset, {4 * p, q - p + 1, u})
            return _equals(n, "q=4p-3, p!=1 mod 3", zset, {q - p + 1, u})
        return _contained(n, "3p<q<4p, q!=4p-3", zset, {3 * p, 4 * p, u})
    if 4 * p < q < p * p - p:
        return _contained(n, "4p<q<p^2-p", zset, {i * p, (i + 1) * p, u})
    if p * p - p < q < 2 * p * p:
        if p >= 5:
            return _contained(n, "p^2-p<q<2p^2", zset, {i * p, u})
        return StructureCheck(n, "p^2-p<q<2p^2", False, True, "uncovered: stated only for p >= 5")
    if q > 2 * p * p:
        return _contained(n, "q>2p^2", zset, {u})
    return StructureCheck(n, "boundary", False, True, "uncovered: no strict-inequality case applies")


def converse_counterexample() -> bool:
    """Empty fractional part is not forced by integer part {p+q-1}: n = 6.

    Its integer set is exactly {4} = {p+q-1} while eight fractional bases
    exist, so the reverse of the empty-fractional claim fails.
    """
    ks = q_korselt_set(semiprime(2, 3))
    return ks.integer_part == (4,) and len(ks.fractional_part) == 8


# ---------------------------------------------------------------------------
# range scans (one entry per semiprime; entries are picklable for Pool)
# ---------------------------------------------------------------------------


def _sp(pq: tuple[int, int]) -> Semiprime:
    p, q = pq
    return Semiprime(p, q, p * q, q // p, q % p)


def _map_pairs(worker, p_max: int, q_max: int, jobs: int):
    pairs = [(s.p, s.q) for s in iter_semiprimes(p_max, q_max)]
    if jobs > 1 and len(pairs) >= 4:
        with Pool(processes=jobs) as pool:
            return pool.map(worker, pairs, chunksize=max(1, len(pairs) // (jobs * 8)))
    return [worker(pq) for pq in pairs]


def _scan(claim: str, p_max: int, q_max: int, jobs: int, entry) -> ScanReport:
    if p_max < 3 or q_max < 3:
        raise ValueError(f"scan bounds must be >= 3, got ({p_max}, {q_max})")
    start = perf_counter()
    entries = _map_pairs(entry, p_max, q_max, jobs)
    entries.sort(key=lambda e: e[0])
    checked = sum(1 for _, counted, _ in entries if counted)
    violations = [(n, "; ".join(problems)) for n, _, problems in entries if problems]
    return ScanReport(claim, p_max, q_max, checked, violations, perf_counter() - start)


def _entry_main(pq):
    sp = _sp(pq)
    ks = q_korselt_set(sp)
    problems = []
    if not ks.fractional_part:
        u = sp.p + sp.q - 1
        if ks.integer_part != (u,):
            problems.append(f"fractional part empty but integer part {list(ks.integer_part)} != [{u}]")
    return sp.n, True, problems


def _entry_universal(pq):
    sp = _sp(pq)
    u = sp.p + sp.q - 1
    problems = []
    if u not in z_korselt_set(sp):
        problems.append(f"p+q-1 = {u} missing from the integer set")
    return sp.n, True, problems


def _entry_structure(pq):
    sp = _sp(pq)
    res = check_structure(sp)
    if not res.covered:
        return sp.n, False, []
    return sp.n, True, ([] if res.ok else [f"case {res.case}: {res.detail}"])


def _entry_links(pq):
    sp = _sp(pq)
    if not 2 * sp.p < sp.q < 3 * sp.p:
        return sp.n, False, []
    res = check_integer_links(sp)
    return sp.n, True, ([] if res.ok else [res.detail])


def _entry_containment(pq):
    sp = _sp(pq)
    try:
        res = check_multiple_containment(sp)
    except HypothesisNotMet:
        return sp.n, False, []
    return sp.n, True, ([] if res.ok else [res.detail])


def _entry_coprime(pq):
    sp = _sp(pq)
    if sp.i != 1:
        return sp.n, False, []
    p, q, n = sp.p, sp.q, sp.n
    ks = q_korselt_set(sp)
    zset = set(ks.integer_part)
    problems = []
    for beta in sorted(zset):
        out = _gen_coprime(sp, beta, zset)
        if out.hypotheses_met and not out.member:
            problems.append(f"integer base {beta} generated {out.generated}, not a fractional base")
    # reverse direction: a fractional base n/m with m coprime to n forces
    # p+q-m into the integer set
    u = p + q - 1
    for frac in ks.fractional_part:
        a1, a2 = frac.numerator, frac.denominator
        if a1 == n:
            beta = p + q - a2
        elif a1 == -n:
            beta = p + q + a2
        else:
            continue
        if beta == u or gcd(p, beta) != 1:
            continue
        if beta not in zset:
            problems.append(f"fractional base {frac} has source {beta} outside the integer set")
    return sp.n, True, problems


def _entry_floor(pq):
    sp = _sp(pq)
    out = _gen_floor(sp, set(z_korselt_set(sp)))
    if not out.hypotheses_met:
        return sp.n, False, []
    problems = []
    if not out.member:
        problems.append(f"source {out.source} (k1={out.k1}) generated {out.generated}, not a fractional base")
    return sp.n, True, problems


def _entry_ceil(pq):
    sp = _sp(pq)
    out = _gen_ceil(sp, set(z_korselt_set(sp)))
    if not out.hypotheses_met:
        return sp.n, False, []
    problems = []
    if not out.member:
        problems.append(f"source {out.source} (k1={out.k1}) generated {out.generated}, not a fractional base")
    return sp.n, True, problems


def _entry_gap(pq):
    sp = _sp(pq)
    out = _gen_gap(sp, set(z_korselt_set(sp)))
    if not out.hypotheses_met:
        return sp.n, False, []
    problems = []
    if not out.member:
        problems.append(f"source {out.source} generated {out.generated}, not a fractional base")
    return sp.n, True, problems


def _entry_parity(pq):
    sp = _sp(pq)
    _, _, total = korselt_weights(q_korselt_set(sp))
    problems = []
    if total % 2 == 0:
        problems.append(f"total weight {total} is even")
    return sp.n, True, problems


def scan_main(p_max: int, q_max: int, jobs: int = 1) -> ScanReport:
    """Empty fractional part must force the integer set to be {p+q-1}."""
    return _scan("main", p_max, q_max, jobs, _entry_main)


def scan_universal(p_max: int, q_max: int, jobs: int = 1) -> ScanReport:
    """p+q-1 is an integer base of every semiprime."""
    return _scan("universal", p_max, q_max, jobs, _entry_universal)


def scan_structure(p_max: int, q_max: int, jobs: int = 1) -> ScanReport:
    """Structure containments (equality on q = 4p-3); boundary cases skipped."""
    return _scan("structure", p_max, q_max, jobs, _entry_structure)


def scan_integer_links(p_max: int, q_max: int, jobs: int = 1) -> ScanReport:
    """Intra-integer-set links for 2p < q < 3p."""
    return _scan("prop31", p_max, q_max, jobs, _entry_links)


def scan_containment(p_max: int, q_max: int, jobs: int = 1) -> ScanReport:
    """{ip, (i+1)p, p+q-1} containment when q > 2p and q-p+1 is not a base."""
    return _scan("cor32", p_max, q_max, jobs, _entry_containment)


def scan_coprime_generator(p_max: int, q_max: int, jobs: int = 1) -> ScanReport:
    """Both directions of the coprime-source generator on p < q < 2p."""
    return _scan("prop41", p_max, q_max, jobs, _entry_coprime)


def scan_floor_generator(p_max: int, q_max: int, jobs: int = 1) -> ScanReport:
    """Floor-multiple generator: source i*p, any k1."""
    return _scan("prop42", p_max, q_max, jobs, _entry_floor)


def scan_ceil_generator(p_max: int, q_max: int, jobs: int = 1) -> ScanReport:
    """Ceil-multiple generator: source (i+1)*p, s > 1."""
    return _scan("prop43", p_max, q_max, jobs, _entry_ceil)


def scan_gap_generator(p_max: int, q_max: int, jobs: int = 1) -> ScanReport:
    """Gap-base generator: source q-p+1 on 2p < q < 4p with gcd(q+1, p) = 1."""
    return _scan("prop44", p_max, q_max, jobs, _entry_gap)


def scan_parity(p_max: int, q_max: int, jobs: int = 1) -> ScanReport:
    """Record every semiprime whose total weight is even (informational)."""
    return _scan("parity", p_max, q_max, jobs, _entry_parity)


CLAIMS = {
    "main": scan_main,
    "structure": scan_structure,
    "prop31": scan_integer_links,
    "cor32": scan_containment,
    "prop41": scan_coprime_generator,
    "prop42": scan_floor_generator,
    "prop43": scan_ceil_generator,
    "prop44": scan_gap_generator,
    "parity": scan_parity,
}


# ---------------------------------------------------------------------------
# reference tables
# ---------------------------------------------------------------------------

TABLE1_Q_MAX = 53
TABLE2_Q_MAX = 997  # largest prime below 10^3


def _entry_table1(pq):
    sp = _sp(pq)
    ks = q_korselt_set(sp)
    if ks.fractional_part:
        return None
    return sp.n, list(ks.integer_part)


def _entry_table2(pq):
    sp = _sp(pq)
    ks = q_korselt_set(sp)
    z, qz, _ = korselt_weights(ks)
    return sp.n, z, qz, list(ks.integer_part)


def reproduce_table1(jobs: int = 1) -> list[tuple[int, list[int]]]:
    """All semiprimes with q <= 53 and empty fractional part, with integer sets."""
    rows = [r for r in _map_pairs(_entry_table1, TABLE1_Q_MAX, TABLE1_Q_MAX, jobs) if r is not None]
    rows.sort()
    return rows


def reproduce_table2(jobs: int = 1) -> list[tuple[int, int, list[int], int]]:
    """For each integer weight 1..7 over q < 10^3: the semiprime with the
    smallest fractional weight, ties broken by smallest n."""
    best: dict[int, tuple[int, int, list[int]]] = {}
    for n, z, qz, zset in _map_pairs(_entry_table2, TABLE2_Q_MAX, TABLE2_Q_MAX, jobs):
        if not 1 <= z <= 7:
            continue
        cur = best.get(z)
        if cur is None or (qz, n) < (cur[0], cur[1]):
            best[z] = (qz, n, zset)
    return [(i, best[i][1], best[i][2], best[i][0]) for i in sorted(best)]


def _load_rows(name: str):
    with resources.files("korselt").joinpath(f"data/{name}").open(encoding="utf-8") as fh:
        return json.load(fh)


def expected_table1() -> list[tuple[int, list[int]]]:
    """The embedded reference rows for the empty-fractional-part table."""
    return [(row["n"], row["z_set"]) for row in _load_rows("table1.json")]


def expected_table2() -> list[tuple[int, int, list[int], int]]:
    """The embedded reference rows for the minimal-fractional-weight table."""
    return [(row["i"], row["n"], row["z_set"], row["qz_weight"]) for row in _load_rows("table2.json")]


def table_diff(computed, expected) -> list[str]:
    """Human-readable row diff, keyed on each row's first field."""
    cmap = {row[0]: row for row in computed}
    emap = {row[0]: row for row in expected}
    lines = []
    for key in sorted(cmap.keys() | emap.keys()):
        got, want = cmap.get(key), emap.get(key)
        if got is None:
            lines.append(f"missing row {key}: expected {want}")
        elif want is None:
            lines.append(f"extra row {key}: computed {got}")
        elif list(got) != list(want):
            lines.append(f"row {key}: computed {got} != expected {want}")
    return lines
