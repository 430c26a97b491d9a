"""Which Dedekind sums S(m,n) coincide for a fixed modulus n.

The divisibility condition (m1 - m2)(m1*m2 - 1) = 0 (mod n) is necessary
for equality and is in fact equivalent to S(m1,n) - S(m2,n) being an
integer. Equality itself splits into the obvious cases (m2 = m1 or
m2 = m1* mod n) and the non-obvious rest. equality_classes partitions all
units mod n by exact value; bounds_report checks the square-free bounds
(at most 2^r integer-difference partners, at least phi(n)/2^r distinct
values).
"""

from __future__ import annotations

from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd

from .arith import Rational, euler_phi, factorize, mod_inverse
from .core import _require_unit, dedekind_fast
from .errors import NotSquareFree

__all__ = [
    "IDENTICAL",
    "OBVIOUS_INVERSE",
    "NON_OBVIOUS_EQUAL",
    "INTEGER_DIFFERENCE_ONLY",
    "UNEQUAL",
    "PairVerdict",
    "EqualityClass",
    "BoundsReport",
    "PivotStats",
    "units",
    "necessary_condition",
    "integer_difference",
    "classify_pair",
    "equality_classes",
    "classes_from_values",
    "value_map",
    "bounds_report",
    "partner_stats",
    "non_obvious_pairs",
]

IDENTICAL = "identical"
OBVIOUS_INVERSE = "obvious-inverse"
NON_OBVIOUS_EQUAL = "non-obvious-equal"
INTEGER_DIFFERENCE_ONLY = "integer-difference-only"
UNEQUAL = "unequal"


def units(n: int) -> list[int]:
    """Residues in [0, n) coprime to n, ascending."""
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    return [m for m in range(n) if gcd(m, n) == 1]


def necessary_condition(m1: int, m2: int, n: int) -> bool:
    """True iff n divides (m1 - m2)(m1*m2 - 1)."""
    _require_unit(m1, n)
    _require_unit(m2, n)
    return (m1 - m2) * (m1 * m2 - 1) % n == 0


def integer_difference(m1: int, m2: int, n: int) -> bool:
    """True iff S(m1,n) - S(m2,n) is an integer (exact check)."""
    diff = dedekind_fast(m1, n) - dedekind_fast(m2, n)
    return diff.denominator == 1


@dataclass(frozen=True)
class PairVerdict:
    m1: int
    m2: int
    modulus: int
    relation: str


def classify_pair(m1: int, m2: int, n: int) -> PairVerdict:
    """Classify the pair: identical, obvious-inverse, non-obvious-equal,
    integer-difference-only, or unequal."""
    _require_unit(m1, n)
    _require_unit(m2, n)
    a, b = m1 % n, m2 % n
    if a == b:
        relation = IDENTICAL
    elif a * b % n == 1 % n:
        relation = OBVIOUS_INVERSE
    else:
        diff = dedekind_fast(a, n) - dedekind_fast(b, n)
        if diff == 0:
            relation = NON_OBVIOUS_EQUAL
        elif diff.denominator == 1:
            relation = INTEGER_DIFFERENCE_ONLY
        else:
            relation = UNEQUAL
    return PairVerdict(a, b, n, relation)


@dataclass(frozen=True)
class EqualityClass:
    """All units sharing one exact value S(., modulus)."""

    modulus: int
    value: Rational
    members: tuple[int, ...]


def _eval_chunk(n: int, lo: int, hi: int) -> list[tuple[int, int, int]]:
    # Worker for the parallel sweep: (m, numerator, denominator) triples.
    out = []
    for m in range(lo, hi):
        if gcd(m, n) == 1:
            v = dedekind_fast(m, n)
            out.append((m, v.numerator, v.denominator))
    return out


def value_map(n: int, workers: int = 1) -> dict[int, Rational]:
    """S(m,n) for every unit m, as a dict keyed by m.

    With workers > 1 the range [0, n) is split into contiguous chunks
    evaluated in separate processes; chunk results are merged in range
    order, so the output does not depend on scheduling.
    """
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    if workers <= 1 or n < 2 * workers:
        triples = _eval_chunk(n, 0, n)
    else:
        step = -(-n // workers)
        bounds = [(n, lo, min(lo + step, n)) for lo in range(0, n, step)]
        triples = []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for chunk in pool.map(_eval_chunk, *zip(*bounds)):
                triples.extend(chunk)
    return {m: Rational(num, den) for m, num, den in triples}


def classes_from_values(n: int, values: dict[int, Rational]) -> list[EqualityClass]:
    """Group a precomputed value map into sorted equality classes."""
    groups: dict[Rational, list[int]] = defaultdict(list)
    for m, v in values.items():
        groups[v].append(m)
    classes = [
        EqualityClass(n, v, tuple(sorted(ms))) for v, ms in groups.items()
    ]
    classes.sort(key=lambda c: c.members[0])
    return classes


def equality_classes(n: int, workers: int = 1) -> list[EqualityClass]:
    """Partition the units mod n into exact-value classes.

    Classes are sorted by smallest member, members ascending; singleton
    classes are included.
    """
    return classes_from_values(n, value_map(n, workers))


def _fractional(v: Rational) -> Rational:
    return Rational(v.numerator % v.denominator, v.denominator)


@dataclass(frozen=True)
class BoundsReport:
    """Square-free bound check.

    max_class_size counts, for the worst pivot m1, the units m2 whose sums
    differ from S(m1,n) by an integer (classes merged by fractional part);
    it never exceeds bound_2r = 2^r. distinct_values never drops below
    lower_bound = phi(n)/2^r (a half-integer when n is even).
    """

    modulus: int
    max_class_size: int
    distinct_values: int
    bound_2r: int
    lower_bound: Rational


def bounds_report(
    n: int, workers: int = 1, values: dict[int, Rational] | None = None
) -> BoundsReport:
    """Compute and verify both square-free bounds for n."""
    factors = factorize(n)
    if any(e > 1 for _, e in factors):
        raise NotSquareFree(f"{n} is divisible by a prime square")
    vals = values if values is not None else value_map(n, workers)
    frac_sizes = Counter(_fractional(v) for v in vals.values())
    r = len(factors)
    report = BoundsReport(
        modulus=n,
        max_class_size=max(frac_sizes.values()),
        distinct_values=len(set(vals.values())),
        bound_2r=2**r,
        lower_bound=Rational(euler_phi(n), 2**r),
    )
    assert report.max_class_size <= report.bound_2r, report
    assert report.distinct_values >= report.lower_bound, report
    return report


@dataclass(frozen=True)
class PivotStats:
    """Partner structure of one pivot residue m1.

    partner_count: units m2 (m1 included) satisfying the divisibility
    condition, equivalently with S(m1,n) - S(m2,n) an integer.
    equal_cluster: the largest number of those partners sharing one exact
    value.
    """

    m1: int
    partner_count: int
    equal_cluster: int


def partner_stats(m1: int, n: int, values: dict[int, Rational] | None = None) -> PivotStats:
    """Count m1's condition partners and their largest equal-value cluster."""
    _require_unit(m1, n)
    m1 %= n
    if values is None:
        values = value_map(n)
    partners = [
        m2 for m2 in values if (m1 - m2) * (m1 * m2 - 1) % n == 0
    ]
    counts = Counter(values[m2] for m2 in partners)
    return PivotStats(m1, len(partners), max(counts.values()))


def non_obvious_pairs(cls: EqualityClass) -> list[tuple[int, int]]:
    """Non-obvious equal pairs of a class, one per inverse orbit.

    Members are grouped into orbits {m, m* mod n}; each orbit is
    represented by its smallest member and every pair of distinct orbit
    representatives is reported. Pairs inside an orbit are the obvious
    inverse equalities and are skipped.
    """
    n = cls.modulus
    seen = set()
    reps = []
    for m in cls.members:
        if m in seen:
            continue
        inv = mod_inverse(m, n)
        seen.add(m)
        if inv in cls.members:
            seen.add(inv)
        reps.append(min(m, inv) if inv in cls.members else m)
    reps = sorted(set(reps))
    return [(a, b) for i, a in enumerate(reps) for b in reps[i + 1 :]]
