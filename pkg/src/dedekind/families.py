"""Families of arguments whose Dedekind sums provably coincide.

Power case: for positive d, n and eps in {+1,-1},

    S(eps + d*n*m, d*n^2) = eps*(2/(d*n^2) + d - 3)    for all m coprime to n,

which specializes to moduli l^k (corollary1: arguments eps + l^r*q*m under
q | l^(k-r), l does not divide q, and 2r >= k or l^(k-2r) | q^2) and gives
a complete classification for prime powers p^k when k/2 <= r <= k
(corollary2: the equality class of eps + p^r*m is exactly
{eps + p^r*m' : p does not divide m'} with value eps*(2/p^k + p^(2r-k) - 3)).

Square-free case: whenever t = m - m* (mod n),

    S(1 + m*t, n*t) = 2/(n*t) + t/n - 3.

Writing t^2 + 4 = q*k^2 with q square-free, every odd prime p with p not
dividing k and (q/p) = 1 contributes two roots of m^2 - t*m - 1 = 0 (mod p),
namely (t +- sqrt(q)*k) / 2; combining r such primes by the Chinese
remainder theorem yields 2^r arguments 1 + m*t sharing the value above
(corollary4). Replacing t by t + l*n keeps the same solution set (shift_t).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd

from .arith import (
    Rational,
    crt,
    euler_phi,
    factorize,
    is_prime,
    is_square_free,
    legendre,
    mod_inverse,
    sqrt_mod_prime,
)
from .core import dedekind_fast
from .equality import EqualityClass
from .errors import (
    BadEps,
    DuplicatePrime,
    HypothesisViolated,
    IneligiblePrime,
    RangeViolated,
)

__all__ = [
    "PowerFamily",
    "QuadraticFamily",
    "TABLE1_TS",
    "theorem1_family",
    "corollary1_family",
    "corollary2_classify",
    "corollary3_family",
    "theorem2_value",
    "decompose",
    "corollary4_family",
    "shift_t",
    "table1_sieve",
]

# The t values of the reference prime table, small square-free t.
TABLE1_TS = (1, 2, 3, 5, 6, 7, 10)


def _require_eps(eps: int) -> None:
    if eps not in (1, -1):
        raise BadEps(f"eps must be +1 or -1, got {eps}")


def _require_positive(**kwargs: int) -> None:
    for name, value in kwargs.items():
        if value < 1:
            raise ValueError(f"{name} must be a positive integer, got {value}")


@dataclass(frozen=True)
class PowerFamily:
    """Arguments of the power-case identity, all sharing predicted_value."""

    kind: str  # "theorem1", "corollary1" or "corollary3"
    parameters: dict
    modulus: int
    predicted_value: Rational
    members: tuple[int, ...]

    def verify(self) -> bool:
        """Re-evaluate every member; True iff all match the prediction."""
        return all(
            dedekind_fast(m, self.modulus) == self.predicted_value
            for m in self.members
        )


def theorem1_family(d: int, n: int, eps: int) -> PowerFamily:
    """All arguments eps + d*n*m (m coprime to n) mod d*n^2.

    Member count is phi(n); the common value is eps*(2/(d*n^2) + d - 3).
    """
    _require_eps(eps)
    _require_positive(d=d, n=n)
    modulus = d * n * n
    members = sorted(
        (eps + d * n * m) % modulus for m in range(n) if gcd(m, n) == 1
    )
    assert len(set(members)) == euler_phi(n)
    assert all(gcd(m, modulus) == 1 for m in members)
    value = eps * (Rational(2, modulus) + d - 3)
    return PowerFamily(
        kind="theorem1",
        parameters={"d": d, "n": n, "eps": eps},
        modulus=modulus,
        predicted_value=value,
        members=tuple(members),
    )


def corollary1_family(l: int, k: int, r: int, q: int, eps: int) -> PowerFamily:
    """The power-case family at modulus l^k, arguments eps + l^r*q*m.

    Hypotheses: r <= k, q | l^(k-r), l does not divide q, and either
    2r >= k or l^(k-2r) | q^2 (which makes l^(2r-k)*q^2 an integer). The
    members run over m in [0, l^(k-r)/q) coprime to l^(k-r)/q.
    """
    _require_eps(eps)
    _require_positive(l=l, k=k, r=r, q=q)
    if r > k:
        raise HypothesisViolated(f"r <= k required, got r={r}, k={k}")
    if l ** (k - r) % q != 0:
        raise HypothesisViolated(f"q={q} must divide l^(k-r)={l**(k-r)}")
    if q % l == 0:
        raise HypothesisViolated(f"l={l} must not divide q={q}")
    if 2 * r < k and q * q % l ** (k - 2 * r) != 0:
        raise HypothesisViolated(
            f"with 2r < k, l^(k-2r)={l**(k-2*r)} must divide q^2={q*q}"
        )
    modulus = l**k
    scale = Rational(l ** (2 * r) * q * q, l**k)
    assert scale.denominator == 1  # guaranteed by the case (b) hypothesis
    cofactor = l ** (k - r) // q
    members = sorted(
        (eps + l**r * q * m) % modulus
        for m in range(cofactor)
        if gcd(m, cofactor) == 1
    )
    assert len(set(members)) == euler_phi(cofactor)
    assert all(gcd(m, modulus) == 1 for m in members)
    value = eps * (Rational(2, modulus) + scale - 3)
    return PowerFamily(
        kind="corollary1",
        parameters={"l": l, "k": k, "r": r, "q": q, "eps": eps},
        modulus=modulus,
        predicted_value=value,
        members=tuple(members),
    )


def corollary2_classify(p: int, k: int, r: int, eps: int) -> EqualityClass:
    """The full equality class of eps + p^r*m (p prime, k/2 <= r <= k).

    Returns {eps + p^r*m' mod p^k : p does not divide m'} with the common
    value eps*(2/p^k + p^(2r-k) - 3); for r = k the set collapses to the
    single residue eps mod p^k.
    """
    _require_eps(eps)
    _require_positive(k=k, r=r)
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if 2 * r < k or r > k:
        raise RangeViolated(f"k/2 <= r <= k required, got r={r}, k={k}")
    modulus = p**k
    if r == k:
        members: tuple[int, ...] = (eps % modulus,)
    else:
        members = tuple(
            sorted(
                (eps + p**r * m) % modulus
                for m in range(p ** (k - r))
                if m % p
            )
        )
    value = eps * (Rational(2, modulus) + p ** (2 * r - k) - 3)
    return EqualityClass(modulus=modulus, value=value, members=members)


def corollary3_family(p: int, eps: int) -> PowerFamily:
    """The prime-square family S(eps + p*m, p^2) = eps*(2/p^2 - 2)."""
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    base = theorem1_family(1, p, eps)
    return PowerFamily(
        kind="corollary3",
        parameters={"p": p, "eps": eps},
        modulus=base.modulus,
        predicted_value=base.predicted_value,
        members=base.members,
    )


def theorem2_value(n: int, t: int) -> Rational:
    """The square-free case value 2/(n*t) + t/n - 3."""
    _require_positive(n=n, t=t)
    return Rational(2, n * t) + Rational(t, n) - 3


def decompose(t: int) -> tuple[int, int]:
    """Split t^2 + 4 = q*k^2 with q square-free; returns (q, k)."""
    _require_positive(t=t)
    q = k = 1
    for p, e in factorize(t * t + 4):
        if e % 2:
            q *= p
        k *= p ** (e // 2)
    return q, k


@dataclass(frozen=True)
class QuadraticFamily:
    """2^r arguments 1 + m*t mod n*t sharing theorem2_value(n, t).

    solutions are the roots of m^2 - t*m - 1 = 0 (mod n), n the product of
    the eligible primes. nt_square_free flags whether n*t is square-free
    (non-obvious equality for square-free moduli needs t square-free and
    coprime to n; the construction permits the general case).
    """

    t: int
    q: int
    k: int
    primes: tuple[int, ...]
    n: int
    nt: int
    solutions: tuple[int, ...]
    arguments: tuple[int, ...]
    predicted_value: Rational
    nt_square_free: bool

    def verify(self) -> bool:
        """Re-evaluate every argument; True iff all match the prediction."""
        return all(
            dedekind_fast(a, self.nt) == self.predicted_value
            for a in self.arguments
        )


def corollary4_family(t: int, primes: list[int]) -> QuadraticFamily:
    """Construct the square-free-case family for t and the given primes.

    Each prime must be odd, not divide k (from t^2 + 4 = q*k^2) and have
    (q/p) = 1. Roots mod p are (t +- sqrt(q)*k)*inv(2); all 2^r sign
    choices are combined by the Chinese remainder theorem and every
    solution is verified by substitution.
    """
    _require_positive(t=t)
    if len(set(primes)) != len(primes):
        raise DuplicatePrime(f"primes must be distinct, got {list(primes)}")
    q, k = decompose(t)
    ordered = tuple(sorted(primes))
    roots = []
    for p in ordered:
        if p == 2:
            raise IneligiblePrime("2 is even; primes must be odd")
        if not is_prime(p):
            raise IneligiblePrime(f"{p} is not prime")
        if k % p == 0:
            raise IneligiblePrime(f"{p} divides k={k}")
        if legendre(q, p) != 1:
            raise IneligiblePrime(f"q={q} is not a quadratic residue mod {p}")
        sqrt_q = sqrt_mod_prime(q, p)[0]
        inv2 = mod_inverse(2, p)
        r1 = (t + sqrt_q * k) * inv2 % p
        r2 = (t - sqrt_q * k) * inv2 % p
        if r1 == r2:  # impossible for (q/p) = 1 with p odd
            raise AssertionError(f"coincident roots mod {p}")
        roots.append((r1, r2))
    solutions = sorted(
        crt(list(zip(combo, ordered)))[0] for combo in product(*roots)
    )
    n = 1
    for p in ordered:
        n *= p
    assert len(set(solutions)) == 2 ** len(ordered)
    for m in solutions:
        assert (m * m - t * m - 1) % n == 0 and gcd(m, n) == 1
    return QuadraticFamily(
        t=t,
        q=q,
        k=k,
        primes=ordered,
        n=n,
        nt=n * t,
        solutions=tuple(solutions),
        arguments=tuple(sorted((1 + m * t) % (n * t) for m in solutions)),
        predicted_value=theorem2_value(n, t),
        nt_square_free=is_square_free(n * t),
    )


def shift_t(family: QuadraticFamily, l: int) -> QuadraticFamily:
    """Replace t by t1 = t + l*n, keeping the same solution set mod n.

    t1 = m - m* (mod n) still holds for every solution, so the family
    identity carries over with the recomputed value and arguments.
    """
    _require_positive(l=l)
    t1 = family.t + l * family.n
    q1, k1 = decompose(t1)
    n = family.n
    for m in family.solutions:
        assert (m * m - t1 * m - 1) % n == 0
    return QuadraticFamily(
        t=t1,
        q=q1,
        k=k1,
        primes=family.primes,
        n=n,
        nt=n * t1,
        solutions=family.solutions,
        arguments=tuple(sorted((1 + m * t1) % (n * t1) for m in family.solutions)),
        predicted_value=theorem2_value(n, t1),
        nt_square_free=is_square_free(n * t1),
    )


def table1_sieve(t: int, count: int, exclude_divisors_of_t: bool = True) -> list[int]:
    """First `count` odd primes eligible for corollary4_family at this t.

    Eligible: p does not divide k and (q/p) = 1; with the flag set, primes
    dividing t are omitted (keeps n*t square-free for square-free t).
    """
    _require_positive(t=t, count=count)
    q, k = decompose(t)
    out = []
    p = 3
    while len(out) < count:
        if (
            is_prime(p)
            and k % p != 0
            and (not exclude_divisors_of_t or t % p != 0)
            and legendre(q, p) == 1
        ):
            out.append(p)
        p += 2
    return out
