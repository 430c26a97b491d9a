"""Exact integer and rational arithmetic primitives.

Rational values are fractions.Fraction (re-exported as Rational): always
stored reduced with a positive denominator, so equality of values is a
plain field comparison. All functions here are pure and safe to call
concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction as Rational

from .errors import ModuliNotCoprime, NotCoprime, NotOddPrime

__all__ = [
    "Rational",
    "ResidueSystem",
    "gcd",
    "ext_gcd",
    "mod_inverse",
    "crt",
    "is_prime",
    "legendre",
    "sqrt_mod_prime",
    "euler_phi",
    "factorize",
    "is_square_free",
]

gcd = math.gcd

# First twelve primes: deterministic Miller-Rabin witnesses below 2^64.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_LIMIT = 2**64


def is_prime(n: int) -> bool:
    """Deterministic primality test for 0 <= n < 2^64.

    Larger inputs are rejected rather than answered probabilistically.
    """
    if n >= _MR_LIMIT:
        raise ValueError(f"primality test is deterministic only below 2^64, got {n}")
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def mod_inverse(m: int, n: int) -> int:
    """Multiplicative inverse of m mod n, reduced into [0, n)."""
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    g = math.gcd(m, n)
    if g != 1:
        raise NotCoprime(f"gcd({m}, {n}) = {g}, no inverse mod {n}")
    return pow(m, -1, n)


def crt(parts: list[tuple[int, int]]) -> tuple[int, int]:
    """Combine (residue, modulus) pairs with pairwise coprime moduli.

    Returns the unique residue mod the product of the moduli that is
    congruent to every part.
    """
    x, mod = 0, 1
    for residue, modulus in parts:
        if modulus < 1:
            raise ValueError(f"modulus must be positive, got {modulus}")
        g = math.gcd(mod, modulus)
        if g != 1:
            raise ModuliNotCoprime(f"moduli share the factor {g}")
        x += mod * (((residue - x) * pow(mod, -1, modulus)) % modulus)
        mod *= modulus
    return x % mod, mod


def _require_odd_prime(p: int) -> None:
    if p == 2 or not is_prime(p):
        raise NotOddPrime(f"{p} is not an odd prime")


def legendre(q: int, p: int) -> int:
    """Legendre symbol (q/p) in {-1, 0, 1} for an odd prime p."""
    _require_odd_prime(p)
    r = pow(q % p, (p - 1) // 2, p)
    if r == 0:
        return 0
    return 1 if r == 1 else -1


def sqrt_mod_prime(a: int, p: int) -> tuple[int, ...] | None:
    """Square roots of a mod an odd prime p.

    Returns both roots (x, p-x) sorted when a is a nonzero residue, (0,)
    when p divides a, and None when a is a non-residue. Uses the direct
    exponent for p = 3 (mod 4) and Tonelli-Shanks otherwise, so the output
    is deterministic.
    """
    _require_odd_prime(p)
    a %= p
    if a == 0:
        return (0,)
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        x = pow(a, (p + 1) // 4, p)
    else:
        x = _tonelli_shanks(a, p)
    return tuple(sorted((x, p - x)))


def _tonelli_shanks(a: int, p: int) -> int:
    # p = 1 (mod 4), a a known nonzero residue; non-residue found by
    # ascending search from 2 for reproducibility.
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    c = pow(z, q, p)
    x = pow(a, (q + 1) // 2, p)
    t = pow(a, q, p)
    m = s
    while t != 1:
        i, sq = 0, t
        while sq != 1:
            sq = sq * sq % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        x = x * b % p
        c = b * b % p
        t = t * c % p
        m = i
    return x


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization as ascending (prime, exponent) pairs.

    Trial division; intended for n up to about 10^12.
    """
    if n < 1:
        raise ValueError(f"can only factor positive integers, got {n}")
    out = []
    for p in (2, 3):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
    d = 5
    while d * d <= n:
        for p in (d, d + 2):  # candidates 6k +- 1
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            if e:
                out.append((p, e))
        d += 6
    if n > 1:
        out.append((n, 1))
    return out


def euler_phi(n: int) -> int:
    """Count of m in [1, n] coprime to n."""
    out = n
    for p, _ in factorize(n):
        out -= out // p
    return out


def is_square_free(n: int) -> bool:
    """True when no prime square divides n."""
    return all(e == 1 for _, e in factorize(n))


@dataclass(frozen=True)
class ResidueSystem:
    """A residue canonically reduced into [0, modulus)."""

    modulus: int
    residue: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        object.__setattr__(self, "residue", self.residue % self.modulus)

    def inverse(self) -> "ResidueSystem":
        return ResidueSystem(self.modulus, mod_inverse(self.residue, self.modulus))

    def __int__(self) -> int:
        return self.residue
