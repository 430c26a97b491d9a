"""
Square-free-case families from a quadratic congruence
=====================================================

Write t^2 + 4 = q*k^2 with q square-free. Any odd prime p not dividing k
with (q/p) = 1 gives two roots of m^2 - t*m - 1 = 0 (mod p); combining r
such primes yields n = p_1*...*p_r and 2^r arguments 1 + m*t mod n*t whose
sums all equal 2/(n*t) + t/n - 3.
"""

from dedekind import (
    corollary4_family,
    decompose,
    mod_inverse,
    shift_t,
    table1_sieve,
    theorem2_value,
)

# Eligible primes for small square-free t.
print(" t    q   k   first eligible primes")
for t in (1, 2, 3, 5, 6, 7, 10):
    q, k = decompose(t)
    print(f"{t:2d} {q:4d} {k:3d}   {table1_sieve(t, 6)}")

# t = 7 with four primes: 2^4 = 16 arguments mod 493493.
fam = corollary4_family(7, [11, 13, 17, 29])
print(f"\nt=7, primes {fam.primes}: n = {fam.n}, n*t = {fam.nt}")
print("roots of m^2 - 7m - 1 mod n:", fam.solutions)
print("arguments 1 + 7m:", fam.arguments[:5], "...")
print("inverses of the first five:",
      [mod_inverse(a, fam.nt) for a in fam.arguments[:5]])
print("common value:", fam.predicted_value,
      f"~ {float(fam.predicted_value):.10f}")
print("all 16 verified:", fam.verify())

# The same solution set works for t + l*n: here t1 = 7 + 2*70499.
shifted = shift_t(fam, 2)
print(f"\nshifted: t1 = {shifted.t}, value ~ {float(shifted.predicted_value):.10f}")
print("still 16 arguments, verified:", shifted.verify())
assert shifted.predicted_value == theorem2_value(fam.n, shifted.t)
