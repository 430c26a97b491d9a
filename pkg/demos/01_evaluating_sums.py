"""
Evaluating Dedekind sums exactly
================================

Two independent evaluators compute the normalized sum S(m,n) = 12*s(m,n):
the definitional one sums n sawtooth products, the fast one descends with
the reciprocity law in O(log n) steps. Both return exact rationals.
"""

from dedekind import (
    Rational,
    dedekind_fast,
    dedekind_oracle,
    evaluate,
    sawtooth,
    three_term,
)

# The sawtooth function vanishes at integers and at half-integers.
print("((1/4)) =", sawtooth(Rational(1, 4)))
print("((1/2)) =", sawtooth(Rational(1, 2)))
print("((7/3)) =", sawtooth(Rational(7, 3)))

# Both evaluators agree exactly; the fast one also handles huge moduli.
print("\nS(41, 200) by summation:", dedekind_oracle(41, 200))
print("S(41, 200) by descent:  ", dedekind_fast(41, 200))
print("S(4943, 493493) =", dedekind_fast(4943, 493493))

# evaluate() wraps the result with its canonical argument and method tag.
print("\n", evaluate(241, 200))

# Reciprocity, the engine of the fast evaluator:
m, n = 31, 97
lhs = dedekind_fast(m, n) + dedekind_fast(n, m)
rhs = Rational(m * m + n * n + 1, m * n) - 3
print(f"\nS({m},{n}) + S({n},{m}) = {lhs} = (m^2+n^2+1)/(mn) - 3 = {rhs}")

# The three-term relation connects S(m,n), S(c,d) and a derived S(r,q).
rel = three_term(17, 60, 5, 18)
print(f"\nthree-term at (17,60),(5,18): q={rel.q}, r={rel.r}")
print("lhs =", rel.lhs, " rhs =", rel.rhs, " equal:", rel.lhs == rel.rhs)
