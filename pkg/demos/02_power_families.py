"""
Power-case families of equal sums
=================================

For any d, n and sign eps, all arguments eps + d*n*m with m coprime to n
share the value eps*(2/(d*n^2) + d - 3) at modulus d*n^2. Specializing
the modulus to l^k and to prime powers gives complete equality classes.
"""

from dedekind import (
    Rational,
    corollary1_family,
    corollary2_classify,
    corollary3_family,
    dedekind_fast,
    equality_classes,
    theorem1_family,
)

# phi(5) = 4 arguments mod 200 with the same sum 501/100 = 5.01.
fam = theorem1_family(d=8, n=5, eps=1)
print("modulus", fam.modulus, "members", fam.members)
print("common value", fam.predicted_value, "verified:", fam.verify())

# Modulus 1296 = 6^4, arguments 1 + 144m for m coprime to 9.
fam = corollary1_family(l=6, k=4, r=2, q=4, eps=1)
print("\nmodulus", fam.modulus, "members", fam.members)
print("common value", fam.predicted_value, "verified:", fam.verify())

# For prime powers the family is the *entire* equality class.
cls = corollary2_classify(p=5, k=2, r=1, eps=1)
print("\nclass of 6 mod 25:", cls.members, "value", cls.value)
print("matches the brute-force partition:",
      cls in equality_classes(25))

# The prime-square case once more, as a family object.
print("\n", corollary3_family(5, 1))

# Below r = k/2 no such classification holds; mod 3^5 the arguments
# 1 + 9m (3 not dividing m) all share the fractional part 83/243 but
# only two coincidences occur among inverse-orbit representatives.
reps = (1, 2, 4, 10, 11, 13, 14, 16, 17)
print("\nS(1+9m, 243) - 83/243 for representatives m:")
for m in reps:
    z = dedekind_fast(1 + 9 * m, 243) - Rational(83, 243)
    print(f"  m={m:2d}: z = {z}")
