"""
Equality classes and the square-free bounds
===========================================

Grouping S(m,n) over all units m partitions them into exact-value classes.
Equal sums force (m1 - m2)(m1*m2 - 1) = 0 (mod n); the pairs m2 = m1 and
m2 = m1^-1 are the obvious equalities, everything else is non-obvious.
"""

from dedekind import (
    bounds_report,
    classify_pair,
    equality_classes,
    non_obvious_pairs,
    partner_stats,
    value_map,
)

# Mod 25 the class of 6 collects all four arguments 1 + 5m.
for cls in equality_classes(25):
    marker = " <- non-obvious pairs " + str(non_obvious_pairs(cls)) \
        if non_obvious_pairs(cls) else ""
    print(f"value {str(cls.value):>8}: members {cls.members}{marker}")

# Pair classification distinguishes the obvious from the non-obvious.
print("\n(41, 81) mod 200:", classify_pair(41, 81, 200).relation)
print("(41, 161) mod 200:", classify_pair(41, 161, 200).relation)

# For square-free n, each m1 has at most 2^r integer-difference partners
# and the units produce at least phi(n)/2^r distinct values.
report = bounds_report(1155)  # 3*5*7*11
print(f"\nn=1155: max partners {report.max_class_size} <= {report.bound_2r},",
      f"distinct values {report.distinct_values} >= {report.lower_bound}")

# Partner structure of small pivots mod 7*11*13*17 = 17017: clusters of
# equal sums inside a pivot's partner set can get close to the 2^r cap.
values = value_map(17017)
for m1 in range(2, 7):
    stats = partner_stats(m1, 17017, values)
    print(f"m1={m1}: {stats.partner_count} partners,",
          f"largest equal-value cluster {stats.equal_cluster}")
