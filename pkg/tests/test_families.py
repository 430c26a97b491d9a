from math import gcd

import pytest

from dedekind.arith import Rational, is_square_free, mod_inverse
from dedekind.core import dedekind_fast, dedekind_oracle
from dedekind.equality import equality_classes
from dedekind.errors import (
    BadEps,
    DuplicatePrime,
    HypothesisViolated,
    IneligiblePrime,
    RangeViolated,
)
from dedekind.families import (
    TABLE1_TS,
    corollary1_family,
    corollary2_classify,
    corollary3_family,
    corollary4_family,
    decompose,
    shift_t,
    table1_sieve,
    theorem1_family,
    theorem2_value,
)


def test_theorem1_example():
    fam = theorem1_family(8, 5, 1)
    assert fam.modulus == 200
    assert fam.members == (41, 81, 121, 161)
    assert fam.predicted_value == Rational(501, 100)
    assert fam.verify()


def test_theorem1_single_member():
    fam = theorem1_family(3, 1, 1)
    assert fam.members == (1,)
    assert fam.predicted_value == Rational(2, 3) == dedekind_oracle(1, 3)


def test_theorem1_eps_negates():
    plus = theorem1_family(8, 5, 1)
    minus = theorem1_family(8, 5, -1)
    assert minus.predicted_value == -plus.predicted_value
    assert minus.members == tuple(sorted((-m) % 200 for m in plus.members))
    assert minus.verify()


def test_theorem1_verification_sweep():
    for d in range(1, 6):
        for n in range(1, 8):
            for eps in (1, -1):
                assert theorem1_family(d, n, eps).verify(), (d, n, eps)


def test_theorem1_rejects_bad_eps():
    with pytest.raises(BadEps):
        theorem1_family(8, 5, 2)
    with pytest.raises(ValueError):
        theorem1_family(0, 5, 1)


def test_corollary1_case_a():
    fam = corollary1_family(6, 4, 2, 4, 1)
    assert fam.modulus == 1296
    assert fam.members == tuple(1 + 144 * m for m in (1, 2, 4, 5, 7, 8))
    assert fam.predicted_value == Rational(2, 1296) + 13
    assert fam.verify()


def test_corollary1_case_b():
    fam = corollary1_family(12, 3, 1, 6, 1)
    assert fam.modulus == 1728
    assert fam.predicted_value == Rational(2, 1728)
    assert len(fam.members) == 8  # units of 24
    for m in (1, 5, 7, 11):
        assert 1 + 72 * m in fam.members
    assert fam.verify()


def test_corollary1_prime_specialization():
    # l prime forces q = 1, r = k: the family collapses to {eps mod p^k}.
    fam = corollary1_family(5, 3, 3, 1, 1)
    assert fam.members == (1,)
    assert fam.predicted_value == Rational(2, 125) + 125 - 3
    assert dedekind_fast(1, 125) == fam.predicted_value


def test_corollary1_hypothesis_errors():
    with pytest.raises(HypothesisViolated, match="r <= k"):
        corollary1_family(6, 2, 3, 1, 1)
    with pytest.raises(HypothesisViolated, match="must divide l"):
        corollary1_family(6, 4, 2, 5, 1)
    with pytest.raises(HypothesisViolated, match="must not divide"):
        corollary1_family(6, 4, 2, 12, 1)
    with pytest.raises(HypothesisViolated, match="2r < k"):
        corollary1_family(12, 4, 1, 6, 1)
    with pytest.raises(BadEps):
        corollary1_family(6, 4, 2, 4, 0)


def test_corollary2_examples():
    cls = corollary2_classify(5, 2, 1, 1)
    assert cls.members == (6, 11, 16, 21)
    assert cls.value == Rational(2, 25) - 2

    cls = corollary2_classify(3, 4, 2, 1)
    assert cls.members == (10, 19, 37, 46, 64, 73)
    assert cls.value == Rational(2, 81) - 2

    collapsed = corollary2_classify(7, 3, 3, 1)
    assert collapsed.members == (1,)
    assert collapsed.value == Rational(2, 343) + 343 - 3
    negative = corollary2_classify(7, 3, 3, -1)
    assert negative.members == (342,)


def test_corollary2_matches_brute_force():
    small_primes = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53)
    moduli = [(p, 1) for p in small_primes]
    for p in small_primes:
        k = 2
        while p**k <= 3000:
            moduli.append((p, k))
            k += 1
    for p, k in moduli:
        classes = equality_classes(p**k)
        for r in range((k + 1) // 2, k + 1):
            for eps in (1, -1):
                cls = corollary2_classify(p, k, r, eps)
                brute = next(
                    c for c in classes if cls.members[0] in c.members
                )
                assert cls == brute, (p, k, r, eps)


def test_corollary2_range_errors():
    with pytest.raises(RangeViolated):
        corollary2_classify(5, 4, 1, 1)
    with pytest.raises(RangeViolated):
        corollary2_classify(5, 2, 3, 1)
    with pytest.raises(ValueError, match="prime"):
        corollary2_classify(6, 2, 1, 1)


def test_corollary3():
    fam = corollary3_family(5, 1)
    assert fam.kind == "corollary3"
    assert fam.members == (6, 11, 16, 21)
    assert fam.predicted_value == Rational(2, 25) - 2
    assert fam.verify()
    with pytest.raises(ValueError, match="prime"):
        corollary3_family(9, 1)


def test_theorem2_value():
    assert theorem2_value(1, 1) == 0
    assert theorem2_value(70499, 7) == Rational(2, 493493) + Rational(7, 70499) - 3
    assert theorem2_value(3, 2) == Rational(2, 6) + Rational(2, 3) - 3 == -2


def test_decompose_examples():
    assert decompose(7) == (53, 1)
    assert decompose(2) == (2, 2)
    assert decompose(6) == (10, 2)
    assert decompose(11) == (5, 5)


def test_decompose_properties():
    # q square-free and q*k^2 = t^2 + 4.
    for t in range(1, 2001):
        q, k = decompose(t)
        assert q * k * k == t * t + 4
        assert is_square_free(q)


def test_decompose_q_never_three():
    # 3 is not a quadratic residue shape for t^2 + 4: t^2 + 4 = 3*k^2 has
    # no solutions, so the square-free part never lands on 3.
    for t in range(1, 10001):
        assert decompose(t)[0] != 3


def test_corollary4_single_prime_matches_brute_force():
    for t, p in ((7, 11), (1, 11), (2, 7), (3, 17), (5, 7), (6, 13), (10, 11)):
        fam = corollary4_family(t, [p])
        brute = sorted(m for m in range(p) if (m * m - t * m - 1) % p == 0)
        assert list(fam.solutions) == brute, (t, p)
    assert corollary4_family(7, [11]).solutions == (2, 5)
    assert corollary4_family(1, [11]).solutions == (4, 8)


def test_corollary4_reference_family():
    fam = corollary4_family(7, [11, 13, 17, 29])
    assert (fam.q, fam.k, fam.n, fam.nt) == (53, 1, 70499, 493493)
    assert len(fam.solutions) == 16
    assert 706 in fam.solutions
    assert fam.arguments[:5] == (4943, 58535, 79556, 94669, 148261)
    assert fam.predicted_value == theorem2_value(70499, 7)
    assert fam.nt_square_free
    assert fam.verify()


def test_corollary4_solution_invariants():
    fam = corollary4_family(7, [11, 13, 17, 29])
    n = fam.n
    for m in fam.solutions:
        # t = m - m^-1 (mod n), the shape the main identity needs
        assert (m - mod_inverse(m, n) - fam.t) % n == 0
    # arguments pairwise distinct mod n*t
    assert len(set(fam.arguments)) == 2 ** len(fam.primes)
    assert all(gcd(a, fam.nt) == 1 for a in fam.arguments)


def test_corollary4_non_squarefree_flag():
    fam = corollary4_family(4, [11])  # t = 4 is not square-free
    assert not fam.nt_square_free
    assert fam.verify()


def test_corollary4_empty_prime_list():
    fam = corollary4_family(7, [])
    assert fam.n == 1 and fam.solutions == (0,)
    assert fam.arguments == (1,)
    assert fam.predicted_value == dedekind_fast(1, 7)


def test_corollary4_prime_errors():
    with pytest.raises(IneligiblePrime, match="even"):
        corollary4_family(7, [2])
    with pytest.raises(IneligiblePrime, match="not prime"):
        corollary4_family(7, [15])
    with pytest.raises(IneligiblePrime, match="not a quadratic residue"):
        corollary4_family(7, [3])
    with pytest.raises(IneligiblePrime, match="divides k"):
        corollary4_family(11, [5])  # t=11: q=5, k=5
    with pytest.raises(DuplicatePrime):
        corollary4_family(7, [11, 11])


def test_shift_t_reference():
    fam = shift_t(corollary4_family(7, [11, 13, 17, 29]), 2)
    assert fam.t == 141005
    assert fam.n == 70499 and fam.nt == 70499 * 141005
    assert fam.solutions == corollary4_family(7, [11, 13, 17, 29]).solutions
    assert len(fam.arguments) == 16
    assert fam.predicted_value == theorem2_value(70499, 141005)
    assert fam.verify()


def test_shift_t_small():
    base = corollary4_family(7, [11])
    shifted = shift_t(base, 1)
    assert shifted.t == 18
    assert shifted.solutions == base.solutions
    assert not shifted.nt_square_free  # 11*18 = 2*9*11
    assert shifted.verify()
    with pytest.raises(ValueError):
        shift_t(base, 0)


def test_table1_rows():
    want = {
        1: (5, 1, [11, 19, 29, 31, 41, 59]),
        2: (2, 2, [7, 17, 23, 31, 41, 47]),
        3: (13, 1, [17, 23, 29, 43, 53, 61]),
        5: (29, 1, [7, 13, 23, 53, 59, 67]),
        6: (10, 2, [13, 31, 37, 41, 43, 53]),
        7: (53, 1, [11, 13, 17, 29, 37, 43]),
        10: (26, 2, [11, 17, 19, 23, 37, 59]),
    }
    assert TABLE1_TS == tuple(sorted(want))
    for t, (q, k, primes) in want.items():
        assert decompose(t) == (q, k)
        assert table1_sieve(t, 6) == primes


def test_table1_sieve_without_t_exclusion():
    # 3 divides t=3 but is otherwise eligible for q=13.
    assert table1_sieve(3, 3, exclude_divisors_of_t=False) == [3, 17, 23]
    assert table1_sieve(3, 2) == [17, 23]


def test_small_quadratic_families_verify():
    for t in TABLE1_TS:
        primes = table1_sieve(t, 2)
        fam = corollary4_family(t, primes)
        assert fam.verify(), (t, primes)
        assert len(fam.arguments) == 4


def test_corollary1_verification_sweep():
    # Every admissible (l, k, r, q) with modulus below 20000 verifies.
    checked = 0
    for l in range(2, 13):
        for k in range(1, 15):
            if l**k > 20000:
                break
            for r in range(1, k + 1):
                for q in range(1, l ** (k - r) + 1):
                    if l ** (k - r) % q or q % l == 0:
                        continue
                    if 2 * r < k and q * q % l ** (k - 2 * r):
                        continue
                    for eps in (1, -1):
                        fam = corollary1_family(l, k, r, q, eps)
                        assert fam.verify(), (l, k, r, q, eps)
                        checked += 1
    assert checked > 200
