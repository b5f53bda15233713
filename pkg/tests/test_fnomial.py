from fractions import Fraction
from itertools import combinations, product
from math import comb, prod

import pytest
from hypothesis import given, settings, strategies as st

from cobwebs.errors import FormMismatchError, InadmissibleError, InvalidParameterError
from cobwebs.fnomial import (
    ccc_rowsum,
    f_derivative,
    f_factorial,
    f_falling,
    f_shift_power,
    fnomial,
    fnomial_recurrence,
    fnomial_table,
    is_admissible,
)
from cobwebs.polynomial import Polynomial
from cobwebs.seq import FSequence, make_sequence

FIB = FSequence.fibonacci()
NAT = FSequence.naturals()
G2 = FSequence.gaussian(2)


def three_factorial_oracle(seq, n, k):
    # n_F! / (k_F! (n-k)_F!) as an exact rational, no falling factorials
    def fact(m):
        return prod((seq.term(i) for i in range(1, m + 1)), start=1)
    return Fraction(fact(n), fact(k) * fact(n - k))


def gf2_subspace_counts(n):
    """Count subspaces of GF(2)^n by dimension, by closing every subset under XOR."""
    vectors = range(2**n)
    seen = set()
    for r in range(n + 1):
        for gens in combinations(range(1, 2**n), r):
            span = {0}
            for g in gens:
                span |= {v ^ g for v in span}
            seen.add(frozenset(span))
    counts = [0] * (n + 1)
    for s in seen:
        counts[len(s).bit_length() - 1] += 1
    assert sum(1 for _ in vectors) == 2**n
    return counts


def test_factorial_examples():
    assert f_factorial(FIB, 5) == 30
    assert f_factorial(NAT, 4) == 24
    for seq in (FIB, NAT, G2):
        assert f_factorial(seq, 0) == 1


def test_falling_examples():
    assert f_falling(FIB, 5, 2) == 15
    assert f_falling(NAT, 5, 3) == 60
    for seq in (FIB, NAT, G2):
        assert f_falling(seq, 6, 0) == 1
    with pytest.raises(InvalidParameterError):
        f_falling(FIB, 3, 4)


def test_fnomial_examples():
    assert fnomial(FIB, 5, 2) == 15
    assert fnomial(G2, 4, 2) == 35
    for seq in (FIB, NAT, G2):
        for n in range(8):
            assert fnomial(seq, n, 0) == 1
    assert fnomial(FIB, 3, 5) == 0
    assert fnomial(FIB, 3, -1) == 0


def test_fibonomial_rows():
    t = fnomial_table(FIB, 6)
    assert t.rows[5] == (1, 5, 15, 15, 5, 1)
    assert t[6, 2] == 40


@pytest.mark.parametrize("spec", ["fibonacci", "naturals", "gaussian:2", "gaussian:3", "constant:2"])
def test_fnomial_equals_three_factorial_oracle(spec):
    seq = make_sequence(spec)
    for n in range(16):
        for k in range(n + 1):
            assert fnomial(seq, n, k) == three_factorial_oracle(seq, n, k)


def test_naturals_are_pascal():
    for n in range(25):
        assert [fnomial(NAT, n, k) for k in range(n + 1)] == [comb(n, k) for k in range(n + 1)]
        assert ccc_rowsum(NAT, n) == 2**n


def test_constant_one_is_not_pascal():
    # all-ones weights collapse every F-nomial to 1, so row sums are n + 1
    one = FSequence.constant(1)
    assert [ccc_rowsum(one, n) for n in range(6)] == [1, 2, 3, 4, 5, 6]


def test_q2_binomials_count_subspaces():
    for n in range(5):
        counts = gf2_subspace_counts(n)
        assert [fnomial(G2, n, k) for k in range(n + 1)] == counts
        assert ccc_rowsum(G2, n) == sum(counts)
    assert [ccc_rowsum(G2, n) for n in range(5)] == [1, 2, 5, 16, 67]


def test_recurrence_examples():
    a = fnomial_recurrence(FIB, 6, "form-A")
    assert a[6, 2] == 1 * 15 + 5 * 5 == 40
    for form in ("form-A", "form-B"):
        t = fnomial_recurrence(FIB, 10, form)
        assert all(t[n, 0] == 1 for n in range(11))
    q = fnomial_recurrence(G2, 4, "q-form")
    assert q[4, 2] == 4 * 7 + 7 == 35


def test_recurrence_forms_match_factorial_formula():
    direct = fnomial_table(FIB, 30)
    assert fnomial_recurrence(FIB, 30, "form-A") == direct
    assert fnomial_recurrence(FIB, 30, "form-B") == direct
    for q in (2, 3):
        g = FSequence.gaussian(q)
        assert fnomial_recurrence(g, 25, "q-form") == fnomial_table(g, 25)


def test_recurrence_form_mismatch():
    with pytest.raises(FormMismatchError):
        fnomial_recurrence(NAT, 5, "form-A")
    with pytest.raises(FormMismatchError):
        fnomial_recurrence(FIB, 5, "q-form")
    with pytest.raises(FormMismatchError):
        fnomial_recurrence(FIB, 5, "form-C")


@pytest.mark.parametrize("q", [2, 3, 4])
def test_dual_q_recurrence(q):
    g = FSequence.gaussian(q)
    t = fnomial_table(g, 14)
    for n in range(1, 15):
        for k in range(1, n):
            assert t[n, k] == t[n - 1, k] + q ** (n - k) * t[n - 1, k - 1]


def test_ccc_rowsum_examples():
    assert ccc_rowsum(FIB, 5) == 42
    assert ccc_rowsum(G2, 4) == 67
    for seq in (FIB, NAT, G2):
        assert ccc_rowsum(seq, 0) == 1


def test_table_csv():
    assert fnomial_table(FIB, 2).to_csv() == "1\n1,1\n1,1,1\n"


def test_shift_power_examples():
    assert f_shift_power(FIB, 1, 2) == Polynomial([1, 1, 1])
    for seq in (FIB, G2):
        assert f_shift_power(seq, 0, 4) == Polynomial.monomial(4)
    assert f_shift_power(FIB, 1, 5)(1) == 42


@pytest.mark.parametrize("spec", ["fibonacci", "gaussian:2"])
def test_shift_power_at_one_is_ccc(spec):
    seq = make_sequence(spec)
    for n in range(21):
        assert f_shift_power(seq, 1, n)(1) == ccc_rowsum(seq, n)


def test_naturals_shift_power_is_binomial_theorem():
    for n in range(8):
        assert f_shift_power(NAT, 3, n) == prod([Polynomial([3, 1])] * n, start=Polynomial([1]))


def test_derivative_examples():
    assert f_derivative(FIB, Polynomial.monomial(5)) == Polynomial([0, 0, 0, 0, 5])
    assert f_derivative(G2, Polynomial.monomial(4)) == Polynomial([0, 0, 0, 15])
    assert f_derivative(FIB, Polynomial.constant(7)) == Polynomial()


@pytest.mark.parametrize("spec", ["fibonacci", "naturals", "gaussian:2", "gaussian:3"])
def test_derivative_lowers_shift_power(spec):
    # d_F (x +_F a)^n = n_F (x +_F a)^{n-1}
    seq = make_sequence(spec)
    for a in (1, -2, Fraction(1, 3)):
        for n in range(1, 10):
            lhs = f_derivative(seq, f_shift_power(seq, a, n))
            rhs = f_shift_power(seq, a, n - 1) * Polynomial.constant(seq.term(n))
            assert lhs == rhs


def test_admissibility():
    assert is_admissible(FIB, 20)
    assert is_admissible(NAT, 20)
    assert is_admissible(G2, 12)
    bad = is_admissible(FSequence.custom([2, 3, 4, 5]), 4)
    assert not bad.admissible
    assert bad.failure == (2, 1)
    # the pair (4,2) is also non-integral: 5*4 / (2*3)
    with pytest.raises(InadmissibleError) as info:
        fnomial(FSequence.custom([2, 3, 4, 5]), 4, 2)
    assert (info.value.n, info.value.k) == (4, 2)


def test_custom_lucas_not_admissible():
    lucas = FSequence.custom([1, 3, 4, 7, 11, 18])
    assert not is_admissible(lucas, 6).admissible


@settings(max_examples=60)
@given(st.integers(0, 40), st.integers(0, 40))
def test_fibonomial_symmetry_and_integrality(n, k):
    if k > n:
        n, k = k, n
    v = fnomial(FIB, n, k)
    assert v == fnomial(FIB, n, n - k)
    assert v == three_factorial_oracle(FIB, n, k)


@settings(max_examples=40)
@given(st.integers(1, 30), st.data())
def test_fibonacci_forms_agree_pointwise(n, data):
    k = data.draw(st.integers(1, n))
    F = FIB.term
    form_a = F(k - 1) * fnomial(FIB, n - 1, k) + F(n - k + 1) * fnomial(FIB, n - 1, k - 1)
    fm1 = 1 if n - k - 1 == -1 else F(n - k - 1)
    form_b = F(k + 1) * fnomial(FIB, n - 1, k) + fm1 * fnomial(FIB, n - 1, k - 1)
    assert form_a == form_b == fnomial(FIB, n, k)


def test_exhaustive_small_custom_admissibility_against_rational_oracle():
    for terms in product([1, 2, 3], repeat=4):
        seq = FSequence.custom(terms)
        want = all(three_factorial_oracle(seq, n, k).denominator == 1
                   for n in range(5) for k in range(n + 1))
        assert is_admissible(seq, 4).admissible == want
