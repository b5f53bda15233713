import pytest
from hypothesis import given, strategies as st

from cobwebs.errors import IndexOutOfRangeError, InvalidParameterError
from cobwebs.seq import FSequence, cumulative_sum, f_term, make_sequence


def fib_oracle(k):
    # closed-form-free: iterate the defining recurrence from F_1 = F_2 = 1
    if k == 0:
        return 0
    a, b = 1, 1
    for _ in range(k - 1):
        a, b = b, a + b
    return a


@pytest.mark.parametrize("spec,k,expected", [
    ("fibonacci", 5, 5),
    ("naturals", 7, 7),
    ("gaussian:2", 4, 15),
])
def test_f_term_examples(spec, k, expected):
    assert f_term(make_sequence(spec), k) == expected


def test_f_term_matches_recurrence_oracle():
    fib = FSequence.fibonacci()
    assert [fib.term(k) for k in range(40)] == [fib_oracle(k) for k in range(40)]
    assert fib.zero_term == 0


@pytest.mark.parametrize("spec,n,expected", [
    ("fibonacci", 5, 12),
    ("fibonacci", 0, 0),
    ("naturals", 0, 0),
    ("gaussian:3", 0, 0),
    ("naturals", 4, 10),
])
def test_cumulative_sum_examples(spec, n, expected):
    assert cumulative_sum(make_sequence(spec), n) == expected


def test_fibonacci_cumulative_sum_identity():
    fib = FSequence.fibonacci()
    for n in range(31):
        assert cumulative_sum(fib, n) == fib.term(n + 2) - 1


@pytest.mark.parametrize("q", [2, 3, 5])
def test_gaussian_terms(q):
    g = FSequence.gaussian(q)
    for k in range(31):
        assert g.term(k) * (q - 1) == q**k - 1


@pytest.mark.parametrize("spec", ["naturals", "fibonacci", "gaussian:2", "constant:3", "custom:1,4,2,9"])
def test_cumulative_sum_strictly_increasing(spec):
    seq = make_sequence(spec)
    top = seq.max_index or 25
    sums = [cumulative_sum(seq, n) for n in range(1, top + 1)]
    assert all(a < b for a, b in zip(sums, sums[1:]))


def test_make_sequence_parses_grammar():
    assert make_sequence("fibonacci") == FSequence.fibonacci()
    g = make_sequence("gaussian:3")
    assert g.kind == "gaussian" and g.param == 3
    assert make_sequence("constant:2").term(9) == 2
    c = make_sequence("custom:1,2,2")
    assert c.prefix(3) == (1, 2, 2)


@pytest.mark.parametrize("bad", [
    "custom:1,0,2", "custom:1,-2", "gaussian:1", "gaussian:0", "constant:0",
    "Fibonacci", "gaussian", "gaussian:x", "custom:", "naturals:3", "primes",
])
def test_make_sequence_rejects(bad):
    with pytest.raises(InvalidParameterError):
        make_sequence(bad)


def test_custom_out_of_range():
    c = make_sequence("custom:1,2,2")
    with pytest.raises(IndexOutOfRangeError):
        c.term(4)
    with pytest.raises(IndexOutOfRangeError):
        cumulative_sum(c, 5)


def test_descriptor_round_trip():
    for spec in ["naturals", "fibonacci", "gaussian:7", "constant:4", "custom:3,1,4"]:
        assert make_sequence(spec).descriptor == spec


@given(st.lists(st.integers(min_value=1, max_value=50), min_size=1, max_size=12))
def test_custom_sums(terms):
    seq = FSequence.custom(terms)
    assert cumulative_sum(seq, len(terms)) == sum(terms)
    assert seq.prefix(len(terms)) == tuple(terms)


def test_sequences_are_immutable_and_hashable():
    fib = FSequence.fibonacci()
    with pytest.raises(Exception):
        fib.kind = "naturals"
    assert len({fib, FSequence.fibonacci()}) == 1
