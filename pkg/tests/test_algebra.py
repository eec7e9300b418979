import math

import pytest
from hypothesis import given, settings, strategies as st

from bhsets.algebra import (
    FieldDescriptor,
    coeffs_to_index,
    discrete_log,
    divisors,
    factorize,
    find_irreducible,
    find_primitive,
    format_poly,
    in_subfield,
    index_to_coeffs,
    is_irreducible,
    is_prime,
    is_primitive,
    iter_irreducibles,
    multiplicative_order,
    parse_poly,
    prime_field,
    prime_power,
    subfield_elements,
)
from bhsets.errors import BhError, DivisionByZero, NotIrreducible, TooLarge

from conftest import brute_irreducible


def test_is_prime_matches_sieve():
    sieve = [True] * 2000
    sieve[0] = sieve[1] = False
    for i in range(2, 45):
        for j in range(i * i, 2000, i):
            sieve[j] = False
    assert [n for n in range(2000) if is_prime(n)] == [n for n in range(2000) if sieve[n]]


def test_factorize_known():
    assert factorize(342).factors == ((2, 1), (3, 2), (19, 1))
    assert factorize(2400).factors == ((2, 5), (3, 1), (5, 2))
    assert math.prod(p**e for p, e in factorize(3120).factors) == 3120


def test_factorize_cap():
    with pytest.raises(TooLarge):
        factorize(2**64)


def test_divisors_and_prime_power():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert prime_power(49) == (7, 2)
    assert prime_power(2) == (2, 1)
    with pytest.raises(BhError):
        prime_power(12)


@pytest.mark.parametrize("p,n", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2), (7, 2)])
def test_irreducibility_against_trial_division(p, n):
    from bhsets.algebra import iter_monic

    for f in iter_monic(p, n):
        assert is_irreducible(f, p) == brute_irreducible(f, p), f


def test_irreducible_counts():
    # number of monic irreducible cubics over F_7 is (7^3 - 7) / 3
    assert sum(1 for _ in iter_irreducibles(7, 3)) == 112
    assert sum(1 for _ in iter_irreducibles(2, 4)) == 3


def test_find_irreducible_deterministic():
    assert find_irreducible(3, 2) == (1, 0, 1)
    assert find_irreducible(7, 3) == (2, 0, 0, 1)


def test_field_rejects_reducible():
    with pytest.raises(NotIrreducible):
        FieldDescriptor(3, 2, (2, 0, 1))  # x^2 - 1


def test_worked_arithmetic(F9):
    x = F9.gen
    assert x * x == F9((1, 2))
    assert x**4 == F9(2)
    assert (x + 1) * (x + 1).inverse() == F9.one
    with pytest.raises(DivisionByZero):
        F9.zero.inverse()


def test_index_round_trip():
    for i in range(125):
        c = index_to_coeffs(i, 5, 3)
        assert coeffs_to_index(c, 5) == i
    assert index_to_coeffs(1, 3, 2) == (1, 0)


def test_parse_and_format():
    assert parse_poly("-2x^2+2x-1", 7) == (6, 2, 5)
    assert parse_poly("x^3+x−1", 5) == (4, 1, 0, 1)
    assert parse_poly("6,2,5", 7) == (6, 2, 5)
    assert parse_poly(format_poly((6, 2, 5)), 7) == (6, 2, 5)


def test_primitive_and_order_by_powering(F9):
    for a in F9.elements():
        if a.is_zero:
            continue
        k, y = 1, a
        while y != F9.one:
            y, k = y * a, k + 1
        assert multiplicative_order(a) == k
        assert is_primitive(a) == (k == 8)
    assert find_primitive(F9) == F9.gen
    assert find_primitive(prime_field(11)).coeffs[0] == 2


def test_discrete_log_examples(F9):
    F11 = prime_field(11)
    assert discrete_log(F11(2), F11(9)) == 6
    x = F9.gen
    assert discrete_log(x, x + 1) == 7
    assert discrete_log(x, x + 2) == 6


@pytest.mark.parametrize("p,n", [(5, 2), (7, 2), (2, 5), (3, 3)])
def test_log_table_and_bsgs_agree_with_powering(p, n):
    F = FieldDescriptor(p, n)
    t = find_primitive(F)
    y = F.one
    for k in range(F.order - 1):
        assert discrete_log(t, y, method="table") == k
        assert discrete_log(t, y, method="bsgs") == k
        y = y * t


def test_subfield(F9):
    sub = subfield_elements(F9, 1)
    assert sorted(e.index for e in sub) == [0, 1, 2]
    assert all(in_subfield(e, 3) for e in sub)
    assert not in_subfield(F9.gen, 3)


def test_mixed_fields_rejected(F9):
    G = FieldDescriptor(3, 2, (1, 0, 1))
    with pytest.raises(BhError):
        F9.gen + G.gen


elems = st.tuples(st.integers(0, 2), st.integers(0, 2))


@settings(max_examples=200, deadline=None)
@given(elems, elems, elems)
def test_field_axioms(a, b, c):
    F = FieldDescriptor(3, 2, (2, 1, 1))
    a, b, c = F(a), F(b), F(c)
    assert a + b == b + a and a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == F.zero
    if not b.is_zero:
        assert (a / b) * b == a


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 5**3 - 1), st.integers(-20, 20))
def test_power_and_log_round_trip(i, k):
    F = FieldDescriptor(5, 3)
    t = find_primitive(F)
    a = F.from_index(i)
    e = discrete_log(t, a)
    assert t**e == a
    assert discrete_log(t, a, method="bsgs") == e
    assert (a**k) * (a ** (-k)) == F.one
