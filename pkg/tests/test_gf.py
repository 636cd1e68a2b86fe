# tests/test_gf.py
# Unit tests for finite-field arithmetic

import itertools

import pytest

from qinvar import FieldError, add, field_new, inv, mul, trace


def test_field_new_prime_fields():
    f2 = field_new(2, 1)
    assert f2.order == 2
    assert f2.modulus == (0, 1)  # x
    assert field_new(3).order == 3


def test_field_new_picks_lowest_irreducible():
    # x^2 + x + 1 is the only irreducible monic quadratic over GF(2)
    assert field_new(2, 2).modulus == (1, 1, 1)
    # x^2 + 1 is irreducible over GF(3) and comes first
    assert field_new(3, 2).modulus == (1, 0, 1)
    assert field_new(2, 3).modulus == (1, 1, 0, 1)


def test_field_new_is_cached_and_deterministic():
    assert field_new(5, 2) is field_new(5, 2)


@pytest.mark.parametrize("p,k", [(4, 1), (6, 1), (2, 0), (2, 6), (37, 1)])
def test_field_new_rejects_bad_input(p, k):
    with pytest.raises(FieldError):
        field_new(p, k)


def test_small_arithmetic():
    f2 = field_new(2)
    one = f2.one
    assert add(one, one) == f2.zero

    f3 = field_new(3)
    two = f3.element(2)
    assert mul(two, two) == f3.one

    f4 = field_new(2, 2)
    x = f4.element([0, 1])
    assert x * x == f4.element([1, 1])


def test_inverse_and_zero():
    f = field_new(7)
    for a in f.elements()[1:]:
        assert inv(a) * a == f.one
    with pytest.raises(FieldError):
        inv(f.zero)


def test_cross_field_operations_fail():
    with pytest.raises(FieldError):
        field_new(2).one + field_new(3).one


def test_trace_examples():
    f5 = field_new(5)
    assert [trace(a) for a in f5.elements()] == [0, 1, 2, 3, 4]
    assert trace(field_new(2, 2).element([0, 1])) == 1
    assert trace(field_new(3, 2).element([0, 1])) == 0


@pytest.mark.parametrize("p,k", [(2, 2), (3, 2), (2, 3)])
def test_field_axioms_exhaustive(p, k):
    f = field_new(p, k)
    elems = f.elements()
    for a, b, c in itertools.product(elems, repeat=3):
        assert a + b == b + a
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
    for a in elems[1:]:
        assert a ** (f.order - 1) == f.one
    for a, b in itertools.product(elems, repeat=2):
        assert trace(a + b) == (trace(a) + trace(b)) % p


def test_element_index_round_trip():
    f = field_new(3, 2)
    assert [int(e) for e in f.elements()] == list(range(9))
    assert f.element([1, 2, 1]) == f.element([1, 2]) + f.element([0, 0, 1])
