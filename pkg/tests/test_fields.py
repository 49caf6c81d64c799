"""Coefficient field arithmetic: F_p and F_p(t1, ..., tm)."""

from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from fsplit import (
    DivisionByZero,
    DuplicateVariable,
    FieldMismatch,
    NonPrimeCharacteristic,
    PrimeField,
    RationalFunctionField,
    alpha,
    field_arith,
    frobenius_map,
)

F5 = PrimeField(5)
F2T = RationalFunctionField(2, ("t",))
F3T = RationalFunctionField(3, ("t",))
F3TT = RationalFunctionField(3, ("t1", "t2"))


def rf(field, num, den=None):
    m = len(field.transcendentals)
    if den is None:
        den = {(0,) * m: 1}
    return field._canonical(dict(num), dict(den))


@st.composite
def ratfunc_elements(draw, field=F2T, max_exp=3):
    m = len(field.transcendentals)
    p = field.characteristic

    def tpoly(nonzero):
        terms = draw(st.dictionaries(
            st.tuples(*[st.integers(0, max_exp)] * m),
            st.integers(1, p - 1),
            max_size=3,
        ))
        if nonzero and not terms:
            terms = {(0,) * m: 1}
        return terms

    return rf(field, tpoly(False), tpoly(True))


def test_prime_field_examples():
    assert field_arith(F5, 2, 4, "add") == 1
    assert F5.inv(3) == 2
    assert field_arith(F5, 1, 3, "div") == 2


def test_rational_function_cancellation():
    t = F2T.transcendental("t")
    one = F2T.one()
    t_plus_1 = F2T.add(t, one)
    product = F2T.mul(F2T.div(t, t_plus_1), F2T.div(t_plus_1, F2T.mul(t, t)))
    assert product == F2T.inv(t)
    assert F2T.format(product) == "(1)/(t)"


def test_zero_is_unique():
    t = F2T.transcendental("t")
    diff = F2T.sub(F2T.div(t, F2T.add(t, F2T.one())), F2T.div(t, F2T.add(t, F2T.one())))
    assert diff == F2T.zero()
    assert F2T.is_zero(diff)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        field_arith(F5, 1, 0, "div")
    with pytest.raises(DivisionByZero):
        F2T.inv(F2T.zero())


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        field_arith(F5, 2, F2T.one(), "add")


def test_frobenius_examples():
    assert frobenius_map(F5, 3, 1) == 3
    t = F2T.transcendental("t")
    assert F2T.frobenius(t, 1) == F2T.mul(t, t)
    t3 = F3T.transcendental("t")
    lhs = F3T.frobenius(F3T.add(t3, F3T.one()), 1)
    assert lhs == F3T.add(F3T.pow(t3, 3), F3T.one())


def test_alpha_values():
    assert alpha(F5) == 0
    assert alpha(F2T) == 1
    assert alpha(F3TT) == 2


def test_alpha_independence_witness():
    # {t1^i t2^j : 0 <= i, j < 3} is independent over cube powers: any relation
    # sum a_ij^3 t1^i t2^j = 0 with some a_ij != 0 fails because cubing keeps
    # exponent classes mod 3 disjoint.
    p = 3
    for coeffs in (
        {(0, 0): F3TT.one()},
        {(1, 2): F3TT.transcendental("t1"), (2, 1): F3TT.one()},
        {(0, 1): F3TT.add(F3TT.transcendental("t2"), F3TT.one()), (2, 2): F3TT.one()},
    ):
        total = F3TT.zero()
        for (i, j), a in coeffs.items():
            term = F3TT.mul(F3TT.frobenius(a, 1), F3TT.monomial((i, j)))
            total = F3TT.add(total, term)
        assert not F3TT.is_zero(total)


def test_nonprime_characteristic_rejected():
    with pytest.raises(NonPrimeCharacteristic):
        PrimeField(4)
    with pytest.raises(NonPrimeCharacteristic):
        RationalFunctionField(6, ("t",))


def test_duplicate_transcendentals_rejected():
    with pytest.raises(DuplicateVariable):
        RationalFunctionField(3, ("t", "t"))


@given(ratfunc_elements(), ratfunc_elements())
def test_ratfunc_product_division_roundtrip(a, b):
    if F2T.is_zero(b):
        return
    assert F2T.div(F2T.mul(a, b), b) == a


@given(ratfunc_elements(), ratfunc_elements())
def test_frobenius_is_additive_and_multiplicative(a, b):
    fa, fb = F2T.frobenius(a, 1), F2T.frobenius(b, 1)
    assert F2T.frobenius(F2T.add(a, b), 1) == F2T.add(fa, fb)
    assert F2T.frobenius(F2T.mul(a, b), 1) == F2T.mul(fa, fb)


@given(ratfunc_elements(field=F3TT, max_exp=2))
def test_two_transcendentals_canonical(a):
    # canonical form: subtracting from itself gives the unique zero
    assert F3TT.sub(a, a) == F3TT.zero()
    if not F3TT.is_zero(a):
        assert F3TT.mul(a, F3TT.inv(a)) == F3TT.one()


@given(st.integers(0, 4), st.integers(0, 4))
def test_prime_field_frobenius_fixes_everything(a, e):
    assert frobenius_map(F5, a, e) == a
