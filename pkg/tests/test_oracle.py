"""The linear-algebra oracle itself: pinned examples and error paths."""

from __future__ import annotations

import pytest

from fsplit import BudgetExceeded, FieldMismatch, NotHomogeneous, PrimeField, Ring
from fsplit import RationalFunctionField
from fsplit.oracle import oracle_dual_splitting_length, oracle_length_mod_bracket

R2 = Ring(PrimeField(2), ("x", "y"))
R3 = Ring(PrimeField(3), ("x",))


def test_bracket_length_examples():
    x, y = R2.gens()
    assert oracle_length_mod_bracket([], 1, ring=R2) == 4
    assert oracle_length_mod_bracket([x * y], 1) == 3
    assert oracle_length_mod_bracket([R3.var("x")], 1) == 1


def test_dual_length_examples():
    x, y = R2.gens()
    assert oracle_dual_splitting_length(R2.ideal(), 1) == 4
    assert oracle_dual_splitting_length(R2.ideal(x * y), 1) == 1
    # pinned by running this oracle: (x^2) in F_3[x] has dual length 0 at e=1,
    # because (x^6 : x^2) = (x^4) lands inside (x^3)
    assert oracle_dual_splitting_length(R3.ideal(R3.var("x") ** 2), 1) == 0


def test_rejects_inhomogeneous():
    x, y = R2.gens()
    with pytest.raises(NotHomogeneous):
        oracle_dual_splitting_length(R2.ideal(x**2 + y), 1)


def test_rejects_function_fields():
    field = RationalFunctionField(2, ("t",))
    ring = Ring(field, ("x",))
    with pytest.raises(FieldMismatch):
        oracle_length_mod_bracket([ring.var("x")], 1)


def test_budget():
    x, y = R2.gens()
    with pytest.raises(BudgetExceeded):
        oracle_length_mod_bracket([x * y], 3, budget=10)


def test_rank_determinism():
    x, y = R2.gens()
    runs = {oracle_length_mod_bracket([x * y, x**2 + y**2], 2) for _ in range(3)}
    assert len(runs) == 1
