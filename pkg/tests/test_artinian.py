"""Staircase lengths, explicit staircases, and Krull dimension."""

from __future__ import annotations

import itertools
import random

import pytest

from fsplit import (
    CostGuardExceeded,
    NotArtinian,
    PrimeField,
    Ring,
    buchberger,
    frobenius_power,
    ideal_sum,
    is_artinian,
    krull_dimension,
    length,
    standard_monomials,
)
from fsplit.oracle import oracle_length_mod_bracket

R5 = Ring(PrimeField(5), ("x", "y"))
X, Y = R5.gens()


def test_is_artinian_examples():
    assert is_artinian(buchberger(R5.ideal(X**2, Y**3)))
    assert not is_artinian(buchberger(R5.ideal(X * Y)))
    R1 = Ring(PrimeField(5), ("x",))
    assert is_artinian(buchberger(R1.ideal(R1.var("x"))))


def test_length_examples():
    assert length(buchberger(R5.ideal(X**2, Y**3))) == 6
    assert length(buchberger(R5.ideal(X, Y))) == 1
    assert length(buchberger(R5.ideal(X**2, X * Y, Y**2))) == 3
    assert length(buchberger(R5.ideal(X, X + 1))) == 0  # unit ideal


def test_length_requires_artinian():
    with pytest.raises(NotArtinian):
        length(buchberger(R5.ideal(X * Y)))


@pytest.mark.parametrize("p,e,n", [(2, 1, 2), (2, 3, 2), (3, 2, 2), (5, 2, 3), (5, 3, 3)])
def test_bracket_length_is_q_to_n(p, e, n):
    ring = Ring(PrimeField(p), ("x", "y", "z")[:n])
    nq = frobenius_power(ring.variable_ideal(), e)
    assert length(buchberger(nq)) == (p**e) ** n


def test_length_monotone_under_containment():
    pairs = [
        (R5.ideal(X**3, Y**3), R5.ideal(X**3, Y**3, X * Y)),
        (R5.ideal(X**2, Y**4), R5.ideal(X**2, Y**2)),
        (R5.ideal(X**5, Y**5, X**2 * Y**2), R5.ideal(X**2, Y**2)),
    ]
    for smaller, larger in pairs:
        assert length(buchberger(smaller)) >= length(buchberger(larger))


def test_length_agrees_with_enumeration_and_oracle():
    rng = random.Random(5)
    for p, e in [(2, 1), (2, 2), (3, 1), (3, 2), (5, 1)]:
        ring = Ring(PrimeField(p), ("x", "y"))
        x, y = ring.gens()
        gens = [x * y, x**2 + y, x**2 * y**2][: rng.randrange(1, 4)]
        full = ideal_sum(ring.ideal(*gens), frobenius_power(ring.variable_ideal(), e))
        gb = buchberger(full)
        lam = length(gb)
        assert lam == len(standard_monomials(gb))
        assert lam == oracle_length_mod_bracket(gens, e, budget=4 * 10**6)


def test_standard_monomials_explicit():
    gb = buchberger(R5.ideal(X**2, X * Y, Y**2))
    basis = standard_monomials(gb)
    assert set(basis.monomials) == {(0, 0), (1, 0), (0, 1)}
    with pytest.raises(CostGuardExceeded):
        standard_monomials(buchberger(R5.ideal(X**200, Y**200)), budget=100)


def test_krull_dimension_examples():
    R3 = Ring(PrimeField(5), ("x", "y", "z"))
    assert krull_dimension(buchberger(R3.ideal())) == 3
    assert krull_dimension(buchberger(R5.ideal(X * Y))) == 1
    assert krull_dimension(buchberger(R5.ideal(Y**2 - X**3))) == 1
    assert krull_dimension(buchberger(R5.ideal(X, X + 1))) == -1  # unit ideal


def test_krull_dimension_principal_random():
    # dim of a nonzero principal proper ideal in n variables is n - 1;
    # verified against an independent subset brute force over all variable sets
    rng = random.Random(17)
    ring = Ring(PrimeField(3), ("x", "y", "z"))
    for _ in range(12):
        terms = {}
        for _ in range(rng.randrange(2, 4)):
            terms[tuple(rng.randrange(3) for _ in range(3))] = rng.randrange(1, 3)
        f = ring.from_terms(terms)
        if f.is_zero() or f.constant_coefficient() != 0:
            continue
        gb = buchberger(ring.ideal(f))
        dim = krull_dimension(gb)

        def brute():
            best = -1
            for r in range(4):
                for subset in itertools.combinations(range(3), r):
                    ok = True
                    for e in gb.lead_exponents:
                        support = {i for i, a in enumerate(e) if a}
                        if support <= set(subset):
                            ok = False
                            break
                    if ok:
                        best = max(best, r)
            return best

        assert dim == brute() == 2
