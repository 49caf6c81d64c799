"""Ideal operations: sums, bracket powers, intersections, colon ideals."""

from __future__ import annotations

import random

import pytest

from fsplit import (
    InternalInconsistency,
    PrimeField,
    Ring,
    ZeroDivisorColon,
    bracket_power,
    buchberger,
    colon_ideal,
    divide_exact,
    frobenius_power,
    ideal_member,
    ideal_sum,
    intersect,
)

R2 = Ring(PrimeField(2), ("x", "y"))
R5 = Ring(PrimeField(5), ("x", "y"))


def same_ideal(gb1, gb2) -> bool:
    return all(ideal_member(g, gb2) for g in gb1.basis) and all(
        ideal_member(g, gb1) for g in gb2.basis
    )


def test_ideal_sum():
    x, y = R5.gens()
    s = ideal_sum(R5.ideal(x), R5.ideal(y))
    assert s.generators == (x, y)
    assert ideal_sum(R5.ideal(x), R5.ideal()).generators == (x,)
    gb = buchberger(ideal_sum(R5.ideal(x**2), R5.ideal(x)))
    assert gb.basis == (x,)


def test_frobenius_power_examples():
    x, y = R2.gens()
    assert frobenius_power(R2.ideal(x * y), 1).generators == (x**2 * y**2,)
    I = R5.ideal(R5.var("x") * R5.var("y") - 1)
    assert frobenius_power(I, 0) == I
    x5, y5 = R5.gens()
    f = y5**2 - x5**3
    assert frobenius_power(R5.ideal(f), 1).generators == (y5**10 - x5**15,)


def test_bracket_power_record():
    x, _ = R5.gens()
    bp = bracket_power(R5.ideal(x), 2)
    assert bp.q == 25 and bp.e == 2
    assert bp.presentation.generators == (x**25,)


def test_bracket_power_composes():
    x, y = R2.gens()
    I = R2.ideal(x + y, x * y)
    a_then_b = frobenius_power(frobenius_power(I, 1), 2)
    direct = frobenius_power(I, 3)
    assert same_ideal(buchberger(a_then_b), buchberger(direct))


def test_intersect_examples():
    x, y = R5.gens()
    assert intersect(R5.ideal(x), R5.ideal(y)).basis == (x * y,)
    assert intersect(R5.ideal(x), R5.ideal(x)).basis == (x,)
    gb = intersect(R5.ideal(x**2, x * y), R5.ideal(y))
    assert gb.basis == (x * y,)


def test_colon_examples():
    x, y = R5.gens()
    gb = colon_ideal(R5.ideal(x**2, y**2), R5.ideal(x * y))
    assert set(gb.basis) == {x, y}
    I = R5.ideal(x**2 + y, x * y)
    assert same_ideal(colon_ideal(I, R5.ideal(R5.one())), buchberger(I))
    f = y**2 - x**3
    gb = colon_ideal(frobenius_power(R5.ideal(f), 1), R5.ideal(f))
    assert same_ideal(gb, buchberger(R5.ideal(f**4)))


def test_colon_by_zero_rejected():
    x, _ = R5.gens()
    with pytest.raises(ZeroDivisorColon):
        colon_ideal(R5.ideal(x), R5.ideal())
    with pytest.raises(ZeroDivisorColon):
        colon_ideal(R5.ideal(x), R5.ideal(R5.zero()))


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("expr_e", [1, 2])
def test_hypersurface_colon_law(p, expr_e):
    # (f^[q] : f) = (f^(q-1)) for a corpus of f, since S is a UFD
    ring = Ring(PrimeField(p), ("x", "y"))
    x, y = ring.gens()
    q = p**expr_e
    corpus = [x, x * y, x + y, y**2 - x**3, x**2 - y**2]
    for f in corpus:
        got = colon_ideal(frobenius_power(ring.ideal(f), expr_e), ring.ideal(f))
        want = buchberger(ring.ideal(f ** (q - 1)))
        assert same_ideal(got, want), (p, expr_e, str(f))


def test_containment_properties():
    rng = random.Random(3)
    ring = R5
    for _ in range(10):
        gens = []
        for _ in range(2):
            terms = {
                tuple(rng.randrange(3) for _ in range(2)): rng.randrange(1, 5)
                for _ in range(rng.randrange(1, 3))
            }
            g = ring.from_terms(terms)
            if not g.is_zero():
                gens.append(g)
        if len(gens) < 2:
            continue
        I, J = ring.ideal(gens[0]), ring.ideal(gens[1])
        gb_I = buchberger(I)
        colon = colon_ideal(I, J)
        for g in gb_I.basis:
            assert ideal_member(g, colon)  # I subset (I : J)
        gb_sum = buchberger(ideal_sum(I, J))
        for g in gb_I.basis:
            assert ideal_member(g, gb_sum)  # I subset I + J
        inter = intersect(I, J)
        for g in inter.basis:
            assert ideal_member(g, gb_I)  # I cap J subset I


def test_colon_intersection_duality():
    rng = random.Random(9)
    ring = R2
    x, y = ring.gens()
    for _ in range(8):
        f = ring.from_terms({
            tuple(rng.randrange(3) for _ in range(2)): 1 for _ in range(rng.randrange(1, 3))
        })
        g = ring.from_terms({
            tuple(rng.randrange(3) for _ in range(2)): 1 for _ in range(rng.randrange(1, 3))
        })
        if f.is_zero() or g.is_zero():
            continue
        I = ring.ideal(x**2 * y, x * y**2)
        joint = colon_ideal(I, ring.ideal(f, g))
        left = colon_ideal(I, ring.ideal(f))
        right = colon_ideal(I, ring.ideal(g))
        expected = intersect(left.presentation(), right.presentation())
        assert same_ideal(joint, expected)


def test_divide_exact_detects_corruption():
    x, y = R5.gens()
    assert divide_exact((x + y) * (x - y), x + y) == x - y
    with pytest.raises(InternalInconsistency):
        divide_exact(x**2 + y, x)
