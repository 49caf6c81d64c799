"""Ring-spec grammar and polynomial expression parsing."""

from __future__ import annotations

import pytest

from fsplit import (
    DuplicateVariable,
    NonPrimeCharacteristic,
    ParseError,
    PrimeField,
    ReservedVariable,
    Ring,
)
from fsplit.ringspec import parse_polynomial, parse_ring_spec


def test_node_file():
    spec = parse_ring_spec("char=2; vars=x,y; ideal=x*y")
    assert spec.ring.field.characteristic == 2
    assert spec.ring.variables == ("x", "y")
    assert [str(g) for g in spec.ideal.generators] == ["x*y"]


def test_cusp_file():
    spec = parse_ring_spec("char=5; vars=x,y; ideal=y^2-x^3")
    x, y = spec.ring.gens()
    assert spec.ideal.generators == (y**2 - x**3,)


def test_nonprime_characteristic():
    with pytest.raises(NonPrimeCharacteristic):
        parse_ring_spec("char=4; vars=x; ideal=x")


def test_duplicate_variable():
    with pytest.raises(DuplicateVariable):
        parse_ring_spec("char=3; vars=x,x; ideal=x")
    with pytest.raises(DuplicateVariable):
        parse_ring_spec("char=3; vars=x; transcendentals=x; ideal=x")


def test_reserved_name_rejected():
    with pytest.raises(ReservedVariable):
        parse_ring_spec("char=3; vars=t_elim__; ideal=0")


def test_unknown_key_rejected():
    with pytest.raises(ParseError):
        parse_ring_spec("char=3; vars=x; ideal=x; frobnicate=1")


def test_parse_error_carries_position():
    with pytest.raises(ParseError) as info:
        parse_ring_spec("char=3\nvars=x, y\nideal=x*")
    assert info.value.line == 3
    with pytest.raises(ParseError) as info:
        parse_ring_spec("char=3; vars=x; ideal=x$y")
    assert "$" in str(info.value)


def test_comments_and_separators():
    text = """
    # a comment line
    char = 3        # trailing comment
    vars = x, y ; ideal = x^2 - y^2
    connected = true; equidimensional = true
    """
    spec = parse_ring_spec(text)
    assert spec.connected and spec.equidimensional
    x, y = spec.ring.gens()
    assert spec.ideal.generators == (x**2 - y**2,)


def test_zero_ideal_forms():
    assert parse_ring_spec("char=3; vars=x; ideal=0").ideal.generators == ()
    assert parse_ring_spec("char=3; vars=x; ideal=").ideal.generators == ()


def test_multiple_generators_and_parens():
    spec = parse_ring_spec("char=5; vars=x,y; ideal=(x+y)^2, x*y - 2")
    x, y = spec.ring.gens()
    assert spec.ideal.generators == ((x + y) ** 2, x * y - 2)


def test_transcendental_coefficients():
    spec = parse_ring_spec("char=2; vars=x,y; transcendentals=t; ideal=t*x + y")
    field = spec.ring.field
    g = spec.ideal.generators[0]
    assert g.coefficient_of((1, 0)) == field.transcendental("t")


def test_primes_chains_sop_socle():
    text = """
    char = 2
    vars = x, y, z
    ideal = x*y
    equidimensional = true
    connected = true
    prime Px = x
    prime Pxy = x, y
    prime Pall = x, y, z
    prime generic = 0
    chain C = Px < Pxy < Pall
    sop = x + y, z
    socle = y
    """
    spec = parse_ring_spec(text)
    assert spec.primes["Px"].variables == ("x",)
    assert spec.primes["generic"].variables == ()
    assert [P.variables for P in spec.chains["C"].primes] == [
        ("x",),
        ("x", "y"),
        ("x", "y", "z"),
    ]
    assert len(spec.sop) == 2
    assert str(spec.socle) == "y"


def test_chain_unknown_prime():
    with pytest.raises(ParseError):
        parse_ring_spec("char=2; vars=x; ideal=x; chain C = nope")


def test_integer_coefficients_reduced_mod_p():
    spec = parse_ring_spec("char=5; vars=x; ideal=7*x")
    assert str(spec.ideal.generators[0]) == "2*x"


def test_negative_and_unary_minus():
    R = Ring(PrimeField(7), ("x", "y"))
    f = parse_polynomial(R, "-x^2 + -3*y + 10")
    x, y = R.gens()
    assert f == -(x**2) - 3 * y + 3


def test_expression_rejects_unknown_name():
    R = Ring(PrimeField(7), ("x",))
    with pytest.raises(ParseError):
        parse_polynomial(R, "x + w")


def test_missing_required_keys():
    with pytest.raises(ParseError):
        parse_ring_spec("vars=x; ideal=x")
    with pytest.raises(ParseError):
        parse_ring_spec("char=3; ideal=x")
