import pytest

from joinrings.errors import AlgebraError, NotInvertibleError, ParseError
from joinrings.ffield import field_make, parse_field, parse_poly


def test_prime_field_arithmetic():
    f7 = parse_field("F7")
    assert f7.add(3, 5) == 1
    assert f7.sub(2, 5) == 4
    assert f7.mul(3, 5) == 1
    assert f7.div(1, 3) == 5
    assert f7.pow(3, 6) == 1
    assert f7.neg(2) == 5


def test_canonical_moduli_pinned():
    # lexicographically smallest irreducible monic polynomial, constant first
    assert parse_field("F4").modulus == (1, 1, 1)
    assert parse_field("F8").modulus == (1, 1, 0, 1)
    assert parse_field("F9").modulus == (1, 0, 1)
    assert parse_field("F16").modulus == (1, 1, 0, 0, 1)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16, 25, 27])
def test_field_axioms_exhaustive(q):
    ctx = parse_field(f"F{q}")
    for a in range(1, q):
        inv = ctx.inv(a)
        assert ctx.mul(a, inv) == 1
        # Frobenius: a^q = a
        assert ctx.pow(a, q) == a
        assert (q - 1) % ctx.mult_order(a) == 0


def test_zero_has_no_inverse():
    with pytest.raises(NotInvertibleError):
        parse_field("F5").inv(0)


def test_field_elements_operators():
    f9 = parse_field("F9")
    a = f9.element(5)
    b = f9.element(7)
    assert (a + b) - b == a
    assert (a * b) / b == a
    assert (a ** 8).code == 1


def test_custom_modulus():
    # x^2 + x + 2 is also irreducible over F_3
    ctx = field_make(3, 2, "x^2+x+2")
    assert ctx.q == 9
    for a in range(1, 9):
        assert ctx.mul(a, ctx.inv(a)) == 1


def test_reducible_modulus_rejected():
    with pytest.raises(AlgebraError):
        field_make(2, 2, "x^2+1")  # (x+1)^2 over F_2


def test_parse_poly():
    assert parse_poly("x^2+x+1") == (1, 1, 1)
    assert parse_poly("x^3+2*x+1") == (1, 2, 0, 1)
    with pytest.raises(ParseError):
        parse_poly("x^^2")


def test_parse_field_rejects_non_prime_power():
    with pytest.raises(AlgebraError):
        parse_field("F6")
    with pytest.raises(ParseError):
        parse_field("G7")


def test_mult_order_generator_exists():
    # every F_q has a primitive element of order q-1
    for q in (4, 8, 9, 25):
        ctx = parse_field(f"F{q}")
        assert max(ctx.mult_order(a) for a in range(1, q)) == q - 1
