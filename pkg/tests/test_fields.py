import random

import pytest

from weiersem import FiniteField, InputError, default_modulus


def test_gf2_characteristic():
    F = FiniteField(2)
    assert (F.one() + F.one()).rep == 0


def test_gf8_modulus_is_least():
    # t^3 + t + 1 beats t^3 + t^2 + 1 in the integer-encoding order
    assert FiniteField(2, 3).modulus == (1, 1, 0, 1)
    assert default_modulus(2, 2) == (1, 1, 1)
    assert default_modulus(3, 2) == (1, 0, 1)


def test_gf8_generator_product():
    F = FiniteField(2, 3)
    t = F.gen()
    assert t * t ** 2 == t + F.one()


def test_gf7_inverse():
    F = FiniteField(7)
    assert F(3).inverse() == F(5)


def test_inverse_of_zero_raises():
    F = FiniteField(5)
    with pytest.raises(ZeroDivisionError):
        F.zero().inverse()


def test_field_mismatch_raises():
    a = FiniteField(5)(2)
    b = FiniteField(7)(2)
    with pytest.raises(ValueError):
        a + b


def test_order_limit():
    with pytest.raises(InputError):
        FiniteField(2, 21)


def test_bad_modulus_rejected():
    with pytest.raises(InputError):
        FiniteField(2, 3, modulus=(1, 0, 0, 1))  # t^3 + 1 is reducible


@pytest.mark.parametrize("p,k", [(2, 3), (3, 2), (7, 1), (2, 4), (5, 2)])
def test_field_axioms_random(p, k):
    F = FiniteField(p, k)
    rng = random.Random(1000 * p + k)
    for _ in range(300):
        a, b, c = (F.from_rep(rng.randrange(F.order)) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + (-a) == F.zero()
        if a.rep:
            assert a * a.inverse() == F.one()
            assert (a ** (F.order - 1)) == F.one()


def test_coeff_vector_roundtrip():
    F = FiniteField(3, 2)
    for rep in range(F.order):
        e = F.from_rep(rep)
        assert F.encode(e.coeffs) == rep


def test_log_tables_match_raw_mul():
    F = FiniteField(2, 4)
    for a in range(F.order):
        for b in range(F.order):
            assert F.mul(a, b) == F._raw_mul(a, b)


def test_embedding_prime_to_extension():
    F2 = FiniteField(2)
    F8 = FiniteField(2, 3)
    emb = F2.embedding_into(F8)
    assert emb(0) == 0 and emb(1) == 1


def test_embedding_respects_arithmetic():
    F4 = FiniteField(2, 2)
    F16 = FiniteField(2, 4)
    emb = F4.embedding_into(F16)
    for a in range(4):
        for b in range(4):
            assert emb(F4.mul(a, b)) == F16.mul(emb(a), emb(b))
            assert emb(F4.add(a, b)) == F16.add(emb(a), emb(b))


def test_no_embedding_when_degrees_incompatible():
    from weiersem import PreconditionError
    with pytest.raises(PreconditionError):
        FiniteField(2, 2).embedding_into(FiniteField(2, 3))


def test_format_rep():
    F8 = FiniteField(2, 3)
    assert F8.format_rep(0) == "0"
    assert F8.format_rep(1) == "1"
    assert F8.format_rep(2) == "t"
    assert F8.format_rep(5) == "t^2+1"
