import numpy as np
import pytest

from algebra.field import build_field, field_to_json, frobenius_power
from errors import DivisionByZero, FieldMismatch, NotPrime, ReducibleModulus


def test_rejects_composite_characteristic():
    with pytest.raises(NotPrime):
        build_field(4)


def test_rejects_reducible_modulus():
    with pytest.raises(ReducibleModulus):
        build_field(3, 2, [0, 0, 1])


def test_accepts_explicit_irreducible_modulus():
    f = build_field(3, 2, [1, 0, 1])
    assert f.q == 9
    assert f.modulus == (1, 0, 1)


def test_build_is_cached(f9):
    assert build_field(3, 2) is f9


@pytest.mark.parametrize('p,m', [(2, 1), (3, 1), (5, 1), (2, 3), (3, 2)])
def test_arithmetic_matches_galois(p, m):
    f = build_field(p, m)
    GF = f.GF
    for a in f.elements():
        for b in f.elements():
            assert f.add(a, b) == int(GF(a) + GF(b))
            assert f.mul(a, b) == int(GF(a) * GF(b))
            assert f.sub(a, b) == int(GF(a) - GF(b))


def test_inverses(f9):
    for a in range(1, 9):
        assert f9.mul(a, f9.inv(a)) == 1
    with pytest.raises(DivisionByZero):
        f9.inv(0)


def test_frobenius_is_an_automorphism(f9):
    for a in f9.elements():
        assert f9.frobenius_power(a, 2) == a
        assert f9.frobenius_power(f9.frobenius_power(a, 1), -1) == a
        for b in f9.elements():
            assert f9.frobenius_power(f9.add(a, b), 1) == f9.add(f9.frobenius_power(a, 1), f9.frobenius_power(b, 1))


def test_from_int_uses_prime_subfield(f9, f5):
    assert f5.from_int(-1) == 4
    assert f9.from_int(4) == 1


def test_json_coefficients(f9):
    assert f9.from_json([1, 2]) == 7
    assert f9.to_json(7) == [1, 2]
    assert f9.from_json(5) == 2


def test_field_to_json(f3, f9):
    assert field_to_json(f3) == {'p': 3, 'field_degree': 1}
    assert field_to_json(f9)['modulus'] == list(f9.modulus)


def test_embedding_is_a_ring_map():
    small = build_field(2, 2)
    big = build_field(2, 4)
    table = small.embedding(big)
    assert len(set(table)) == 4
    for a in small.elements():
        for b in small.elements():
            assert table[small.mul(a, b)] == big.mul(table[a], table[b])
            assert table[small.add(a, b)] == big.add(table[a], table[b])


def test_embedding_needs_divisible_degree():
    with pytest.raises(FieldMismatch):
        build_field(2, 2).embedding(build_field(2, 3))


def test_random_element_is_deterministic(f9, rng):
    first = [f9.random_element(rng) for _ in range(10)]
    again = np.random.default_rng(0)
    assert first == [f9.random_element(again) for _ in range(10)]


SMALL_FIELDS = [(p, m) for p in (2, 3, 5, 7) for m in range(1, 7) if p ** m <= 81]


@pytest.mark.parametrize('p,m', SMALL_FIELDS)
def test_frobenius_laws_on_every_element(p, m):
    f = build_field(p, m)
    for a in f.elements():
        x = a
        for _ in range(m):
            x = frobenius_power(f, x, 1)
        assert x == a == frobenius_power(f, a, m)
        assert f.pow(a, f.q) == a
        for b in f.elements():
            assert f.pow(f.add(a, b), p) == f.add(f.pow(a, p), f.pow(b, p))
