import numpy as np
import pytest

from errors import SearchSpaceTooLarge
from representation.coaction import (coact, delta, delta_power_expansion, delta_power_is_pure, dual_fixed_vectors,
                                     has_simple_dual_socle, homogeneous_invariants, in_invariant_span,
                                     invariant_covectors, invariant_space_oracle, is_invariant, linear_form,
                                     socle_series)
from representation.tpoly import TPoly

FIXTURE_NAMES = ['casec_single', 'det4', 'e89', 'e89_wide', 'eg1', 'two_dim', 'unipotent3']


def test_coaction_of_a_coordinate(eg1):
    x1, x2, x3 = eg1.ring.gens()
    image = coact(eg1, x3)
    assert image.exponents() == [0, 1, 3]
    assert image.coeff(0) == x3
    assert image.coeff(1) == x1
    assert image.coeff(3) == x2
    assert delta(eg1, x3).at_zero().is_zero()


def test_coaction_is_multiplicative(unipotent3):
    x1, x2, x3 = unipotent3.ring.gens()
    f, g = x2 * x3 + x1, x3 ** 2
    assert coact(unipotent3, f * g) == coact(unipotent3, f) * coact(unipotent3, g)


def random_poly(rep, rng, terms=2, degree=2):
    f = rep.ring.zero()
    for _ in range(terms):
        exp = [0] * rep.n
        for _ in range(int(rng.integers(1, degree + 1))):
            exp[int(rng.integers(rep.n))] += 1
        f = f + rep.ring.monomial(exp, 1 + int(rng.integers(rep.field.q - 1)))
    return f


@pytest.mark.parametrize('name', FIXTURE_NAMES)
def test_coaction_is_multiplicative_on_random_pairs(corpus, name):
    rep = corpus[name]
    rng = np.random.default_rng(len(name))
    for _ in range(200):
        f, g = random_poly(rep, rng), random_poly(rep, rng)
        assert coact(rep, f * g) == coact(rep, f) * coact(rep, g)


@pytest.mark.parametrize('name', FIXTURE_NAMES)
def test_coaction_is_coassociative(corpus, name):
    """beta(f)(s + t) equals beta applied to the t-coefficients of beta(f), taken at s"""
    rep = corpus[name]
    fld = rep.field
    rng = np.random.default_rng(len(name))
    polys = rep.ring.gens() + [random_poly(rep, rng) for _ in range(5)]
    for f in polys:
        image = coact(rep, f)
        inner = [(e, coact(rep, fe)) for e, fe in image.items()]
        for s in fld.elements():
            for t in fld.elements():
                nested = rep.ring.zero()
                for e, part in inner:
                    nested = nested + part.evaluate(s).scale(fld.pow(t, e))
                assert nested == image.evaluate(fld.add(s, t))


def test_tpoly_join_inverts_split(eg1):
    image = coact(eg1, eg1.x(3) ** 2)
    assert TPoly.split(image.join(eg1.ring_t), eg1.ring) == image


def test_invariants(det4):
    x1, x2, x3, x4 = det4.ring.gens()
    assert is_invariant(det4, x1)
    assert not is_invariant(det4, x3)
    assert is_invariant(det4, x1 * x4 - x2 * x3)


def test_invariant_covectors(eg1, det4):
    assert invariant_covectors(eg1) == [[1, 0, 0], [0, 1, 0]]
    assert invariant_covectors(det4) == [[1, 0, 0, 0], [0, 1, 0, 0]]
    assert linear_form(eg1, [1, 2, 0]) == eg1.x(1) + eg1.x(2).scale(2)


@pytest.mark.parametrize('name,dims', [
    ('eg1', (2, 3)),
    ('det4', (2, 4)),
    ('unipotent3', (1, 2, 3)),
    ('two_dim', (1, 2)),
    ('e89', (2, 4, 5)),
])
def test_socle_series(corpus, name, dims):
    structure = socle_series(corpus[name])
    assert structure.dims == dims
    assert len(structure.adapted_basis) == corpus[name].n
    assert structure.level_of == sorted(structure.level_of)
    assert len(structure.new_at_level(1)) == dims[0]


def test_socle_json(eg1):
    data = socle_series(eg1).to_json()
    assert data['dims'] == [2, 3]
    assert data['length'] == 2
    assert data['level_of'] == [1, 1, 2]


def test_dual_fixed_vectors(eg1, det4):
    assert dual_fixed_vectors(eg1) == [[0, 0, 1]]
    assert has_simple_dual_socle(eg1)
    assert dual_fixed_vectors(det4) == [[0, 0, 1, 0], [0, 0, 0, 1]]
    assert not has_simple_dual_socle(det4)


def test_two_dim_invariants_are_powers_of_x1(two_dim):
    x1 = two_dim.x(1)
    for d in range(1, 5):
        assert homogeneous_invariants(two_dim, d) == [x1 ** d]


def test_oracle_dimensions(eg1, det4):
    # the orbit of x3 is infinite, so the invariants are k[x1, x2]
    assert len(invariant_space_oracle(eg1, 4)) == 15
    degree_two = homogeneous_invariants(det4, 2)
    assert len(degree_two) == 4
    x1, x2, x3, x4 = det4.ring.gens()
    assert in_invariant_span(det4, x1 * x4 - x2 * x3, degree_two)
    assert not in_invariant_span(det4, x1 * x3, degree_two)


def test_oracle_basis_is_invariant(unipotent3):
    for f in invariant_space_oracle(unipotent3, 3):
        assert is_invariant(unipotent3, f)


def test_oracle_cap(eg1):
    with pytest.raises(SearchSpaceTooLarge):
        homogeneous_invariants(eg1, 5, cap=3)


def test_delta_of_powers(two_dim):
    x2 = two_dim.x(2)
    assert delta_power_is_pure(two_dim, 2, 3)
    assert not delta_power_is_pure(two_dim, 2, 2)
    assert delta_power_expansion(two_dim, 2, 2) == delta(two_dim, x2 ** 2)
    assert delta_power_expansion(two_dim, 2, 3) == delta(two_dim, x2) ** 3
