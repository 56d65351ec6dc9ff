import itertools

import numpy as np
import pytest

from algebra.upoly import UPoly
from errors import CocycleViolation, RepresentationError
from representation.coaction import act_on_point, socle_series
from representation.garep import Representation, from_entries, is_valid, validate


def mutated(rep, entry, coeffs):
    q = dict(rep.q)
    q[entry] = UPoly(rep.field, coeffs)
    return Representation(rep.field, rep.n, q, rep.name)


def test_fixtures_are_valid(corpus):
    for rep in corpus.values():
        validate(rep)


def test_nonzero_constant_term_rejected(eg1):
    with pytest.raises(CocycleViolation) as info:
        validate(mutated(eg1, (3, 1), [1, 1]))
    assert info.value.entry == (3, 1)
    assert info.value.reason == "q(0) is not zero"


def test_non_additive_subdiagonal_rejected(two_dim):
    with pytest.raises(CocycleViolation) as info:
        validate(mutated(two_dim, (2, 1), [0, 0, 1]))
    assert info.value.entry == (2, 1)
    assert info.value.reason == "subdiagonal entry is not additive"


def test_broken_cocycle_reports_the_entry(unipotent3):
    bad = mutated(unipotent3, (3, 1), [0, 0, 1])
    assert not is_valid(bad)
    with pytest.raises(CocycleViolation) as info:
        validate(bad)
    assert info.value.entry == (3, 1)


@pytest.mark.parametrize('name', ['casec_single', 'det4', 'e89', 'e89_wide', 'eg1', 'two_dim', 'unipotent3'])
def test_random_non_additive_terms_break_the_cocycle(corpus, name):
    rep = corpus[name]
    fld = rep.field
    rng = np.random.default_rng(sum(map(ord, name)))
    slots = [(i, j) for i in range(2, rep.n + 1) for j in range(1, i)]
    powers = {fld.p ** k for k in range(6)}
    exponents = [e for e in range(2, 30) if e not in powers]
    for _ in range(20):
        entry = slots[int(rng.integers(len(slots)))]
        e = exponents[int(rng.integers(len(exponents)))]
        # (s + t)^e - s^e - t^e is nonzero unless e is a power of p
        bump = [0] * e + [1 + int(rng.integers(fld.q - 1))]
        old = rep.q[entry].coeffs if entry in rep.q else []
        coeffs = [fld.add(a, b) for a, b in itertools.zip_longest(old, bump, fillvalue=0)]
        bad = mutated(rep, entry, coeffs)
        assert not is_valid(bad)
        with pytest.raises(CocycleViolation):
            validate(bad)


def test_missing_correction_term_rejected(unipotent3):
    q = dict(unipotent3.q)
    del q[(3, 1)]
    with pytest.raises(CocycleViolation) as info:
        validate(Representation(unipotent3.field, 3, q))
    assert info.value.entry == (3, 1)


def test_entries_must_be_below_the_diagonal(f3):
    with pytest.raises(RepresentationError):
        from_entries(f3, 3, {(1, 2): [0, 1]})
    with pytest.raises(RepresentationError):
        from_entries(f3, 0, {})


def test_from_entries_matches_fixture(det4, f5):
    assert from_entries(f5, 4, {(3, 1): [0, 1], (4, 2): [0, 1]}) == det4


def test_matrix_at(det4):
    assert det4.matrix_at(2) == [[1, 0, 0, 0], [0, 1, 0, 0], [2, 0, 1, 0], [0, 2, 0, 1]]


def test_group_law_on_points(eg1, f9, rng):
    for _ in range(10):
        s, t = f9.random_element(rng), f9.random_element(rng)
        v = [f9.random_element(rng) for _ in range(eg1.n)]
        once = act_on_point(eg1, f9.add(s, t), v, f9)
        twice = act_on_point(eg1, s, act_on_point(eg1, t, v, f9), f9)
        assert once == twice


def test_change_basis_preserves_structure(eg1):
    A = [[1, 0, 0], [1, 1, 0], [0, 2, 1]]
    moved = eg1.change_basis(A)
    validate(moved)
    assert moved.entry(3, 2) == eg1.entry(3, 2)
    assert socle_series(moved).dims == socle_series(eg1).dims
    assert eg1.change_basis([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == eg1


def test_change_basis_needs_unitriangular(eg1):
    with pytest.raises(RepresentationError):
        eg1.change_basis([[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    with pytest.raises(RepresentationError):
        eg1.change_basis([[2, 0, 0], [0, 1, 0], [0, 0, 1]])


def test_extension_of_scalars(eg1, f9):
    big = eg1.extend(f9)
    validate(big)
    assert big.field == f9
    assert big.to_json()['field_degree'] == 2
    assert eg1.extend(eg1.field) is eg1


def test_json_form(e89):
    data = e89.to_json()
    assert data['p'] == 3 and data['n'] == 5
    assert data['q']['5,3'] == [0, 2, 0, 1]
    assert 'name' not in data


def test_describe(two_dim):
    assert two_dim.describe() == ["x2 -> x2 + (t)*x1"]
