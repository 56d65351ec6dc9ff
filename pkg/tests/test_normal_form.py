from algebra.orering import AdditivePoly
from algebra.upoly import UPoly
from pairs.normal_form import check_normal_form, invariant_coordinates, kernel_variance, last_coordinate_variance


def test_invariant_coordinates(e89, eg1):
    assert invariant_coordinates(e89) == {1, 2}
    assert invariant_coordinates(eg1) == {1, 2}


def test_e89_is_in_normal_form_with_one_dimensional_remainders(e89):
    """q52 carries t^9, and t^9 = (t^3 + t) o (t^3 - t) + t, so modulo b = t^3 - t both
    last-row remainders are t: the d-span is 1, not 2. e89_wide keeps the t^3 remainder
    and is the certified variant."""
    cert = check_normal_form(e89, AdditivePoly(e89.field, [2, 1]))
    t = UPoly(e89.field, [0, 1])
    assert cert.in_normal_form
    assert cert.remainders == {1: t, 2: t}
    assert cert.s_digits == {1: [0, 0, 2], 2: [0, 1, 2, 1]}
    assert cert.d_span == 1
    assert not cert.certified


def test_wide_variant_is_structurally_certified(e89_wide):
    cert = check_normal_form(e89_wide, AdditivePoly(e89_wide.field, [2, 0, 1]))
    assert cert.in_normal_form
    assert cert.remainders == {1: UPoly(e89_wide.field, [0, 1]), 2: UPoly(e89_wide.field, [0, 0, 0, 1])}
    assert cert.d_span == 2
    assert cert.certified
    assert cert.to_json()['d'] == {'1': 't', '2': 't^3'}


def test_entries_outside_the_last_row_must_be_polynomials_in_b(e89):
    cert = check_normal_form(e89, AdditivePoly(e89.field, [2, 0, 1]))
    assert not cert.in_normal_form
    assert any(f.startswith("q3,1") for f in cert.failures)


def test_kernel_variance(e89, e89_wide, f9):
    assert kernel_variance(e89, e89.x(5), AdditivePoly(e89.field, [2, 1]), f9) == 2
    assert kernel_variance(e89_wide, e89_wide.x(5), AdditivePoly(e89_wide.field, [2, 0, 1]), f9) == 3


def test_last_coordinate_variance(eg1, two_dim):
    assert last_coordinate_variance(eg1) == 3
    assert last_coordinate_variance(two_dim) == 2
