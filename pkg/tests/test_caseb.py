import pytest

from algebra.orering import AdditivePoly
from analysis.caseb import EtaleAlgebra, caseb_local_invariants, orbit_is_translation_stable, splitting_field
from analysis.hfrac import HFrac
from analysis.vde import verify_invariant
from errors import InseparableB, KernelNotSplit, NotCaseB
from pairs.search import find_linear_pairs


@pytest.fixture(scope='module')
def e89_data(e89):
    return caseb_local_invariants(e89, find_linear_pairs(e89)[0], degree_bound=2)


@pytest.fixture
def algebra(e89):
    b = AdditivePoly(e89.field, [2, 1])
    return EtaleAlgebra(b, e89.x(3), e89.x(1))


def test_defining_relation(algebra, e89):
    x1, _, x3, _, _ = e89.ring.gens()
    s = algebra.s_plus(0)
    cube = algebra.mul(algebra.mul(s, s), s)
    # s^3 - s + x3/x1 = 0
    expected = [HFrac(-x3, x1, 1), HFrac(e89.ring.one(), x1), HFrac(e89.ring.zero(), x1)]
    assert algebra.equal(cube, expected)
    assert algebra.dim == 3


def test_shift_by_kernel_elements(algebra):
    s = algebra.s_plus(0)
    assert algebra.equal(algebra.shift(s, 1), algebra.s_plus(1))
    square = algebra.mul(s, s)
    shifted = algebra.shift(square, 2)
    assert algebra.equal(shifted, algebra.mul(algebra.s_plus(2), algebra.s_plus(2)))
    assert algebra.is_s_free(algebra.one())
    assert not algebra.is_s_free(s)


def test_splitting_field(e89, e89_wide, f9):
    assert splitting_field(AdditivePoly(e89.field, [2, 1])) == e89.field
    assert splitting_field(AdditivePoly(e89_wide.field, [2, 0, 1])) == f9
    with pytest.raises(KernelNotSplit):
        splitting_field(AdditivePoly(e89.field, [1, 1]), max_degree=1)


def test_base_invariants_of_e89(e89_data, e89):
    x1, x2, x3, x4, _ = e89.ring.gens()
    f1, f2, f3, f4 = e89_data.base_invariants
    assert f1 == HFrac(x1, x1)
    assert f2 == HFrac(x2, x1)
    assert f3.is_zero()
    assert f4 == HFrac(x1 * x4 - x2 * x3, x1, 1)


def test_symmetric_functions_of_the_orbit(e89_data, e89):
    x1, x2 = e89.x(1), e89.x(2)
    e1, e2, e3 = e89_data.symmetric
    assert e1.is_zero()
    assert e2 == HFrac(-((x1 + x2) ** 2), x1)
    assert not e3.is_zero()
    assert all(verify_invariant(e89, f) for f in e89_data.generators)
    assert e89_data.kernel == [0, 1, 2]
    assert e89_data.working_field == e89.field


def test_orbit_is_translation_stable(e89_data):
    assert len(e89_data.orbit) == 3
    assert orbit_is_translation_stable(e89_data)


def test_low_degree_invariants_are_reached(e89_data):
    assert e89_data.gaps == {}
    assert e89_data.complete_up_to == 2
    data = e89_data.to_json()
    assert data['kernel'] == [0, 1, 2]
    assert data['b_t'] == "t^3 + 2*t"
    assert "s^3" in data['defining_polynomial']


def test_trivial_kernel_is_not_case_b(det4):
    with pytest.raises(NotCaseB):
        caseb_local_invariants(det4, find_linear_pairs(det4)[0], degree_bound=0)


def test_inseparable_generator_rejected(casec_single):
    with pytest.raises(InseparableB) as info:
        caseb_local_invariants(casec_single, find_linear_pairs(casec_single)[0], degree_bound=0)
    assert info.value.w == 1
