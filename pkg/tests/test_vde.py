import pytest

from algebra.orering import AdditivePoly
from analysis.hfrac import HFrac
from analysis.kernel_reduction import reduce_by_kernel
from analysis.vde import (LocalizedInvariantRing, certify, quasi_principle_generators, rewrite_invariant,
                          slice_value, vde_generators, verify_invariant)
from errors import KernelNotTrivial, NotInvariant, NotPrinciple, ZeroDenominator, ZeroInput
from pairs.pair import PRINCIPLE
from pairs.search import find_linear_pairs


@pytest.fixture(scope='module')
def det4_pair(det4):
    return find_linear_pairs(det4)[0]


def test_hfrac_arithmetic(det4):
    x1, x2, x3, x4 = det4.ring.gens()
    a = HFrac(x3, x1, 1)
    b = HFrac(x2, x1, 0)
    assert a * HFrac(x1, x1) == HFrac(x3, x1)
    assert (a + b).cleared(1) == x3 + x1 * x2
    assert (a - a).is_zero()
    assert HFrac(x1 * x3, x1, 1).is_polynomial()
    assert not a.is_polynomial()
    assert HFrac(x1 * x3, x1, 2).to_lowest_terms() == a
    assert (a ** 2).e == 2
    assert str(a) == "(x3) / (x1)"
    with pytest.raises(ZeroDenominator):
        HFrac(x3, det4.ring.zero())
    with pytest.raises(ValueError):
        a.cleared(0)


def test_slice_values_of_det4(det4, det4_pair):
    x1, x2, x3, x4 = det4.ring.gens()
    assert slice_value(det4, 3, det4_pair).is_zero()
    last = slice_value(det4, 4, det4_pair)
    assert last == HFrac(x1 * x4 - x2 * x3, x1, 1)


def test_vde_generators_of_det4(det4, det4_pair):
    x1, x2, x3, x4 = det4.ring.gens()
    ring = vde_generators(det4, det4_pair, certify_degree=2)
    assert ring.h == x1
    assert ring.generators == [x1, x2, det4.ring.zero(), x1 * x4 - x2 * x3]
    assert ring.exponents == [0, 0, 0, 1]
    assert all(verify_invariant(det4, f) for f in ring.fractions())
    assert ring.certified_degree == 2
    assert ring.gaps == {}
    assert ring.ring_generators() == [x1, x2, x1 * x4 - x2 * x3]
    assert ring.contains(x2 * (x1 * x4 - x2 * x3))
    assert not ring.contains(x3)


def test_vde_needs_a_t_pair(e89):
    with pytest.raises(NotPrinciple):
        vde_generators(e89, find_linear_pairs(e89)[0])


def test_rewrite_invariant(det4, det4_pair):
    x1, x2, x3, x4 = det4.ring.gens()
    det = x1 * x4 - x2 * x3
    assert rewrite_invariant(det4, det4_pair, det * x2 + x1 ** 3) == HFrac(det * x2 + x1 ** 3, x1)
    with pytest.raises(NotInvariant):
        rewrite_invariant(det4, det4_pair, x3)


def test_quasi_principle_pair(casec_single):
    pair = find_linear_pairs(casec_single)[0]
    x1, x2, _ = casec_single.ring.gens()
    ring = quasi_principle_generators(casec_single, pair, certify_degree=2)
    assert ring.h == x1
    assert ring.generators == [x1, x2, casec_single.ring.zero()]
    assert ring.certified_degree == 2


@pytest.mark.parametrize('name', ['det4', 'casec_single'])
def test_slice_invariants_certified_through_degree_three(corpus, name):
    rep = corpus[name]
    pair = find_linear_pairs(rep)[0]
    if pair.kind == PRINCIPLE:
        ring = vde_generators(rep, pair, certify_degree=3)
    else:
        ring = quasi_principle_generators(rep, pair, certify_degree=3)
    assert ring.gaps == {}
    assert ring.certified_degree == 3


def test_certify_records_gaps(det4):
    x1, x2, _, _ = det4.ring.gens()
    partial = LocalizedInvariantRing([x1, x2], det4.ring.one(), [0, 0])
    certify(det4, partial, 2)
    assert list(partial.gaps) == [2]
    assert len(partial.gaps[2]) == 1
    assert partial.certified_degree == 1
    assert partial.to_json()['gaps']['2'] == [str(partial.gaps[2][0])]


def test_kernel_reduction_of_a_quasi_principle_action(casec_single):
    b = AdditivePoly.frobenius(casec_single.field)
    action = reduce_by_kernel(casec_single, b)
    assert str(action.reduced.entry(3, 1)) == "t"
    assert action.reduced.name == "casec_single/b"
    assert action.lift() == casec_single
    assert action.to_json()['b_t'] == "t^3"


def test_kernel_reduction_of_e89_fails_at_the_obstruction(e89):
    with pytest.raises(KernelNotTrivial) as info:
        reduce_by_kernel(e89, AdditivePoly(e89.field, [2, 1]))
    assert info.value.entry == (5, 1)
    with pytest.raises(ZeroInput):
        reduce_by_kernel(e89, AdditivePoly(e89.field))
