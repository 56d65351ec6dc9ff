import pytest

from algebra.field import field_to_json
from algebra.orering import AdditivePoly
from analyzers.normal_form_analyst import NormalFormAnalyst
from analyzers.pair_analyst import PairAnalyst
from analyzers.structure_analyst import StructureAnalyst
from config import ANALYZER_CONFIGS
from errors import CocycleViolation
from orchestrator import ClassificationOrchestrator, classify
from pairs.pair import PRINCIPLE, Pair, is_pair
from pairs.report import CASE_A, CASE_B, CASE_C, INCONCLUSIVE
from representation.garep import Representation
from algebra.upoly import UPoly


@pytest.fixture(scope='module')
def orchestrator():
    return ClassificationOrchestrator()


def context_for(rep, max_degree=2):
    return {'representation': rep, 'max_degree': max_degree, 'ext_degree': 2}


def test_eg1_is_case_a(orchestrator, eg1):
    report = orchestrator.classify(eg1)
    assert report.case == CASE_A
    assert report.pairs == []
    assert report.socle['dims'] == [2, 3]
    assert report.socle['top_variance'] == 3
    assert report.socle['dual_fixed_dimension'] == 1
    assert report.criterion('non-trivial pairs found').passed is False
    for name in ('socle length is two', 'soc2 / soc1 is one-dimensional', 'top coordinate variance exceeds two'):
        assert report.criterion(name).passed


def test_det4_is_case_c(orchestrator, det4):
    report = orchestrator.classify(det4)
    assert report.case == CASE_C
    assert report.fundamental == AdditivePoly.identity(det4.field)
    assert report.witness.kind == PRINCIPLE
    assert report.criterion('kernel of b acts trivially').passed
    assert report.normal_form is None


@pytest.mark.parametrize('name', ['casec_single', 'two_dim', 'unipotent3'])
def test_case_c_fixtures(orchestrator, corpus, name):
    assert orchestrator.classify(corpus[name], max_degree=1).case == CASE_C


def test_e89_is_case_b(orchestrator, e89):
    report = orchestrator.classify(e89)
    assert report.case == CASE_B
    assert report.fundamental == AdditivePoly(e89.field, [2, 1])
    assert report.obstruction == (5, 1)
    assert report.criterion('kernel of b acts trivially').passed is False
    assert report.criterion('last row in b-adic normal form').passed
    # t^9 reduces to t modulo t^3 - t, so both last-row remainders equal t
    assert report.normal_form['d_span'] == 1
    assert report.normal_form['kernel_variance'] == 2
    assert not report.structurally_certified


def test_wide_variant_is_certified_case_b(orchestrator, e89_wide):
    report = orchestrator.classify(e89_wide, max_degree=1)
    assert report.case == CASE_B
    assert report.fundamental == AdditivePoly(e89_wide.field, [2, 0, 1])
    assert report.structurally_certified
    assert report.criterion('remainder span at least two').passed
    assert report.normal_form['kernel_variance'] == 3


def test_report_json(orchestrator, det4):
    data = orchestrator.classify(det4, max_degree=1).to_json()
    assert data['case'] == CASE_C
    assert data['fundamental'] == [1]
    assert data['obstruction'] is None
    assert [p['display'] for p in data['pairs']] == ['(x3, x1, t)', '(x4, x2, t)']
    assert data['field'] == {'p': 5, 'field_degree': 1}
    assert all(set(c) == {'name', 'passed', 'detail'} for c in data['checks'])


def test_classification_runs_over_the_field_of_definition(orchestrator, split_rep, f9):
    report = orchestrator.classify(split_rep, max_degree=1)
    assert report.coefficient_field == f9
    assert report.to_json()['field'] == field_to_json(f9)
    assert len(report.pairs) == 2
    # t^3 + a t and t^3 - a t have right gcd t
    assert report.case == CASE_C
    assert report.fundamental == AdditivePoly.identity(f9)
    assert is_pair(split_rep.extend(f9), report.witness.g, report.witness.h, report.witness.c)


@pytest.mark.parametrize('name, A, case', [
    ('det4', [[1, 0, 0, 0], [1, 1, 0, 0], [0, 3, 1, 0], [2, 0, 1, 1]], CASE_C),
    ('e89', [[1, 0, 0, 0, 0], [1, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 2, 1, 1, 0], [1, 0, 0, 2, 1]], CASE_B),
])
def test_case_survives_a_change_of_basis(orchestrator, corpus, name, A, case):
    rep = corpus[name]
    moved = rep.change_basis(A)
    assert moved != rep
    assert orchestrator.classify(rep, max_degree=1).case == case
    assert orchestrator.classify(moved, max_degree=1).case == case


def test_pairs_free_representation_with_wide_top_row(f3):
    rep = Representation(f3, 3, {(3, 1): UPoly(f3, [0, 0, 0, 1]), (3, 2): UPoly(f3, [0, 1])}, 'wide_top')
    report = classify(rep, max_degree=1)
    assert report.pairs == []
    assert report.case == CASE_A
    assert report.socle['top_variance'] == 3


def test_invalid_input_is_rejected(orchestrator, eg1):
    q = dict(eg1.q)
    q[(3, 1)] = UPoly(eg1.field, [1, 1])
    with pytest.raises(CocycleViolation):
        orchestrator.classify(Representation(eg1.field, 3, q))


def test_structure_criteria_need_data():
    analyst = StructureAnalyst(ANALYZER_CONFIGS['structure_analyst'])
    criteria = analyst.zero_large_pedestal_criteria({})
    assert criteria == [{'name': 'socle data available', 'passed': False, 'detail': 'structure analysis failed'}]


def test_pair_analyst_steps(det4):
    analyst = PairAnalyst(ANALYZER_CONFIGS['pair_analyst'])
    analysis = analyst.analyze(context_for(det4, 1))
    assert [s['step'] for s in analysis['reasoning_steps']] == \
        ['Bounded Pair Search', 'Fundamental Ideal', 'Kernel Triviality']
    assert analyst.validate(analysis)
    assert not PairAnalyst.step_failed(analysis)


def test_pair_analyst_rejects_forged_pairs(det4):
    analyst = PairAnalyst(ANALYZER_CONFIGS['pair_analyst'])
    analysis = analyst.analyze(context_for(det4, 1))
    forged = Pair(det4.x(4), det4.x(1), AdditivePoly.identity(det4.field))
    analysis['results']['pairs'] = analysis['results']['pairs'] + [forged]
    assert not analyst.validate(analysis)


def test_search_errors_are_recorded_as_steps(e89):
    config = dict(ANALYZER_CONFIGS['pair_analyst'], candidate_cap=0)
    analysis = PairAnalyst(config).analyze(context_for(e89, 1))
    assert 'error' in analysis['reasoning_steps'][0]
    assert PairAnalyst.step_failed(analysis)


def test_inconclusive_when_the_search_fails(e89):
    orchestrator = ClassificationOrchestrator()
    orchestrator.analyzers['pair_analyst'].candidate_cap = 0
    report = orchestrator.classify(e89, max_degree=1)
    assert report.case == INCONCLUSIVE
    assert report.criterion('bounded pair search').passed is False


def test_normal_form_analyst_needs_a_generator(eg1):
    analysis = NormalFormAnalyst(ANALYZER_CONFIGS['normal_form_analyst']).analyze(context_for(eg1))
    assert analysis['reasoning_steps'] == []
    assert analysis['conclusions'] == ['no fundamental generator to test against']


def test_cross_validation_runs_every_other_analyzer(orchestrator, det4):
    report = orchestrator.classify(det4, max_degree=1)
    for name, analysis in report.analyses.items():
        validators = [v['validator'] for v in analysis['cross_validation_results']]
        assert len(validators) == 2
        assert all(v['validated'] for v in analysis['cross_validation_results'])
