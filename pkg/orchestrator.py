from typing import Dict, List, Any, Optional
import logging

from config import ANALYZER_CONFIGS, EXTENSION_DEGREE, MAX_DEGREE
from analyzers.normal_form_analyst import NormalFormAnalyst
from analyzers.pair_analyst import PairAnalyst
from analyzers.structure_analyst import StructureAnalyst
from pairs.report import CASE_A, CASE_B, CASE_C, INCONCLUSIVE, ClassificationReport, Criterion
from pairs.search import pair_field
from representation.garep import Representation, validate


class ClassificationOrchestrator:
    def __init__(self):
        self.analyzers = self._initialize_analyzers()
        self.logger = logging.getLogger('ClassificationOrchestrator')

    def _initialize_analyzers(self) -> Dict[str, Any]:
        """Initialize the analyzers in the order their findings are consumed"""
        analyzers = {
            'structure_analyst': StructureAnalyst(ANALYZER_CONFIGS['structure_analyst']),
            'pair_analyst': PairAnalyst(ANALYZER_CONFIGS['pair_analyst']),
            'normal_form_analyst': NormalFormAnalyst(ANALYZER_CONFIGS['normal_form_analyst'])
        }
        return analyzers

    def classify(self, rep: Representation, max_degree: Optional[int] = None,
                 ext_degree: Optional[int] = None) -> ClassificationReport:
        """
        Coordinate the analyzers on one representation and decide its case
        """
        validate(rep)
        field = pair_field(rep, 1)
        if field != rep.field:
            # linear pairs live over an extension; classify there
            self.logger.info(f"Extending {rep!r} to {field!r}, the field of definition of its linear pairs")
            rep = rep.extend(field)
        context = {
            'representation': rep,
            'max_degree': MAX_DEGREE if max_degree is None else max_degree,
            'ext_degree': EXTENSION_DEGREE if ext_degree is None else ext_degree
        }
        self.logger.info(f"Starting classification of {rep!r} with pair degree bound {context['max_degree']}")

        # Collect individual analyses; the normal form needs the fundamental generator
        analyses = {}
        analyses['structure_analyst'] = self.analyzers['structure_analyst'].analyze(context)
        analyses['pair_analyst'] = self.analyzers['pair_analyst'].analyze(context)
        context['fundamental'] = analyses['pair_analyst']['results'].get('fundamental')
        analyses['normal_form_analyst'] = self.analyzers['normal_form_analyst'].analyze(context)

        # Cross-validate analyses
        validated_analyses = self._cross_validate_analyses(analyses)

        report = self._decide_case(context, validated_analyses)
        self.logger.info(f"{rep!r} classified as case {report.case}")
        return report

    def _cross_validate_analyses(self, analyses: Dict[str, Any]) -> Dict[str, Any]:
        """Cross-validate analyses between analyzers"""
        validated_analyses = {}

        for analyzer_name, analysis in analyses.items():
            validated_analyses[analyzer_name] = self.analyzers[analyzer_name].cross_validate(
                list(self.analyzers.values()), analysis
            )
            failed = [v['validator'] for v in validated_analyses[analyzer_name]['cross_validation_results']
                      if not v['validated']]
            if failed:
                self.logger.warning(f"{analyzer_name} findings rejected by {failed}")

        return validated_analyses

    def _decide_case(self, context: Dict[str, Any], analyses: Dict[str, Any]) -> ClassificationReport:
        """Emit a case label only together with a checkable witness"""
        pair_results = analyses['pair_analyst']['results']
        structure_results = analyses['structure_analyst']['results']
        normal_form_results = analyses['normal_form_analyst']['results']

        report = ClassificationReport(
            case=INCONCLUSIVE,
            search_degree=context['max_degree'],
            coefficient_field=context['representation'].field,
            pairs=pair_results.get('pairs', []),
            socle=self._socle_summary(structure_results),
            analyses=analyses
        )
        report.criteria.extend(self._pair_criteria(analyses['pair_analyst']))

        if pair_results.get('pairs') and 'kernel_trivial' in pair_results:
            report.fundamental = pair_results['fundamental']
            if pair_results['kernel_trivial']:
                report.case = CASE_C
                report.witness = pair_results['witness']
            else:
                report.case = CASE_B
                report.obstruction = pair_results['obstruction']
                report.normal_form = self._normal_form_summary(normal_form_results)
                report.criteria.extend(self._normal_form_criteria(normal_form_results))
            return report

        structure_criteria = [Criterion(**c) for c in
                              self.analyzers['structure_analyst'].zero_large_pedestal_criteria(structure_results)]
        report.criteria.extend(structure_criteria)
        if not pair_results.get('pairs') and all(c.passed for c in structure_criteria):
            report.case = CASE_A
        else:
            self.logger.warning("No certificate for any case; reporting Inconclusive")
        return report

    def _pair_criteria(self, analysis: Dict[str, Any]) -> List[Criterion]:
        criteria = []
        for step in analysis['reasoning_steps']:
            if 'error' in step:
                criteria.append(Criterion(step['step'].lower(), False, step['error']))
        results = analysis['results']
        if 'pairs' in results:
            criteria.append(Criterion('non-trivial pairs found', bool(results['pairs']),
                                      f"{len(results['pairs'])} pairs up to degree {analysis['context']['max_degree']}"))
        if 'kernel_trivial' in results:
            detail = 'every q lies in k[b(t)]' if results['kernel_trivial'] else \
                f"q{results['obstruction']} is not a polynomial in b(t)"
            criteria.append(Criterion('kernel of b acts trivially', results['kernel_trivial'], detail))
        return criteria

    def _normal_form_criteria(self, results: Dict[str, Any]) -> List[Criterion]:
        certificate = results.get('normal_form')
        if certificate is None:
            return [Criterion('last row in b-adic normal form', False, 'normal form check failed')]
        return [
            Criterion('last row in b-adic normal form', certificate.in_normal_form, '; '.join(certificate.failures)),
            Criterion('remainder span at least two', certificate.d_span >= 2, f"d-span {certificate.d_span}")
        ]

    @staticmethod
    def _socle_summary(results: Dict[str, Any]) -> Dict[str, Any]:
        if 'socle' not in results:
            return {}
        summary = results['socle'].to_json()
        if 'dual_fixed' in results:
            summary['dual_fixed_dimension'] = len(results['dual_fixed'])
        if 'top_variance' in results:
            summary['top_variance'] = results['top_variance']
        return summary

    @staticmethod
    def _normal_form_summary(results: Dict[str, Any]) -> Optional[Dict[str, Any]]:
        if 'normal_form' not in results:
            return None
        summary = results['normal_form'].to_json()
        if 'kernel_variance' in results:
            summary['kernel_variance'] = results['kernel_variance']
        return summary


def classify(rep: Representation, max_degree: Optional[int] = None,
             ext_degree: Optional[int] = None) -> ClassificationReport:
    return ClassificationOrchestrator().classify(rep, max_degree, ext_degree)
