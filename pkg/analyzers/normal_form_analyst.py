from typing import Dict, Any, List

from algebra.field import build_field
from pairs.normal_form import check_normal_form, kernel_variance
from .base_analyzer import RepresentationAnalyzer


class NormalFormAnalyst(RepresentationAnalyzer):
    def analyze(self, context: Dict[str, Any]) -> Dict[str, Any]:
        """
        Tests the b(t)-adic normal form of the last row against the
        fundamental generator found by the pair analysis
        """
        analysis = self.chain_of_thought(context)
        results = analysis['results']
        if context.get('fundamental') is None:
            analysis['conclusions'] = ['no fundamental generator to test against']
            return analysis

        reasoning_steps = [
            self.run_step('Last Row Normal Form', lambda: self._normal_form(context, results)),
            self.run_step('Kernel Variance', lambda: self._kernel_variance(context, results))
        ]

        analysis['reasoning_steps'] = reasoning_steps
        analysis['conclusions'] = self._generate_conclusions(results)
        return analysis

    def validate(self, analysis: Dict[str, Any]) -> bool:
        """
        A certified normal form needs at least two independent remainders
        """
        certificate = analysis.get('results', {}).get('normal_form')
        if certificate is None:
            return True
        return not certificate.certified or (certificate.in_normal_form and len(certificate.remainders) >= 2)

    def _normal_form(self, context: Dict[str, Any], results: Dict[str, Any]) -> Dict[str, Any]:
        certificate = check_normal_form(context['representation'], context['fundamental'])
        results['normal_form'] = certificate
        return certificate.to_json()

    def _kernel_variance(self, context: Dict[str, Any], results: Dict[str, Any]) -> Dict[str, Any]:
        rep = context['representation']
        ext = build_field(rep.field.p, rep.field.m * context['ext_degree'])
        value = kernel_variance(rep, rep.x(rep.n), context['fundamental'], ext)
        results['kernel_variance'] = value
        return {'field': repr(ext), 'variance': value}

    def _generate_conclusions(self, results: Dict[str, Any]) -> List[str]:
        certificate = results.get('normal_form')
        if certificate is None:
            return ['normal form check failed']
        if certificate.certified:
            return [f"last row in normal form with remainder span {certificate.d_span}"]
        if certificate.in_normal_form:
            return [f"last row in normal form but remainder span is only {certificate.d_span}"]
        return certificate.failures
