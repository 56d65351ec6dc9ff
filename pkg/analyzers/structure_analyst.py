from typing import Dict, Any, List

from pairs.pair import variance
from representation.coaction import dual_fixed_vectors, invariant_covectors, linear_form, socle_series
from .base_analyzer import RepresentationAnalyzer


class StructureAnalyst(RepresentationAnalyzer):
    def analyze(self, context: Dict[str, Any]) -> Dict[str, Any]:
        """
        Computes the socle series of V*, the fixed vectors of V and the
        variance of the top adapted coordinate
        """
        analysis = self.chain_of_thought(context)
        results = analysis['results']

        reasoning_steps = [
            self.run_step('Socle Series', lambda: self._socle_series(context, results)),
            self.run_step('Dual Fixed Vectors', lambda: self._dual_fixed_vectors(context, results)),
            self.run_step('Top Coordinate Variance', lambda: self._top_variance(context, results))
        ]

        analysis['reasoning_steps'] = reasoning_steps
        analysis['conclusions'] = self._generate_conclusions(results)
        return analysis

    def validate(self, analysis: Dict[str, Any]) -> bool:
        """
        Checks that the socle filtration is strictly increasing and starts at the invariants
        """
        results = analysis.get('results', {})
        if 'socle' not in results:
            return True
        rep = analysis['context']['representation']
        validation_criteria = [
            self._validate_filtration(results),
            self._validate_invariants(rep, results)
        ]
        return all(validation_criteria)

    def _socle_series(self, context: Dict[str, Any], results: Dict[str, Any]) -> Dict[str, Any]:
        structure = socle_series(context['representation'])
        results['socle'] = structure
        return {'dims': list(structure.dims), 'length': structure.length}

    def _dual_fixed_vectors(self, context: Dict[str, Any], results: Dict[str, Any]) -> Dict[str, Any]:
        fixed = dual_fixed_vectors(context['representation'])
        results['dual_fixed'] = fixed
        return {'dimension': len(fixed), 'indecomposable_certificate': len(fixed) == 1}

    def _top_variance(self, context: Dict[str, Any], results: Dict[str, Any]) -> Dict[str, Any]:
        rep = context['representation']
        structure = results['socle']
        top = structure.adapted_basis[-1]
        value = variance(rep, linear_form(rep, top))
        results['top_variance'] = value
        return {'coordinate': str(linear_form(rep, top)), 'variance': value}

    def _generate_conclusions(self, results: Dict[str, Any]) -> List[str]:
        conclusions = []
        if 'socle' in results:
            conclusions.append(f"socle series of length {results['socle'].length}, dims {results['socle'].dims}")
        if 'dual_fixed' in results:
            conclusions.append(f"dim V^G = {len(results['dual_fixed'])}")
        if 'top_variance' in results:
            conclusions.append(f"variance of the top adapted coordinate is {results['top_variance']}")
        return conclusions

    def zero_large_pedestal_criteria(self, results: Dict[str, Any]) -> List[Dict[str, Any]]:
        """The structural criteria for a vanishing large pedestal ideal"""
        structure = results.get('socle')
        if structure is None or 'top_variance' not in results:
            return [{'name': 'socle data available', 'passed': False, 'detail': 'structure analysis failed'}]
        jump = structure.dims[1] - structure.dims[0] if structure.length >= 2 else 0
        return [
            {'name': 'socle length is two', 'passed': structure.length == 2,
             'detail': f"dims {list(structure.dims)}"},
            {'name': 'soc2 / soc1 is one-dimensional', 'passed': structure.length == 2 and jump == 1,
             'detail': f"jump {jump}"},
            {'name': 'top coordinate variance exceeds two', 'passed': results['top_variance'] > 2,
             'detail': f"variance {results['top_variance']}"}
        ]

    # Validation helper methods
    def _validate_filtration(self, results: Dict[str, Any]) -> bool:
        dims = results['socle'].dims
        return all(a < b for a, b in zip(dims, dims[1:]))

    def _validate_invariants(self, rep, results: Dict[str, Any]) -> bool:
        return results['socle'].invariant_covectors == invariant_covectors(rep)
