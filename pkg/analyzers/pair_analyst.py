from typing import Dict, Any, List

from algebra.orering import right_divide
from pairs.fundamental import fundamental_generator, fundamental_witness
from pairs.pair import is_pair, kernel_obstruction
from pairs.search import find_pairs_bounded
from .base_analyzer import RepresentationAnalyzer


class PairAnalyst(RepresentationAnalyzer):
    def analyze(self, context: Dict[str, Any]) -> Dict[str, Any]:
        """
        Searches for c(t)-pairs, folds them into the fundamental generator
        and decides whether its kernel acts trivially
        """
        analysis = self.chain_of_thought(context)
        results = analysis['results']

        search = self.run_step('Bounded Pair Search', lambda: self._search_pairs(context, results))
        reasoning_steps = [search]
        if 'error' not in search and results['pairs']:
            reasoning_steps.append(self.run_step('Fundamental Ideal', lambda: self._fundamental_ideal(context, results)))
            reasoning_steps.append(self.run_step('Kernel Triviality', lambda: self._kernel_triviality(context, results)))

        analysis['reasoning_steps'] = reasoning_steps
        analysis['conclusions'] = self._generate_conclusions(results)
        return analysis

    def validate(self, analysis: Dict[str, Any]) -> bool:
        """
        Re-verifies every reported pair and the fundamental generator
        """
        results = analysis.get('results', {})
        if 'pairs' not in results:
            return True
        rep = analysis['context']['representation']
        validation_criteria = [
            self._validate_pairs(rep, results),
            self._validate_fundamental(results)
        ]
        return all(validation_criteria)

    def _search_pairs(self, context: Dict[str, Any], results: Dict[str, Any]) -> Dict[str, Any]:
        rep = context['representation']
        pairs = find_pairs_bounded(rep, context['max_degree'], self.monomial_cap, self.candidate_cap)
        results['pairs'] = pairs
        return {
            'max_degree': context['max_degree'],
            'pair_count': len(pairs),
            'c_values': sorted({str(p.c) for p in pairs})
        }

    def _fundamental_ideal(self, context: Dict[str, Any], results: Dict[str, Any]) -> Dict[str, Any]:
        rep = context['representation']
        b = fundamental_generator(rep, results['pairs'])
        results['fundamental'] = b
        results['witness'] = fundamental_witness(rep, results['pairs'], b)
        return {
            'generator': str(b),
            'witness': str(results['witness'])
        }

    def _kernel_triviality(self, context: Dict[str, Any], results: Dict[str, Any]) -> Dict[str, Any]:
        obstruction = kernel_obstruction(context['representation'], results['fundamental'])
        results['kernel_trivial'] = obstruction is None
        results['obstruction'] = obstruction[0] if obstruction else None
        return {
            'kernel_trivial': obstruction is None,
            'obstruction': list(obstruction[0]) if obstruction else None,
            'digit': str(obstruction[1]) if obstruction else None
        }

    def _generate_conclusions(self, results: Dict[str, Any]) -> List[str]:
        if not results.get('pairs'):
            return ['no non-trivial pairs in the searched space']
        conclusions = [f"{len(results['pairs'])} non-trivial pairs"]
        if 'fundamental' in results:
            conclusions.append(f"fundamental ideal generated by {results['fundamental']}")
        if 'kernel_trivial' in results:
            conclusions.append('kernel of the generator acts trivially' if results['kernel_trivial']
                               else f"kernel acts non-trivially, obstruction at q{results['obstruction']}")
        return conclusions

    # Validation helper methods
    def _validate_pairs(self, rep, results: Dict[str, Any]) -> bool:
        return all(is_pair(rep, p.g, p.h, p.c) for p in results['pairs'])

    def _validate_fundamental(self, results: Dict[str, Any]) -> bool:
        b = results.get('fundamental')
        if b is None:
            return True
        return all(right_divide(p.c, b)[1].is_zero() for p in results['pairs'])
