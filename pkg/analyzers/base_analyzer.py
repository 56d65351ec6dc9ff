from abc import ABC, abstractmethod
import logging
from typing import Any, Callable, Dict, List

from errors import BudgetExceeded, GaInvariantError


class RepresentationAnalyzer(ABC):
    def __init__(self, config: Dict[str, Any]):
        self.name = config['name']
        self.expertise = config['expertise']
        self.monomial_cap = config['monomial_cap']
        self.candidate_cap = config['candidate_cap']
        self.logger = logging.getLogger(self.name)

    @abstractmethod
    def analyze(self, context: Dict[str, Any]) -> Dict[str, Any]:
        """Analyze the representation in the context and report certified findings"""
        pass

    @abstractmethod
    def validate(self, analysis: Dict[str, Any]) -> bool:
        """Re-check the findings of an analysis"""
        pass

    def chain_of_thought(self, context: Dict[str, Any]) -> Dict[str, Any]:
        """
        Skeleton of a step-by-step analysis; every step records its findings
        or the error that stopped it
        """
        self.logger.info(f"Starting analysis for {self.name}")

        analysis = {
            'analyzer_name': self.name,
            'expertise': self.expertise,
            'context': context,
            'reasoning_steps': [],
            'results': {},
            'conclusions': [],
            'validation': {},
            'cross_validation_needed': True
        }

        return analysis

    def run_step(self, title: str, step: Callable[[], Dict[str, Any]]) -> Dict[str, Any]:
        """Run one reasoning step; library errors are recorded, budget overruns propagate"""
        try:
            return {'step': title, 'analysis': step()}
        except BudgetExceeded:
            raise
        except GaInvariantError as exc:
            self.logger.warning(f"{title} stopped: {exc}")
            return {'step': title, 'error': str(exc)}

    def cross_validate(self, other_analyzers: List['RepresentationAnalyzer'], analysis: Dict[str, Any]) -> Dict[str, Any]:
        """Cross-validate analysis with other analyzers"""
        validated_analysis = analysis.copy()
        validated_analysis['cross_validation_results'] = []

        for analyzer in other_analyzers:
            if analyzer.name != self.name:
                validation = analyzer.validate(analysis)
                validated_analysis['cross_validation_results'].append({
                    'validator': analyzer.name,
                    'validated': validation
                })

        return validated_analysis

    @staticmethod
    def step_failed(analysis: Dict[str, Any]) -> bool:
        return any('error' in step for step in analysis.get('reasoning_steps', []))
