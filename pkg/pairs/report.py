from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from algebra.field import FieldSpec, field_to_json
from algebra.orering import AdditivePoly
from pairs.pair import Pair

CASE_A = 'A'
CASE_B = 'B'
CASE_C = 'C'
INCONCLUSIVE = 'Inconclusive'


@dataclass
class Criterion:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> Dict[str, Any]:
        return {'name': self.name, 'passed': self.passed, 'detail': self.detail}


@dataclass
class ClassificationReport:
    case: str
    search_degree: int
    coefficient_field: Optional[FieldSpec] = None
    fundamental: Optional[AdditivePoly] = None
    pairs: List[Pair] = field(default_factory=list)
    witness: Optional[Pair] = None
    obstruction: Optional[tuple] = None
    criteria: List[Criterion] = field(default_factory=list)
    socle: Dict[str, Any] = field(default_factory=dict)
    normal_form: Optional[Dict[str, Any]] = None
    analyses: Dict[str, Any] = field(default_factory=dict)

    @property
    def structurally_certified(self) -> bool:
        return bool(self.normal_form and self.normal_form.get('certified'))

    def criterion(self, name: str) -> Optional[Criterion]:
        return next((c for c in self.criteria if c.name == name), None)

    def to_json(self) -> Dict[str, Any]:
        return {
            'case': self.case,
            'search_degree': self.search_degree,
            'field': field_to_json(self.coefficient_field) if self.coefficient_field is not None else None,
            'fundamental': self.fundamental.to_json() if self.fundamental is not None else None,
            'fundamental_t': str(self.fundamental) if self.fundamental is not None else None,
            'pairs': [p.to_json() for p in self.pairs],
            'witness': self.witness.to_json() if self.witness is not None else None,
            'obstruction': list(self.obstruction) if self.obstruction else None,
            'checks': [c.to_json() for c in self.criteria],
            'socle': self.socle,
            'normal_form': self.normal_form,
        }
