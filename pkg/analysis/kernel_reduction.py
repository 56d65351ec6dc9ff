"""Factoring an action through b(t) when ker(b) acts trivially"""
import logging
from dataclasses import dataclass
from typing import Dict

from algebra.orering import AdditivePoly
from algebra.upoly import UPoly, b_adic_expansion, b_adic_membership
from errors import KernelNotTrivial, ZeroInput
from representation.garep import Representation, validate

logger = logging.getLogger(__name__)


@dataclass
class ReducedAction:
    """q_{i,j}(t) = reduced.q_{i,j}(b(t)); the reduced action is in the parameter s = b(t)"""
    reduced: Representation
    b: AdditivePoly
    original: Representation

    def lift(self) -> Representation:
        """Substitute s = b(t) back"""
        base = self.b.to_upoly()
        q = {entry: poly.compose(base) for entry, poly in self.reduced.q.items()}
        return Representation(self.original.field, self.original.n, q, self.original.name)

    def to_json(self) -> Dict:
        return {'b': self.b.to_json(), 'b_t': str(self.b), 'reduced': self.reduced.to_json()}


def reduce_by_kernel(rep: Representation, b: AdditivePoly) -> ReducedAction:
    if b.is_zero():
        raise ZeroInput("cannot reduce by the zero additive polynomial")
    base = b.to_upoly()
    q: Dict = {}
    for entry in rep.entries():
        digits = b_adic_membership(rep.q[entry], base)
        if digits is None:
            witness = next(d for d in b_adic_expansion(rep.q[entry], base) if not d.is_constant())
            raise KernelNotTrivial(entry, witness)
        q[entry] = UPoly(rep.field, digits)
    name = f"{rep.name}/b" if rep.name else ""
    reduced = Representation(rep.field, rep.n, q, name)
    validate(reduced)
    logger.info(f"Reduced {rep!r} through b(t) = {b}")
    return ReducedAction(reduced, b, rep)
