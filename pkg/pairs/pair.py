"""c(t)-pairs: (g, h) with delta(g) = c(t) h and h invariant"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from algebra.linalg import rank
from algebra.mpoly import MPoly
from algebra.orering import AdditivePoly
from algebra.upoly import UPoly, b_adic_expansion, b_adic_membership
from representation.coaction import coact, delta
from representation.garep import Entry, Representation
from representation.tpoly import TPoly

logger = logging.getLogger(__name__)

PRINCIPLE = 'principle'
QUASI_PRINCIPLE = 'quasi-principle'
GENERAL = 'general'


@dataclass
class Pair:
    g: MPoly
    h: MPoly
    c: AdditivePoly
    kind: str = GENERAL

    def is_trivial(self) -> bool:
        return self.h.is_zero()

    @property
    def degree(self) -> int:
        return self.g.total_degree()

    def sort_key(self) -> Tuple:
        return (self.c.degree, self.c.coeffs, self.h.graded_key(), self.g.graded_key())

    def to_json(self) -> Dict:
        """g and h as (exponent array, coefficient) lists; `display` is for reading only"""
        return {'g': self.g.to_json(), 'h': self.h.to_json(), 'c': self.c.to_json(),
                'c_t': str(self.c), 'kind': self.kind, 'display': str(self)}

    @classmethod
    def from_json(cls, rep: Representation, data: Dict) -> 'Pair':
        return cls(MPoly.from_json(rep.ring, data['g']), MPoly.from_json(rep.ring, data['h']),
                   AdditivePoly.from_json(rep.field, data['c']), data.get('kind', GENERAL))

    def __str__(self) -> str:
        return f"({self.g}, {self.h}, {self.c})"


def c_times(rep: Representation, c: AdditivePoly, h: MPoly) -> TPoly:
    """c(t) h as a TPoly"""
    p = rep.field.p
    return TPoly(rep.ring, {p ** i: h.scale(a) for i, a in enumerate(c.coeffs) if a})


def is_pair(rep: Representation, g: MPoly, h: MPoly, c: AdditivePoly) -> bool:
    g = rep.ring.convert(g)
    h = rep.ring.convert(h)
    if not delta(rep, h).is_zero():
        return False
    return delta(rep, g) == c_times(rep, c, h)


def variance(rep: Representation, g: MPoly) -> int:
    """Dimension of the span of the t-coefficients of beta(g), with constants
    when g has a constant term"""
    image = coact(rep, g)
    polys = [f for _, f in image.items()]
    if g.constant_term():
        polys.append(rep.ring.one())
    monos = sorted({m for f in polys for m in f.terms})
    vectors = [[f.terms.get(m, 0) for m in monos] for f in polys]
    return rank(rep.field, vectors, len(monos))


def kernel_obstruction(rep: Representation, b: AdditivePoly) -> Optional[Tuple[Entry, UPoly]]:
    """First entry (i, j) with q_{i,j} outside k[b(t)], with its offending b-adic digit"""
    base = b.to_upoly()
    for entry in rep.entries():
        q = rep.q[entry]
        if b_adic_membership(q, base) is None:
            digit = next(d for d in b_adic_expansion(q, base) if not d.is_constant())
            return entry, digit
    return None


def kernel_acts_trivially(rep: Representation, b: AdditivePoly) -> bool:
    """Every q_{i,j} lies in k[b(t)], i.e. the action factors through b"""
    return kernel_obstruction(rep, b) is None


def pair_kind(rep: Representation, c: AdditivePoly) -> str:
    if c.degree == 0:
        return PRINCIPLE
    if kernel_acts_trivially(rep, c):
        return QUASI_PRINCIPLE
    return GENERAL


def graded_lead(f: MPoly) -> Tuple[Tuple[int, ...], int]:
    """Leading term under graded-lex with x1 < ... < xn"""
    m = max(f.terms, key=lambda e: (sum(e), e[::-1]))
    return m, f.terms[m]


def make_pair(rep: Representation, g: MPoly, h: MPoly, c: AdditivePoly) -> Pair:
    """Canonical scaling: c monic, h monic-leading, g scaled to match"""
    fld = rep.field
    unit = fld.inv(c.leading())
    c = c.scale(unit)
    if not h.is_zero():
        # delta(g) = c h  =>  delta(g / (lc_c lc_h)) = (c / lc_c)(h / lc_h)
        inv_lead = fld.inv(graded_lead(h)[1])
        g = g.scale(fld.mul(unit, inv_lead))
        h = h.scale(inv_lead)
    return Pair(g, h, c, pair_kind(rep, c))
