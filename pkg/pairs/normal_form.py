"""The b(t)-adic normal form of the last row.

A representation is in normal form for b when every q_{i,j} with i < n lies
in k[b(t)], the last row entries over non-invariant coordinates do too, and
over invariant coordinates x_j the last row reads q_{n,j} = s_j(b(t)) + d_j(t)
with d_j additive and not in the left ideal generated by b. The structural
certificate additionally asks the d_j to span at least two dimensions.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Set

from algebra.field import FieldSpec
from algebra.linalg import rank
from algebra.orering import AdditivePoly, is_additive, kernel_points, right_divide, to_additive
from algebra.upoly import UPoly, b_adic_expansion, b_adic_membership
from pairs.pair import variance
from representation.coaction import coact
from representation.garep import Representation

logger = logging.getLogger(__name__)


@dataclass
class NormalFormCertificate:
    b: AdditivePoly
    remainders: Dict[int, UPoly] = field(default_factory=dict)
    s_digits: Dict[int, List[int]] = field(default_factory=dict)
    d_span: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def in_normal_form(self) -> bool:
        return not self.failures

    @property
    def certified(self) -> bool:
        return self.in_normal_form and self.d_span >= 2

    def to_json(self) -> Dict:
        return {'b': self.b.to_json(), 'd': {str(j): str(d) for j, d in sorted(self.remainders.items())},
                's': {str(j): v for j, v in sorted(self.s_digits.items())},
                'd_span': self.d_span, 'failures': list(self.failures), 'certified': self.certified}


def invariant_coordinates(rep: Representation) -> Set[int]:
    """Indices j with x_j invariant, i.e. an empty row j"""
    return {j for j in range(1, rep.n + 1) if not rep.row(j)}


def check_normal_form(rep: Representation, b: AdditivePoly) -> NormalFormCertificate:
    cert = NormalFormCertificate(b.monic())
    base = cert.b.to_upoly()
    n = rep.n
    for (i, j), q in rep.q.items():
        if i < n and b_adic_membership(q, base) is None:
            cert.failures.append(f"q{i},{j} is not a polynomial in b(t)")
    invariant = invariant_coordinates(rep)
    for j, q in sorted(rep.row(n).items()):
        if j not in invariant:
            if b_adic_membership(q, base) is None:
                cert.failures.append(f"q{n},{j} over a non-invariant coordinate is not a polynomial in b(t)")
            continue
        digits = b_adic_expansion(q, base)
        d = digits[0] if digits else UPoly(rep.field)
        if any(not r.is_constant() for r in digits[1:]):
            cert.failures.append(f"q{n},{j} has a non-constant higher b-adic digit")
            continue
        if not is_additive(d):
            cert.failures.append(f"remainder of q{n},{j} is not additive")
            continue
        cert.s_digits[j] = [0] + [r.coeff(0) for r in digits[1:]]
        if d.is_zero():
            continue
        # deg d < deg b, so d is its own remainder modulo the left ideal of b
        _, rem = right_divide(to_additive(d), cert.b)
        if not rem.is_zero():
            cert.remainders[j] = d
    width = max((d.degree + 1 for d in cert.remainders.values()), default=0)
    cert.d_span = rank(rep.field, [list(d.coeffs) + [0] * (width - len(d.coeffs))
                                   for d in cert.remainders.values()], width)
    logger.debug(f"Normal form for b = {cert.b}: d-span {cert.d_span}, failures {cert.failures}")
    return cert


def kernel_variance(rep: Representation, g, b: AdditivePoly, ext: FieldSpec) -> int:
    """Dimension of the span of the ker(b)-translates of g over ext"""
    rep_ext = rep.extend(ext)
    g_ext = g.map_coeffs(rep.field.embedding(ext), rep_ext.ring)
    image = coact(rep_ext, g_ext)
    translates = [image.evaluate(kappa) for kappa in sorted(kernel_points(b, ext))]
    if g.constant_term():
        translates.append(rep_ext.ring.one())
    monos = sorted({m for f in translates for m in f.terms})
    return rank(ext, [[f.terms.get(m, 0) for m in monos] for f in translates], len(monos))


def last_coordinate_variance(rep: Representation) -> int:
    return variance(rep, rep.x(rep.n))
