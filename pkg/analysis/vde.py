"""Invariants of a principle action by substituting the slice t = -g/h.

For a t-pair (g, h), beta(x_i) evaluated at t = -g/h is invariant in k[X]_h,
and these values generate the localized invariant ring.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Union

from algebra.groebner import SubalgebraMembership
from algebra.mpoly import MPoly
from algebra.orering import AdditivePoly
from analysis.hfrac import HFrac
from analysis.kernel_reduction import reduce_by_kernel
from config import MEMBERSHIP_BOUND
from errors import InvariantError, NotInvariant, NotPrinciple
from pairs.pair import Pair, is_pair
from representation.coaction import coact, homogeneous_invariants, is_invariant
from representation.garep import Representation

logger = logging.getLogger(__name__)


@dataclass
class LocalizedInvariantRing:
    generators: List[MPoly]
    h: MPoly
    exponents: List[int] = field(default_factory=list)
    certified_degree: int = -1
    gaps: Dict[int, List[MPoly]] = field(default_factory=dict)

    def fractions(self) -> List[HFrac]:
        """f_i = generators[i] / h^exponents[i]"""
        return [HFrac(g, self.h, e) for g, e in zip(self.generators, self.exponents)]

    def ring_generators(self) -> List[MPoly]:
        """Generators of the polynomial subalgebra whose localization at h is the ring"""
        out = [g for g in self.generators if not g.is_zero() and not g.is_constant()]
        if not self.h.is_constant() and self.h not in out:
            out.append(self.h)
        return out

    def contains(self, f: MPoly, e_bound: int = MEMBERSHIP_BOUND) -> bool:
        gens = self.ring_generators()
        if not gens:
            return f.is_constant()
        return SubalgebraMembership(gens).member(f, self.h, e_bound) is not None

    def to_json(self) -> Dict:
        return {
            'generators': [str(f) for f in self.fractions()],
            'numerators': [str(g) for g in self.generators],
            'h': str(self.h),
            'exponents': list(self.exponents),
            'certified_degree': self.certified_degree,
            'gaps': {str(d): [str(f) for f in fs] for d, fs in sorted(self.gaps.items())}
        }


def verify_invariant(rep: Representation, f: Union[MPoly, HFrac]) -> bool:
    """delta(f) = 0; for N / h^e with h invariant this is delta(N) = 0"""
    if isinstance(f, HFrac):
        return is_invariant(rep, f.h) and is_invariant(rep, f.num)
    return is_invariant(rep, f)


def slice_value(rep: Representation, i: int, pair: Pair) -> HFrac:
    """beta(x_i) at t = -g/h, as N / h^e in lowest terms"""
    image = coact(rep, rep.x(i))
    top = image.degree
    minus_g = -rep.ring.convert(pair.g)
    h = rep.ring.convert(pair.h)
    num = rep.ring.zero()
    for e, phi in image.items():
        num = num + phi * (minus_g ** e) * (h ** (top - e))
    return HFrac(num, h, top).to_lowest_terms()


def vde_generators(rep: Representation, pair: Pair, certify_degree: int = 0,
                   e_bound: int = MEMBERSHIP_BOUND) -> LocalizedInvariantRing:
    if pair.is_trivial() or pair.c.degree != 0 or pair.c.coeff(0) != 1:
        raise NotPrinciple(f"slice substitution needs a t-pair, got c = {pair.c}")
    if not is_pair(rep, pair.g, pair.h, pair.c):
        raise NotPrinciple(f"{pair} is not a pair for {rep!r}")
    values = [slice_value(rep, i, pair) for i in range(1, rep.n + 1)]
    for i, v in enumerate(values, start=1):
        if not verify_invariant(rep, v):
            raise NotInvariant(f"slice value of x{i} is not invariant: {v}")
    ring = LocalizedInvariantRing([v.num for v in values], rep.ring.convert(pair.h), [v.e for v in values])
    logger.info(f"Slice invariants of {rep!r} localized at {ring.h}: {[str(v) for v in values]}")
    if certify_degree > 0:
        certify(rep, ring, certify_degree, e_bound)
    return ring


def quasi_principle_generators(rep: Representation, pair: Pair, certify_degree: int = 0,
                               e_bound: int = MEMBERSHIP_BOUND) -> LocalizedInvariantRing:
    """Slice invariants for a c(t)-pair whose kernel acts trivially: the action
    factors through s = c(t), where (g, h) is an s-pair with the same invariants"""
    reduced = reduce_by_kernel(rep, pair.c).reduced
    principle = Pair(reduced.ring.convert(pair.g), reduced.ring.convert(pair.h),
                     AdditivePoly.identity(rep.field), pair.kind)
    ring = vde_generators(reduced, principle, 0, e_bound)
    if certify_degree > 0:
        certify(rep, ring, certify_degree, e_bound)
    return ring


def certify(rep: Representation, ring: LocalizedInvariantRing, degree: int,
            e_bound: int = MEMBERSHIP_BOUND) -> LocalizedInvariantRing:
    """Check every oracle invariant of degree <= degree for membership; the
    certified degree is the largest bound below the first gap"""
    gens = ring.ring_generators()
    membership = SubalgebraMembership(gens) if gens else None
    ring.gaps = {}
    for d in range(1, degree + 1):
        for f in homogeneous_invariants(rep, d):
            if membership is None or membership.member(f, ring.h, e_bound) is None:
                ring.gaps.setdefault(d, []).append(f)
    ring.certified_degree = min(ring.gaps, default=degree + 1) - 1
    if ring.gaps:
        logger.warning(f"Oracle invariants outside the localized ring in degrees {sorted(ring.gaps)}")
    return ring


def rewrite_invariant(rep: Representation, pair: Pair, r: MPoly,
                      ring: Optional[LocalizedInvariantRing] = None) -> HFrac:
    """r(f_1, ..., f_n) in k[X]_h, asserted equal to r"""
    r = rep.ring.convert(r)
    if not verify_invariant(rep, r):
        raise NotInvariant(f"{r} is not invariant")
    ring = ring or vde_generators(rep, pair)
    values = ring.fractions()
    result = HFrac(rep.ring.zero(), ring.h)
    for m, a in r.terms.items():
        term = HFrac(rep.ring.constant(a), ring.h)
        for v, e in zip(values, m):
            if e:
                term = term * (v ** e)
        result = result + term
    if result != HFrac.from_poly(r, ring.h):
        raise InvariantError(f"{r} evaluated at the slice invariants gives {result}")
    return result.to_lowest_terms()
