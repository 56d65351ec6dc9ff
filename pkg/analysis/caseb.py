"""Local invariants when the kernel of b(t) acts non-trivially.

For a b-pair (g, h) with b separable, adjoin a root s of b(s) + g/h to k(X).
The kernel of b acts on the roots by translation s -> s + kappa, so the
co-action images of x_n evaluated at t = s + kappa form a Galois orbit; its
elementary symmetric functions are s-free invariants in k[X]_h.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from algebra.field import FieldSpec, build_field
from algebra.groebner import SubalgebraMembership
from algebra.mpoly import MPoly, PolyRing
from algebra.orering import AdditivePoly, kernel_points, separable_split
from analysis.hfrac import HFrac
from analysis.vde import verify_invariant
from config import MEMBERSHIP_BOUND, MONOMIAL_CAP
from errors import (DegreeBudgetExceeded, EliminationBudgetExceeded, InseparableB, InvariantError,
                    KernelNotSplit, NotCaseB, NotInvariant, SearchSpaceTooLarge)
from pairs.pair import Pair, is_pair, kernel_acts_trivially
from representation.coaction import coact, homogeneous_invariants
from representation.garep import Representation

logger = logging.getLogger(__name__)

Element = List[HFrac]


class EtaleAlgebra:
    """k(X)_h[s] / (b(s) + g/h) with elements stored as s-coefficient lists"""

    def __init__(self, b: AdditivePoly, g: MPoly, h: MPoly):
        self.field = g.field
        self.p = self.field.p
        self.b = b.monic()
        self.h = h
        self.dim = self.p ** self.b.degree
        self.slice = HFrac(g, h, 1)

    def constant(self, f: HFrac) -> Element:
        return [f] + [self._zero() for _ in range(self.dim - 1)]

    def poly(self, f: MPoly) -> Element:
        return self.constant(HFrac(f, self.h))

    def one(self) -> Element:
        return self.poly(self.h.ring.one())

    def zero(self) -> Element:
        return [self._zero() for _ in range(self.dim)]

    def s_plus(self, kappa: int) -> Element:
        out = self.zero()
        out[0] = HFrac(self.h.ring.constant(kappa), self.h)
        out[1] = HFrac(self.h.ring.one(), self.h)
        return out

    def _zero(self) -> HFrac:
        return HFrac(self.h.ring.zero(), self.h)

    def reduce(self, coeffs: Sequence[HFrac]) -> Element:
        """Apply s^D = -sum_{i<d} a_i s^{p^i} - g/h from the top down"""
        c = list(coeffs)
        for k in range(len(c) - 1, self.dim - 1, -1):
            top = c[k]
            if top.is_zero():
                continue
            base = k - self.dim
            for i, a in enumerate(self.b.coeffs[:-1]):
                if a:
                    c[base + self.p ** i] = c[base + self.p ** i] - top.scale(a)
            c[base] = c[base] - top * self.slice
            c[k] = self._zero()
        c = c[:self.dim]
        return c + [self._zero() for _ in range(self.dim - len(c))]

    def add(self, a: Element, b: Element) -> Element:
        return [x + y for x, y in zip(a, b)]

    def neg(self, a: Element) -> Element:
        return [-x for x in a]

    def mul(self, a: Element, b: Element) -> Element:
        out = [self._zero() for _ in range(2 * self.dim - 1)]
        for i, x in enumerate(a):
            if x.is_zero():
                continue
            for j, y in enumerate(b):
                if not y.is_zero():
                    out[i + j] = out[i + j] + x * y
        return self.reduce(out)

    def scale(self, a: Element, f: HFrac) -> Element:
        return [x * f for x in a]

    def shift(self, a: Element, kappa: int) -> Element:
        """The automorphism s -> s + kappa for kappa in ker(b)"""
        out = self.zero()
        power = self.one()
        step = self.s_plus(kappa)
        for x in a:
            if not x.is_zero():
                out = self.add(out, self.scale(power, x))
            power = self.mul(power, step)
        return out

    def is_s_free(self, a: Element) -> bool:
        return all(x.is_zero() for x in a[1:])

    def equal(self, a: Element, b: Element) -> bool:
        return all(x == y for x, y in zip(a, b))


@dataclass
class CasebData:
    pair: Pair
    b: AdditivePoly
    working_field: FieldSpec
    kernel: List[int]
    defining_polynomial: MPoly
    base_invariants: List[HFrac]
    orbit: List[Element]
    symmetric: List[HFrac]
    degree_bound: int = 0
    gaps: Dict[int, List[str]] = field(default_factory=dict)
    algebra: Optional[EtaleAlgebra] = None

    @property
    def generators(self) -> List[HFrac]:
        return [f for f in self.base_invariants + self.symmetric if not f.is_zero()]

    @property
    def complete_up_to(self) -> int:
        return min(self.gaps, default=self.degree_bound + 1) - 1

    def to_json(self) -> Dict:
        return {
            'pair': self.pair.to_json(),
            'b': self.b.to_json(),
            'b_t': str(self.b),
            'working_field': repr(self.working_field),
            'kernel': list(self.kernel),
            'defining_polynomial': str(self.defining_polynomial),
            'base_invariants': [str(f) for f in self.base_invariants],
            'symmetric': [str(f) for f in self.symmetric],
            'degree_bound': self.degree_bound,
            'gaps': {str(d): v for d, v in sorted(self.gaps.items())}
        }


def splitting_field(b: AdditivePoly, max_degree: int = 6) -> FieldSpec:
    """Smallest F_{q^e} containing all p^{deg b} roots of b"""
    fld = b.field
    size = fld.p ** b.degree
    for e in range(1, max_degree + 1):
        ext = build_field(fld.p, fld.m * e)
        if len(kernel_points(b, ext)) == size:
            return ext
    raise KernelNotSplit(f"ker({b}) does not split over extensions of degree <= {max_degree}")


def _restrict(f: MPoly, ring: PolyRing, table: Sequence[int]) -> MPoly:
    """Pull a polynomial with coefficients in the image of the embedding back to ring"""
    inverse = {v: k for k, v in enumerate(table)}
    terms = {}
    for m, a in f.terms.items():
        if a not in inverse:
            raise InvariantError(f"{f} has a coefficient outside the base field")
        terms[m] = inverse[a]
    return MPoly(ring, terms)


def caseb_local_invariants(rep: Representation, pair: Pair, degree_bound: int = 2,
                           e_bound: int = MEMBERSHIP_BOUND, max_ext_degree: int = 6) -> CasebData:
    b = pair.c.monic()
    _, w = separable_split(b)
    if w > 0:
        raise InseparableB(w)
    if pair.is_trivial() or not is_pair(rep, pair.g, pair.h, pair.c):
        raise NotCaseB(f"{pair} is not a non-trivial pair")
    if kernel_acts_trivially(rep, b):
        raise NotCaseB(f"ker({b}) acts trivially; use the slice invariants instead")
    if degree_bound > 0 and len(rep.ring.monomials_of_degree(degree_bound)) > MONOMIAL_CAP:
        raise DegreeBudgetExceeded(f"degree bound {degree_bound} exceeds the monomial cap {MONOMIAL_CAP}")

    ext = splitting_field(b, max_ext_degree)
    table = rep.field.embedding(ext)
    rep_ext = rep.extend(ext)
    ring = rep_ext.ring
    b_ext = AdditivePoly(ext, [table[a] for a in b.coeffs])
    g = rep.ring.convert(pair.g).map_coeffs(table, ring)
    h = rep.ring.convert(pair.h).map_coeffs(table, ring)
    # pair.g / pair.h is relative to pair.c; rescale to the monic b
    unit = ext.inv(table[pair.c.leading()])
    g = g.scale(unit)
    algebra = EtaleAlgebra(b_ext, g, h)
    kernel = sorted(kernel_points(b, ext))

    def evaluate_row(i: int, kappa: int) -> Element:
        image = coact(rep_ext, rep_ext.x(i))
        step = algebra.s_plus(kappa)
        out = algebra.zero()
        power = algebra.one()
        for e in range(image.degree + 1):
            phi = image.coeff(e)
            if not phi.is_zero():
                out = algebra.add(out, algebra.scale(power, HFrac(phi, h)))
            power = algebra.mul(power, step)
        return out

    base_invariants: List[HFrac] = []
    for i in range(1, rep.n):
        value = evaluate_row(i, 0)
        if not algebra.is_s_free(value):
            raise NotCaseB(f"row {i} does not factor through b(t)")
        base_invariants.append(value[0])

    orbit = [evaluate_row(rep.n, kappa) for kappa in kernel]

    # prod_kappa (Y - r_kappa) = sum_j (-1)^j e_j Y^{D-j}
    coeffs: List[Element] = [algebra.one()]
    for r in orbit:
        shifted = [algebra.zero()] + coeffs
        for k, c in enumerate(coeffs):
            shifted[k] = algebra.add(shifted[k], algebra.neg(algebra.mul(r, c)))
        coeffs = shifted
    size = len(orbit)
    symmetric_ext: List[HFrac] = []
    for j in range(1, size + 1):
        e_j = coeffs[size - j]
        if not algebra.is_s_free(e_j):
            raise InvariantError(f"symmetric function e_{j} involves s")
        value = e_j[0] if j % 2 == 0 else -e_j[0]
        symmetric_ext.append(value.to_lowest_terms())

    base_h = rep.ring.convert(pair.h)

    def to_base(f: HFrac) -> HFrac:
        f = f.to_lowest_terms()
        return HFrac(_restrict(f.num, rep.ring, table), base_h, f.e)

    base_invariants = [to_base(f) for f in base_invariants]
    symmetric = [to_base(f) for f in symmetric_ext]
    for f in base_invariants + symmetric:
        if not verify_invariant(rep, f):
            raise NotInvariant(f"{f} is not invariant")

    s_ring = PolyRing(ext, list(ring.names) + ["s"])
    defining = s_ring.zero()
    for i, a in enumerate(b_ext.coeffs):
        if a:
            exp = [0] * ring.nvars + [rep.field.p ** i]
            defining = defining + s_ring.convert(h).mul_term(tuple(exp), a)
    defining = defining + s_ring.convert(g)

    data = CasebData(pair, b, ext, kernel, defining, base_invariants, orbit, symmetric, degree_bound,
                     algebra=algebra)
    measure_completeness(rep, data, degree_bound, e_bound)
    logger.info(f"Case-(b) invariants of {rep!r} over {ext!r}: {[str(f) for f in symmetric]}")
    return data


def _by_degree(gens: List[MPoly]) -> List[List[MPoly]]:
    """Increasing prefixes of the generators sorted by degree"""
    ordered = sorted(gens, key=lambda f: (f.total_degree(), f.graded_key()))
    return [ordered[:k] for k in range(1, len(ordered) + 1)]


def measure_completeness(rep: Representation, data: CasebData, degree_bound: int,
                         e_bound: int = MEMBERSHIP_BOUND) -> Dict[int, List[str]]:
    """Per degree, the oracle invariants outside k[f_1..f_{n-1}, e_1..]_h.

    Membership in a prefix of the degree-sorted generators implies membership
    in the whole subalgebra, so small prefixes are tried first.
    """
    h = rep.ring.convert(data.pair.h)
    gens = [f.num for f in data.generators if not f.num.is_constant()]
    if not h.is_constant() and h not in gens:
        gens.append(h)
    memberships: Dict[int, SubalgebraMembership] = {}
    data.gaps = {}
    for d in range(1, degree_bound + 1):
        try:
            oracle = homogeneous_invariants(rep, d, MONOMIAL_CAP)
        except SearchSpaceTooLarge as exc:
            raise DegreeBudgetExceeded(str(exc))
        for f in oracle:
            found = False
            for k, prefix in enumerate(_by_degree(gens)):
                try:
                    if k not in memberships:
                        memberships[k] = SubalgebraMembership(prefix)
                    if memberships[k].member(f, h, e_bound) is not None:
                        found = True
                        break
                except EliminationBudgetExceeded:
                    logger.warning(f"Membership budget exhausted for {len(prefix)} generators")
                    break
            if not found:
                data.gaps.setdefault(d, []).append(str(f))
    for d, missing in sorted(data.gaps.items()):
        logger.warning(f"Completeness gap in degree {d}: {missing}")
    return data.gaps


def orbit_is_translation_stable(data: CasebData) -> bool:
    """s -> s + k' maps r_k to r_{k + k'}"""
    algebra = data.algebra
    ext = data.working_field
    index = {k: i for i, k in enumerate(data.kernel)}
    for shift in data.kernel:
        for kappa, r in zip(data.kernel, data.orbit):
            target = data.orbit[index[ext.add(kappa, shift)]]
            if not algebra.equal(algebra.shift(r, shift), target):
                return False
    return True
