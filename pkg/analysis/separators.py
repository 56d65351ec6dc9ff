"""Separating invariants from the closure of the graph of the action.

The graph of (w, [t0 : t1]) -> y with y_0 = w_0 t1^d and y_i the co-action
image of x_i homogenized in (t0, t1) is eliminated against t0, t1. The colex
order makes y dominate, so the basis is also a basis over k(W). Reduced and
made monic there, its coefficients f_J(W) are invariant rational functions;
with w_0 = 1 their numerators and denominators in lowest terms separate
orbits where every top-degree t-coefficient and every denominator is nonzero.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from algebra.field import FieldSpec, build_field
from algebra.groebner import eliminate, poly_gcd
from algebra.mpoly import COLEX, Monomial, MPoly, PolyRing, from_terms, variable_names
from config import DEFAULT_SEED, EXTENSION_DEGREE
from pairs.pair import graded_lead
from representation.coaction import act_on_point, coact, is_invariant
from representation.garep import Representation

logger = logging.getLogger(__name__)


@dataclass
class GraphSepResult:
    degree: int
    u_description: List[MPoly]
    invariants: List[MPoly]
    gb: List[MPoly] = field(default_factory=list)

    def in_u(self, point: Sequence[int], ext: FieldSpec) -> bool:
        """Every leading coefficient is nonzero at the point"""
        return all(f.evaluate(point, ext) != 0 for f in self.u_description)

    def evaluate(self, point: Sequence[int], ext: FieldSpec) -> Tuple[int, ...]:
        return tuple(f.evaluate(point, ext) for f in self.invariants)

    def to_json(self) -> Dict:
        return {
            'degree': self.degree,
            'u': [str(f) for f in self.u_description],
            'invariants': [str(f) for f in self.invariants],
            'gb_size': len(self.gb)
        }


def graph_ideal(rep: Representation) -> Tuple[List[MPoly], int]:
    """Generators of the graph ideal in k[t0, t1, w0..wn, y0..yn], and d"""
    n = rep.n
    images = [coact(rep, rep.x(i)) for i in range(1, n + 1)]
    d = max((img.degree for img in images), default=0)
    w_names = variable_names('w', n + 1, start=0)
    y_names = variable_names('y', n + 1, start=0)
    ring = PolyRing(rep.field, ['t0', 't1'] + w_names + y_names)
    t0, t1 = ring.var('t0'), ring.var('t1')
    w = [ring.var(name) for name in w_names]
    y = [ring.var(name) for name in y_names]
    images_w = [w[i] for i in range(1, n + 1)]
    gens = [y[0] - w[0] * (t1 ** d)]
    for i, img in enumerate(images, start=1):
        q = ring.zero()
        for e, phi in img.items():
            q = q + phi.substitute(images_w) * (t0 ** e) * (t1 ** (d - e))
        gens.append(y[i] - q)
    return gens, d


def _canonical(f: MPoly) -> MPoly:
    return f.scale(f.field.inv(graded_lead(f)[1]))


# An element of k(W)[Y] kept fraction-free: y-monomial -> coefficient in k[X] (w0 = 1, w_i = x_i)
YPoly = Dict[Monomial, MPoly]


def _y_key(m: Monomial) -> Monomial:
    # colex on y: the last y-variable is largest
    return m[::-1]


def _y_lead(f: YPoly) -> Monomial:
    return max(f, key=_y_key)


def _split_by_y(g: MPoly, rep: Representation) -> YPoly:
    n = rep.n
    by_y: Dict[Monomial, List[Tuple[Monomial, int]]] = {}
    for m, a in g.terms.items():
        by_y.setdefault(m[n + 1:], []).append((m[1:n + 1], a))
    out = {ym: from_terms(rep.ring, terms) for ym, terms in by_y.items()}
    return {ym: c for ym, c in out.items() if not c.is_zero()}


def _pseudo_reduce(f: YPoly, basis: Sequence[YPoly]) -> YPoly:
    """Reduce f over k(W) by the basis, multiplying through by leading coefficients"""
    f = dict(f)
    while True:
        step = None
        for ym in sorted(f, key=_y_key, reverse=True):
            for g in basis:
                shift = PolyRing.monomial_div(ym, _y_lead(g))
                if shift is not None:
                    step = (ym, g, shift)
                    break
            if step:
                break
        if step is None:
            return f
        ym, g, shift = step
        c, lc = f[ym], g[_y_lead(g)]
        out = {m: a * lc for m, a in f.items()}
        for m, b in g.items():
            mm = PolyRing.monomial_mul(m, shift)
            out[mm] = out.get(mm, c.ring.zero()) - c * b
        f = {m: a for m, a in out.items() if not a.is_zero()}


def _minimal_y_basis(gb: Sequence[MPoly], rep: Representation) -> List[YPoly]:
    candidates = [f for f in (_split_by_y(g, rep) for g in gb) if f and any(sum(m) for m in f)]
    candidates.sort(key=lambda f: (_y_key(_y_lead(f)), f[_y_lead(f)].total_degree(), len(f)))
    minimal: List[YPoly] = []
    for f in candidates:
        if all(PolyRing.monomial_div(_y_lead(f), _y_lead(g)) is None for g in minimal):
            minimal.append(f)
    return minimal


def _coefficient_fractions(f: YPoly, budget: Optional[int]) -> List[Tuple[MPoly, MPoly]]:
    """(numerator, denominator) in lowest terms of every coefficient of f made monic over k(W)"""
    content = None
    for c in f.values():
        content = c if content is None else poly_gcd(content, c, budget)
    f = {m: c.exact_div(content) for m, c in f.items()}
    lead = f[_y_lead(f)]
    fractions = []
    for m, c in f.items():
        g = poly_gcd(c, lead, budget)
        fractions.append((c.exact_div(g), lead.exact_div(g)))
    return fractions


def graph_separators(rep: Representation, budget: Optional[int] = None) -> GraphSepResult:
    """The reduced colex basis of the graph ideal over k(W) has invariant rational
    coefficients; their numerators and denominators in lowest terms are the separators.
    U is cut out by the top t-coefficients of the co-action and by the denominators."""
    n = rep.n
    gens, d = graph_ideal(rep)
    gb = eliminate(gens, ['t0', 't1'], order=COLEX, budget=budget)

    minimal = _minimal_y_basis(gb, rep)
    found: Dict[Tuple, MPoly] = {}
    denominators: Dict[Tuple, MPoly] = {}
    for i, f in enumerate(minimal):
        reduced = _pseudo_reduce(f, minimal[:i] + minimal[i + 1:])
        for num, den in _coefficient_fractions(reduced, budget):
            for part in (num, den):
                if not part.is_constant():
                    part = _canonical(part)
                    found.setdefault(part.graded_key(), part)
            if not den.is_constant():
                den = _canonical(den)
                denominators.setdefault(den.graded_key(), den)
    invariants = [found[k] for k in sorted(found)]
    broken = [str(f) for f in invariants if not is_invariant(rep, f)]
    if broken:
        logger.warning(f"Graph coefficients of {rep!r} that are not invariant: {broken}")

    u_description = []
    for i in range(1, n + 1):
        img = coact(rep, rep.x(i))
        if d > 0 and img.degree == d:
            u_description.append(_canonical(img.coeff(d)))
    u_description += [f for k, f in sorted(denominators.items()) if f not in u_description]
    result = GraphSepResult(d, u_description, invariants, gb)
    logger.info(f"Graph separators of {rep!r}: {[str(f) for f in invariants]} on U = {[str(f) for f in u_description]}")
    return result


@dataclass
class OrbitSeparationReport:
    field: str
    same_orbit: int = 0
    distinct_orbit: int = 0
    counterexamples: List[Dict] = field(default_factory=list)

    @property
    def separates(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> Dict:
        return {'field': self.field, 'same_orbit': self.same_orbit, 'distinct_orbit': self.distinct_orbit,
                'counterexamples': self.counterexamples}


def same_orbit(rep: Representation, a: Sequence[int], b: Sequence[int], ext: FieldSpec) -> bool:
    """Brute force over t0 in ext"""
    target = list(b)
    return any(act_on_point(rep, t0, a, ext) == target for t0 in ext.elements())


def _sample_point(result: GraphSepResult, n: int, ext: FieldSpec, rng: np.random.Generator) -> List[int]:
    while True:
        point = [ext.random_element(rng) for _ in range(n)]
        if result.in_u(point, ext):
            return point


def orbit_separation_check(rep: Representation, result: GraphSepResult, samples: int = 100,
                           ext_degree: int = EXTENSION_DEGREE, seed: int = DEFAULT_SEED) -> OrbitSeparationReport:
    """Sample point pairs in U: half are translates of each other, half are
    independent; orbit membership is decided by brute force"""
    ext = build_field(rep.field.p, rep.field.m * ext_degree)
    rng = np.random.default_rng(seed)
    report = OrbitSeparationReport(repr(ext))
    for k in range(samples):
        a = _sample_point(result, rep.n, ext, rng)
        if k % 2 == 0:
            b = act_on_point(rep, ext.random_element(rng), a, ext)
        else:
            b = _sample_point(result, rep.n, ext, rng)
        together = same_orbit(rep, a, b, ext)
        equal = result.evaluate(a, ext) == result.evaluate(b, ext)
        if together:
            report.same_orbit += 1
        else:
            report.distinct_orbit += 1
        if together != equal:
            report.counterexamples.append({'a': a, 'b': b, 'same_orbit': together})
    if report.counterexamples:
        logger.warning(f"{len(report.counterexamples)} separation counterexamples for {rep!r} over {ext!r}")
    return report
