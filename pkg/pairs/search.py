"""Bounded search for c(t)-pairs.

For a fixed c(t) the condition delta(g) = c(t) h, with h ranging over the
degree-d invariants, is linear in (h-coordinates, g-coefficients); its
solutions with h != 0 are the pairs.

Degree one solves for c exactly. Writing c = t^{p^k} + sum a_i t^{p^i}, the
g that can occur span a subspace W cut out by linear conditions, and a pair
exists iff B_i y = a_i H y has a solution y with H y != 0, where H and B_i
are the t^{p^k} and t^{p^i} parts of delta restricted to W. Eliminating y
chart by chart (one coordinate of H y set to 1) leaves ideals in k[a]; their
univariate eliminants give the extension of the coefficient field over which
every such c, and so every linear pair, is defined. Higher degrees
enumerate the monic additive polynomials over the working field.
"""
import itertools
import logging
import math
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import galois

import config
from algebra.field import FieldSpec, build_field
from algebra.groebner import eliminate
from algebra.linalg import Matrix, mat_mul, null_space, rank, reduce_vector, rref
from algebra.mpoly import MPoly, PolyRing, variable_names
from algebra.orering import AdditivePoly
from errors import PairError, SearchSpaceTooLarge
from pairs.pair import Pair, is_pair, make_pair
from representation.coaction import delta_matrix, homogeneous_invariants, oracle_monomials
from representation.garep import Representation
from representation.tpoly import TPoly

logger = logging.getLogger(__name__)


def candidate_count(q: int, top: int) -> int:
    return sum(q ** k for k in range(top + 1))


def additive_candidates(rep: Representation, top: int) -> Iterator[AdditivePoly]:
    """Monic additive polynomials of F-degree <= top, by degree then coefficients"""
    fld = rep.field
    for k in range(top + 1):
        yield from _monic_of_degree(fld, k)


def _monic_of_degree(fld: FieldSpec, k: int) -> Iterator[AdditivePoly]:
    for lower in itertools.product(range(fld.q), repeat=k):
        yield AdditivePoly(fld, list(lower) + [1])


def _log_floor(value: int, p: int) -> int:
    k = 0
    while p ** (k + 1) <= value:
        k += 1
    return k


# -- exact candidates ---------------------------------------------------------

@dataclass
class CandidateComponent:
    """Zeros of `ideal` in k[a_0..a_{k-1}] are the lower coefficients of c.

    `eliminants[i]` generates the ideal cap k[a_i]; None marks a positive
    dimensional component, whose points are enumerated instead.
    """
    k: int
    ideal: List[MPoly]
    eliminants: Optional[List[MPoly]]


def _delta_maps(monomials: Sequence, deltas: Sequence[TPoly]) -> Dict[int, Matrix]:
    """t-exponent e -> matrix of g |-> [t^e] delta(g) in the monomial basis"""
    index = {m: k for k, m in enumerate(monomials)}
    N = len(monomials)
    maps: Dict[int, Matrix] = {}
    for col, dl in enumerate(deltas):
        for e, f in dl.items():
            mat = maps.setdefault(e, [[0] * N for _ in range(N)])
            for m, a in f.terms.items():
                mat[index[m]][col] = a
    return maps


def _pair_system(fld: FieldSpec, maps: Dict[int, Matrix], N: int,
                 k: int) -> Optional[Tuple[Matrix, List[Matrix]]]:
    """(H, [B_0..B_{k-1}]) on the admissible g for F-degree k, or None if no pair can exist"""
    p = fld.p
    support = {p ** i for i in range(k + 1)}
    top = maps.get(p ** k)
    if top is None:
        return None
    constraints: Matrix = []
    for e, mat in sorted(maps.items()):
        if e not in support:
            constraints.extend(mat)
        # h = D_{p^k} g is invariant
        constraints.extend(mat_mul(fld, mat, top))
    W = null_space(fld, constraints, N)
    if not W:
        return None
    columns = [list(col) for col in zip(*W)]
    H = mat_mul(fld, top, columns)
    if not any(any(row) for row in H):
        return None
    zero = [[0] * len(W) for _ in range(N)]
    Bs = [mat_mul(fld, maps[p ** i], columns) if p ** i in maps else zero for i in range(k)]
    return H, Bs


def _chart_rows(fld: FieldSpec, H: Matrix) -> List[int]:
    """Rows of H forming a basis of its row space"""
    chosen: List[int] = []
    rows: Matrix = []
    for r, row in enumerate(H):
        if any(row) and rank(fld, rows + [row], len(row)) > len(rows):
            rows.append(row)
            chosen.append(r)
    return chosen


def _univariate_eliminants(ideal: List[MPoly], budget: Optional[int]) -> Optional[List[MPoly]]:
    names = list(ideal[0].ring.names)
    eliminants = []
    for name in names:
        others = [n for n in names if n != name]
        basis = eliminate(ideal, others, budget=budget) if others else ideal
        if not basis:
            return None
        eliminants.append(basis[0])
    return eliminants


def _linear_form(ring: PolyRing, y: Sequence[MPoly], row: Sequence[int]) -> MPoly:
    return sum((y[j].scale(c) for j, c in enumerate(row) if c), ring.zero())


def _components(rep: Representation, maps: Dict[int, Matrix], N: int, top: int,
                budget: Optional[int] = None) -> List[CandidateComponent]:
    fld = rep.field
    out: List[CandidateComponent] = []
    for k in range(top + 1):
        system = _pair_system(fld, maps, N, k)
        if system is None:
            continue
        H, Bs = system
        if k == 0:
            out.append(CandidateComponent(0, [], []))
            continue
        s = len(H[0])
        y_names = variable_names('y', s)
        ring = PolyRing(fld, y_names + variable_names('a', k, start=0))
        gens = ring.gens()
        y, a = gens[:s], gens[s:]
        system_eqs = [_linear_form(ring, y, brow) - a[i] * _linear_form(ring, y, hrow)
                      for i, B in enumerate(Bs) for brow, hrow in zip(B, H)]
        for r in _chart_rows(fld, H):
            ideal = eliminate(system_eqs + [_linear_form(ring, y, H[r]) - ring.one()], y_names, budget=budget)
            if any(g.is_constant() for g in ideal):
                continue
            if not ideal:
                out.append(CandidateComponent(k, [], None))
                continue
            out.append(CandidateComponent(k, ideal, _univariate_eliminants(ideal, budget)))
    logger.debug(f"{len(out)} candidate components for {rep!r}")
    return out


def _splitting_degree(u: MPoly, i: int) -> int:
    """Degree over the coefficient field of the splitting field of the univariate u(a_i)"""
    fld = u.field
    degree = max(m[i] for m in u.terms)
    if degree == 0:
        return 1
    coeffs = [0] * (degree + 1)
    for m, c in u.terms.items():
        coeffs[degree - m[i]] = c
    unit = fld.inv(coeffs[0])
    poly = galois.Poly([fld.mul(unit, c) for c in coeffs], field=fld.GF)
    factors, _ = poly.factors()
    return math.lcm(*(int(f.degree) for f in factors))


def _component_points(comp: CandidateComponent, ext: FieldSpec) -> List[Tuple[int, ...]]:
    roots = []
    for i, u in enumerate(comp.eliminants):
        point = [0] * comp.k
        found = []
        for x in ext.elements():
            point[i] = x
            if u.evaluate(point, ext) == 0:
                found.append(x)
        roots.append(found)
    return [pt for pt in itertools.product(*roots)
            if all(g.evaluate(pt, ext) == 0 for g in comp.ideal)]


def _top_exponent(rep: Representation, deltas: Sequence[TPoly]) -> int:
    top_t = max((dl.degree for dl in deltas), default=0)
    return _log_floor(top_t, rep.field.p) if top_t >= 1 else -1


def pair_extension_degree(rep: Representation, d: int = 1, budget: Optional[int] = None) -> int:
    """Smallest e such that the finitely many c(t) of degree-d pairs are defined over F_{q^e}"""
    monomials = oracle_monomials(rep, d)
    _, deltas = delta_matrix(rep, monomials)
    top = _top_exponent(rep, deltas)
    e = 1
    for comp in _components(rep, _delta_maps(monomials, deltas), len(monomials), top, budget):
        for i, u in enumerate(comp.eliminants or []):
            e = math.lcm(e, _splitting_degree(u, i))
    return e


def pair_field(rep: Representation, d: int = 1, budget: Optional[int] = None) -> FieldSpec:
    """Field of definition of the degree-d pairs: the coefficient field or a finite extension"""
    e = pair_extension_degree(rep, d, budget)
    if e == 1:
        return rep.field
    ext = build_field(rep.field.p, rep.field.m * e)
    logger.info(f"Degree-{d} pairs of {rep!r} are defined over {ext!r}")
    return ext


def exact_candidates(rep: Representation, d: int, candidate_cap: int,
                     budget: Optional[int] = None) -> List[AdditivePoly]:
    """The monic c(t) over the coefficient field admitting a degree-d pair"""
    fld = rep.field
    monomials = oracle_monomials(rep, d)
    _, deltas = delta_matrix(rep, monomials)
    top = _top_exponent(rep, deltas)
    found: Dict[Tuple[int, ...], AdditivePoly] = {}
    for comp in _components(rep, _delta_maps(monomials, deltas), len(monomials), top, budget):
        if comp.eliminants is None:
            if fld.q ** comp.k > candidate_cap:
                raise SearchSpaceTooLarge(fld.q ** comp.k, candidate_cap, "candidate additive polynomials")
            for c in _monic_of_degree(fld, comp.k):
                if all(g.evaluate(c.coeffs[:-1]) == 0 for g in comp.ideal):
                    found.setdefault(tuple(c.coeffs), c)
            continue
        for point in _component_points(comp, fld):
            c = AdditivePoly(fld, list(point) + [1])
            found.setdefault(tuple(c.coeffs), c)
    return [found[key] for key in sorted(found, key=lambda key: (len(key), key))]


# -- linear solve per candidate -------------------------------------------------

def pairs_of_degree(rep: Representation, d: int, monomial_cap: Optional[int] = None,
                    candidate_cap: Optional[int] = None) -> List[Pair]:
    """All non-trivial homogeneous pairs with deg g = d, canonicalized"""
    monomial_cap = config.MONOMIAL_CAP if monomial_cap is None else monomial_cap
    candidate_cap = config.CANDIDATE_CAP if candidate_cap is None else candidate_cap
    fld = rep.field
    monomials = oracle_monomials(rep, d)
    if len(monomials) > monomial_cap:
        raise SearchSpaceTooLarge(len(monomials), monomial_cap)
    invariants = homogeneous_invariants(rep, d)
    if not invariants:
        return []
    _, deltas = delta_matrix(rep, monomials)
    top = _top_exponent(rep, deltas)
    if top < 0:
        return []
    if d == 1:
        candidates = exact_candidates(rep, d, candidate_cap)
    else:
        count = candidate_count(fld.q, top)
        if count > candidate_cap:
            raise SearchSpaceTooLarge(count, candidate_cap, "candidate additive polynomials")
        candidates = list(additive_candidates(rep, top))
    if len(candidates) > candidate_cap:
        raise SearchSpaceTooLarge(len(candidates), candidate_cap, "candidate additive polynomials")

    r = len(invariants)
    N = len(monomials)
    index = {m: k for k, m in enumerate(monomials)}
    inv_rows = [[h.terms.get(m, 0) for m in monomials] for h in invariants]
    inv_reduced, inv_pivots = rref(fld, inv_rows, N)
    exponents = sorted({e for dl in deltas for e in dl.coeffs})

    found: List[Pair] = []
    for c in candidates:
        c_terms = {fld.p ** i: a for i, a in enumerate(c.coeffs) if a}
        equations: Matrix = []
        for e in sorted(set(exponents) | set(c_terms)):
            block = [[0] * (r + N) for _ in range(N)]
            ce = c_terms.get(e, 0)
            if ce:
                for k, h in enumerate(invariants):
                    for m, a in h.terms.items():
                        block[index[m]][k] = fld.neg(fld.mul(ce, a))
            for col, dl in enumerate(deltas):
                for m, a in dl.coeff(e).terms.items():
                    block[index[m]][r + col] = a
            equations.extend(row for row in block if any(row))
        solutions = null_space(fld, equations, r + N)
        for v in solutions:
            if not any(v[:r]):
                # pivot in the g-block: an invariant g, the trivial pair
                continue
            h = rep.ring.zero()
            for k in range(r):
                if v[k]:
                    h = h + invariants[k].scale(v[k])
            a = reduce_vector(fld, v[r:], inv_reduced, inv_pivots)
            g = MPoly(rep.ring, {m: a[k] for k, m in enumerate(monomials)})
            pair = make_pair(rep, g, h, c)
            if not is_pair(rep, pair.g, pair.h, pair.c):
                raise PairError(f"linear solve produced an invalid pair {pair}")
            found.append(pair)
    logger.debug(f"Degree {d}: {len(candidates)} candidates, {len(found)} pairs")
    return found


def find_pairs_bounded(rep: Representation, max_degree: int, monomial_cap: Optional[int] = None,
                       candidate_cap: Optional[int] = None) -> List[Pair]:
    """Non-trivial pairs with homogeneous g of degree 1..max_degree over rep's field, sorted"""
    pairs: List[Pair] = []
    for d in range(1, max_degree + 1):
        pairs.extend(pairs_of_degree(rep, d, monomial_cap, candidate_cap))
    pairs.sort(key=lambda pr: pr.sort_key())
    logger.info(f"Found {len(pairs)} pairs up to degree {max_degree} for {rep!r}")
    return pairs


def find_linear_pairs(rep: Representation, candidate_cap: Optional[int] = None) -> List[Pair]:
    """Linear pairs over their field of definition, which may extend rep's field"""
    work = rep.extend(pair_field(rep, 1))
    return sorted(pairs_of_degree(work, 1, candidate_cap=candidate_cap), key=lambda pr: pr.sort_key())
