"""The co-action on polynomials, the delta operator and linear invariant theory"""
import logging
from dataclasses import dataclass, field as dc_field
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from algebra.linalg import Matrix, in_span, null_space, rank, rref
from algebra.mpoly import Monomial, MPoly
from errors import SearchSpaceTooLarge
from representation.garep import Representation
from representation.tpoly import TPoly

logger = logging.getLogger(__name__)


def coact(rep: Representation, f: MPoly) -> TPoly:
    """beta(f) as a polynomial in t with coefficients in k[X]"""
    f = rep.ring.convert(f)
    if f.is_zero():
        return TPoly(rep.ring, {})
    image = f.substitute(rep.coaction_images())
    return TPoly.split(image, rep.ring)


def delta(rep: Representation, f: MPoly) -> TPoly:
    return coact(rep, f) - TPoly.constant(rep.ring.convert(f))


def is_invariant(rep: Representation, f: MPoly) -> bool:
    return delta(rep, f).is_zero()


def act_on_point(rep: Representation, t0: int, point: Sequence[int], ext) -> List[int]:
    """t0 * point for a point with coordinates in ext: x_i -> beta(x_i) at (point, t0)"""
    coords = list(point) + [t0]
    return [img.evaluate(coords, ext) for img in rep.coaction_images()]


def linear_form(rep: Representation, coeffs: Sequence[int]) -> MPoly:
    return MPoly(rep.ring, {tuple(1 if k == i else 0 for k in range(rep.n)): a for i, a in enumerate(coeffs)})


def _delta_linear_rows(rep: Representation) -> Dict[int, Matrix]:
    """For each t-exponent e, the matrix D_e with coeff_e(delta(sum a_i x_i)) = D_e a in x-coordinates"""
    fld = rep.field
    rows: Dict[int, Matrix] = {}
    for (i, j), poly in rep.q.items():
        for e, a in poly.terms():
            mat = rows.setdefault(e, [[0] * rep.n for _ in range(rep.n)])
            mat[j - 1][i - 1] = fld.add(mat[j - 1][i - 1], a)
    return rows


def _forms_with_delta_in(rep: Representation, span: Matrix) -> Matrix:
    """All covectors a whose delta has every t-coefficient in the given span"""
    fld = rep.field
    n = rep.n
    annihilator = null_space(fld, span, n) if span else [[1 if c == r else 0 for c in range(n)] for r in range(n)]
    equations: Matrix = []
    for e, D in sorted(_delta_linear_rows(rep).items()):
        for w in annihilator:
            equations.append([fld.sum(fld.mul(w[r], D[r][c]) for r in range(n)) for c in range(n)])
    return null_space(fld, equations, n)


def invariant_covectors(rep: Representation) -> Matrix:
    """Basis (reduced echelon rows over x1..xn) of the invariant linear forms"""
    return _forms_with_delta_in(rep, [])


@dataclass
class RepStructure:
    invariant_covectors: Matrix
    levels: List[Matrix]
    dims: Tuple[int, ...]
    adapted_basis: Matrix = dc_field(default_factory=list)
    level_of: List[int] = dc_field(default_factory=list)

    @property
    def length(self) -> int:
        return len(self.dims)

    def new_at_level(self, k: int) -> Matrix:
        return [v for v, lvl in zip(self.adapted_basis, self.level_of) if lvl == k]

    def to_json(self) -> Dict:
        return {'dims': list(self.dims), 'length': self.length,
                'invariant_covectors': self.invariant_covectors,
                'adapted_basis': self.adapted_basis, 'level_of': self.level_of}


def socle_series(rep: Representation) -> RepStructure:
    """The filtration soc_1 < soc_2 < ... of V* by iterated invariants"""
    fld = rep.field
    n = rep.n
    levels: List[Matrix] = []
    current: Matrix = []
    while True:
        nxt = _forms_with_delta_in(rep, current)
        if current and len(nxt) == len(current):
            break
        levels.append(nxt)
        current = nxt
        if len(current) == n:
            break
    adapted: Matrix = []
    level_of: List[int] = []
    for k, basis in enumerate(levels, start=1):
        for v in basis:
            if rank(fld, adapted + [v], n) > len(adapted):
                adapted.append(v)
                level_of.append(k)
    structure = RepStructure(levels[0] if levels else [], levels, tuple(len(b) for b in levels), adapted, level_of)
    logger.debug(f"Socle series of {rep!r}: dims {structure.dims}")
    return structure


def dual_fixed_vectors(rep: Representation) -> Matrix:
    """Fixed vectors of the transpose action on V, in the dual basis u1..un"""
    fld = rep.field
    by_row_e: Dict[Tuple[int, int], List[int]] = {}
    for (i, j), poly in rep.q.items():
        for e, a in poly.terms():
            row = by_row_e.setdefault((i, e), [0] * rep.n)
            row[j - 1] = fld.add(row[j - 1], a)
    equations = [by_row_e[k] for k in sorted(by_row_e)]
    return null_space(fld, equations, rep.n)


def has_simple_dual_socle(rep: Representation) -> bool:
    """dim V^{G_a} = 1, which rules out a direct sum decomposition"""
    return len(dual_fixed_vectors(rep)) == 1


# -- invariant oracle ---------------------------------------------------------

def oracle_monomials(rep: Representation, d: int) -> List[Monomial]:
    """Degree-d monomials in graded-lex order with x1 < ... < xn, largest first"""
    return sorted(rep.ring.monomials_of_degree(d), key=lambda m: m[::-1], reverse=True)


def delta_matrix(rep: Representation, monomials: Sequence[Monomial]) -> Tuple[Matrix, List[TPoly]]:
    """Rows indexed by (t-exponent, target monomial), one column per input monomial"""
    deltas = [delta(rep, rep.ring.monomial(m)) for m in monomials]
    row_index: Dict[Tuple[int, Monomial], int] = {}
    for dl in deltas:
        for e, f in dl.items():
            for m in f.terms:
                row_index.setdefault((e, m), len(row_index))
    rows: Matrix = [[0] * len(monomials) for _ in range(len(row_index))]
    for col, dl in enumerate(deltas):
        for e, f in dl.items():
            for m, a in f.terms.items():
                rows[row_index[(e, m)]][col] = a
    return rows, deltas


def homogeneous_invariants(rep: Representation, d: int, cap: Optional[int] = None) -> List[MPoly]:
    """Basis of the degree-d invariants, in reduced echelon form over oracle_monomials"""
    monomials = oracle_monomials(rep, d)
    if cap is not None and len(monomials) > cap:
        raise SearchSpaceTooLarge(len(monomials), cap)
    rows, _ = delta_matrix(rep, monomials)
    basis = null_space(rep.field, rows, len(monomials))
    return [MPoly(rep.ring, {m: a for m, a in zip(monomials, v)}) for v in basis]


def invariant_space_oracle(rep: Representation, d: int, cap: Optional[int] = None) -> List[MPoly]:
    """Basis of all invariants of degree <= d; delta preserves degree so the
    space is the direct sum of its homogeneous pieces"""
    out: List[MPoly] = []
    for k in range(d + 1):
        out.extend(homogeneous_invariants(rep, k, cap))
    logger.debug(f"Invariant oracle for {rep!r} up to degree {d}: dimension {len(out)}")
    return out


def in_invariant_span(rep: Representation, f: MPoly, basis: Sequence[MPoly]) -> bool:
    """Whether f is a linear combination of the given polynomials"""
    monos = sorted({m for g in list(basis) + [f] for m in g.terms})
    vecs = [[g.terms.get(m, 0) for m in monos] for g in basis]
    reduced, pivots = rref(rep.field, vecs, len(monos))
    return in_span(rep.field, [f.terms.get(m, 0) for m in monos], reduced, pivots)


# -- delta of powers ----------------------------------------------------------

def delta_power_expansion(rep: Representation, j: int, i: int) -> TPoly:
    """sum_{l=1}^{i} C(i, l) delta(x_j)^l x_j^{i-l}"""
    x = rep.x(j)
    d = delta(rep, x)
    fld = rep.field
    total = TPoly(rep.ring, {})
    for l in range(1, i + 1):
        c = fld.from_int(comb(i, l))
        if c:
            total = total + (d ** l).scale_poly((x ** (i - l)).scale(c))
    return total


def delta_power_is_pure(rep: Representation, j: int, i: int) -> bool:
    """delta(x_j^i) == delta(x_j)^i"""
    return delta(rep, rep.x(j) ** i) == delta(rep, rep.x(j)) ** i
