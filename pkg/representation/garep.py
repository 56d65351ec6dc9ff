"""Unipotent G_a-representations in upper-triangular coordinates.

beta(x_i) = x_i + sum_{j<i} q_{i,j}(t) x_j. Entries are UPolys keyed by
(i, j) with 1 <= j < i <= n; absent entries are zero.
"""
import logging
from typing import Dict, List, Optional, Sequence, Tuple

from algebra.field import FieldSpec, field_to_json
from algebra.linalg import Matrix, mat_inv
from algebra.mpoly import MPoly, PolyRing, variable_names
from algebra.orering import AdditivePoly, is_additive, to_additive
from algebra.upoly import UPoly
from errors import CocycleViolation, FieldMismatch, RepresentationError

logger = logging.getLogger(__name__)

Entry = Tuple[int, int]


class Representation:
    def __init__(self, field: FieldSpec, n: int, q: Dict[Entry, UPoly], name: str = ""):
        if n < 1:
            raise RepresentationError(f"dimension must be positive, got {n}")
        for (i, j), poly in q.items():
            if not 1 <= j < i <= n:
                raise RepresentationError(f"entry ({i},{j}) is not strictly below the diagonal of a {n}x{n} matrix")
            if poly.field != field:
                raise FieldMismatch(f"q{(i, j)} lives over {poly.field!r}, not {field!r}")
        self.field = field
        self.n = n
        self.q: Dict[Entry, UPoly] = {k: v for k, v in sorted(q.items()) if not v.is_zero()}
        self.name = name
        self.ring = PolyRing(field, variable_names('x', n))
        self.ring_t = PolyRing(field, variable_names('x', n) + ['t'])
        self._images: Optional[List[MPoly]] = None

    def entry(self, i: int, j: int) -> UPoly:
        return self.q.get((i, j), UPoly(self.field))

    def row(self, i: int) -> Dict[int, UPoly]:
        return {j: poly for (r, j), poly in self.q.items() if r == i}

    def entries(self) -> List[Entry]:
        return sorted(self.q)

    def is_trivial(self) -> bool:
        return not self.q

    def max_t_degree(self) -> int:
        return max((poly.degree for poly in self.q.values()), default=0)

    def x(self, i: int) -> MPoly:
        return self.ring.gen(i - 1)

    def coaction_images(self) -> List[MPoly]:
        """beta(x_i) in k[X, t] for i = 1..n"""
        if self._images is None:
            images = []
            t_index = self.n
            for i in range(1, self.n + 1):
                img = self.ring_t.gen(i - 1)
                for j, poly in self.row(i).items():
                    terms = {}
                    for e, a in poly.terms():
                        exp = [0] * (self.n + 1)
                        exp[j - 1] = 1
                        exp[t_index] = e
                        terms[tuple(exp)] = a
                    img = img + MPoly(self.ring_t, terms)
                images.append(img)
            self._images = images
        return self._images

    def matrix_at(self, t: int) -> Matrix:
        """The constant matrix M(t) with beta(x) = M(t) x"""
        m = [[1 if r == c else 0 for c in range(self.n)] for r in range(self.n)]
        for (i, j), poly in self.q.items():
            m[i - 1][j - 1] = poly(t)
        return m

    # -- derived representations ---------------------------------------------
    def extend(self, ext: FieldSpec) -> 'Representation':
        """The same representation with coefficients pushed into ext"""
        if ext == self.field:
            return self
        table = self.field.embedding(ext)
        q = {k: v.map_coeffs(table, ext) for k, v in self.q.items()}
        return Representation(ext, self.n, q, self.name)

    def change_basis(self, A: Matrix) -> 'Representation':
        """Conjugate by a constant lower-unitriangular A: new coordinates y = A x"""
        fld = self.field
        n = self.n
        for r in range(n):
            for c in range(n):
                if (c > r and A[r][c]) or (c == r and A[r][c] != 1):
                    raise RepresentationError("basis change must be lower unitriangular")
        A_inv = mat_inv(fld, [list(row) for row in A])
        # M'(t) = A M(t) A^{-1}, computed entrywise on polynomials
        M: Dict[Entry, UPoly] = {(i, i): UPoly.constant(fld, 1) for i in range(1, n + 1)}
        M.update(self.q)
        q: Dict[Entry, UPoly] = {}
        for i in range(1, n + 1):
            for j in range(1, i):
                acc = UPoly(fld)
                for k in range(1, n + 1):
                    if not A[i - 1][k - 1]:
                        continue
                    for l in range(1, n + 1):
                        if (k, l) in M and A_inv[l - 1][j - 1]:
                            acc = acc + M[(k, l)].scale(fld.mul(A[i - 1][k - 1], A_inv[l - 1][j - 1]))
                if not acc.is_zero():
                    q[(i, j)] = acc
        return Representation(fld, n, q, self.name)

    # -- I/O ------------------------------------------------------------------
    def to_json(self) -> Dict:
        data = field_to_json(self.field)
        data['n'] = self.n
        data['q'] = {f"{i},{j}": [self.field.to_json(a) for a in poly.coeffs] for (i, j), poly in self.q.items()}
        return data

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Representation) and self.field == other.field
                and self.n == other.n and self.q == other.q)

    def __repr__(self) -> str:
        label = f"{self.name}: " if self.name else ""
        return f"Representation({label}n={self.n} over {self.field!r})"

    def describe(self) -> List[str]:
        return [f"x{i} -> x{i} + " + " + ".join(f"({self.entry(i, j)})*x{j}" for j in sorted(self.row(i)))
                for i in range(1, self.n + 1) if self.row(i)]


def validate(rep: Representation) -> None:
    """Raise CocycleViolation unless rep satisfies the group law.

    Entries are checked by distance from the diagonal, then by row, so the
    first violation reported is one whose own identity fails.
    """
    ring = PolyRing(rep.field, ['t1', 't2'])
    t1, t2 = ring.gens()
    cache: Dict[Tuple[Entry, str], MPoly] = {}

    def lift(entry: Entry, which: str) -> MPoly:
        key = (entry, which)
        if key not in cache:
            poly = rep.entry(*entry)
            arg = {'1': t1, '2': t2, '+': t1 + t2}[which]
            result = ring.zero()
            for a in reversed(poly.coeffs):
                result = result * arg + ring.constant(a)
            cache[key] = result
        return cache[key]

    for i, j in sorted(((i, j) for i in range(2, rep.n + 1) for j in range(1, i)), key=lambda e: (e[0] - e[1], e[0])):
        poly = rep.entry(i, j)
        if poly.coeff(0):
            raise CocycleViolation((i, j), poly.coeff(0), "q(0) is not zero")
        if i - j == 1 and not is_additive(poly):
            residual = lift((i, j), '+') - lift((i, j), '1') - lift((i, j), '2')
            raise CocycleViolation((i, j), residual, "subdiagonal entry is not additive")
        residual = lift((i, j), '+') - lift((i, j), '1') - lift((i, j), '2')
        for s in range(j + 1, i):
            if (i, s) in rep.q and (s, j) in rep.q:
                residual = residual - lift((i, s), '1') * lift((s, j), '2')
        if not residual.is_zero():
            raise CocycleViolation((i, j), residual)
    logger.debug(f"{rep!r} satisfies the cocycle identity")


def is_valid(rep: Representation) -> bool:
    try:
        validate(rep)
    except CocycleViolation:
        return False
    return True


def subdiagonal(rep: Representation, i: int) -> AdditivePoly:
    return to_additive(rep.entry(i, i - 1))


def from_entries(field: FieldSpec, n: int, entries: Dict[Entry, Sequence[int]], name: str = "") -> Representation:
    """Build from little-endian coefficient lists"""
    return Representation(field, n, {k: UPoly(field, v) for k, v in entries.items()}, name)
