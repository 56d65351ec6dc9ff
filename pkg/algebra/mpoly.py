"""Sparse multivariate polynomials over a FieldSpec.

A polynomial is a dict from exponent tuples to nonzero field ints. The ring
carries the variable names and the active MonomialOrder; leading terms are
always taken under the ring's order.
"""
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from algebra.field import FieldSpec
from errors import DivisionByZero, PolyError

Monomial = Tuple[int, ...]


def _grevlex_key(exp: Monomial) -> Tuple:
    return (sum(exp), tuple(-e for e in reversed(exp)))


class MonomialOrder:
    """A monomial order; key(m1) < key(m2) iff m1 < m2.

    tags: 'lex' (first variable largest), 'colex' (lex read on the reversed
    variable list, so the last variable is largest), 'grevlex', and 'block'
    (grevlex on the first `split` variables, ties broken by grevlex on the rest).
    """

    TAGS = ('lex', 'colex', 'grevlex', 'block')

    def __init__(self, tag: str = 'grevlex', split: int = 0):
        if tag not in self.TAGS:
            raise PolyError(f"unknown monomial order {tag!r}")
        self.tag = tag
        self.split = split
        self._key = self._build_key()

    def _build_key(self) -> Callable[[Monomial], Tuple]:
        if self.tag == 'lex':
            return lambda m: m
        if self.tag == 'colex':
            return lambda m: m[::-1]
        if self.tag == 'grevlex':
            return _grevlex_key
        k = self.split
        return lambda m: (_grevlex_key(m[:k]), _grevlex_key(m[k:]))

    def key(self, m: Monomial) -> Tuple:
        return self._key(m)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MonomialOrder) and (self.tag, self.split) == (other.tag, other.split)

    def __hash__(self) -> int:
        return hash((self.tag, self.split))

    def __repr__(self) -> str:
        return f"{self.tag}({self.split})" if self.tag == 'block' else self.tag


LEX = MonomialOrder('lex')
COLEX = MonomialOrder('colex')
GREVLEX = MonomialOrder('grevlex')


def block_order(split: int) -> MonomialOrder:
    return MonomialOrder('block', split)


class PolyRing:
    def __init__(self, field: FieldSpec, names: Sequence[str], order: MonomialOrder = GREVLEX):
        self.field = field
        self.names: Tuple[str, ...] = tuple(names)
        self.nvars = len(self.names)
        self.order = order

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, PolyRing) and self.field == other.field
                and self.names == other.names and self.order == other.order)

    def __hash__(self) -> int:
        return hash((self.field, self.names, self.order))

    def __repr__(self) -> str:
        return f"{self.field!r}[{', '.join(self.names)}; {self.order!r}]"

    def with_order(self, order: MonomialOrder) -> 'PolyRing':
        return PolyRing(self.field, self.names, order)

    def with_field(self, field: FieldSpec) -> 'PolyRing':
        return PolyRing(field, self.names, self.order)

    # -- element constructors -------------------------------------------------
    def zero(self) -> 'MPoly':
        return MPoly(self, {})

    def one(self) -> 'MPoly':
        return self.constant(1)

    def constant(self, a: int) -> 'MPoly':
        return MPoly(self, {(0,) * self.nvars: a})

    def gen(self, i: int) -> 'MPoly':
        exp = [0] * self.nvars
        exp[i] = 1
        return MPoly(self, {tuple(exp): 1})

    def gens(self) -> List['MPoly']:
        return [self.gen(i) for i in range(self.nvars)]

    def var(self, name: str) -> 'MPoly':
        return self.gen(self.names.index(name))

    def monomial(self, exp: Sequence[int], a: int = 1) -> 'MPoly':
        return MPoly(self, {tuple(exp): a})

    def index(self, name: str) -> int:
        return self.names.index(name)

    def convert(self, f: 'MPoly') -> 'MPoly':
        """Move f into this ring by variable name; missing names must not occur in f"""
        if f.ring == self:
            return f
        if f.ring.names == self.names:
            return MPoly(self, dict(f.terms))
        positions = []
        for name in f.ring.names:
            positions.append(self.names.index(name) if name in self.names else None)
        out: Dict[Monomial, int] = {}
        for exp, a in f.terms.items():
            new = [0] * self.nvars
            for e, pos in zip(exp, positions):
                if e:
                    if pos is None:
                        raise PolyError(f"{f} involves variables outside {self!r}")
                    new[pos] = e
            out[tuple(new)] = a
        return MPoly(self, out)

    # -- monomial arithmetic --------------------------------------------------
    @staticmethod
    def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
        return tuple(x + y for x, y in zip(a, b))

    @staticmethod
    def monomial_div(a: Monomial, b: Monomial) -> Optional[Monomial]:
        """Return a / b, or None if b does not divide a"""
        out = tuple(x - y for x, y in zip(a, b))
        return None if any(e < 0 for e in out) else out

    @staticmethod
    def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
        return tuple(max(x, y) for x, y in zip(a, b))

    def monomials_of_degree(self, d: int) -> List[Monomial]:
        """All exponent vectors of total degree d"""
        out: List[Monomial] = []

        def rec(prefix: List[int], remaining: int, slots: int) -> None:
            if slots == 1:
                out.append(tuple(prefix + [remaining]))
                return
            for e in range(remaining, -1, -1):
                rec(prefix + [e], remaining - e, slots - 1)

        if self.nvars == 0:
            return [()] if d == 0 else []
        rec([], d, self.nvars)
        return out


class MPoly:
    __slots__ = ('ring', 'terms')

    def __init__(self, ring: PolyRing, terms: Dict[Monomial, int]):
        self.ring = ring
        self.terms = {m: a for m, a in terms.items() if a}

    @property
    def field(self) -> FieldSpec:
        return self.ring.field

    # -- predicates -----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        zero = (0,) * self.ring.nvars
        return all(m == zero for m in self.terms)

    def constant_term(self) -> int:
        return self.terms.get((0,) * self.ring.nvars, 0)

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def variables(self) -> List[int]:
        return sorted({i for m in self.terms for i, e in enumerate(m) if e})

    # -- leading data under the ring order ------------------------------------
    def sorted_monomials(self, reverse: bool = True) -> List[Monomial]:
        return sorted(self.terms, key=self.ring.order.key, reverse=reverse)

    @property
    def LM(self) -> Monomial:
        if not self.terms:
            raise PolyError("zero polynomial has no leading monomial")
        return max(self.terms, key=self.ring.order.key)

    @property
    def LC(self) -> int:
        return self.terms[self.LM]

    def monic(self) -> 'MPoly':
        if not self.terms:
            return self
        return self.scale(self.field.inv(self.LC))

    # -- arithmetic -----------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.terms == ({(0,) * self.ring.nvars: other % self.field.p} if other % self.field.p else {})
        return isinstance(other, MPoly) and self.ring.names == other.ring.names and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: 'MPoly') -> 'MPoly':
        f = self.field
        out = dict(self.terms)
        for m, a in other.terms.items():
            out[m] = f.add(out.get(m, 0), a)
        return MPoly(self.ring, out)

    def __neg__(self) -> 'MPoly':
        return MPoly(self.ring, {m: self.field.neg(a) for m, a in self.terms.items()})

    def __sub__(self, other: 'MPoly') -> 'MPoly':
        f = self.field
        out = dict(self.terms)
        for m, a in other.terms.items():
            out[m] = f.sub(out.get(m, 0), a)
        return MPoly(self.ring, out)

    def __mul__(self, other: 'MPoly') -> 'MPoly':
        if isinstance(other, int):
            return self.scale(self.field.from_int(other))
        f = self.field
        out: Dict[Monomial, int] = {}
        for m1, a in self.terms.items():
            for m2, b in other.terms.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                out[m] = f.add(out.get(m, 0), f.mul(a, b))
        return MPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> 'MPoly':
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, a: int) -> 'MPoly':
        f = self.field
        return MPoly(self.ring, {m: f.mul(a, c) for m, c in self.terms.items()})

    def mul_term(self, mono: Monomial, a: int = 1) -> 'MPoly':
        f = self.field
        return MPoly(self.ring, {tuple(x + y for x, y in zip(m, mono)): f.mul(a, c)
                                 for m, c in self.terms.items()})

    def rem(self, divisors: Sequence['MPoly']) -> 'MPoly':
        """Full remainder of self on division by divisors under the ring order"""
        return divide(self, divisors)[1]

    def exact_div(self, other: 'MPoly') -> Optional['MPoly']:
        """Return self / other when other divides self, else None"""
        if other.is_zero():
            raise DivisionByZero("division by the zero polynomial")
        (quot,), r = divide(self, [other])
        return quot if r.is_zero() else None

    # -- evaluation and substitution ------------------------------------------
    def evaluate(self, point: Sequence[int], ext: Optional[FieldSpec] = None) -> int:
        """Evaluate at a point whose coordinates lie in ext (default: the coefficient field)"""
        ext = ext or self.field
        table = self.field.embedding(ext)
        value = 0
        for m, a in self.terms.items():
            term = table[a]
            for x, e in zip(point, m):
                if e:
                    term = ext.mul(term, ext.pow(x, e))
            value = ext.add(value, term)
        return value

    def substitute(self, images: Sequence['MPoly']) -> 'MPoly':
        """Ring map sending the i-th variable to images[i]"""
        target = images[0].ring
        result = target.zero()
        cache: Dict[Tuple[int, int], MPoly] = {}
        for m, a in self.terms.items():
            term = target.constant(a)
            for i, e in enumerate(m):
                if e:
                    if (i, e) not in cache:
                        cache[(i, e)] = images[i] ** e
                    term = term * cache[(i, e)]
            result = result + term
        return result

    def map_coeffs(self, table: Sequence[int], ring: PolyRing) -> 'MPoly':
        return MPoly(ring, {m: table[a] for m, a in self.terms.items()})

    # -- output ---------------------------------------------------------------
    def __repr__(self) -> str:
        return f"MPoly({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in self.sorted_monomials():
            a = self.terms[m]
            mono = "*".join(n if e == 1 else f"{n}^{e}" for n, e in zip(self.ring.names, m) if e)
            c = self.field.element_str(a)
            if not mono:
                parts.append(c)
            else:
                parts.append(mono if a == 1 else f"{c}*{mono}")
        return " + ".join(parts)

    def to_json(self) -> List[List]:
        """(exponent array, coefficient) pairs sorted by the active order, largest first"""
        return [[list(m), self.field.to_json(self.terms[m])] for m in self.sorted_monomials()]

    @classmethod
    def from_json(cls, ring: PolyRing, data: Sequence) -> 'MPoly':
        return from_terms(ring, [(m, ring.field.from_json(a)) for m, a in data])

    def graded_key(self) -> Tuple:
        """Total order on polynomials: degree, then graded monomials with x1 before x2"""
        mons = sorted(self.terms, key=lambda m: (sum(m), tuple(-e for e in m)), reverse=True)
        return tuple((sum(m), tuple(-e for e in m), self.terms[m]) for m in mons)


def divide(f: MPoly, divisors: Sequence[MPoly]) -> Tuple[List[MPoly], MPoly]:
    """Multivariate division; returns (quotients, remainder) with full reduction"""
    ring = f.ring
    fld = ring.field
    key = ring.order.key
    leads = [(g.LM, fld.inv(g.LC)) if not g.is_zero() else None for g in divisors]
    quots: List[Dict[Monomial, int]] = [{} for _ in divisors]
    rem: Dict[Monomial, int] = {}
    p = dict(f.terms)
    while p:
        lm = max(p, key=key)
        lc = p[lm]
        for idx, lead in enumerate(leads):
            if lead is None:
                continue
            shift = PolyRing.monomial_div(lm, lead[0])
            if shift is None:
                continue
            c = fld.mul(lc, lead[1])
            quots[idx][shift] = fld.add(quots[idx].get(shift, 0), c)
            for m, a in divisors[idx].terms.items():
                mm = tuple(x + y for x, y in zip(m, shift))
                v = fld.sub(p.get(mm, 0), fld.mul(c, a))
                if v:
                    p[mm] = v
                else:
                    p.pop(mm, None)
            break
        else:
            rem[lm] = lc
            del p[lm]
    return [MPoly(ring, q) for q in quots], MPoly(ring, rem)


def from_terms(ring: PolyRing, terms: Iterable[Tuple[Sequence[int], int]]) -> MPoly:
    fld = ring.field
    out: Dict[Monomial, int] = {}
    for m, a in terms:
        m = tuple(m)
        out[m] = fld.add(out.get(m, 0), a)
    return MPoly(ring, out)


def variable_names(prefix: str, n: int, start: int = 1) -> List[str]:
    return [f"{prefix}{i}" for i in range(start, start + n)]
