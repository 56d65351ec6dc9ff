"""The Ore ring of additive polynomials.

An additive polynomial sum a_i t^{p^i} is kept in skew form as the
coefficient list [a_0, ..., a_d] of sum a_i F^i, where F is the Frobenius.
Multiplication is composition: (a F^j)(b F^i) = a b^{p^j} F^{i+j}.
"""
import logging
from typing import Iterable, List, Sequence, Set, Tuple

from algebra.field import FieldSpec
from algebra.upoly import UPoly
from errors import BothZero, DivisionByZero, NotAdditive, OreError, ZeroInput

logger = logging.getLogger(__name__)


class AdditivePoly:
    __slots__ = ('field', 'coeffs')

    def __init__(self, field: FieldSpec, coeffs: Iterable[int] = ()):
        self.field = field
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: Tuple[int, ...] = tuple(c)

    @classmethod
    def identity(cls, field: FieldSpec) -> 'AdditivePoly':
        return cls(field, [1])

    @classmethod
    def frobenius(cls, field: FieldSpec, i: int = 1, a: int = 1) -> 'AdditivePoly':
        return cls(field, [0] * i + [a])

    @property
    def degree(self) -> int:
        """Degree in F; -1 for zero"""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def is_separable(self) -> bool:
        return bool(self.coeffs) and self.coeffs[0] != 0

    def __eq__(self, other: object) -> bool:
        return isinstance(other, AdditivePoly) and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(('additive', self.coeffs))

    def __repr__(self) -> str:
        return f"AdditivePoly({self})"

    def __str__(self) -> str:
        return str(self.to_upoly())

    def __add__(self, other: 'AdditivePoly') -> 'AdditivePoly':
        f = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return AdditivePoly(f, [f.add(self.coeff(i), other.coeff(i)) for i in range(n)])

    def __neg__(self) -> 'AdditivePoly':
        return AdditivePoly(self.field, [self.field.neg(a) for a in self.coeffs])

    def __sub__(self, other: 'AdditivePoly') -> 'AdditivePoly':
        return self + (-other)

    def scale(self, a: int) -> 'AdditivePoly':
        """Left multiplication by the constant a, i.e. (a F^0) o self"""
        return AdditivePoly(self.field, [self.field.mul(a, c) for c in self.coeffs])

    def __matmul__(self, other: 'AdditivePoly') -> 'AdditivePoly':
        return compose(self, other)

    def monic(self) -> 'AdditivePoly':
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.leading()))

    def __call__(self, x: int) -> int:
        f = self.field
        value = 0
        for i, a in enumerate(self.coeffs):
            if a:
                value = f.add(value, f.mul(a, f.frobenius_power(x, i) if f.m > 1 else x))
        return value

    def evaluate_in(self, ext: FieldSpec, x: int) -> int:
        table = self.field.embedding(ext)
        value = 0
        for i, a in enumerate(self.coeffs):
            if a:
                value = ext.add(value, ext.mul(table[a], ext.pow(x, self.field.p ** i)))
        return value

    def to_upoly(self) -> UPoly:
        p = self.field.p
        return UPoly.from_terms(self.field, [(p ** i, a) for i, a in enumerate(self.coeffs) if a])

    def to_json(self) -> List:
        return [self.field.to_json(a) for a in self.coeffs]

    @classmethod
    def from_json(cls, field: FieldSpec, data: Sequence) -> 'AdditivePoly':
        return cls(field, [field.from_json(a) for a in data])

    def sort_key(self) -> Tuple:
        return (self.degree, self.coeffs)


def to_additive(q: UPoly) -> AdditivePoly:
    """Repackage q in skew form; every exponent must be a power of p"""
    p = q.field.p
    out: List[int] = []
    for e, a in q.terms():
        i = _log_p(e, p)
        if i is None:
            raise NotAdditive(e)
        if i >= len(out):
            out.extend([0] * (i + 1 - len(out)))
        out[i] = a
    return AdditivePoly(q.field, out)


def is_additive(q: UPoly) -> bool:
    p = q.field.p
    return all(_log_p(e, p) is not None for e, _ in q.terms())


def _log_p(e: int, p: int):
    if e < 1:
        return None
    i = 0
    while e % p == 0:
        e //= p
        i += 1
    return i if e == 1 else None


def compose(f: AdditivePoly, g: AdditivePoly) -> AdditivePoly:
    """Return f o g via (a F^j)(b F^i) = a b^{p^j} F^{i+j}"""
    fld = f.field
    if f.is_zero() or g.is_zero():
        return AdditivePoly(fld)
    out = [0] * (len(f.coeffs) + len(g.coeffs) - 1)
    for j, a in enumerate(f.coeffs):
        if a == 0:
            continue
        for i, b in enumerate(g.coeffs):
            if b:
                out[i + j] = fld.add(out[i + j], fld.mul(a, fld.frobenius_power(b, j)))
    return AdditivePoly(fld, out)


def right_divide(f: AdditivePoly, g: AdditivePoly) -> Tuple[AdditivePoly, AdditivePoly]:
    """Return (q, r) with f = q o g + r and deg r < deg g"""
    if g.is_zero():
        raise DivisionByZero("right division by zero")
    fld = f.field
    e = g.degree
    lead = g.leading()
    quot = [0] * max(f.degree - e + 1, 0)
    rem = f
    while not rem.is_zero() and rem.degree >= e:
        k = rem.degree - e
        c = fld.div(rem.leading(), fld.frobenius_power(lead, k))
        quot[k] = c
        rem = rem - compose(AdditivePoly.frobenius(fld, k, c), g)
    return AdditivePoly(fld, quot), rem


def left_divide(f: AdditivePoly, g: AdditivePoly) -> Tuple[AdditivePoly, AdditivePoly]:
    """Return (q, r) with f = g o q + r and deg r < deg g"""
    if g.is_zero():
        raise DivisionByZero("left division by zero")
    fld = f.field
    e = g.degree
    lead = g.leading()
    quot = [0] * max(f.degree - e + 1, 0)
    rem = f
    while not rem.is_zero() and rem.degree >= e:
        k = rem.degree - e
        # b c^{p^e} = a  =>  c = (a / b)^{p^{-e}}
        c = fld.frobenius_power(fld.div(rem.leading(), lead), -e)
        quot[k] = c
        rem = rem - compose(g, AdditivePoly.frobenius(fld, k, c))
    return AdditivePoly(fld, quot), rem


def right_gcd_ext(c1: AdditivePoly, c2: AdditivePoly):
    """Extended right Euclid in the left ideal O c1 + O c2.

    Returns (b, b1, b2, d1, d2) with b monic, b = b1 o c1 + b2 o c2,
    c1 = d1 o b and c2 = d2 o b.
    """
    if c1.is_zero() and c2.is_zero():
        raise BothZero("right gcd of two zero polynomials")
    fld = c1.field
    one = AdditivePoly.identity(fld)
    zero = AdditivePoly(fld)
    r0, s0, u0 = c1, one, zero
    r1, s1, u1 = c2, zero, one
    while not r1.is_zero():
        quot, rem = right_divide(r0, r1)
        r0, s0, u0, r1, s1, u1 = r1, s1, u1, rem, s0 - compose(quot, s1), u0 - compose(quot, u1)
    unit = fld.inv(r0.leading())
    b, b1, b2 = r0.scale(unit), s0.scale(unit), u0.scale(unit)
    d1, rem1 = right_divide(c1, b)
    d2, rem2 = right_divide(c2, b)
    if not (rem1.is_zero() and rem2.is_zero()):
        raise OreError("right gcd does not divide its inputs")
    if compose(b1, c1) + compose(b2, c2) != b or compose(d1, b) != c1 or compose(d2, b) != c2:
        raise OreError("Bezout or quotient identity failed on recomposition")
    return b, b1, b2, d1, d2


def separable_split(b: AdditivePoly) -> Tuple[AdditivePoly, int]:
    """Return (c, w) with b = F^w o c and c separable"""
    if b.is_zero():
        raise ZeroInput("separable split of zero")
    fld = b.field
    w = next(i for i, a in enumerate(b.coeffs) if a)
    c = AdditivePoly(fld, [fld.frobenius_power(a, -w) for a in b.coeffs[w:]])
    return c, w


def kernel_points(b: AdditivePoly, ext: FieldSpec) -> Set[int]:
    """All roots of b in ext, an additive subgroup"""
    roots = {x for x in ext.elements() if b.evaluate_in(ext, x) == 0}
    logger.debug(f"ker({b}) has {len(roots)} points in {ext!r}")
    return roots
