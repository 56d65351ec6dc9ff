"""Dense univariate polynomials over a FieldSpec and b-adic expansion"""
from typing import Iterable, List, Optional, Sequence, Tuple

from algebra.field import FieldSpec
from errors import ConstantBase, DivisionByZero


class UPoly:
    __slots__ = ('field', 'coeffs')

    def __init__(self, field: FieldSpec, coeffs: Iterable[int] = ()):
        self.field = field
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: Tuple[int, ...] = tuple(c)

    # -- constructors ---------------------------------------------------------
    @classmethod
    def constant(cls, field: FieldSpec, a: int) -> 'UPoly':
        return cls(field, [a])

    @classmethod
    def monomial(cls, field: FieldSpec, e: int, a: int = 1) -> 'UPoly':
        return cls(field, [0] * e + [a])

    @classmethod
    def from_terms(cls, field: FieldSpec, terms: Iterable[Tuple[int, int]]) -> 'UPoly':
        """Build from (exponent, coefficient) pairs; coefficients are summed"""
        out: List[int] = []
        for e, a in terms:
            if e >= len(out):
                out.extend([0] * (e + 1 - len(out)))
            out[e] = field.add(out[e], a)
        return cls(field, out)

    # -- basic properties -----------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, e: int) -> int:
        return self.coeffs[e] if 0 <= e < len(self.coeffs) else 0

    def terms(self) -> List[Tuple[int, int]]:
        return [(e, a) for e, a in enumerate(self.coeffs) if a]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, UPoly) and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"UPoly({self})"

    def __str__(self) -> str:
        return format_univariate(self.field, self.coeffs, 't')

    # -- ring operations ------------------------------------------------------
    def __add__(self, other: 'UPoly') -> 'UPoly':
        f = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return UPoly(f, [f.add(self.coeff(i), other.coeff(i)) for i in range(n)])

    def __neg__(self) -> 'UPoly':
        return UPoly(self.field, [self.field.neg(a) for a in self.coeffs])

    def __sub__(self, other: 'UPoly') -> 'UPoly':
        return self + (-other)

    def __mul__(self, other: 'UPoly') -> 'UPoly':
        f = self.field
        if self.is_zero() or other.is_zero():
            return UPoly(f)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = f.add(out[i + j], f.mul(a, b))
        return UPoly(f, out)

    def scale(self, a: int) -> 'UPoly':
        return UPoly(self.field, [self.field.mul(a, c) for c in self.coeffs])

    def __pow__(self, e: int) -> 'UPoly':
        result = UPoly.constant(self.field, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divmod(self, other: 'UPoly') -> Tuple['UPoly', 'UPoly']:
        if other.is_zero():
            raise DivisionByZero("division by the zero polynomial")
        f = self.field
        rem = list(self.coeffs)
        dg = other.degree
        inv_lead = f.inv(other.leading())
        quot = [0] * max(len(rem) - dg, 0)
        for k in range(len(rem) - 1, dg - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            c = f.mul(c, inv_lead)
            quot[k - dg] = c
            for i, b in enumerate(other.coeffs):
                rem[k - dg + i] = f.sub(rem[k - dg + i], f.mul(c, b))
        return UPoly(f, quot), UPoly(f, rem[:dg] if dg > 0 else [])

    def __call__(self, x: int) -> int:
        f = self.field
        value = 0
        for a in reversed(self.coeffs):
            value = f.add(f.mul(value, x), a)
        return value

    def compose(self, inner: 'UPoly') -> 'UPoly':
        """Return self(inner(t))"""
        result = UPoly(self.field)
        for a in reversed(self.coeffs):
            result = result * inner + UPoly.constant(self.field, a)
        return result

    def map_coeffs(self, table: Sequence[int], field: FieldSpec) -> 'UPoly':
        return UPoly(field, [table[a] for a in self.coeffs])


def b_adic_expansion(q: UPoly, b: UPoly) -> List[UPoly]:
    """Return digits r_0, r_1, ... with q = sum r_i b^i and deg r_i < deg b"""
    if b.degree < 1:
        raise ConstantBase("b-adic expansion needs deg b >= 1")
    digits: List[UPoly] = []
    rest = q
    while not rest.is_zero():
        rest, r = rest.divmod(b)
        digits.append(r)
    return digits


def b_adic_membership(q: UPoly, b: UPoly) -> Optional[List[int]]:
    """Return constants (r_0, ..., r_k) with q = sum r_i b^i, or None if q is not in k[b]"""
    digits = b_adic_expansion(q, b)
    if any(not d.is_constant() for d in digits):
        return None
    return [d.coeff(0) for d in digits]


def first_nonconstant_digit(q: UPoly, b: UPoly) -> Optional[UPoly]:
    for d in b_adic_expansion(q, b):
        if not d.is_constant():
            return d
    return None


def format_univariate(field: FieldSpec, coeffs: Sequence[int], var: str) -> str:
    terms = []
    for e in range(len(coeffs) - 1, -1, -1):
        a = coeffs[e]
        if a == 0:
            continue
        c = field.element_str(a)
        if e == 0:
            terms.append(c)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            terms.append(mono if a == 1 else f"{c}*{mono}")
    return " + ".join(terms) if terms else "0"
