"""Elements of k[X][t]: a map from t-degree to polynomials in X"""
from typing import Dict, Iterable, List, Tuple

from algebra.mpoly import MPoly, PolyRing


class TPoly:
    __slots__ = ('ring', 'coeffs')

    def __init__(self, ring: PolyRing, coeffs: Dict[int, MPoly]):
        self.ring = ring
        self.coeffs: Dict[int, MPoly] = {e: f for e, f in coeffs.items() if not f.is_zero()}

    @classmethod
    def constant(cls, f: MPoly) -> 'TPoly':
        return cls(f.ring, {0: f})

    @classmethod
    def split(cls, f: MPoly, ring: PolyRing) -> 'TPoly':
        """Split f in k[X, t] (t the last variable) into its t-coefficients over ring"""
        out: Dict[int, Dict[Tuple[int, ...], int]] = {}
        for m, a in f.terms.items():
            out.setdefault(m[-1], {})[m[:-1]] = a
        return cls(ring, {e: MPoly(ring, terms) for e, terms in out.items()})

    def join(self, ring_t: PolyRing) -> MPoly:
        """Inverse of split"""
        terms = {}
        for e, f in self.coeffs.items():
            for m, a in f.terms.items():
                terms[m + (e,)] = a
        return MPoly(ring_t, terms)

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return max(self.coeffs, default=-1)

    def coeff(self, e: int) -> MPoly:
        return self.coeffs.get(e, self.ring.zero())

    def exponents(self) -> List[int]:
        return sorted(self.coeffs)

    def items(self) -> Iterable[Tuple[int, MPoly]]:
        return sorted(self.coeffs.items())

    def at_zero(self) -> MPoly:
        return self.coeff(0)

    def evaluate(self, t: int) -> MPoly:
        fld = self.ring.field
        result = self.ring.zero()
        for e, f in self.coeffs.items():
            result = result + f.scale(fld.pow(t, e))
        return result

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TPoly) and self.coeffs == other.coeffs

    def __add__(self, other: 'TPoly') -> 'TPoly':
        out = dict(self.coeffs)
        for e, f in other.coeffs.items():
            out[e] = out[e] + f if e in out else f
        return TPoly(self.ring, out)

    def __neg__(self) -> 'TPoly':
        return TPoly(self.ring, {e: -f for e, f in self.coeffs.items()})

    def __sub__(self, other: 'TPoly') -> 'TPoly':
        return self + (-other)

    def __mul__(self, other: 'TPoly') -> 'TPoly':
        out: Dict[int, MPoly] = {}
        for e1, f1 in self.coeffs.items():
            for e2, f2 in other.coeffs.items():
                prod = f1 * f2
                out[e1 + e2] = out[e1 + e2] + prod if e1 + e2 in out else prod
        return TPoly(self.ring, out)

    def __pow__(self, k: int) -> 'TPoly':
        result = TPoly.constant(self.ring.one())
        for _ in range(k):
            result = result * self
        return result

    def scale_poly(self, h: MPoly) -> 'TPoly':
        return TPoly(self.ring, {e: f * h for e, f in self.coeffs.items()})

    def __repr__(self) -> str:
        return f"TPoly({self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e, f in sorted(self.coeffs.items(), reverse=True):
            tpart = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            body = str(f)
            if not tpart:
                parts.append(body)
            elif body == "1":
                parts.append(tpart)
            else:
                parts.append(f"{tpart}*({body})")
        return " + ".join(parts)
