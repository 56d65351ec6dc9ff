"""Elements N / h^e of a localization k[X]_h with a fixed denominator h"""
from typing import Dict

from algebra.mpoly import MPoly
from errors import ZeroDenominator


class HFrac:
    __slots__ = ('num', 'h', 'e')

    def __init__(self, num: MPoly, h: MPoly, e: int = 0):
        if h.is_zero():
            raise ZeroDenominator("localization at the zero polynomial")
        if e < 0:
            raise ValueError(f"negative h-exponent {e}")
        self.num = num
        self.h = h
        self.e = e

    @classmethod
    def from_poly(cls, f: MPoly, h: MPoly) -> 'HFrac':
        return cls(f, h, 0)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def _aligned(self, other: 'HFrac'):
        if other.h != self.h:
            raise ValueError("fractions over different denominators")
        e = max(self.e, other.e)
        return self.num * (self.h ** (e - self.e)), other.num * (self.h ** (e - other.e)), e

    def __add__(self, other: 'HFrac') -> 'HFrac':
        a, b, e = self._aligned(other)
        return HFrac(a + b, self.h, e).to_lowest_terms()

    def __neg__(self) -> 'HFrac':
        return HFrac(-self.num, self.h, self.e)

    def __sub__(self, other: 'HFrac') -> 'HFrac':
        return self + (-other)

    def __mul__(self, other: 'HFrac') -> 'HFrac':
        if other.h != self.h:
            raise ValueError("fractions over different denominators")
        return HFrac(self.num * other.num, self.h, self.e + other.e).to_lowest_terms()

    def __pow__(self, k: int) -> 'HFrac':
        result = HFrac(self.h.ring.one(), self.h)
        for _ in range(k):
            result = result * self
        return result

    def scale(self, a: int) -> 'HFrac':
        return HFrac(self.num.scale(a), self.h, self.e)

    def to_lowest_terms(self) -> 'HFrac':
        """Cancel common factors of h from numerator and denominator"""
        num, e = self.num, self.e
        if num.is_zero():
            return HFrac(num, self.h, 0)
        while e > 0 and not self.h.is_constant():
            quot = num.exact_div(self.h)
            if quot is None:
                break
            num, e = quot, e - 1
        return HFrac(num, self.h, e)

    def is_polynomial(self) -> bool:
        return self.to_lowest_terms().e == 0

    def cleared(self, e: int) -> MPoly:
        """The numerator over h^e, for e at least the current exponent"""
        if e < self.e:
            raise ValueError(f"cannot clear h^{self.e} with h^{e}")
        return self.num * (self.h ** (e - self.e))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HFrac) or other.h != self.h:
            return NotImplemented
        a, b, _ = self._aligned(other)
        return a == b

    def __hash__(self) -> int:
        low = self.to_lowest_terms()
        return hash((low.num, low.e))

    def __repr__(self) -> str:
        return f"HFrac({self})"

    def __str__(self) -> str:
        if self.e == 0:
            return str(self.num)
        power = f"({self.h})" if self.e == 1 else f"({self.h})^{self.e}"
        return f"({self.num}) / {power}"

    def to_json(self) -> Dict:
        return {'numerator': str(self.num), 'denominator': str(self.h), 'exponent': self.e}
