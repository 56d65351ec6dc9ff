"""Finite fields F_{p^m} with table-driven scalar arithmetic.

Elements are plain ints in galois' integer representation: for m > 1 the
integer sum(c_i * p**i) stands for sum(c_i * a**i) where a is a root of the
modulus. Field construction, irreducibility and the primitive element come
from galois; the scalar hot path runs on exp/log/Zech tables.
"""
import functools
import logging
from typing import Any, Dict, Iterable, List, Optional, Sequence

import galois
import numpy as np

from errors import DivisionByZero, FieldError, FieldMismatch, NotPrime, ReducibleModulus

logger = logging.getLogger(__name__)


class FieldSpec:
    """A validated finite field F_{p^m}; immutable after construction"""

    def __init__(self, p: int, m: int, modulus: Sequence[int], gf: type):
        self.p = p
        self.m = m
        self.q = p ** m
        # little-endian, monic; empty for prime fields
        self.modulus = tuple(int(c) for c in modulus)
        self.GF = gf
        self.primitive_element = int(gf.primitive_element)
        self._build_tables()

    def _build_tables(self) -> None:
        q = self.q
        powers = self.GF.primitive_element ** np.arange(q - 1)
        exp = powers.view(np.ndarray).astype(np.int64)
        log = np.zeros(q, dtype=np.int64)
        log[exp] = np.arange(q - 1)
        plus_one = (powers + self.GF(1)).view(np.ndarray).astype(np.int64)
        # Zech logarithms: a^n + 1 = a^zech[n], -1 marks a^n = -1
        zech = np.where(plus_one == 0, -1, log[plus_one])
        self._exp: List[int] = exp.tolist()
        self._log: List[int] = log.tolist()
        self._zech: List[int] = zech.tolist()
        self._order = q - 1

    # -- identity -----------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        return (isinstance(other, FieldSpec) and self.p == other.p
                and self.m == other.m and self.modulus == other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        if self.m == 1:
            return f"F_{self.p}"
        return f"F_{self.q}[{self.modulus}]"

    # -- arithmetic ---------------------------------------------------------
    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        if a == 0:
            return b
        if b == 0:
            return a
        la = self._log[a]
        z = self._zech[(self._log[b] - la) % self._order]
        if z < 0:
            return 0
        return self._exp[(la + z) % self._order]

    def neg(self, a: int) -> int:
        if self.m == 1:
            return (-a) % self.p
        return self.mul(a, self.p - 1)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.m == 1:
            return (a * b) % self.p
        return self._exp[(self._log[a] + self._log[b]) % self._order]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("zero has no inverse")
        return self._exp[(-self._log[a]) % self._order]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise DivisionByZero("negative power of zero")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % self._order]

    def frobenius_power(self, a: int, j: int) -> int:
        """Return a^{p^j}; negative j gives p^{|j|}-th roots (x^{p^m} = x)"""
        return self.pow(a, self.p ** (j % self.m))

    def sum(self, values: Iterable[int]) -> int:
        total = 0
        for v in values:
            total = self.add(total, v)
        return total

    def from_int(self, n: int) -> int:
        """Embed an integer through the prime subfield"""
        return n % self.p

    def elements(self) -> range:
        return range(self.q)

    def random_element(self, rng: np.random.Generator) -> int:
        return int(rng.integers(self.q))

    def digits(self, a: int) -> List[int]:
        return [(a // self.p ** i) % self.p for i in range(self.m)]

    # -- I/O ----------------------------------------------------------------
    def to_json(self, a: int) -> Any:
        if self.m == 1:
            return a
        return self.digits(a)

    def from_json(self, value: Any) -> int:
        if isinstance(value, list):
            if len(value) > self.m:
                raise FieldError(f"coefficient array {value} longer than the extension degree {self.m}")
            return sum((int(c) % self.p) * self.p ** i for i, c in enumerate(value))
        return int(value) % self.p

    def element_str(self, a: int) -> str:
        if self.m == 1:
            return str(a)
        terms = []
        for i, c in reversed(list(enumerate(self.digits(a)))):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "a" if i == 1 else f"a^{i}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return "(" + "+".join(terms) + ")" if len(terms) > 1 else (terms[0] if terms else "0")

    # -- embeddings ---------------------------------------------------------
    def embedding(self, ext: 'FieldSpec') -> List[int]:
        """Return the table of a deterministic embedding self -> ext"""
        return _embedding_table(self, ext)

    def to_array(self, rows: Sequence[Sequence[int]]) -> galois.FieldArray:
        return self.GF(np.array(rows, dtype=np.int64))


@functools.lru_cache(maxsize=None)
def _embedding_table(small: FieldSpec, ext: FieldSpec) -> List[int]:
    if small == ext:
        return list(range(small.q))
    if small.p != ext.p or ext.m % small.m != 0:
        raise FieldMismatch(f"{small!r} does not embed in {ext!r}")
    if small.m == 1:
        return list(range(small.p))
    root = None
    for r in ext.elements():
        value = 0
        for i, c in enumerate(small.modulus):
            value = ext.add(value, ext.mul(ext.from_int(c), ext.pow(r, i)))
        if value == 0:
            root = r
            break
    if root is None:
        raise FieldMismatch(f"modulus of {small!r} has no root in {ext!r}")
    table = []
    for a in small.elements():
        image = 0
        for i, c in enumerate(small.digits(a)):
            image = ext.add(image, ext.mul(ext.from_int(c), ext.pow(root, i)))
        table.append(image)
    logger.debug(f"Embedded {small!r} into {ext!r} via root {root}")
    return table


@functools.lru_cache(maxsize=None)
def _cached_field(p: int, m: int, modulus: Optional[tuple]) -> FieldSpec:
    if not galois.is_prime(p):
        raise NotPrime(p)
    if m < 1:
        raise FieldError(f"extension degree must be at least 1, got {m}")
    prime_field = galois.GF(p)
    if m == 1:
        return FieldSpec(p, 1, (), prime_field)
    if modulus is None:
        poly = galois.irreducible_poly(p, m, method="min")
        modulus = tuple(int(c) for c in poly.coeffs[::-1])
    else:
        if len(modulus) != m + 1 or modulus[-1] % p != 1:
            raise ReducibleModulus(modulus)
        poly = galois.Poly([c % p for c in reversed(modulus)], field=prime_field)
        if not poly.is_irreducible():
            raise ReducibleModulus(modulus)
    logger.debug(f"Building F_{p}^{m} with modulus {modulus}")
    gf = galois.GF(p ** m, irreducible_poly=poly)
    return FieldSpec(p, m, modulus, gf)


def build_field(p: int, m: int = 1, modulus: Optional[Sequence[int]] = None) -> FieldSpec:
    """Build and validate F_{p^m}; the modulus is little-endian and monic"""
    key = None if modulus is None or m == 1 else tuple(int(c) for c in modulus)
    return _cached_field(int(p), int(m), key)


def frobenius_power(field: FieldSpec, x: int, j: int) -> int:
    return field.frobenius_power(x, j)


def field_to_json(field: FieldSpec) -> Dict[str, Any]:
    data: Dict[str, Any] = {'p': field.p, 'field_degree': field.m}
    if field.m > 1:
        data['modulus'] = list(field.modulus)
    return data
