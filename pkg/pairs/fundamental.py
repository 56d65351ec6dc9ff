"""Combining pairs and the generator of the fundamental ideal"""
import logging
from typing import List, Optional, Sequence, Tuple

from algebra.mpoly import MPoly
from algebra.orering import AdditivePoly, right_gcd_ext
from errors import EmptyInput, PairError, TrivialInput
from pairs.pair import Pair, is_pair, make_pair
from representation.garep import Representation

logger = logging.getLogger(__name__)


def _apply_to_fraction(rep: Representation, b: AdditivePoly, g: MPoly, h: MPoly) -> Tuple[MPoly, int]:
    """b(g/h) = N / h^P with P = p^{deg b}; returns (N, P)"""
    p = rep.field.p
    top = p ** b.degree
    num = rep.ring.zero()
    for i, a in enumerate(b.coeffs):
        if a:
            e = p ** i
            num = num + ((g ** e) * (h ** (top - e))).scale(a)
    return num, top


def cancel_powers(num: MPoly, den_factors: List[Tuple[MPoly, int]]) -> Tuple[MPoly, List[Tuple[MPoly, int]]]:
    """Divide num / prod(h_k^{e_k}) by common powers of each h_k"""
    out = []
    for h, e in den_factors:
        while e > 0 and not h.is_constant():
            quot = num.exact_div(h)
            if quot is None:
                break
            num, e = quot, e - 1
        out.append((h, e))
    return num, out


def combine(rep: Representation, first: Pair, second: Pair) -> Pair:
    """A b-pair for the monic right gcd b of the two c's, with
    g/h = b1(g1/h1) + b2(g2/h2) in lowest terms along h1, h2"""
    if first.is_trivial() or second.is_trivial():
        raise TrivialInput("combine needs two non-trivial pairs")
    b, b1, b2, _, _ = right_gcd_ext(first.c, second.c)
    factors: List[Tuple[MPoly, int]] = []
    parts: List[Tuple[MPoly, int]] = []
    for cof, pr in ((b1, first), (b2, second)):
        if cof.is_zero():
            parts.append((rep.ring.zero(), 0))
            factors.append((pr.h, 0))
        else:
            num, top = _apply_to_fraction(rep, cof, pr.g, pr.h)
            parts.append((num, top))
            factors.append((pr.h, top))
    (n1, e1), (n2, e2) = parts
    h1, h2 = first.h, second.h
    num = n1 * (h2 ** e2) + n2 * (h1 ** e1)
    num, reduced = cancel_powers(num, factors)
    den = rep.ring.one()
    for h, e in reduced:
        den = den * (h ** e)
    pair = make_pair(rep, num, den, b)
    if not is_pair(rep, pair.g, pair.h, pair.c):
        raise PairError(f"combined pair failed verification: {pair}")
    logger.debug(f"Combined {first.c} and {second.c} into a {b}-pair")
    return pair


def fundamental_generator(rep: Representation, pairs: Sequence[Pair]) -> AdditivePoly:
    """Monic iterated right gcd of the c's of the non-trivial pairs"""
    live = [pr for pr in pairs if not pr.is_trivial()]
    if not live:
        raise EmptyInput("the fundamental ideal needs at least one non-trivial pair")
    b = live[0].c.monic()
    for pr in live[1:]:
        b = right_gcd_ext(b, pr.c)[0]
    return b


def fundamental_witness(rep: Representation, pairs: Sequence[Pair], b: Optional[AdditivePoly] = None) -> Pair:
    """A b-pair for the fundamental generator b, built by folding combine when
    no listed pair already has c = b"""
    live = [pr for pr in pairs if not pr.is_trivial()]
    if not live:
        raise EmptyInput("the fundamental ideal needs at least one non-trivial pair")
    b = fundamental_generator(rep, live) if b is None else b
    for pr in live:
        if pr.c == b:
            return pr
    witness = live[0]
    for pr in live[1:]:
        if witness.c == b:
            break
        if right_gcd_ext(witness.c, pr.c)[0] != witness.c:
            witness = combine(rep, witness, pr)
    return witness
