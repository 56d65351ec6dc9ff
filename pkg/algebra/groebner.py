"""Buchberger's algorithm, elimination and membership tests.

Structure follows the classic spoly / reduce / select / update / minimalize /
interreduce decomposition with the Gebauer-Moeller pair criteria. Pair
selection is deterministic: smallest (lcm degree, pair index) first.
"""
import logging
from typing import Dict, List, Optional, Sequence, Set, Tuple

import config
from algebra.mpoly import MPoly, Monomial, MonomialOrder, PolyRing, block_order, GREVLEX
from errors import EliminationBudgetExceeded, PolyError, ZeroDenominator

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


def spoly(f: MPoly, g: MPoly) -> MPoly:
    """Return the s-polynomial of monic polynomials f and g."""
    lmf, lmg = f.LM, g.LM
    lcm = PolyRing.monomial_lcm(lmf, lmg)
    s1 = f.mul_term(PolyRing.monomial_div(lcm, lmf))
    s2 = g.mul_term(PolyRing.monomial_div(lcm, lmg))
    return s1 - s2


def reduce(g: MPoly, F: Sequence[MPoly]) -> MPoly:
    """Return the remainder when polynomial g is divided by polynomials F."""
    return g.rem(F)


def select(G: List[MPoly], P: Set[Pair]) -> Pair:
    """Select the pair with the smallest lcm degree, ties broken by index."""
    def key(p: Pair) -> Tuple:
        lcm = PolyRing.monomial_lcm(G[p[0]].LM, G[p[1]].LM)
        return (sum(lcm), p[1], p[0])
    return min(P, key=key)


def update(G: List[MPoly], P: Set[Pair], f: MPoly) -> Tuple[List[MPoly], Set[Pair]]:
    """Return the new basis and pair set when f is added to G (Gebauer-Moeller)."""
    lmf = f.LM
    lmG = [g.LM for g in G]
    lcm = PolyRing.monomial_lcm
    mul = PolyRing.monomial_mul
    div = PolyRing.monomial_div
    order_key = f.ring.order.key

    P = {p for p in P if (div(lcm(lmG[p[0]], lmG[p[1]]), lmf) is None or
                          lcm(lmG[p[0]], lmG[p[1]]) == lcm(lmG[p[0]], lmf) or
                          lcm(lmG[p[0]], lmG[p[1]]) == lcm(lmG[p[1]], lmf))}
    lcm_dict: Dict[Monomial, List[int]] = {}
    for i in range(len(G)):
        lcm_dict.setdefault(lcm(lmG[i], lmf), []).append(i)
    minimalized_lcms: List[Monomial] = []
    for L in sorted(lcm_dict, key=order_key):
        if all(div(L, L_) is None for L_ in minimalized_lcms):
            minimalized_lcms.append(L)
    new_pairs = set()
    for L in minimalized_lcms:
        if not any(lcm(lmG[i], lmf) == mul(lmG[i], lmf) for i in lcm_dict[L]):
            new_pairs.add((min(lcm_dict[L]), len(G)))
    return G + [f], P | new_pairs


def minimalize(G: List[MPoly]) -> List[MPoly]:
    """Return a minimal Groebner basis from an arbitrary Groebner basis G."""
    if not G:
        return []
    key = G[0].ring.order.key
    Gmin: List[MPoly] = []
    for f in sorted(G, key=lambda h: key(h.LM)):
        if all(PolyRing.monomial_div(f.LM, g.LM) is None for g in Gmin):
            Gmin.append(f)
    return Gmin


def interreduce(G: List[MPoly]) -> List[MPoly]:
    """Return the reduced Groebner basis from a minimal Groebner basis G."""
    Gred = []
    for i in range(len(G)):
        g = G[i].rem(G[:i] + G[i + 1:])
        Gred.append(g.monic())
    if Gred:
        key = Gred[0].ring.order.key
        Gred.sort(key=lambda h: key(h.LM))
    return Gred


def buchberger(F: Sequence[MPoly], order: Optional[MonomialOrder] = None,
               budget: Optional[int] = None) -> List[MPoly]:
    """Return the reduced Groebner basis of the ideal generated by F.

    The basis is sorted by leading monomial, smallest first. When an order is
    given the generators are moved into a copy of their ring using it.
    """
    F = [f for f in F if not f.is_zero()]
    if not F:
        return []
    ring = F[0].ring if order is None else F[0].ring.with_order(order)
    F = [ring.convert(f) for f in F]
    budget = config.GROEBNER_BUDGET if budget is None else budget

    G: List[MPoly] = []
    P: Set[Pair] = set()
    for f in F:
        G, P = update(G, P, f.monic())

    steps = 0
    while P:
        i, j = select(G, P)
        P.remove((i, j))
        steps += 1
        if steps > budget:
            raise EliminationBudgetExceeded(f"Buchberger exceeded {budget} reductions in {ring!r}")
        r = reduce(spoly(G[i], G[j]), G)
        if not r.is_zero():
            G, P = update(G, P, r.monic())

    basis = interreduce(minimalize(G))
    logger.debug(f"Groebner basis of {len(F)} generators in {ring!r}: {len(basis)} elements after {steps} reductions")
    return basis


def normal_form(f: MPoly, gb: Sequence[MPoly]) -> MPoly:
    if not gb:
        return f
    return gb[0].ring.convert(f).rem(gb)


def ideal_member(f: MPoly, gb: Sequence[MPoly]) -> bool:
    """True iff f reduces to zero modulo the reduced basis gb"""
    if not gb:
        return f.is_zero()
    return normal_form(f, gb).is_zero()


def eliminate(gens: Sequence[MPoly], drop: Sequence[str], order: MonomialOrder = GREVLEX,
              budget: Optional[int] = None) -> List[MPoly]:
    """Groebner basis of the ideal of gens intersected with k[remaining variables].

    Dropped variables are moved to the front and dominate in a block order;
    the surviving basis elements are returned in the ring of the remaining
    variables under `order`.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    src = gens[0].ring
    for name in drop:
        if name not in src.names:
            raise PolyError(f"cannot eliminate {name!r}: not a variable of {src!r}")
    keep = [n for n in src.names if n not in set(drop)]
    work = PolyRing(src.field, list(drop) + keep, block_order(len(drop)))
    target = PolyRing(src.field, keep, order)
    basis = buchberger([work.convert(g) for g in gens], budget=budget)
    k = len(drop)
    survivors = [MPoly(target, {m[k:]: a for m, a in g.terms.items()})
                 for g in basis if all(e == 0 for m in g.terms for e in m[:k])]
    if order != GREVLEX:
        return buchberger(survivors, budget=budget)
    logger.debug(f"Eliminated {list(drop)}: {len(survivors)} generators remain")
    return survivors


def poly_gcd(a: MPoly, b: MPoly, budget: Optional[int] = None) -> MPoly:
    """Monic gcd of a and b, computed as a*b / lcm with lcm generating <z*a, (1 - z)*b> cap k[X]."""
    ring = a.ring
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    if a.is_constant() or b.is_constant():
        return ring.one()
    if b.exact_div(a) is not None:
        return a.monic()
    if a.exact_div(b) is not None:
        return b.monic()
    work = PolyRing(ring.field, ['_z'] + list(ring.names))
    z = work.var('_z')
    basis = eliminate([z * work.convert(a), (work.one() - z) * work.convert(b)], ['_z'], budget=budget)
    lcm = ring.convert(basis[0])
    gcd = (a * b).exact_div(lcm)
    if gcd is None:
        raise PolyError(f"lcm {lcm} does not divide {a} * {b}")
    return gcd.monic()


class SubalgebraMembership:
    """Membership in a localized subalgebra k[gens]_h via tag variables.

    The tag ideal <T_i - gens_i> is eliminated against the original variables
    with a block order; f lies in k[gens] iff its normal form involves tags only.
    """

    def __init__(self, gens: Sequence[MPoly], budget: Optional[int] = None):
        self.gens = [g for g in gens if not g.is_zero()]
        if not self.gens:
            raise PolyError("subalgebra membership needs at least one nonzero generator")
        self.source = self.gens[0].ring
        n = self.source.nvars
        tags = [f"T{i}" for i in range(1, len(self.gens) + 1)]
        self.ring = PolyRing(self.source.field, list(self.source.names) + tags, block_order(n))
        self.n = n
        ideal = [self.ring.var(t) - self.ring.convert(g) for t, g in zip(tags, self.gens)]
        self.gb = buchberger(ideal, budget=budget)

    def express(self, f: MPoly) -> Optional[MPoly]:
        """Return f written as a polynomial in the tags, or None if f is not in k[gens]"""
        nf = normal_form(self.ring.convert(f), self.gb)
        if any(e for m in nf.terms for e in m[:self.n]):
            return None
        return nf

    def member(self, f: MPoly, h: MPoly, e_bound: int) -> Optional[int]:
        """Smallest e <= e_bound with h^e f in k[gens], or None"""
        if h.is_zero():
            raise ZeroDenominator("localization at the zero polynomial")
        g = f
        for e in range(e_bound + 1):
            if self.express(g) is not None:
                return e
            g = g * h
        return None


def subalgebra_member_localized(f: MPoly, gens: Sequence[MPoly], h: MPoly, e_bound: int) -> bool:
    """True iff h^e f lies in k[gens] for some e <= e_bound"""
    if h.is_zero():
        raise ZeroDenominator("localization at the zero polynomial")
    return SubalgebraMembership(gens).member(f, h, e_bound) is not None
