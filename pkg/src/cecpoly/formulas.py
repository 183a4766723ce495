"""Closed forms, recurrences and inclusion-exclusion sums as stated in the source.

Every evaluator reproduces the stated expression literally, including the ones
that disagree with enumeration (``cec_fan_claimed``, ``cec_cocktail_claimed``,
``wheel_total``).  Nothing here corrects a formula; adjudication is the job of
:mod:`cecpoly.verify`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import ceil, comb, prod
from typing import Literal, Sequence

from .errors import InvalidParameter
from .graphs import Family, FamilySpec, Graph, turan_parts
from .poly import ONE, ZERO, Poly, binom_power, shift


@dataclass(frozen=True)
class FormulaResult:
    poly: Poly | None = None
    total: int | None = None
    claim_status_hint: str = "stated"

    def __post_init__(self) -> None:
        if self.poly is None and self.total is None:
            raise ValueError("FormulaResult needs a polynomial or a total")


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidParameter(msg)


# -- trees, paths, stars, cycles ---------------------------------------------


def cec_tree(n: int) -> Poly:
    _need(n >= 1, "tree needs n >= 1")
    return Poly.monomial(n - 1)


def cec_path(n: int) -> Poly:
    _need(n >= 2, "path needs n >= 2 vertices")
    return Poly.monomial(n - 1)


def cec_star(n: int) -> Poly:
    _need(n >= 1, "star needs n >= 1 leaves")
    return Poly.monomial(n)


def cec_cycle(n: int) -> Poly:
    _need(n >= 3, "cycle needs n >= 3")
    return Poly.from_dict({n - 1: n, n: 1})


# -- complete graphs -----------------------------------------------------------


@lru_cache(maxsize=None)
def cec_complete_total(n: int) -> int:
    """Connected spanning subgraphs of ``K_n``: subtract, for a fixed vertex, every
    choice of its component size ``k < n``."""
    _need(n >= 1, "complete graph needs n >= 1")
    if n == 1:
        return 1
    disconnected = sum(
        comb(n - 1, k - 1) * cec_complete_total(k) * 2 ** comb(n - k, 2) for k in range(1, n)
    )
    return 2 ** comb(n, 2) - disconnected


def cec_k2n(n: int) -> Poly:
    _need(n >= 2, "K_{2,n} needs n >= 2")
    terms = {n + k: comb(n, k) * 2 ** (n - k) for k in range(1, n)}
    terms[2 * n] = terms.get(2 * n, 0) + 1
    return Poly.from_dict(terms)


def cec_k2n_total(n: int) -> int:
    _need(n >= 2, "K_{2,n} needs n >= 2")
    return 3**n - 2**n


def cec_friendship(k: int) -> Poly:
    _need(k >= 1, "friendship graph needs k >= 1")
    return shift(binom_power(3, k), 2 * k)


def cec_lollipop(m: int, n: int, km_poly: Poly) -> Poly:
    """``x**n`` times the clique polynomial; ``km_poly`` must be ``E_c(K_m, x)``."""
    _need(m >= 2 and n >= 1, "lollipop needs m >= 2 and n >= 1")
    return shift(km_poly, n)


# -- fan and cocktail party, as printed ---------------------------------------------


def cec_fan_claimed(n: int) -> Poly:
    _need(n >= 4, "fan formula stated for n >= 4")
    return Poly.from_dict({n - 1 + k: comb(n - 2, k) * 2**k for k in range(n - 1)})


def fan_total_claimed(n: int) -> int:
    _need(n >= 4, "fan formula stated for n >= 4")
    return 3 ** (n - 2)


# printed coefficient list for the octahedron, sizes 5..12
COCKTAIL_CP3_COEFFS = {5: 384, 6: 740, 7: 744, 8: 489, 9: 240, 10: 90, 11: 24, 12: 1}


def cec_cocktail_claimed(n: int) -> Poly:
    _need(n >= 2, "cocktail party graph needs n >= 2")
    if n == 2:
        return Poly.from_dict({3: 4, 4: 1})
    if n == 3:
        return Poly.from_dict(COCKTAIL_CP3_COEFFS)
    return ZERO


def cocktail_total_claimed(n: int) -> int:
    _need(n >= 2, "cocktail party graph needs n >= 2")
    return {2: 5, 3: 2656}.get(n, 0)


def wheel_total(n: int, mode: Literal["recurrence", "closed_form"] = "recurrence") -> int:
    """Total for ``W_n`` from the stated order-3 recurrence or its closed form."""
    _need(n >= 4, "wheel needs n >= 4")
    if mode == "closed_form":
        return 10 - 40 * 2 ** (n - 4) + 68 * 3 ** (n - 4)
    if mode != "recurrence":
        raise InvalidParameter(f"unknown wheel mode {mode!r}")
    seq = [38, 134, 462]
    while len(seq) < n - 3:
        seq.append(6 * seq[-1] - 11 * seq[-2] + 6 * seq[-3])
    return seq[n - 4]


# -- complete multipartite inclusion-exclusion ------------------------------------
#
# These sums count edge covers: nothing in them enforces connectivity.


def _ie_terms(parts: Sequence[int]):
    """Yield (signed multiplicity, number of edges avoiding the excluded vertices)."""
    for excl in product(*(range(a + 1) for a in parts)):
        kept = [a - i for a, i in zip(parts, excl)]
        allowed = sum(kept[p] * kept[q] for p in range(len(kept)) for q in range(p + 1, len(kept)))
        sign = -1 if sum(excl) % 2 else 1
        yield sign * prod(comb(a, i) for a, i in zip(parts, excl)), allowed


def ec_count_multipartite(parts: Sequence[int]) -> int:
    _need(len(parts) >= 2 and all(a >= 1 for a in parts), "need >= 2 parts of size >= 1")
    return sum(c * 2**e for c, e in _ie_terms(parts))


def _signed_binomial_sum(terms) -> Poly:
    acc: list[int] = []
    for c, e in terms:
        if len(acc) <= e:
            acc.extend([0] * (e + 1 - len(acc)))
        for j in range(e + 1):
            acc[j] += c * comb(e, j)
    return Poly.from_signed(acc)


def ec_poly_multipartite(parts: Sequence[int]) -> Poly:
    _need(len(parts) >= 2 and all(a >= 1 for a in parts), "need >= 2 parts of size >= 1")
    return _signed_binomial_sum(_ie_terms(parts))


def turan_ie_poly(n: int, k: int) -> Poly:
    """Vertex-subset inclusion-exclusion with the exponent written as
    ``m - sum |I_i| (n - a_i) + sum_{i<j} |I_i| |I_j|`` over balanced parts."""
    _need(2 <= k < n, "turan needs 2 <= k < n")
    a = turan_parts(n, k)
    m = sum(a[i] * a[j] for i in range(k) for j in range(i + 1, k))

    def terms():
        for sizes in product(*(range(ai + 1) for ai in a)):
            exp = m - sum(s * (n - ai) for s, ai in zip(sizes, a))
            exp += sum(sizes[i] * sizes[j] for i in range(k) for j in range(i + 1, k))
            sign = -1 if sum(sizes) % 2 else 1
            yield sign * prod(comb(ai, s) for ai, s in zip(a, sizes)), exp

    return _signed_binomial_sum(terms())


# -- spanning-tree closed forms -----------------------------------------------------


def hypercube_spanning_trees(d: int) -> int:
    _need(d >= 1, "hypercube needs d >= 1")
    return 2 ** (2**d - d - 1) * prod(k ** comb(d, k) for k in range(1, d + 1))


def turan_spanning_trees(n: int, k: int) -> int:
    _need(2 <= k < n, "turan needs 2 <= k < n")
    a = turan_parts(n, k)
    return n ** (k - 2) * prod((n - ai) ** (ai - 1) for ai in a)


# -- bounds --------------------------------------------------------------------------


def bounds_check(g: Graph, p: Poly) -> bool:
    """Minimum exponent of a claimed polynomial lies in ``[ceil(n/2), n - 1]``."""
    lo = p.min_exp
    if lo is None:
        return True
    return ceil(g.n / 2) <= lo <= g.n - 1


# -- dispatch by family ---------------------------------------------------------------


def formula_for(fs: FamilySpec, km_poly: Poly | None = None) -> FormulaResult | None:
    """The stated polynomial/total for a family instance, or None when no formula applies."""
    p = fs.params
    fam = fs.family
    if fam is Family.PATH:
        return FormulaResult(cec_path(p[0])) if p[0] >= 2 else FormulaResult(ONE)
    if fam is Family.STAR:
        return FormulaResult(cec_star(p[0]))
    if fam is Family.CYCLE:
        return FormulaResult(cec_cycle(p[0]))
    if fam is Family.COMPLETE:
        return FormulaResult(total=cec_complete_total(p[0]))
    if fam is Family.COMPLETE_BIPARTITE and 2 in p:
        other = p[1] if p[0] == 2 else p[0]
        return FormulaResult(cec_k2n(other), cec_k2n_total(other)) if other >= 2 else None
    if fam is Family.FRIENDSHIP:
        return FormulaResult(cec_friendship(p[0]), 4 ** p[0])
    if fam is Family.LOLLIPOP:
        if km_poly is None:
            return None
        return FormulaResult(cec_lollipop(p[0], p[1], km_poly))
    if fam is Family.FAN and p[0] >= 4:
        return FormulaResult(cec_fan_claimed(p[0]), fan_total_claimed(p[0]))
    if fam is Family.WHEEL:
        return FormulaResult(total=wheel_total(p[0]))
    if fam is Family.COCKTAIL_PARTY and p[0] >= 2:
        return FormulaResult(cec_cocktail_claimed(p[0]), cocktail_total_claimed(p[0]))
    return None
