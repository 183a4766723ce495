"""Dense polynomials with arbitrary-precision nonnegative integer coefficients.

``Poly.coeffs[i]`` is the coefficient of ``x**i``.  The zero polynomial has an
empty coefficient tuple.  Python ints are unbounded, so no overflow handling is
needed anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Poly:
    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        c = tuple(int(v) for v in self.coeffs)
        if any(v < 0 for v in c):
            raise ValueError(f"negative coefficient in {c}")
        end = len(c)
        while end and c[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coeffs", c[:end])

    @classmethod
    def from_signed(cls, coeffs: Sequence[int]) -> "Poly":
        """Build from a signed intermediate; any negative entry is an internal error."""
        bad = [i for i, v in enumerate(coeffs) if v < 0]
        if bad:
            raise ArithmeticError(f"negative final coefficient at x^{bad[0]}: {coeffs[bad[0]]}")
        return cls(tuple(coeffs))

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "Poly":
        return cls((0,) * exp + (coeff,))

    @classmethod
    def from_dict(cls, terms: dict[int, int]) -> "Poly":
        if not terms:
            return cls()
        out = [0] * (max(terms) + 1)
        for e, c in terms.items():
            out[e] += c
        return cls(tuple(out))

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def min_exp(self) -> int | None:
        for i, v in enumerate(self.coeffs):
            if v:
                return i
        return None

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        return add(self, other)

    def __mul__(self, other: "Poly") -> "Poly":
        return mul(self, other)

    def __call__(self, x0: int) -> int:
        return eval_int(self, x0)

    # -- display -----------------------------------------------------------

    def __str__(self) -> str:
        return format_poly(self)

    def to_json(self) -> dict:
        return {
            "coefficients": [str(c) for c in self.coeffs],
            "min_exp": self.min_exp,
            "degree": self.degree,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Poly":
        return cls(tuple(int(s) for s in obj["coefficients"]))


ZERO = Poly()
ONE = Poly((1,))
X = Poly((0, 1))


def add(p: Poly, q: Poly) -> Poly:
    a, b = p.coeffs, q.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] += v
    return Poly(tuple(out))


def mul(p: Poly, q: Poly) -> Poly:
    a, b = p.coeffs, q.coeffs
    if not a or not b:
        return ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u:
            for j, v in enumerate(b):
                out[i + j] += u * v
    return Poly(tuple(out))


def shift(p: Poly, k: int) -> Poly:
    """Multiply by ``x**k``."""
    if k < 0:
        raise ValueError("shift must be nonnegative")
    if p.is_zero():
        return ZERO
    return Poly((0,) * k + p.coeffs)


def scale(p: Poly, c: int) -> Poly:
    if c < 0:
        raise ValueError("scale factor must be nonnegative")
    return Poly(tuple(c * v for v in p.coeffs))


def binom_power(a: int, e: int) -> Poly:
    """Expanded ``(a + x)**e``."""
    if a < 0 or e < 0:
        raise ValueError("binom_power takes nonnegative arguments")
    return Poly(tuple(comb(e, i) * a ** (e - i) for i in range(e + 1)))


def eval_int(p: Poly, x0: int) -> int:
    acc = 0
    for v in reversed(p.coeffs):
        acc = acc * x0 + v
    return acc


def is_unimodal(p: Poly) -> bool:
    """Weak rise-then-fall over the span between the lowest and highest nonzero terms.

    An internal zero inside that span makes the sequence non-unimodal.
    """
    lo = p.min_exp
    if lo is None:
        return True
    seq = p.coeffs[lo:]
    i = 0
    while i + 1 < len(seq) and seq[i] <= seq[i + 1]:
        i += 1
    while i + 1 < len(seq) and seq[i] >= seq[i + 1]:
        i += 1
    return i == len(seq) - 1 and all(seq)


def sum_polys(polys: Iterable[Poly]) -> Poly:
    acc: list[int] = []
    for p in polys:
        if len(p.coeffs) > len(acc):
            acc.extend([0] * (len(p.coeffs) - len(acc)))
        for i, v in enumerate(p.coeffs):
            acc[i] += v
    return Poly(tuple(acc))


def format_poly(p: Poly) -> str:
    if p.is_zero():
        return "0"
    terms = []
    for i, c in enumerate(p.coeffs):
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            mono = "x" if i == 1 else f"x^{i}"
            terms.append(mono if c == 1 else f"{c}{mono}")
    return " + ".join(terms)
