"""Values printed in the source, stored with the citation they were copied from.

Polynomials are ``{exponent: coefficient}`` maps exactly as printed; nothing is
corrected here.  ``tests/test_fixtures.py`` pins a digest of every entry.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from typing import Union

from .poly import Poly

Value = Union[dict, int]


@dataclass(frozen=True)
class Fixture:
    id: str
    citation: str
    value: Value

    def poly(self) -> Poly:
        assert isinstance(self.value, dict)
        return Poly.from_dict(self.value)

    def digest(self) -> str:
        payload = json.dumps({"id": self.id, "citation": self.citation, "value": _jsonable(self.value)}, sort_keys=True)
        return hashlib.sha256(payload.encode()).hexdigest()[:16]


def _jsonable(v: Value):
    if isinstance(v, dict):
        return {str(k): int(c) for k, c in sorted(v.items())}
    return int(v)


_KN = "complete-graph table (polynomial and total count for K_n)"
_HC = "small-hypercube table (spanning-tree term bolded)"
_TU = "selected Turan graphs table"

FIXTURES: tuple[Fixture, ...] = (
    Fixture("table-Kn-row-2", f"{_KN}, row n=2", {1: 1}),
    Fixture("table-Kn-row-3", f"{_KN}, row n=3", {2: 3, 3: 1}),
    Fixture("table-Kn-row-4", f"{_KN}, row n=4", {3: 16, 4: 15, 5: 6, 6: 1}),
    Fixture("table-Kn-row-5", f"{_KN}, row n=5", {4: 125, 5: 222, 6: 205, 7: 120, 8: 45, 9: 10, 10: 1}),
    Fixture(
        "table-Kn-row-6",
        f"{_KN}, row n=6",
        {5: 1296, 6: 3660, 7: 5700, 8: 6165, 9: 4945, 10: 2997, 11: 1365, 12: 455, 13: 105, 14: 15, 15: 1},
    ),
    Fixture("table-hypercube-d1", f"{_HC}, row d=1", {1: 1}),
    Fixture("table-hypercube-d2", f"{_HC}, row d=2", {3: 4, 4: 1}),
    Fixture("table-hypercube-d3", f"{_HC}, row d=3", {7: 384, 8: 408, 9: 212, 10: 66, 11: 12, 12: 1}),
    Fixture("table-hypercube-d4-leading", f"{_HC}, row d=4, bolded x^15 term", 42568192),
    Fixture("table-turan-3-2", f"{_TU}, row (3,2)", {2: 1}),
    Fixture("table-turan-4-2", f"{_TU}, row (4,2)", {3: 4, 4: 1}),
    Fixture("table-turan-4-3", f"{_TU}, row (4,3)", {3: 8, 4: 5, 5: 1}),
    Fixture("table-turan-5-2", f"{_TU}, row (5,2)", {4: 12, 5: 6, 6: 1}),
    Fixture("table-turan-5-3", f"{_TU}, row (5,3)", {4: 45, 5: 52, 6: 28, 7: 8, 8: 1}),
    Fixture("table-turan-5-4", f"{_TU}, row (5,4)", {4: 75, 5: 111, 6: 82, 7: 36, 8: 9, 9: 1}),
    Fixture("wheel-initial-4", "wheel theorem, initial condition E_4", 38),
    Fixture("wheel-initial-5", "wheel theorem, initial condition E_5", 134),
    Fixture("wheel-initial-6", "wheel theorem, initial condition E_6", 462),
    Fixture("wheel-check-7", "wheel theorem, stated check value E_7", 1526),
    Fixture("cocktail-cp2", "cocktail party theorem, n=2 case", {3: 4, 4: 1}),
    Fixture(
        "cocktail-cp3-coefficients",
        "cocktail party theorem, listed coefficients e_c(CP(3), 5..12)",
        {5: 384, 6: 740, 7: 744, 8: 489, 9: 240, 10: 90, 11: 24, 12: 1},
    ),
    Fixture("cocktail-cp3-total", "cocktail party theorem, stated total for n=3", 2656),
    Fixture("kpartite-ec-1-1-1", "multipartite example 1, edge cover count of K_{1,1,1}", 4),
    Fixture("kpartite-ec-2-2", "multipartite example 2, edge cover count of K_{2,2}", 7),
    Fixture("kpartite-ec-1-1-2", "multipartite example 3, edge cover count of K_{1,1,2}", 16),
    Fixture("kpartite-cec-1-1-1", "multipartite example 1, reported connected count", 4),
    Fixture("kpartite-cec-2-2", "multipartite example 2, reported connected count", 5),
    Fixture("kpartite-cec-1-1-2", "multipartite example 3, reported connected count", 14),
)

BY_ID = {f.id: f for f in FIXTURES}


def fixture(fid: str) -> Fixture:
    return BY_ID[fid]
