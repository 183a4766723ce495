"""Simple labeled graphs, generators for the studied families, and edge-list I/O.

Labeling conventions (fixed so fixtures are reproducible):

* star, wheel, fan, friendship: the hub is vertex 0.
* wheel ``W_n``: rim ``1..n-1`` in cyclic order.
* fan ``F(n)``: path ``1..n-1``, every path vertex joined to 0.
* friendship ``F_k``: triangle ``i`` is ``{0, 2i+1, 2i+2}``.
* lollipop ``L(m, n)``: clique ``0..m-1``, path ``m-1, m, ..., m+n-1``.
* hypercube ``Q_d``: vertex ``v`` is its coordinate word; edges flip one bit.
* complete multipartite / Turan / cocktail party: parts are consecutive label
  blocks; Turan's first ``n mod k`` parts get the extra vertex.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import EdgeListParseError, InvalidParameter

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        norm = []
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            norm.append((u, v) if u < v else (v, u))
        norm.sort()
        for a, b in zip(norm, norm[1:]):
            if a == b:
                raise ValueError(f"duplicate edge {a}")
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj


class Family(str, enum.Enum):
    PATH = "path"
    CYCLE = "cycle"
    STAR = "star"
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "complete_bipartite"
    COMPLETE_MULTIPARTITE = "complete_multipartite"
    FRIENDSHIP = "friendship"
    LOLLIPOP = "lollipop"
    FAN = "fan"
    WHEEL = "wheel"
    COCKTAIL_PARTY = "cocktail_party"
    HYPERCUBE = "hypercube"
    TURAN = "turan"


# per-position minimums (None: variadic part list) and a usage string
_PARAM_RULES = {
    Family.PATH: ((1,), "path n: n >= 1 vertices"),
    Family.CYCLE: ((3,), "cycle n: n >= 3 vertices"),
    Family.STAR: ((1,), "star n: n >= 1 leaves"),
    Family.COMPLETE: ((1,), "complete n: n >= 1 vertices"),
    Family.COMPLETE_BIPARTITE: ((1, 1), "complete_bipartite a b: parts >= 1"),
    Family.COMPLETE_MULTIPARTITE: (None, "complete_multipartite a1 a2 ...: >= 2 parts, each >= 1"),
    Family.FRIENDSHIP: ((1,), "friendship k: k >= 1 triangles"),
    Family.LOLLIPOP: ((2, 1), "lollipop m n: clique m >= 2, path edges n >= 1"),
    Family.FAN: ((2,), "fan n: n >= 2 total vertices"),
    Family.WHEEL: ((4,), "wheel n: n >= 4 total vertices"),
    Family.COCKTAIL_PARTY: ((1,), "cocktail_party n: n >= 1 pairs"),
    Family.HYPERCUBE: ((1,), "hypercube d: d >= 1"),
    Family.TURAN: ((2, 2), "turan n k: 2 <= k < n"),
}


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    params: tuple[int, ...]

    def __post_init__(self) -> None:
        try:
            fam = Family(self.family)
        except ValueError:
            raise InvalidParameter(f"unknown family {self.family!r}") from None
        object.__setattr__(self, "family", fam)
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        validate(self)

    def __str__(self) -> str:
        return f"{self.family.value}({','.join(map(str, self.params))})"


def family_help(family: Family) -> str:
    return _PARAM_RULES[Family(family)][1]


def validate(spec: FamilySpec) -> None:
    mins, doc = _PARAM_RULES[spec.family]
    p = spec.params
    if mins is None:
        if len(p) < 2 or any(a < 1 for a in p):
            raise InvalidParameter(f"bad parameters {p}; expected {doc}")
        return
    if len(p) != len(mins) or any(a < lo for a, lo in zip(p, mins)):
        raise InvalidParameter(f"bad parameters {p}; expected {doc}")
    if spec.family is Family.TURAN and not p[1] < p[0]:
        raise InvalidParameter(f"turan needs k < n, got n={p[0]} k={p[1]}")


def spec(family: str | Family, *params: int) -> FamilySpec:
    return FamilySpec(Family(family), tuple(params))


# -- generators --------------------------------------------------------------


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(n), 2)))


def complete_multipartite_graph(parts: Sequence[int]) -> Graph:
    blocks, start = [], 0
    for size in parts:
        blocks.append(range(start, start + size))
        start += size
    edges = [(u, v) for a, b in combinations(blocks, 2) for u in a for v in b]
    return Graph(start, tuple(edges))


def friendship_graph(k: int) -> Graph:
    edges = []
    for i in range(k):
        a, b = 2 * i + 1, 2 * i + 2
        edges += [(0, a), (0, b), (a, b)]
    return Graph(2 * k + 1, tuple(edges))


def lollipop_graph(m: int, n: int) -> Graph:
    edges = list(combinations(range(m), 2))
    edges += [(i, i + 1) for i in range(m - 1, m + n - 1)]
    return Graph(m + n, tuple(edges))


def fan_graph(n: int) -> Graph:
    """``K_1`` joined with a path on ``n - 1`` vertices: ``n`` vertices, ``2n - 3`` edges."""
    edges = [(0, i) for i in range(1, n)] + [(i, i + 1) for i in range(1, n - 1)]
    return Graph(n, tuple(edges))


def wheel_graph(n: int) -> Graph:
    """Hub 0 plus a rim cycle on ``1..n-1``: ``n`` vertices, ``2(n - 1)`` edges."""
    rim = n - 1
    edges = [(0, i) for i in range(1, n)]
    edges += [(i, i % rim + 1) for i in range(1, n)]
    return Graph(n, tuple(edges))


def hypercube_graph(d: int) -> Graph:
    n = 1 << d
    edges = [(v, v | (1 << b)) for v in range(n) for b in range(d) if not v >> b & 1]
    return Graph(n, tuple(edges))


def turan_parts(n: int, k: int) -> list[int]:
    q, r = divmod(n, k)
    return [q + 1] * r + [q] * (k - r)


def generate(fs: FamilySpec) -> Graph:
    p = fs.params
    fam = fs.family
    if fam is Family.PATH:
        return path_graph(p[0])
    if fam is Family.CYCLE:
        return cycle_graph(p[0])
    if fam is Family.STAR:
        return star_graph(p[0])
    if fam is Family.COMPLETE:
        return complete_graph(p[0])
    if fam in (Family.COMPLETE_BIPARTITE, Family.COMPLETE_MULTIPARTITE):
        return complete_multipartite_graph(p)
    if fam is Family.FRIENDSHIP:
        return friendship_graph(p[0])
    if fam is Family.LOLLIPOP:
        return lollipop_graph(p[0], p[1])
    if fam is Family.FAN:
        return fan_graph(p[0])
    if fam is Family.WHEEL:
        return wheel_graph(p[0])
    if fam is Family.COCKTAIL_PARTY:
        return complete_multipartite_graph([2] * p[0])
    if fam is Family.HYPERCUBE:
        return hypercube_graph(p[0])
    if fam is Family.TURAN:
        return complete_multipartite_graph(turan_parts(p[0], p[1]))
    raise InvalidParameter(f"no generator for {fam}")  # pragma: no cover


# -- connectivity ------------------------------------------------------------


def components(n: int, edges: Iterable[Edge]) -> list[int]:
    """Component representative for every vertex (union-find)."""
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    return [find(a) for a in range(n)]


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return len(set(components(g.n, g.edges))) == 1


# -- edge-list format ----------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v``; ``#`` lines are comments."""
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        rows.append((lineno, s.split()))
    if not rows:
        raise EdgeListParseError("missing header line 'n m'")

    def ints(lineno: int, toks: list[str]) -> tuple[int, int]:
        if len(toks) != 2:
            raise EdgeListParseError(f"expected two integers, got {' '.join(toks)!r}", lineno)
        try:
            return int(toks[0]), int(toks[1])
        except ValueError:
            raise EdgeListParseError(f"not an integer pair: {' '.join(toks)!r}", lineno) from None

    hline, htoks = rows[0]
    n, m = ints(hline, htoks)
    if n < 0 or m < 0:
        raise EdgeListParseError("negative count in header", hline)
    body = rows[1:]
    if len(body) != m:
        last = body[-1][0] if body else hline
        raise EdgeListParseError(f"header declares {m} edges, found {len(body)}", last)

    seen: set[Edge] = set()
    edges: list[Edge] = []
    for lineno, toks in body:
        u, v = ints(lineno, toks)
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListParseError(f"vertex out of range [0, {n}) in edge ({u}, {v})", lineno)
        if u == v:
            raise EdgeListParseError(f"loop edge at vertex {u}", lineno)
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise EdgeListParseError(f"duplicate edge {e}", lineno)
        seen.add(e)
        edges.append(e)
    return Graph(n, tuple(edges))


def serialize_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"
