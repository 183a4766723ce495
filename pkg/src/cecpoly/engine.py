"""Exact connected edge cover polynomials by deletion-contraction.

For a connected graph on at least two vertices a connected edge cover is the
edge set of a connected spanning subgraph, so ``E_c(G, x) = R(G)`` with

    R(G) = sum over spanning connected A of x**|A|.

On a multigraph with a bundle of ``mu`` parallel edges between ``u`` and ``v``:

    R(G) = R(G - bundle) + ((1 + x)**mu - 1) * R(G / uv)

where ``G - bundle`` keeps every vertex (so it is 0 once disconnected) and
contraction turns nothing into loops because the whole bundle is consumed.
Loops never affect connectivity and contribute ``(1 + x)`` each.  Cut vertices
split ``R`` into a product over blocks.  Results are memoized on an
isomorphism-invariant key.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import ResourceLimit
from .graphs import Graph
from .poly import ONE, ZERO, Poly, binom_power, mul, sum_polys

try:
    import pynauty
except ImportError:  # pragma: no cover - exercised via use_nauty=False
    pynauty = None

Pair = tuple[int, int]


@dataclass(frozen=True)
class MultiGraph:
    """Vertices ``0..n-1``; ``mult[(u, v)]`` (u < v) is the bundle size; ``loops[v]`` counts loops."""

    n: int
    mult: tuple[tuple[Pair, int], ...] = ()
    loops: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        merged: dict[Pair, int] = {}
        for (u, v), mu in self.mult:
            if mu < 1:
                raise ValueError("multiplicities must be >= 1")
            if u == v or not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"bad pair ({u}, {v})")
            key = (u, v) if u < v else (v, u)
            merged[key] = merged.get(key, 0) + mu
        loops = tuple(self.loops) or (0,) * self.n
        if len(loops) != self.n or any(c < 0 for c in loops):
            raise ValueError("loops needs one nonnegative count per vertex")
        object.__setattr__(self, "mult", tuple(sorted(merged.items())))
        object.__setattr__(self, "loops", loops)

    @classmethod
    def from_graph(cls, g: Graph) -> "MultiGraph":
        return cls(g.n, tuple((e, 1) for e in g.edges))

    @property
    def edge_count(self) -> int:
        return sum(mu for _, mu in self.mult) + sum(self.loops)


@dataclass(frozen=True)
class EngineConfig:
    max_memo: int = 2_000_000
    max_steps: int = 20_000_000
    use_nauty: bool = True


@dataclass
class EngineStats:
    hits: int = 0
    misses: int = 0
    peak_entries: int = 0
    steps: int = 0

    def as_dict(self) -> dict:
        return {"hits": self.hits, "misses": self.misses, "peak_entries": self.peak_entries, "steps": self.steps}


# -- small multigraph helpers ------------------------------------------------

Edges = dict[Pair, int]


def _connected(n: int, edges: Iterable[Pair]) -> bool:
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    comps = n
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            comps -= 1
    return comps == 1


def _contract(n: int, edges: Edges, a: int, b: int) -> tuple[int, Edges]:
    """Merge ``b`` into ``a`` (a < b), dropping the a-b bundle, relabeling to ``0..n-2``."""

    def lab(w: int) -> int:
        if w == b:
            w = a
        return w - 1 if w > b else w

    out: Edges = {}
    for (u, v), mu in edges.items():
        if (u, v) == (a, b):
            continue
        x, y = lab(u), lab(v)
        key = (x, y) if x < y else (y, x)
        out[key] = out.get(key, 0) + mu
    return n - 1, out


def _blocks(n: int, edges: Edges) -> list[list[int]] | None:
    """Vertex sets of the biconnected blocks, or None if there is no cut vertex."""
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    disc = [-1] * n
    low = [0] * n
    stack: list[Pair] = []
    blocks: list[list[int]] = []
    timer = 0
    # iterative Tarjan over simple adjacency (bundles count once)
    disc[0] = low[0] = timer
    timer += 1
    it = [(0, -1, iter(adj[0]))]
    while it:
        u, parent, nbrs = it[-1]
        advanced = False
        for w in nbrs:
            if disc[w] == -1:
                stack.append((u, w))
                disc[w] = low[w] = timer
                timer += 1
                it.append((w, u, iter(adj[w])))
                advanced = True
                break
            if w != parent and disc[w] < disc[u]:
                stack.append((u, w))
                low[u] = min(low[u], disc[w])
        if advanced:
            continue
        it.pop()
        if it:
            p = it[-1][0]
            low[p] = min(low[p], low[u])
            if low[u] >= disc[p]:
                comp: set[int] = set()
                while True:
                    e = stack.pop()
                    comp.update(e)
                    if e == (p, u):
                        break
                blocks.append(sorted(comp))
    return blocks if len(blocks) > 1 else None


def _induced(edges: Edges, verts: list[int]) -> tuple[int, Edges]:
    index = {v: i for i, v in enumerate(verts)}
    out: Edges = {}
    for (u, v), mu in edges.items():
        if u in index and v in index:
            x, y = index[u], index[v]
            out[(x, y) if x < y else (y, x)] = mu
    return len(verts), out


# -- canonical keys ----------------------------------------------------------


def _refined_order(n: int, edges: Edges) -> list[int]:
    """Vertices sorted by an isomorphism-invariant color refinement, ties by label."""
    nbrs: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for (u, v), mu in edges.items():
        nbrs[u].append((v, mu))
        nbrs[v].append((u, mu))
    color = [0] * n
    for _ in range(n):
        sig = [(color[v], tuple(sorted((color[w], mu) for w, mu in nbrs[v]))) for v in range(n)]
        palette = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [palette[s] for s in sig]
        if len(set(new)) == len(set(color)):
            color = new
            break
        color = new
    return sorted(range(n), key=lambda v: (color[v], v))


def labeled_key(n: int, edges: Edges) -> tuple:
    """Sound but non-canonical key: the exact multigraph under a refinement-based relabeling.

    Equal keys imply isomorphic multigraphs; isomorphic multigraphs may still get
    different keys, which only costs memo hits.
    """
    order = _refined_order(n, edges)
    pos = {v: i for i, v in enumerate(order)}
    enc = sorted(
        ((min(pos[u], pos[v]), max(pos[u], pos[v]), mu) for (u, v), mu in edges.items())
    )
    return ("L", n, tuple(enc))


def nauty_key(n: int, edges: Edges) -> tuple:
    """Exact canonical key: nauty certificate of the bundle-subdivided graph.

    Each bundle becomes a vertex joined to its two endpoints and colored by its
    multiplicity, so isomorphisms of the colored graph are exactly multigraph
    isomorphisms.
    """
    by_mu: dict[int, list[int]] = {}
    adjacency: dict[int, list[int]] = {v: [] for v in range(n)}
    nxt = n
    for (u, v), mu in edges.items():
        adjacency[nxt] = [u, v]
        by_mu.setdefault(mu, []).append(nxt)
        nxt += 1
    mus = sorted(by_mu)
    coloring = [set(range(n))] + [set(by_mu[mu]) for mu in mus]
    if n == 0:
        coloring = coloring[1:]
    g = pynauty.Graph(nxt, adjacency_dict=adjacency, vertex_coloring=coloring)
    return ("N", n, tuple((mu, len(by_mu[mu])) for mu in mus), pynauty.certificate(g))


# -- the recursion -----------------------------------------------------------


class _Solver:
    def __init__(self, cfg: EngineConfig, stats: EngineStats):
        self.cfg = cfg
        self.stats = stats
        self.memo: dict[tuple, Poly] = {}
        self.keyfn = nauty_key if (cfg.use_nauty and pynauty is not None) else labeled_key
        self._bundle: dict[int, Poly] = {}

    def bundle(self, mu: int) -> Poly:
        """``(1 + x)**mu - 1``: at least one copy of the bundle kept."""
        p = self._bundle.get(mu)
        if p is None:
            p = Poly((0,) + binom_power(1, mu).coeffs[1:])
            self._bundle[mu] = p
        return p

    def tick(self) -> None:
        self.stats.steps += 1
        if self.stats.steps > self.cfg.max_steps:
            raise ResourceLimit(f"deletion-contraction exceeded {self.cfg.max_steps} steps")

    def solve(self, n: int, edges: Edges) -> Poly:
        self.tick()
        if n == 1:
            return ONE
        if not edges or not _connected(n, edges):
            return ZERO
        if n == 2:
            (mu,) = edges.values()
            return self.bundle(mu)

        key = self.keyfn(n, edges)
        hit = self.memo.get(key)
        if hit is not None:
            self.stats.hits += 1
            return hit
        self.stats.misses += 1

        blocks = _blocks(n, edges)
        if blocks is not None:
            result = ONE
            for verts in blocks:
                result = mul(result, self.solve(*_induced(edges, verts)))
        else:
            result = self.split(n, edges)

        if len(self.memo) >= self.cfg.max_memo:
            raise ResourceLimit(f"memo table exceeded {self.cfg.max_memo} entries")
        self.memo[key] = result
        self.stats.peak_entries = max(self.stats.peak_entries, len(self.memo))
        return result

    def split(self, n: int, edges: Edges) -> Poly:
        deg = [0] * n
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        # densest bundle first; among equals, the one touching the sparsest vertex
        (a, b), mu = max(edges.items(), key=lambda it: (it[1], -min(deg[it[0][0]], deg[it[0][1]]), -it[0][0], -it[0][1]))
        deleted = {e: k for e, k in edges.items() if e != (a, b)}
        keep = self.solve(n, deleted) if _connected(n, deleted) else ZERO
        contracted = self.solve(*_contract(n, edges, a, b))
        return sum_polys((keep, mul(self.bundle(mu), contracted)))


def cec_poly_multigraph(g: MultiGraph, cfg: EngineConfig | None = None, stats: EngineStats | None = None) -> Poly:
    """Spanning-connected generating polynomial of a multigraph (loops as ``(1 + x)`` factors)."""
    cfg = cfg or EngineConfig()
    solver = _Solver(cfg, stats if stats is not None else EngineStats())
    if g.n == 0:
        return ONE
    core = solver.solve(g.n, dict(g.mult))
    loop_total = sum(g.loops)
    return mul(core, binom_power(1, loop_total)) if loop_total else core


def cec_poly_engine(g: Graph, cfg: EngineConfig | None = None, stats: EngineStats | None = None) -> Poly:
    """Connected edge cover polynomial by memoized deletion-contraction.

    A disconnected graph gives the zero polynomial and a single vertex gives 1.
    Raises ResourceLimit rather than returning a partial answer.
    """
    return cec_poly_multigraph(MultiGraph.from_graph(g), cfg, stats)


# -- spanning trees ------------------------------------------------------------


def bareiss_det(matrix: list[list[int]]) -> int:
    """Fraction-free Gaussian elimination; exact for integer matrices."""
    a = [row[:] for row in matrix]
    size = len(a)
    if size == 0:
        return 1
    sign, prev = 1, 1
    for k in range(size - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, size) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def spanning_tree_count(g: Graph) -> int:
    """Matrix-tree theorem: determinant of the Laplacian with row/column 0 removed."""
    if g.n <= 1:
        return 1
    lap = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        lap[u][u] += 1
        lap[v][v] += 1
        lap[u][v] -= 1
        lap[v][u] -= 1
    minor = [row[1:] for row in lap[1:]]
    return bareiss_det(minor)
