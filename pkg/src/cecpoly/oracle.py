"""Exhaustive edge-subset enumeration: the ground truth for every claim.

Each subset of edge indices is a bitmask.  A subset is an edge cover when the
OR of its per-edge endpoint masks is the full vertex mask; it is a connected
edge cover when, additionally, union-find over its edges leaves one component.
The scan is split into work units by fixing the top ``chunking`` mask bits;
units run on a thread pool (the kernel releases the GIL) and their coefficient
vectors are summed, so the result does not depend on the partitioning.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numba
import numpy as np

from .errors import BudgetExceeded
from .graphs import Graph, is_connected
from .poly import ONE, ZERO, Poly

WORD_BITS = 63


@dataclass(frozen=True)
class OracleConfig:
    max_edges: int = 26
    workers: int = 1
    chunking: int = 6

    def __post_init__(self) -> None:
        if not 0 <= self.max_edges <= WORD_BITS:
            raise ValueError(f"max_edges must lie in [0, {WORD_BITS}]")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if self.chunking < 0:
            raise ValueError("chunking must be >= 0")


def default_workers() -> int:
    return int(os.environ.get("CECPOLY_WORKERS", "1"))


@numba.njit(cache=True, nogil=True)
def _scan(eu, ev, n, lo, hi, need_connected):
    m = eu.shape[0]
    counts = np.zeros(m + 1, dtype=np.int64)
    full = (np.uint64(1) << np.uint64(n)) - np.uint64(1)
    cover = np.zeros(m, dtype=np.uint64)
    for i in range(m):
        cover[i] = (np.uint64(1) << np.uint64(eu[i])) | (np.uint64(1) << np.uint64(ev[i]))
    parent = np.empty(n, dtype=np.int64)
    for mask in range(lo, hi):
        seen = np.uint64(0)
        size = 0
        for i in range(m):
            if mask >> i & 1:
                seen |= cover[i]
                size += 1
        if seen != full:
            continue
        if need_connected:
            for v in range(n):
                parent[v] = v
            comps = n
            for i in range(m):
                if mask >> i & 1:
                    a = eu[i]
                    while parent[a] != a:
                        parent[a] = parent[parent[a]]
                        a = parent[a]
                    b = ev[i]
                    while parent[b] != b:
                        parent[b] = parent[parent[b]]
                        b = parent[b]
                    if a != b:
                        parent[a] = b
                        comps -= 1
            if comps != 1:
                continue
        counts[size] += 1
    return counts


def _units(m: int, chunking: int) -> list[tuple[int, int]]:
    c = min(chunking, m)
    width = 1 << (m - c)
    return [(j * width, (j + 1) * width) for j in range(1 << c)]


def _enumerate(g: Graph, cfg: OracleConfig, need_connected: bool) -> Poly:
    if g.m > cfg.max_edges:
        raise BudgetExceeded(f"graph has {g.m} edges, oracle budget is {cfg.max_edges}")
    eu = np.array([u for u, _ in g.edges], dtype=np.int64)
    ev = np.array([v for _, v in g.edges], dtype=np.int64)
    units = _units(g.m, cfg.chunking)
    if cfg.workers == 1:
        parts = [_scan(eu, ev, g.n, lo, hi, need_connected) for lo, hi in units]
    else:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            parts = list(pool.map(lambda r: _scan(eu, ev, g.n, r[0], r[1], need_connected), units))
    total = [0] * (g.m + 1)
    for part in parts:
        for i, v in enumerate(part.tolist()):
            total[i] += v
    return Poly(tuple(total))


def cec_poly_oracle(g: Graph, cfg: OracleConfig | None = None) -> Poly:
    """Connected edge cover polynomial by checking every edge subset."""
    cfg = cfg or OracleConfig()
    if g.m > cfg.max_edges:
        raise BudgetExceeded(f"graph has {g.m} edges, oracle budget is {cfg.max_edges}")
    if g.n <= 1:
        return ONE
    if not is_connected(g):
        return ZERO
    return _enumerate(g, cfg, need_connected=True)


def ec_poly_oracle(g: Graph, cfg: OracleConfig | None = None) -> Poly:
    """Edge cover polynomial (connectivity not required)."""
    cfg = cfg or OracleConfig()
    if g.m > cfg.max_edges:
        raise BudgetExceeded(f"graph has {g.m} edges, oracle budget is {cfg.max_edges}")
    if g.n == 0:
        return ONE
    if 0 in g.degrees():
        return ZERO
    return _enumerate(g, cfg, need_connected=False)


def min_cec_size(g: Graph, cfg: OracleConfig | None = None) -> int | None:
    return cec_poly_oracle(g, cfg).min_exp


def ec_poly_covered_dp(g: Graph, max_vertices: int = 22) -> Poly:
    """Edge cover polynomial by summing over all edge subsets grouped by covered-vertex set.

    Independent of inclusion-exclusion and of the edge budget: the state space is
    ``2**n`` covered sets rather than ``2**m`` subsets.
    """
    if g.n > max_vertices:
        raise BudgetExceeded(f"covered-set DP limited to {max_vertices} vertices, graph has {g.n}")
    if g.n == 0:
        return ONE
    dtype = np.int64 if g.m <= 60 else object
    table = np.zeros((1 << g.n, g.m + 1), dtype=dtype)
    table[0, 0] = 1
    states = np.arange(1 << g.n)
    for u, v in g.edges:
        bit = (1 << u) | (1 << v)
        taken = np.zeros_like(table)
        np.add.at(taken, states | bit, np.roll(table, 1, axis=1))
        taken[:, 0] = 0
        table = table + taken
    return Poly(tuple(int(c) for c in table[-1]))
