"""Exhaustive isomorph-free enumeration of (r, z)-regular mixed graphs of a
given order and diameter.

Strategy: generate the non-isomorphic r-regular undirected skeletons, extend
each with a z-in/z-out-regular arc set by backtracking (no digons, no arc
parallel to an edge), filter by diameter, and reject isomorphs through the
canonical form.  For r = 1 the perfect matching {2i, 2i+1} is the unique
skeleton up to isomorphism and is fixed outright; with z = 1 the skeleton's
automorphism group is additionally quotiented by pinning vertex 0's out-arc
to one orbit representative.
"""

from __future__ import annotations

import itertools
import os
import time
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from multiprocessing import Pool

from .bounds import DegreePair, improved_bound
from .errors import CapExceededError
from .graph import MixedGraph

__all__ = [
    "DiameterMode",
    "SearchSpec",
    "SearchResult",
    "enumerate_classes",
    "max_order",
    "regular_skeletons",
    "DEFAULT_ORDER_CAP",
]

DEFAULT_ORDER_CAP = 16


class DiameterMode(Enum):
    EXACT = "exact"
    AT_MOST = "at-most"


@dataclass(frozen=True)
class SearchSpec:
    dp: DegreePair
    k: int
    n: int
    diameter_mode: DiameterMode = DiameterMode.EXACT
    count_only: bool = False
    jobs: int = 1


@dataclass
class SearchResult:
    classes: list  # CanonicalForm per isomorphism class, sorted by encoding
    graphs: list  # canonical representatives (parallel to classes)
    nodes_explored: int = 0
    pruned: dict = field(default_factory=dict)
    wall_time: float = 0.0
    infeasible_reason: str | None = None

    @property
    def encodings(self) -> list[bytes]:
        return [c.encoding for c in self.classes]


def order_cap() -> int:
    """Configured order cap; MOORE_SEARCH_CAP overrides the default."""
    raw = os.environ.get("MOORE_SEARCH_CAP")
    return int(raw) if raw else DEFAULT_ORDER_CAP


# -- stage 1: undirected skeletons ----------------------------------------


def regular_skeletons(n: int, r: int) -> list[MixedGraph]:
    """Non-isomorphic r-regular undirected graphs on n vertices."""
    if r == 0:
        return [MixedGraph(n=n, edges=(), arcs=())]
    if r >= n or (r * n) % 2 == 1:
        return []
    if r == 1:
        edges = tuple((2 * i, 2 * i + 1) for i in range(n // 2))
        return [MixedGraph(n=n, edges=edges, arcs=())]

    seen = {}

    def extend(v, deg, edges):
        if v == n:
            g = MixedGraph(n=n, edges=tuple(sorted(edges)), arcs=())
            seen.setdefault(g.canonical_form().encoding, g)
            return
        need = r - deg[v]
        if need < 0:
            return
        candidates = [w for w in range(v + 1, n) if deg[w] < r]
        if need > len(candidates):
            return
        for combo in itertools.combinations(candidates, need):
            for w in combo:
                deg[w] += 1
            deg[v] = r
            extend(v + 1, deg, edges + [(v, w) for w in combo])
            deg[v] = r - need
            for w in combo:
                deg[w] -= 1

    extend(0, [0] * n, [])
    return [seen[k] for k in sorted(seen)]


# -- stage 2/3: arc extension with pruning --------------------------------


def _arc_backtrack(n, z, k, edge_nbrs, prefix, counters, emit):
    """Complete a partial out-assignment `prefix` (list of out-tuples for
    vertices 0..len(prefix)-1) in all feasible ways, calling emit(arcs)."""
    out = list(prefix)
    indeg = [0] * n
    for v, targets in enumerate(out):
        for w in targets:
            indeg[w] += 1

    def ball_prune(settled):
        # optimistic reach of vertex 0: prune only when its k-ball is fully
        # settled (no unknown out-arcs inside at depth < k) yet misses vertices
        frontier = [0]
        depth = {0: 0}
        for d in range(k):
            nxt = []
            for v in frontier:
                if v >= settled:
                    return False  # open vertex inside the ball: inconclusive
                for w in itertools.chain(edge_nbrs[v], out[v]):
                    if w not in depth:
                        depth[w] = d + 1
                        nxt.append(w)
            frontier = nxt
            if not frontier:
                break
        return len(depth) < n

    def rec(v):
        if v == n:
            if all(x == z for x in indeg):
                emit(tuple(sorted((a, b) for a, targets in enumerate(out) for b in targets)))
            return
        counters["nodes"] += 1
        # each missing in-arc of w must come from an eligible source in v..n-1
        for w in range(n):
            miss = z - indeg[w]
            if miss <= 0:
                continue
            avail = 0
            for u in range(v, n):
                if u == w or u in edge_nbrs[w]:
                    continue
                if w < v and u in out[w]:
                    continue  # would close a digon
                avail += 1
            if miss > avail:
                counters["prune_deficit"] += 1
                return
        candidates = [
            w
            for w in range(n)
            if w != v
            and indeg[w] < z
            and w not in edge_nbrs[v]
            and (w >= len(out) or v not in out[w])
        ]
        for combo in itertools.combinations(candidates, z):
            out.append(combo)
            for w in combo:
                indeg[w] += 1
            if ball_prune(v + 1):
                counters["prune_ball"] += 1
            else:
                rec(v + 1)
            out.pop()
            for w in combo:
                indeg[w] -= 1

    rec(len(out))


def _prefixes(n, z, edge_nbrs, depth, first_targets=None):
    """All valid out-assignments for vertices 0..depth-1, used to split the
    search into independent tasks."""
    results = []

    def rec(v, out, indeg):
        if v == depth:
            results.append(tuple(out))
            return
        candidates = [
            w
            for w in range(n)
            if w != v and indeg[w] < z and w not in edge_nbrs[v] and not any(v in t for u, t in enumerate(out) if w == u)
        ]
        for combo in itertools.combinations(candidates, z):
            if v == 0 and first_targets is not None and combo != first_targets:
                continue
            for w in combo:
                indeg[w] += 1
            out.append(combo)
            rec(v + 1, out, indeg)
            out.pop()
            for w in combo:
                indeg[w] -= 1

    rec(0, [], [0] * n)
    return results


def _run_task(args):
    n, z, k, edges, prefix, mode_value = args
    skeleton = MixedGraph(n=n, edges=edges, arcs=())
    edge_nbrs = [set(x) for x in skeleton.edge_neighbors]
    counters = Counter()
    found = {}

    def emit(arcs):
        g = MixedGraph(n=n, edges=edges, arcs=arcs)
        # per-source eccentricity with early exit: both modes need diameter <= k
        diam = 0
        for u in range(n):
            ecc = 0
            for d in g.distances_from(u):
                if d is None or d > k:
                    counters["reject_diameter"] += 1
                    return
                ecc = d if d > ecc else ecc
            diam = max(diam, ecc)
        if mode_value == DiameterMode.EXACT.value and diam != k:
            counters["reject_diameter"] += 1
            return
        form = g.canonical_form()
        if form.encoding not in found:
            found[form.encoding] = g.relabel(form.permutation)

    _arc_backtrack(n, z, k, edge_nbrs, list(prefix), counters, emit)
    return {enc: (g.n, g.edges, g.arcs) for enc, g in found.items()}, dict(counters)


def enumerate_classes(spec: SearchSpec, cap: int | None = None) -> SearchResult:
    """All isomorphism classes of strict (r, z)-regular mixed graphs with
    the requested order and diameter."""
    start = time.monotonic()
    cap = order_cap() if cap is None else cap
    if spec.n > cap:
        raise CapExceededError(f"n={spec.n} exceeds order cap {cap}")
    if spec.n < 1 or spec.k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    r, z, n, k = spec.dp.r, spec.dp.z, spec.n, spec.k

    result = SearchResult(classes=[], graphs=[])
    if (r * n) % 2 == 1:
        result.infeasible_reason = f"parity: r={r} odd requires even order, got n={n}"
        result.wall_time = time.monotonic() - start
        return result
    if r >= n or z > n - 1 - r:
        result.infeasible_reason = f"degree obstruction: (r, z)=({r}, {z}) impossible at n={n}"
        result.wall_time = time.monotonic() - start
        return result

    skeletons = regular_skeletons(n, r)
    tasks = []
    for sk in skeletons:
        edge_nbrs = [set(x) for x in sk.edge_neighbors]
        first = None
        if r == 1 and z == 1 and n >= 4:
            # matching automorphisms act transitively on (vertex 0, non-partner
            # target), so vertex 0's arc may be pinned to vertex 2
            first = (2,)
        depth = min(2, n)
        if z == 0:
            tasks.append((n, z, k, sk.edges, (), spec.diameter_mode.value))
            continue
        for prefix in _prefixes(n, z, edge_nbrs, depth, first_targets=first):
            tasks.append((n, z, k, sk.edges, prefix, spec.diameter_mode.value))

    counters = Counter()
    merged = {}
    if spec.jobs > 1 and len(tasks) > 1:
        with Pool(spec.jobs) as pool:
            outputs = pool.map(_run_task, tasks)
    else:
        outputs = [_run_task(t) for t in tasks]
    for found, cnt in outputs:
        counters.update(cnt)
        for enc, (gn, ge, ga) in found.items():
            merged.setdefault(enc, MixedGraph(n=gn, edges=ge, arcs=ga))

    graphs = [merged[enc] for enc in sorted(merged)]
    result.classes = [g.canonical_form() for g in graphs]
    result.graphs = graphs
    result.nodes_explored = counters.pop("nodes", 0)
    result.pruned = dict(counters)
    result.wall_time = time.monotonic() - start
    return result


def max_order(
    dp: DegreePair, k: int, n_hi: int | None = None, n_lo: int = 1, cap: int | None = None
) -> tuple[int, SearchResult]:
    """Largest order in [n_lo, n_hi] admitting an (r, z)-regular mixed graph
    of diameter <= k, with the enumeration at that order."""
    if n_hi is None:
        n_hi = improved_bound(dp, k).improved
    for n in range(n_hi, n_lo - 1, -1):
        res = enumerate_classes(
            SearchSpec(dp=dp, k=k, n=n, diameter_mode=DiameterMode.AT_MOST), cap=cap
        )
        if res.classes:
            return n, res
    return 0, SearchResult(classes=[], graphs=[], infeasible_reason="no order admits a graph")
