"""Independent brute-force oracles used to check the library's fast paths.

Everything here favors directness over speed: explicit walk enumeration,
generate-and-filter graph generation, permutation scans.
"""

from __future__ import annotations

import itertools

from mooremix.graph import MixedGraph


def count_walks_brute(g: MixedGraph, u: int, k: int) -> dict[int, int]:
    """Walk counts by explicit enumeration of every non-backtracking walk of
    length <= k from u (the empty walk included)."""
    counts = {}

    def visit(v, last_edge, length):
        counts[v] = counts.get(v, 0) + 1
        if length == k:
            return
        for w in g.edge_neighbors[v]:
            e = (min(v, w), max(v, w))
            if e != last_edge:
                visit(w, e, length + 1)
        for w in g.out_neighbors[v]:
            visit(w, None, length + 1)

    visit(u, None, 0)
    return counts


def poly_mul(a: list[int], b: list[int]) -> list[int]:
    """Product of integer polynomials, lowest degree first."""
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def automorphisms_brute(g: MixedGraph, perms=None) -> int:
    """Count label permutations fixing the edge and arc sets.

    `perms` restricts the candidate permutations (default: all n!)."""
    edges = set(g.edges)
    arcs = set(g.arcs)
    count = 0
    for p in perms if perms is not None else itertools.permutations(range(g.n)):
        if all((min(p[u], p[v]), max(p[u], p[v])) in edges for u, v in edges) and all(
            (p[u], p[v]) in arcs for u, v in arcs
        ):
            count += 1
    return count


def matching_permutations(n: int):
    """Permutations preserving the perfect matching {2i, 2i+1} as a set of
    pairs (pair permutations composed with within-pair swaps)."""
    half = n // 2
    for pair_perm in itertools.permutations(range(half)):
        for swaps in itertools.product((0, 1), repeat=half):
            p = [0] * n
            for i in range(half):
                j, s = pair_perm[i], swaps[i]
                p[2 * i] = 2 * j + s
                p[2 * i + 1] = 2 * j + 1 - s
            yield tuple(p)


def all_perfect_matchings(n: int):
    """Every perfect matching of {0..n-1} as a sorted edge tuple."""
    if n % 2:
        return
    if n == 0:
        yield ()
        return
    rest = list(range(1, n))
    for i, v in enumerate(rest):
        others = rest[:i] + rest[i + 1 :]
        remap = {w: x for w, x in zip(others, range(len(others)))}
        inv = {x: w for w, x in remap.items()}
        for sub in all_perfect_matchings(n - 2):
            yield tuple(sorted([(0, v)] + [(min(inv[a], inv[b]), max(inv[a], inv[b])) for a, b in sub]))


def _valid_permutation_arcs(n, perm, partner):
    for v in range(n):
        if perm[v] == v or perm[perm[v]] == v:
            return False
        if partner is not None and perm[v] == partner.get(v):
            return False
    return True


def brute_force_labeled_graphs(r: int, z: int, n: int, fixed_matching: bool = False):
    """All labeled strict (r, z)-regular mixed graphs on n vertices for
    (r, z) in {(1, 1), (2, 0), (0, 1)}, by generate-and-filter."""
    if (r, z) == (0, 1):
        for perm in itertools.permutations(range(n)):
            if _valid_permutation_arcs(n, perm, None):
                yield MixedGraph(
                    n=n, edges=(), arcs=tuple(sorted((v, perm[v]) for v in range(n)))
                )
    elif (r, z) == (2, 0):
        seen = set()
        for perm in itertools.permutations(range(n)):
            if not _valid_permutation_arcs(n, perm, None):
                continue
            edges = tuple(sorted((min(v, perm[v]), max(v, perm[v])) for v in range(n)))
            if edges not in seen:
                seen.add(edges)
                yield MixedGraph(n=n, edges=edges, arcs=())
    elif (r, z) == (1, 1):
        if n % 2:
            return
        matchings = (
            [tuple((2 * i, 2 * i + 1) for i in range(n // 2))]
            if fixed_matching
            else list(all_perfect_matchings(n))
        )
        for edges in matchings:
            partner = {}
            for a, b in edges:
                partner[a] = b
                partner[b] = a
            for perm in itertools.permutations(range(n)):
                if _valid_permutation_arcs(n, perm, partner):
                    yield MixedGraph(
                        n=n, edges=edges, arcs=tuple(sorted((v, perm[v]) for v in range(n)))
                    )
    else:
        raise ValueError(f"no oracle for (r, z) = ({r}, {z})")


def brute_force_class_counts(r: int, z: int, n: int, k_max: int, fixed_matching: bool = False):
    """Isomorphism-class counts {(k, mode): count} for mode in {'exact',
    'at-most'}, k = 0..k_max, over all strict (r, z)-regular graphs on n
    vertices with diameter <= k_max."""
    by_diam = {}
    for g in brute_force_labeled_graphs(r, z, n, fixed_matching=fixed_matching):
        diam = g.diameter()
        if diam is None or diam > k_max:
            continue
        by_diam.setdefault(diam, set()).add(g.canonical_form().encoding)
    counts = {}
    for k in range(k_max + 1):
        counts[(k, "exact")] = len(by_diam.get(k, ()))
        at_most = set()
        for d, encs in by_diam.items():
            if d <= k:
                at_most |= encs
        counts[(k, "at-most")] = len(at_most)
    return counts
