"""Canonical labeling of mixed graphs by partition refinement plus
individualization.

The refinement colors vertices by (edge degree, out-degree, in-degree) and
iterates on neighborhood color multisets (edge / out-arc / in-arc kept
separate).  Non-singleton cells are resolved by branching on every vertex of
the first such cell; the minimum relabeled adjacency encoding over all
leaves is the canonical form, and the number of leaves attaining it is the
automorphism group order.  Exact but exponential in the worst case; intended
for n up to ~24.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SizeLimitExceededError

__all__ = ["CanonicalForm", "CanonicalResult", "canonicalize"]

SIZE_CAP = 24


@dataclass(frozen=True)
class CanonicalForm:
    """A relabeling permutation and the byte encoding of the graph under it.

    Encodings are equal exactly for isomorphic mixed graphs."""

    permutation: tuple[int, ...]  # old label -> canonical label
    encoding: bytes


@dataclass(frozen=True)
class CanonicalResult:
    form: CanonicalForm
    automorphisms: int


def _refine(g, colors):
    """Iterate neighborhood-multiset refinement until stable."""
    n = g.n
    while True:
        sigs = []
        for v in range(n):
            sigs.append(
                (
                    colors[v],
                    tuple(sorted(colors[w] for w in g.edge_neighbors[v])),
                    tuple(sorted(colors[w] for w in g.out_neighbors[v])),
                    tuple(sorted(colors[w] for w in g.in_neighbors[v])),
                )
            )
        order = sorted(set(sigs))
        rank = {s: i for i, s in enumerate(order)}
        new = tuple(rank[s] for s in sigs)
        if new == colors:
            return new
        colors = new


def _encode_under(g, label):
    """Edge/arc tuples of the graph relabeled by `label` (old -> new)."""
    edges = tuple(
        sorted((label[u], label[v]) if label[u] < label[v] else (label[v], label[u]) for u, v in g.edges)
    )
    arcs = tuple(sorted((label[u], label[v]) for u, v in g.arcs))
    return edges, arcs


def _first_nonsingleton_cell(colors, n):
    cells = {}
    for v in range(n):
        cells.setdefault(colors[v], []).append(v)
    for c in sorted(cells):
        if len(cells[c]) > 1:
            return cells[c]
    return None


def canonicalize(g) -> CanonicalResult:
    n = g.n
    if n > SIZE_CAP:
        raise SizeLimitExceededError(f"n={n} exceeds canonical-labeling cap {SIZE_CAP}")
    if n == 0:
        form = CanonicalForm(permutation=(), encoding=b"0;;")
        return CanonicalResult(form=form, automorphisms=1)

    prof = g.degrees()
    init = tuple(zip(prof.r, prof.z_out, prof.z_in))
    order = sorted(set(init))
    rank = {s: i for i, s in enumerate(order)}
    colors0 = tuple(rank[s] for s in init)

    best = {"key": None, "label": None, "count": 0}

    def descend(colors):
        colors = _refine(g, colors)
        cell = _first_nonsingleton_cell(colors, n)
        if cell is None:
            label = colors  # discrete: color index is the new label
            key = _encode_under(g, label)
            if best["key"] is None or key < best["key"]:
                best["key"] = key
                best["label"] = label
                best["count"] = 1
            elif key == best["key"]:
                best["count"] += 1
            return
        for v in cell:
            # individualize v: give it a color just below the rest of its cell
            sigs = [(colors[u], 0 if u == v else 1) for u in range(n)]
            order = sorted(set(sigs))
            rank = {s: i for i, s in enumerate(order)}
            descend(tuple(rank[s] for s in sigs))

    descend(colors0)
    edges, arcs = best["key"]
    enc = f"{n};{edges};{arcs}".encode()
    form = CanonicalForm(permutation=tuple(best["label"]), encoding=enc)
    return CanonicalResult(form=form, automorphisms=best["count"])
