"""Layer-by-layer transfer counting of matchings on a Hasse diagram.

A matching decomposes uniquely into per-layer matchings (layer p holds the
pairs joining dimensions p and p+1), adjacent layers interact only through
the faces of the shared dimension, and acyclicity is a per-layer condition.
Counting therefore reduces to a transfer computation over subsets of each
dimension's face set: enumerate the matchings of every layer once, then
convolve counts across layers with a subset-sum (zeta) transform.

This gives exact matching counts by cardinality in time polynomial in the
per-layer matching lists, which is what makes the 4-simplex tractable where
a flat backtracking enumeration is not.  The suffix tables double as exact
lookahead for enumerating only the matchings of a prescribed cardinality.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator

from .hasse import HasseDiagram


class LayeredInfeasibleError(RuntimeError):
    """A dimension's face count exceeds the subset-table width limit."""


@dataclass
class Layer:
    p: int
    lower_gids: list[int]
    upper_gids: list[int]
    lower_index: dict[int, int]
    upper_index: dict[int, int]
    # (edge id, lower local, upper local), canonical edge order
    edges_local: list[tuple[int, int, int]]
    # upper local -> lower locals of all its facets
    upper_facets: list[list[int]]


@dataclass
class LayerMatching:
    edge_mask: int   # global edge-index bitmask
    lower: int       # local bitmask over the layer's lower faces
    upper: int       # local bitmask over the layer's upper faces
    size: int


class LayerSystem:
    """Cached per-layer matching lists and their (lower, upper, size) classes."""

    def __init__(self, H: HasseDiagram, width_limit: int = 18):
        self.H = H
        K = H.base
        self.widths = [len(lst) for lst in K.faces_by_dim]
        if any(w > width_limit for w in self.widths):
            raise LayeredInfeasibleError(
                f"face counts {self.widths} exceed width limit {width_limit}")
        self.D = K.dim  # number of layers
        self.layers: list[Layer] = []
        for p in range(self.D):
            lo_g = list(range(H.offsets[p], H.offsets[p + 1]))
            up_g = list(range(H.offsets[p + 1], H.offsets[p + 2]))
            lo_i = {g: i for i, g in enumerate(lo_g)}
            up_i = {g: i for i, g in enumerate(up_g)}
            edges_local = [(e, lo_i[H.lower[e]], up_i[H.upper[e]])
                           for e in range(H.edge_count) if H.layer_of[e] == p]
            upper_facets = [[lo_i[s] for s in H.facets_of[g]] for g in up_g]
            self.layers.append(Layer(p, lo_g, up_g, lo_i, up_i,
                                     edges_local, upper_facets))
        self._matchings: dict[tuple[int, bool], list[LayerMatching]] = {}
        self._classes: dict[tuple[int, bool], dict] = {}

    def matchings(self, d: int, acyclic: bool) -> list[LayerMatching]:
        """All matchings within one layer, empty matching included."""
        key = (d, acyclic)
        if key not in self._matchings:
            self._matchings[key] = _enumerate_layer(self.layers[d], acyclic)
        return self._matchings[key]

    def classes(self, d: int, acyclic: bool) -> dict[tuple[int, int, int], int]:
        """Matching counts aggregated by (lower mask, upper mask, size)."""
        key = (d, acyclic)
        if key not in self._classes:
            agg: Counter = Counter()
            for m in self.matchings(d, acyclic):
                agg[(m.lower, m.upper, m.size)] += 1
            self._classes[key] = dict(agg)
        return self._classes[key]


def _enumerate_layer(layer: Layer, acyclic: bool) -> list[LayerMatching]:
    """DFS over the layer's edges in canonical order; empty matching first."""
    out = [LayerMatching(0, 0, 0, 0)]
    edges = layer.edges_local
    n = len(edges)
    facets = layer.upper_facets
    matched: dict[int, int] = {}  # lower local -> upper local

    def creates_cycle(lo: int, up: int) -> bool:
        # first hop must not reuse the cover edge being reversed
        stack = []
        seen = set()
        for s in facets[up]:
            if s != lo:
                nxt = matched.get(s)
                if nxt is not None and nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        while stack:
            t = stack.pop()
            for s in facets[t]:
                if s == lo:
                    return True
                nxt = matched.get(s)
                if nxt is not None and nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        return False

    def rec(start: int, emask: int, lmask: int, umask: int, size: int) -> None:
        for i in range(start, n):
            e, lo, up = edges[i]
            if (lmask >> lo) & 1 or (umask >> up) & 1:
                continue
            if acyclic and creates_cycle(lo, up):
                continue
            nm = LayerMatching(emask | (1 << e), lmask | (1 << lo),
                               umask | (1 << up), size + 1)
            out.append(nm)
            if acyclic:
                matched[lo] = up
            rec(i + 1, nm.edge_mask, nm.lower, nm.upper, nm.size)
            if acyclic:
                del matched[lo]

    rec(0, 0, 0, 0, 0)
    return out


def _vec_add_scaled(dst: list[int], src: list[int], mult: int, shift: int) -> None:
    need = len(src) + shift
    if len(dst) < need:
        dst.extend([0] * (need - len(dst)))
    for k, v in enumerate(src):
        if v:
            dst[k + shift] += mult * v


def suffix_tables(ls: LayerSystem, acyclic: bool) -> list[list[list[int]]]:
    """S[d][U][k]: number of ways to match layers d.. with k pairs total,
    avoiding the lower faces in U (a bitmask over dimension-d faces)."""
    D = ls.D
    S: list = [None] * (D + 1)
    S[D] = [[1]] * (1 << ls.widths[D])
    for d in range(D - 1, -1, -1):
        w = ls.widths[d]
        size = 1 << w
        q: list[list[int]] = [[] for _ in range(size)]
        nxt = S[d + 1]
        for (lmask, umask, s), mult in ls.classes(d, acyclic).items():
            _vec_add_scaled(q[lmask], nxt[umask], mult, s)
        # zeta transform: q[V] becomes the sum over all L subset of V
        for i in range(w):
            bit = 1 << i
            for m in range(size):
                if m & bit and q[m ^ bit]:
                    _vec_add_scaled(q[m], q[m ^ bit], 1, 0)
        full = size - 1
        S[d] = [q[full ^ u] for u in range(size)]
    return S


def count_vector(H: HasseDiagram, mode: str = "acyclic",
                 width_limit: int = 18) -> list[int]:
    """Matching counts by cardinality (entry 0 is the empty matching)."""
    if H.edge_count == 0:
        return [1]
    ls = LayerSystem(H, width_limit)
    S = suffix_tables(ls, mode == "acyclic")
    return list(S[0][0])


def max_cardinality_info(vec: list[int]) -> tuple[int, int]:
    """(maximum cardinality, count at the maximum) from a count vector."""
    top = len(vec) - 1
    while top > 0 and vec[top] == 0:
        top -= 1
    return top, vec[top]


def profile_counts(ls: LayerSystem, S: list, target: int, acyclic: bool,
                   ) -> dict[tuple[int, ...], int]:
    """Counts of cardinality-`target` matchings by per-layer pair profile.

    Walks layer classes with exact suffix lookahead, so only states that
    complete to the target cardinality are expanded.
    """
    D = ls.D
    by_lower: list[dict[int, list[tuple[int, int, int]]]] = []
    for d in range(D):
        idx: dict[int, list[tuple[int, int, int]]] = {}
        for (lmask, umask, s), mult in ls.classes(d, acyclic).items():
            idx.setdefault(lmask, []).append((umask, s, mult))
        by_lower.append(idx)
    out: Counter = Counter()

    def walk(d: int, avoid: int, k_acc: int, profile: tuple[int, ...],
             mult_acc: int) -> None:
        if d == D:
            out[profile] += mult_acc
            return
        comp = ((1 << ls.widths[d]) - 1) ^ avoid
        nxt = S[d + 1]
        idx = by_lower[d]
        sub = comp
        while True:
            classes = idx.get(sub)
            if classes:
                for umask, s, mult in classes:
                    need = target - k_acc - s
                    vec = nxt[umask]
                    if 0 <= need < len(vec) and vec[need]:
                        walk(d + 1, umask, k_acc + s, profile + (s,),
                             mult_acc * mult)
            if sub == 0:
                break
            sub = (sub - 1) & comp

    walk(0, 0, 0, (), 1)
    return dict(out)


def iter_matchings_of_cardinality(ls: LayerSystem, S: list, target: int,
                                  acyclic: bool) -> Iterator[int]:
    """Yield the edge mask of every matching with exactly `target` pairs.

    Deterministic order: layers are filled bottom up, each layer's matchings
    in canonical DFS order, with suffix tables pruning every branch that
    cannot complete.
    """
    D = ls.D
    by_size: list[dict[int, list[LayerMatching]]] = []
    for d in range(D):
        bucket: dict[int, list[LayerMatching]] = {}
        for m in ls.matchings(d, acyclic):
            bucket.setdefault(m.size, []).append(m)
        by_size.append(bucket)

    def rec(d: int, avoid: int, k_acc: int, acc_mask: int) -> Iterator[int]:
        if d == D:
            yield acc_mask
            return
        nxt = S[d + 1]
        for s, bucket in by_size[d].items():
            need = target - k_acc - s
            if need < 0:
                continue
            for m in bucket:
                if m.lower & avoid:
                    continue
                vec = nxt[m.upper]
                if need < len(vec) and vec[need]:
                    yield from rec(d + 1, m.upper, k_acc + s,
                                   acc_mask | m.edge_mask)

    yield from rec(0, 0, 0, 0)


# -- dispatchers -------------------------------------------------------------

def matching_counts(H: HasseDiagram, mode: str = "acyclic", threads: int = 1,
                    width_limit: int = 18) -> list[int]:
    """f-vector of the complex of matchings (counts by cardinality >= 1).

    Uses the layer transfer when the per-dimension face counts permit, and
    falls back to the flat canonical enumeration otherwise.  Both routes
    produce identical counts.
    """
    from .hasse import enumerate_matchings
    try:
        vec = count_vector(H, mode, width_limit)
        out = vec[1:]
        while out and out[-1] == 0:
            out.pop()
        return out
    except LayeredInfeasibleError:
        return enumerate_matchings(H, mode, threads=threads)


def enumerate_optimal(H: HasseDiagram, visitor=None, method: str = "auto",
                      width_limit: int = 18) -> tuple[int, int]:
    """Maximum acyclic matching cardinality, their count, optional visit.

    method "layered" counts through the layer transfer and, when a visitor
    is supplied, walks exactly the maximum matchings using suffix-table
    lookahead.  method "dfs" is the flat branch-and-bound.  "auto" prefers
    the layered route and falls back to the branch-and-bound.
    """
    from .hasse import enumerate_optimal_dfs
    if H.edge_count == 0:
        return 0, 1
    if method not in ("auto", "layered", "dfs"):
        raise ValueError(f"unknown method {method!r}")
    if method == "dfs":
        return enumerate_optimal_dfs(H, visitor)
    try:
        ls = LayerSystem(H, width_limit)
    except LayeredInfeasibleError:
        if method == "layered":
            raise
        return enumerate_optimal_dfs(H, visitor)
    S = suffix_tables(ls, acyclic=True)
    best, count = max_cardinality_info(S[0][0])
    if visitor is not None:
        for mask in iter_matchings_of_cardinality(ls, S, best, acyclic=True):
            visitor(mask, best)
    return best, count
