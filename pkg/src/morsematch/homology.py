"""Exact integral simplicial homology via sparse Smith normal form.

Boundary convention: for a face written as a strictly increasing vertex
tuple, the facet obtained by dropping the i-th vertex carries sign (-1)^i.
Bases are the canonical lex-ordered face lists, so matrices are reproducible
bit for bit.

The Smith normal form runs a sparse elimination phase restricted to unit
pivots (Markowitz-style cost, lazy heap), then finishes the unit-free
residual with a dense textbook reduction.  All arithmetic is exact; Python
integers make the growth harmless.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from math import gcd

from .complexes import SimplicialComplex


class SparseIntMatrix:
    """Row-major sparse integer matrix; zero entries are never stored."""

    __slots__ = ("rows", "cols", "row")

    def __init__(self, rows: int, cols: int):
        self.rows = rows
        self.cols = cols
        self.row: list[dict[int, int]] = [{} for _ in range(rows)]

    def set(self, r: int, c: int, v: int) -> None:
        if v:
            self.row[r][c] = v
        else:
            self.row[r].pop(c, None)

    def get(self, r: int, c: int) -> int:
        return self.row[r].get(c, 0)

    def nnz(self) -> int:
        return sum(len(d) for d in self.row)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for r, d in enumerate(self.row):
            for c, v in d.items():
                out[r][c] = v
        return out

    def copy(self) -> "SparseIntMatrix":
        m = SparseIntMatrix(self.rows, self.cols)
        m.row = [dict(d) for d in self.row]
        return m

    def __repr__(self) -> str:
        return f"SparseIntMatrix({self.rows}x{self.cols}, nnz={self.nnz()})"


def _dense_smith(M: list[list[int]]) -> list[int]:
    """Textbook Smith reduction of a dense integer matrix, in place.

    Returns the diagonal divisors as a divisibility chain.
    """
    nr = len(M)
    nc = len(M[0]) if nr else 0
    divisors: list[int] = []
    t = 0
    while True:
        pivot = None
        for i in range(t, nr):
            Mi = M[i]
            for j in range(t, nc):
                v = Mi[j]
                if v and (pivot is None or abs(v) < abs(pivot[2])):
                    pivot = (i, j, v)
                    if abs(v) == 1:
                        break
            if pivot is not None and abs(pivot[2]) == 1:
                break
        if pivot is None:
            break
        i, j, _ = pivot
        M[t], M[i] = M[i], M[t]
        if j != t:
            for row in M:
                row[t], row[j] = row[j], row[t]
        while True:
            if M[t][t] < 0:
                M[t] = [-x for x in M[t]]
            p = M[t][t]
            restart = False
            for i in range(t + 1, nr):
                v = M[i][t]
                if v:
                    q = v // p
                    if q:
                        Mt = M[t]
                        Mi = M[i]
                        for k in range(t, nc):
                            Mi[k] -= q * Mt[k]
                    if M[i][t]:
                        M[t], M[i] = M[i], M[t]
                        restart = True
                        break
            if restart:
                continue
            for j in range(t + 1, nc):
                v = M[t][j]
                if v:
                    q = v // p
                    if q:
                        for row in M:
                            row[j] -= q * row[t]
                    if M[t][j]:
                        for row in M:
                            row[t], row[j] = row[j], row[t]
                        restart = True
                        break
            if restart:
                continue
            # pivot must divide the rest of the submatrix for a proper chain
            dirty = False
            for i in range(t + 1, nr):
                Mi = M[i]
                for j in range(t + 1, nc):
                    if Mi[j] % p:
                        Mt = M[t]
                        for k in range(t, nc):
                            Mt[k] += Mi[k]
                        dirty = True
                        break
                if dirty:
                    break
            if not dirty:
                break
        divisors.append(M[t][t])
        t += 1
    return divisors


def smith_normal_form(A: SparseIntMatrix) -> tuple[tuple[int, ...], int]:
    """Elementary divisors d1 | d2 | ... | dr (all positive) and the rank."""
    rows = [dict(d) for d in A.row]
    col_rows: list[set[int]] = [set() for _ in range(A.cols)]
    for r, d in enumerate(rows):
        for c in d:
            col_rows[c].add(r)
    row_active = [True] * A.rows
    col_active = [True] * A.cols
    heap: list[tuple[int, int, int]] = []

    def push_if_unit(r: int, c: int, v: int) -> None:
        if v in (1, -1):
            cost = (len(rows[r]) - 1) * (len(col_rows[c]) - 1)
            heapq.heappush(heap, (cost, r, c))

    for r, d in enumerate(rows):
        for c, v in d.items():
            push_if_unit(r, c, v)

    units = 0
    while heap:
        cost, r, c = heapq.heappop(heap)
        if not (row_active[r] and col_active[c]):
            continue
        v = rows[r].get(c, 0)
        if v not in (1, -1):
            continue
        fresh = (len(rows[r]) - 1) * (len(col_rows[c]) - 1)
        if fresh > cost:
            heapq.heappush(heap, (fresh, r, c))
            continue
        # eliminate column c with row r, then discard the pivot row; the
        # leftover entries of row r are clearable by column operations that
        # touch nothing else, so dropping them costs no fill
        pivot_row = rows[r]
        for r2 in list(col_rows[c]):
            if r2 == r:
                continue
            q = rows[r2][c] * v  # v is +-1, so q*v == rows[r2][c]/v
            target = rows[r2]
            for c2, x in pivot_row.items():
                nv = target.get(c2, 0) - q * x
                if nv:
                    target[c2] = nv
                    col_rows[c2].add(r2)
                    push_if_unit(r2, c2, nv)
                else:
                    target.pop(c2, None)
                    col_rows[c2].discard(r2)
        for c2 in pivot_row:
            col_rows[c2].discard(r)
        row_active[r] = False
        col_active[c] = False
        units += 1

    # unit-free residual: finish densely
    live_rows = [r for r in range(A.rows) if row_active[r] and rows[r]]
    live_cols = sorted({c for r in live_rows for c in rows[r]})
    residual: list[int] = []
    if live_rows:
        col_pos = {c: j for j, c in enumerate(live_cols)}
        dense = [[0] * len(live_cols) for _ in live_rows]
        for i, r in enumerate(live_rows):
            for c, v in rows[r].items():
                dense[i][col_pos[c]] = v
        residual = _dense_smith(dense)

    divisors = [1] * units + [abs(d) for d in residual]
    divisors = _normalize_chain(divisors)
    return tuple(divisors), len(divisors)


def _normalize_chain(divisors: list[int]) -> list[int]:
    """Rewrite a diagonal multiset as a proper divisibility chain.

    Units divide everything and are split off up front; the quadratic
    gcd/lcm exchange only runs on the handful of nontrivial entries.
    """
    ones = sum(1 for d in divisors if d == 1)
    ds = sorted(d for d in divisors if d != 1)
    changed = True
    while changed:
        changed = False
        for i in range(len(ds)):
            for j in range(i + 1, len(ds)):
                a, b = ds[i], ds[j]
                if b % a:
                    g = gcd(a, b)
                    ds[i], ds[j] = g, a * b // g
                    changed = True
        if changed:
            ds.sort()
    return [1] * ones + ds


# -- chain complexes ---------------------------------------------------------

@dataclass
class ChainComplex:
    """Per-degree basis sizes and boundary matrices.

    boundaries[d] maps C_d to C_{d-1} for d >= 1; boundaries[0] is the
    augmentation (one row of ones) when reduced, else a 0 x n_0 matrix.
    """
    sizes: list[int]
    boundaries: list[SparseIntMatrix]
    reduced: bool


def boundary_matrices(K: SimplicialComplex, reduced: bool = True) -> ChainComplex:
    """Boundary matrices in the canonical bases; validates dd = 0."""
    if K.is_void:
        raise ValueError("void complex has no chain complex")
    sizes = [len(lst) for lst in K.faces_by_dim]
    mats: list[SparseIntMatrix] = []
    aug = SparseIntMatrix(1 if reduced else 0, sizes[0])
    if reduced:
        for j in range(sizes[0]):
            aug.set(0, j, 1)
    mats.append(aug)
    for d in range(1, K.dim + 1):
        m = SparseIntMatrix(sizes[d - 1], sizes[d])
        lower_index = K.face_index
        for j, f in enumerate(K.faces_by_dim[d]):
            for i in range(len(f)):
                facet = f[:i] + f[i + 1:]
                m.set(lower_index[facet][1], j, -1 if i % 2 else 1)
        mats.append(m)
    _check_dd_zero(mats, sizes, reduced)
    return ChainComplex(sizes, mats, reduced)


def _columns(m: SparseIntMatrix) -> list[list[tuple[int, int]]]:
    cols: list[list[tuple[int, int]]] = [[] for _ in range(m.cols)]
    for r, d in enumerate(m.row):
        for c, v in d.items():
            cols[c].append((r, v))
    return cols


def _check_dd_zero(mats: list[SparseIntMatrix], sizes: list[int],
                   reduced: bool) -> None:
    for d in range(1, len(mats)):
        upper = mats[d]
        lower = mats[d - 1]
        if lower.rows == 0:
            continue
        lower_cols = _columns(lower)
        upper_cols = _columns(upper)
        for j, col in enumerate(upper_cols):
            acc: dict[int, int] = {}
            for mid, v in col:
                for i, w in lower_cols[mid]:
                    acc[i] = acc.get(i, 0) + v * w
            if any(acc.values()):
                raise AssertionError(
                    f"boundary of boundary nonzero at degree {d}, column {j}")


@dataclass
class HomologyResult:
    """Betti numbers and torsion divisors per degree."""
    groups: list[tuple[int, tuple[int, ...]]]
    reduced: bool
    void: bool = False

    def betti(self, d: int) -> int:
        if 0 <= d < len(self.groups):
            return self.groups[d][0]
        return 0

    def torsion(self, d: int) -> tuple[int, ...]:
        if 0 <= d < len(self.groups):
            return self.groups[d][1]
        return ()

    def nonzero(self) -> dict[int, tuple[int, tuple[int, ...]]]:
        return {d: g for d, g in enumerate(self.groups) if g[0] or g[1]}

    def is_torsion_free(self) -> bool:
        return all(not g[1] for g in self.groups)

    def to_json(self) -> list[dict]:
        return [{"degree": d, "betti": b, "torsion": list(t)}
                for d, (b, t) in enumerate(self.groups)]


def _homology_from_chain(sizes: list[int],
                         mats: list[SparseIntMatrix],
                         reduced: bool) -> HomologyResult:
    snfs = [smith_normal_form(m) for m in mats]
    ranks = [r for _, r in snfs] + [0]
    groups = []
    for d in range(len(sizes)):
        betti = sizes[d] - ranks[d] - ranks[d + 1]
        if d + 1 < len(snfs):
            torsion = tuple(x for x in snfs[d + 1][0] if x > 1)
        else:
            torsion = ()
        groups.append((betti, torsion))
    return HomologyResult(groups, reduced)


def homology(K: SimplicialComplex, reduced: bool = True) -> HomologyResult:
    """Integral homology; reduced by default.  Void input is a flagged
    empty result, never an error."""
    if K.is_void:
        return HomologyResult([], reduced, void=True)
    cc = boundary_matrices(K, reduced)
    return _homology_from_chain(cc.sizes, cc.boundaries, reduced)


def relative_homology(L: SimplicialComplex, K: SimplicialComplex,
                      reduced: bool = True) -> HomologyResult:
    """Homology of the quotient chain complex of the pair (L, K).

    K must be a subcomplex of L (literal face containment).  For non-void K
    the reduced and unreduced relative groups agree, so the quotient is
    computed without augmentation; a void K degenerates to the absolute
    homology of L.
    """
    if K.is_void:
        return homology(L, reduced)
    if not L.contains_complex(K):
        raise ValueError("K is not a subcomplex of L")
    sizes = []
    position: list[dict[tuple, int]] = []
    for d in range(L.dim + 1):
        keep = [f for f in L.faces_by_dim[d] if f not in K.face_index]
        sizes.append(len(keep))
        position.append({f: i for i, f in enumerate(keep)})
    mats = [SparseIntMatrix(0, sizes[0])]
    for d in range(1, L.dim + 1):
        m = SparseIntMatrix(sizes[d - 1], sizes[d])
        for f, j in position[d].items():
            for i in range(len(f)):
                facet = f[:i] + f[i + 1:]
                pos = position[d - 1].get(facet)
                if pos is not None:
                    m.set(pos, j, -1 if i % 2 else 1)
        mats.append(m)
    return _homology_from_chain(sizes, mats, reduced)
