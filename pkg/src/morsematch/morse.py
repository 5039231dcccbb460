"""Complexes of matchings, materialized as simplicial complexes.

Vertex i of a matching complex is Hasse edge i of the base complex, in
canonical edge order.  Three variants are built:

  M   faces are the acyclic matchings (hereditary, closure automatic)
  MP  the subcomplex generated by the maximum-cardinality acyclic matchings
  GM  faces are all matchings, acyclicity dropped (hereditary)

Materialization is guarded by a projected-size cap so that bases whose
matching complex only admits streamed counting are refused loudly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .complexes import SimplicialComplex, cone, relabel
from .hasse import HasseDiagram, build_hasse, enumerate_matchings
from .layers import (LayeredInfeasibleError, count_vector, enumerate_optimal,
                     matching_counts, max_cardinality_info)

VARIANTS = ("M", "MP", "GM")


class MaterializationLimitError(RuntimeError):
    """Projected face count exceeds the cap; use streamed counting instead."""


@dataclass
class MatchingComplex:
    variant: str
    base: SimplicialComplex
    hasse: Optional[HasseDiagram]
    complex: SimplicialComplex

    @property
    def is_void(self) -> bool:
        return self.complex.is_void


def _masks_to_faces(masks) -> list[tuple[int, ...]]:
    faces = []
    for mask in masks:
        face = []
        m = mask
        while m:
            b = m & -m
            face.append(b.bit_length() - 1)
            m ^= b
        faces.append(tuple(face))
    return faces


def _projected_size(H: HasseDiagram, variant: str) -> Optional[int]:
    """Cheap upper bound on the number of faces, or None if unavailable."""
    try:
        vec = count_vector(H, "all" if variant == "GM" else "acyclic")
    except LayeredInfeasibleError:
        return None
    if variant == "MP":
        best, cnt = max_cardinality_info(vec)
        return cnt * (1 << best)  # closure upper bound
    return sum(vec[1:])


def build_matching_complex(K: SimplicialComplex, variant: str,
                           max_faces: int = 10 ** 8) -> MatchingComplex:
    """Materialize the complex of matchings of K for the given variant.

    A base without Hasse edges (isolated vertices, the void complex) yields
    a void matching complex rather than an error.  Raises
    MaterializationLimitError when the projected face count exceeds
    `max_faces`.
    """
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")
    if K.is_void or K.dim == 0:
        return MatchingComplex(variant, K, None, SimplicialComplex.void(0))
    H = build_hasse(K)
    projected = _projected_size(H, variant)
    if projected is not None and projected > max_faces:
        raise MaterializationLimitError(
            f"projected face count {projected} exceeds cap {max_faces}; "
            "use the streamed counting interface instead")

    if variant == "MP":
        maxima: list[int] = []
        enumerate_optimal(H, visitor=lambda mask, card: maxima.append(mask))
        closed: set[int] = set()
        for mask in maxima:
            sub = mask
            while sub:
                closed.add(sub)
                if len(closed) > max_faces:
                    raise MaterializationLimitError(
                        f"face count exceeded cap {max_faces} during closure")
                sub = (sub - 1) & mask
        masks = closed
    else:
        mode = "all" if variant == "GM" else "acyclic"
        collected: list[int] = []
        cap_holder = [0]

        def visit(mask: int, card: int) -> None:
            cap_holder[0] += 1
            if cap_holder[0] > max_faces:
                raise MaterializationLimitError(
                    f"face count exceeded cap {max_faces} during enumeration")
            collected.append(mask)

        enumerate_matchings(H, mode, visitor=visit)
        masks = collected

    cx = SimplicialComplex.from_faces(_masks_to_faces(masks), H.edge_count)
    return MatchingComplex(variant, K, H, cx)


def matching_complex_f_vector(K: SimplicialComplex, variant: str,
                              threads: int = 1,
                              max_faces: int = 10 ** 8) -> list[int]:
    """f-vector of the matching complex, streamed where possible.

    M and GM go through the counting engine without materializing anything;
    MP requires materialization (its facets' downward closure has no cheap
    counting form) and is therefore subject to the cap.
    """
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")
    if K.is_void or K.dim == 0:
        return []
    if variant == "MP":
        from .complexes import f_vector
        return f_vector(build_matching_complex(K, "MP", max_faces).complex)
    H = build_hasse(K)
    return matching_counts(H, "all" if variant == "GM" else "acyclic",
                           threads=threads)


def induced_inclusion(K: SimplicialComplex, L: SimplicialComplex) -> list[int]:
    """Vertex map of matching complexes induced by a subcomplex inclusion.

    Entry i is the index in the Hasse diagram of L of the i-th Hasse edge of
    K (the same pair of faces, located in the larger diagram).  Injective by
    construction; raises if K is not a subcomplex of L.
    """
    if not L.contains_complex(K):
        raise ValueError("K is not a subcomplex of L")
    HK = build_hasse(K)
    HL = build_hasse(L)

    def gid_L(face) -> int:
        d, pos = L.face_index[face]
        return HL.offsets[d] + pos

    mapping = []
    for e in range(HK.edge_count):
        lo_f, up_f = HK.edge_faces(e)
        mapping.append(HL.edge_index[(gid_L(lo_f), gid_L(up_f))])
    return mapping


def embed_faces(MK: SimplicialComplex, mapping: list[int],
                target_universe: int) -> SimplicialComplex:
    """Relabel a matching complex through an induced inclusion map."""
    if MK.is_void:
        return SimplicialComplex.void(target_universe)
    return relabel(MK, mapping, target_universe)


def cone_pair(K: SimplicialComplex, w0: int = 0,
              ) -> tuple[SimplicialComplex, int, int]:
    """Cone of K together with the distinguished Hasse edge (apex, apex*w0).

    Returns (CK, apex id, index of the edge pairing the apex vertex with the
    edge towards w0).  That single pair is compatible with every matching
    on K, which is what makes the inclusion of matching complexes
    null-homotopic; verifiers check exactly this compatibility.
    """
    if K.is_void:
        raise ValueError("cone over the void complex is not supported")
    if (w0,) not in K.face_index:
        raise ValueError(f"w0={w0} is not a vertex of K")
    CK, apex = cone(K)
    H = build_hasse(CK)
    lo = CK.face_index[(apex,)]
    up = CK.face_index[tuple(sorted((w0, apex)))]
    e0 = H.edge_index[(H.offsets[0] + lo[1], H.offsets[1] + up[1])]
    return CK, apex, e0
