"""Edit operations on ribbon graphs.

Everything here is pure: each operation returns a new :class:`RibbonGraph`.
Slots name the gaps between consecutive ribbon ends of a vertex: a degree-d
vertex has d gaps (gap ``i`` sits after rotation position ``i``), a degree-0
vertex has the single gap 0.  Inserting both ends of a new edge into gaps
that lie on one boundary component keeps the genus; inserting an edge
between two different components also keeps the genus, whatever the gaps.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .ribbon import (
    PreconditionError,
    RibbonGraph,
    flag_id,
    surface_stats,
    to_gem,
)


def _check_slot(g: RibbonGraph, v: int, slot: int) -> None:
    if not 0 <= v < g.vertex_count:
        raise ValueError(f"vertex {v} out of range")
    gaps = max(1, g.degree(v))
    if not 0 <= slot < gaps:
        raise ValueError(f"slot {slot} out of range for vertex {v} with {gaps} gap(s)")


def insert_edge_at(
    g: RibbonGraph,
    u: int,
    slot_u: int,
    w: int,
    slot_w: int,
    twisted: bool = False,
) -> RibbonGraph:
    """Add a new edge with end 0 in gap ``slot_u`` of ``u`` and end 1 in
    gap ``slot_w`` of ``w``.  The new edge gets index ``edge_count``."""
    _check_slot(g, u, slot_u)
    _check_slot(g, w, slot_w)
    k = g.edge_count
    rots = [list(r) for r in g.rotations]
    if u == w:
        if slot_u == slot_w:
            # both ends in one corner, end 0 first along the rotation
            rots[u][slot_u + 1 : slot_u + 1] = [(k, 0), (k, 1)]
        else:
            first, second = sorted(((slot_u, (k, 0)), (slot_w, (k, 1))), reverse=True)
            rots[u].insert(first[0] + 1, first[1])
            rots[u].insert(second[0] + 1, second[1])
    else:
        rots[u].insert(slot_u + 1, (k, 0))
        rots[w].insert(slot_w + 1, (k, 1))
    return RibbonGraph(
        vertex_count=g.vertex_count,
        edge_count=k + 1,
        rotations=tuple(tuple(r) for r in rots),
        twisted=g.twisted + (twisted,),
    )


def add_pendant_edge(g: RibbonGraph, u: int, slot: int, twisted: bool = False) -> RibbonGraph:
    """Attach a fresh vertex to ``u`` by a new edge placed in gap ``slot``."""
    _check_slot(g, u, slot)
    k = g.edge_count
    rots = [list(r) for r in g.rotations]
    rots[u].insert(slot + 1, (k, 0))
    rots.append([(k, 1)])
    return RibbonGraph(
        vertex_count=g.vertex_count + 1,
        edge_count=k + 1,
        rotations=tuple(tuple(r) for r in rots),
        twisted=g.twisted + (twisted,),
    )


def delete_edge(g: RibbonGraph, k: int) -> RibbonGraph:
    """Remove edge ``k``; higher edge indices shift down by one."""
    if not 0 <= k < g.edge_count:
        raise ValueError(f"edge {k} out of range")
    rots = []
    for rot in g.rotations:
        rots.append(
            tuple(
                (e - 1 if e > k else e, t) for (e, t) in rot if e != k
            )
        )
    twisted = g.twisted[:k] + g.twisted[k + 1 :]
    return RibbonGraph(g.vertex_count, g.edge_count - 1, tuple(rots), twisted)


def add_parallel_edge(g: RibbonGraph, k: int) -> RibbonGraph:
    """Insert a new ribbon parallel to edge ``k``, hugging it on both sides.

    The new end 0 goes immediately after ``(k, 0)`` in its rotation and the
    new end 1 immediately before ``(k, 1)``, so the two ribbons bound a bigon
    and a genus-0 input stays genus 0.  The new ribbon copies the twist of
    ``k``.
    """
    if not 0 <= k < g.edge_count:
        raise ValueError(f"edge {k} out of range")
    u, pos_u = g.end_location[(k, 0)]
    w, pos_w = g.end_location[(k, 1)]
    slot_u = pos_u
    slot_w = (pos_w - 1) % g.degree(w)
    return insert_edge_at(g, u, slot_u, w, slot_w, twisted=g.twisted[k])


def subdivide_edge(g: RibbonGraph, k: int) -> RibbonGraph:
    """Replace edge ``k`` by a two-edge path through a fresh degree-2 vertex.

    Edge ``k`` keeps its index (and twist) as the first half; the second half
    gets the next free index.  The surface is unchanged.
    """
    if not 0 <= k < g.edge_count:
        raise ValueError(f"edge {k} out of range")
    m = g.edge_count
    w, pos_w = g.end_location[(k, 1)]
    rots = [list(r) for r in g.rotations]
    rots[w][pos_w] = (m, 1)
    rots.append([(k, 1), (m, 0)])
    return RibbonGraph(
        vertex_count=g.vertex_count + 1,
        edge_count=m + 1,
        rotations=tuple(tuple(r) for r in rots),
        twisted=g.twisted + (False,),
    )


def join(
    g1: RibbonGraph,
    v1: int,
    slot1: int,
    g2: RibbonGraph,
    v2: int,
    slot2: int,
) -> RibbonGraph:
    """One-point join: paste vertex ``v2`` of ``g2`` into gap ``slot1`` of ``v1``.

    The merged vertex carries ``g1``'s rotation with ``g2``'s rotation of
    ``v2`` spliced in at the chosen gaps; both inputs stay recoverable as
    subribbon graphs.  ``g2``'s edges are renumbered by ``+e(g1)`` and its
    other vertices appended after ``g1``'s.
    """
    _check_slot(g1, v1, slot1)
    _check_slot(g2, v2, slot2)
    off = g1.edge_count

    def shift(rot):
        return [(k + off, t) for (k, t) in rot]

    rot1 = list(g1.rotations[v1])
    rot2 = shift(g2.rotations[v2])
    if rot2:
        spliced = rot2[slot2 + 1 :] + rot2[: slot2 + 1]
    else:
        spliced = []
    merged = rot1[: slot1 + 1] + spliced + rot1[slot1 + 1 :]

    rots = [list(r) for r in g1.rotations]
    rots[v1] = merged
    for v, rot in enumerate(g2.rotations):
        if v != v2:
            rots.append(shift(rot))
    return RibbonGraph(
        vertex_count=g1.vertex_count + g2.vertex_count - 1,
        edge_count=g1.edge_count + g2.edge_count,
        rotations=tuple(tuple(r) for r in rots),
        twisted=g1.twisted + g2.twisted,
    )


def disjoint_union(g1: RibbonGraph, g2: RibbonGraph) -> RibbonGraph:
    off = g1.edge_count
    rots = list(g1.rotations) + [
        tuple((k + off, t) for (k, t) in rot) for rot in g2.rotations
    ]
    return RibbonGraph(
        vertex_count=g1.vertex_count + g2.vertex_count,
        edge_count=g1.edge_count + g2.edge_count,
        rotations=tuple(rots),
        twisted=g1.twisted + g2.twisted,
    )


def relabel_edges(g: RibbonGraph, perm: Sequence[int]) -> RibbonGraph:
    """Renumber edges; ``perm[old] = new`` must be a permutation."""
    if sorted(perm) != list(range(g.edge_count)):
        raise ValueError("perm is not a permutation of the edge indices")
    rots = tuple(
        tuple((perm[k], t) for (k, t) in rot) for rot in g.rotations
    )
    twisted = [False] * g.edge_count
    for old, new in enumerate(perm):
        twisted[new] = g.twisted[old]
    return RibbonGraph(g.vertex_count, g.edge_count, rots, tuple(twisted))


# ---------------------------------------------------------------------------
# Face/gap tracing and genus-preserving insertions
# ---------------------------------------------------------------------------


def faces_with_gaps(g: RibbonGraph) -> list[list[tuple[int, int]]]:
    """Each face as the sequence of vertex gaps its boundary walk crosses.

    Every gap of every vertex appears exactly once across all faces; an
    isolated vertex forms its own face with the single gap ``(v, 0)``.
    """
    gem = to_gem(g)
    n = gem.flag_count
    gap_of = {}
    for v, rot in enumerate(g.rotations):
        d = len(rot)
        for i in range(d):
            k, t = rot[i]
            k2, t2 = rot[(i + 1) % d]
            gap_of[flag_id(k, t, 1)] = (v, i)
            gap_of[flag_id(k2, t2, 0)] = (v, i)
    faces: list[list[tuple[int, int]]] = []
    seen = [False] * n
    for start in range(n):
        if seen[start]:
            continue
        gaps: list[tuple[int, int]] = []
        x = start
        while True:
            y = gem.s0[x]
            seen[x] = True
            seen[y] = True
            gaps.append(gap_of[y])
            x = gem.s1[y]
            if x == start:
                break
        faces.append(gaps)
    for v, rot in enumerate(g.rotations):
        if not rot:
            faces.append([(v, 0)])
    return faces


def add_edge_planar(g: RibbonGraph, u: int, w: int) -> Optional[RibbonGraph]:
    """Insert an untwisted edge ``u``-``w`` without raising the genus.

    Scans the faces for a boundary component carrying gaps at both vertices
    (for ``u == w``, two gap crossings, possibly the same gap) and inserts
    the new ends there. Returns ``None`` when no face qualifies, which for a
    genus-0 input means no genus-0 insertion exists.
    """
    for gaps in faces_with_gaps(g):
        if u == w:
            at_u = [gap for gap in gaps if gap[0] == u]
            if at_u:
                first = at_u[0]
                second = at_u[1] if len(at_u) > 1 else at_u[0]
                return insert_edge_at(g, u, first[1], u, second[1])
        else:
            at_u = [gap for gap in gaps if gap[0] == u]
            at_w = [gap for gap in gaps if gap[0] == w]
            if at_u and at_w:
                return insert_edge_at(g, u, at_u[0][1], w, at_w[0][1])
    return None


def common_face_gaps(
    g: RibbonGraph, u: int, w: int
) -> Optional[tuple[tuple[int, int], tuple[int, int]]]:
    """First pair of gaps at distinct vertices ``u`` and ``w`` sharing a face."""
    for gaps in faces_with_gaps(g):
        at_u = next((gap for gap in gaps if gap[0] == u), None)
        at_w = next((gap for gap in gaps if gap[0] == w), None)
        if at_u and at_w:
            return at_u, at_w
    return None


def ring_graph(parts: Sequence[tuple[RibbonGraph, int, int]]) -> RibbonGraph:
    """Cyclic chain of genus-0 ribbon graphs joined by ring edges.

    ``parts[i]`` is ``(graph, entry_root, exit_root)``; a ring edge runs from
    each part's exit root to the next part's entry root, the last edge
    closing the cycle.  Every ring end is placed in a gap on the face shared
    by the part's two roots; that keeps the running chain face containing
    both the global entry and the current exit, so the closing edge never
    raises the genus.  A part whose roots share no face (its closure would
    not be genus 0) raises ``PreconditionError``.
    """
    if not parts:
        raise ValueError("at least one part is required")
    anchors = []
    for idx, (part, r, s) in enumerate(parts):
        if r == s:
            raise PreconditionError(f"ring part {idx}: roots must be distinct vertices")
        pair = common_face_gaps(part, r, s)
        if pair is None:
            raise PreconditionError(
                f"ring part {idx}: the roots share no face, closure is not genus 0"
            )
        anchors.append(pair)
    g = parts[0][0]
    offsets = [0]
    for part, _, _ in parts[1:]:
        offsets.append(g.vertex_count)
        g = disjoint_union(g, part)
    n = len(parts)
    entry = [offsets[i] + parts[i][1] for i in range(n)]
    exit_ = [offsets[i] + parts[i][2] for i in range(n)]
    entry_slot = [anchors[i][0][1] for i in range(n)]
    exit_slot = [anchors[i][1][1] for i in range(n)]
    # each root vertex receives exactly one ring end, so the recorded slots
    # stay valid throughout the insertions
    for i in range(n - 1):
        g = insert_edge_at(g, exit_[i], exit_slot[i], entry[i + 1], entry_slot[i + 1])
    g = insert_edge_at(g, exit_[n - 1], exit_slot[n - 1], entry[0], entry_slot[0])
    if __debug__:
        st = surface_stats(g)
        assert st.c == 1 and st.orientable and st.genus == 0
    return g
