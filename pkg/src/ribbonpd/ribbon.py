r"""Ribbon graphs as signed rotation systems, with a flag computational model.

A ribbon graph is a graph together with a cellular embedding in a (possibly
non-orientable) surface.  The user-facing representation is the signed
rotation system: for every vertex a cyclic sequence of *edge-ends*, each end
written ``(edge, end)`` with ``end`` 0 or 1, plus one twist bit per edge.
Loops contribute both of their ends, possibly to the same vertex.

All surface computations run on the flag model.  Every edge contributes four
flags (two half-edges times two sides), numbered ``4*edge + 2*end + side``,
acted on by three fixed-point-free involutions:

* ``s2`` pairs the two side flags of one half-edge,
* ``s1`` pairs the flags facing each other across a corner of a vertex disk
  (derived from the rotation),
* ``s0`` pairs flags across the ribbon; it reverses sides exactly when the
  ribbon is untwisted, so an untwisted loop has two boundary components and
  a twisted loop only one.

Faces are orbits of ``<s0, s1>``, positive-degree vertices are orbits of
``<s1, s2>``, connected components are orbits of ``<s0, s1, s2>``.  Isolated
vertices carry no flags and are added to the face/component counts
explicitly.  The partial dual over an edge subset swaps the roles of ``s0``
and ``s2`` on the flags of exactly those edges; converting the modified flag
system back to a rotation system is :func:`from_gem`.

All types are immutable; every operation returns a new value.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence


class PreconditionError(ValueError):
    """An operation was invoked outside its documented domain."""


# ---------------------------------------------------------------------------
# Core value types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EdgeSubset:
    """A subset of the edges ``0..width-1``, stored as a bitmask."""

    bits: int
    width: int

    def __post_init__(self):
        if self.width < 0:
            raise ValueError("width must be nonnegative")
        if not 0 <= self.bits < (1 << self.width):
            raise ValueError("subset bits exceed the declared edge range")

    @classmethod
    def from_indices(cls, indices: Iterable[int], width: int) -> "EdgeSubset":
        bits = 0
        for k in indices:
            if not 0 <= k < width:
                raise ValueError(f"edge index {k} out of range 0..{width - 1}")
            bits |= 1 << k
        return cls(bits, width)

    @classmethod
    def empty(cls, width: int) -> "EdgeSubset":
        return cls(0, width)

    @classmethod
    def full(cls, width: int) -> "EdgeSubset":
        return cls((1 << width) - 1, width)

    def complement(self) -> "EdgeSubset":
        return EdgeSubset(self.bits ^ ((1 << self.width) - 1), self.width)

    def indices(self) -> tuple[int, ...]:
        return tuple(k for k in range(self.width) if self.bits >> k & 1)

    def __contains__(self, k: int) -> bool:
        return 0 <= k < self.width and bool(self.bits >> k & 1)

    def __len__(self) -> int:
        return int(self.bits).bit_count()

    def __iter__(self):
        return iter(self.indices())


@dataclass(frozen=True)
class SurfaceStats:
    """Vertex/edge/face/component counts and the genus data of a surface."""

    v: int
    e: int
    f: int
    c: int
    genus: Optional[int]  # None when the surface is non-orientable
    euler_genus: int
    orientable: bool


@dataclass(frozen=True)
class SpanningStats:
    """Surface data of a spanning subgraph (all vertices, a subset of edges)."""

    c: int
    f: int
    genus: Optional[int]
    euler_genus: int


@dataclass(frozen=True)
class GemMap:
    """Flag model of a ribbon graph: three fixed-point-free involutions.

    Flags are ``0 .. 4*e-1``; flag ``4*k + 2*t + s`` is side ``s`` of end
    ``t`` of edge ``k``.  Isolated (degree-0) vertices carry no flags and are
    recorded only by count.
    """

    s0: tuple[int, ...]
    s1: tuple[int, ...]
    s2: tuple[int, ...]
    isolated_vertices: int

    @property
    def flag_count(self) -> int:
        return len(self.s0)


@dataclass(frozen=True)
class RibbonGraph:
    """A signed rotation system.

    ``rotations[v]`` is the cyclic, counterclockwise sequence of edge-ends at
    vertex ``v``; every end ``(k, 0)`` and ``(k, 1)`` appears exactly once
    across all rotations.  ``twisted[k]`` marks edge ``k`` as a twisted
    ribbon.  Degree-0 vertices have an empty rotation.
    """

    vertex_count: int
    edge_count: int
    rotations: tuple[tuple[tuple[int, int], ...], ...]
    twisted: tuple[bool, ...]

    def __post_init__(self):
        if self.vertex_count < 0 or self.edge_count < 0:
            raise ValueError("vertex and edge counts must be nonnegative")
        if len(self.rotations) != self.vertex_count:
            raise ValueError("one rotation per vertex is required")
        if len(self.twisted) != self.edge_count:
            raise ValueError("one twist bit per edge is required")
        seen: set[tuple[int, int]] = set()
        for rot in self.rotations:
            for end in rot:
                k, t = end
                if not (0 <= k < self.edge_count and t in (0, 1)):
                    raise ValueError(f"unknown edge-end {k}.{t}")
                if end in seen:
                    raise ValueError(f"edge-end {k}.{t} appears twice")
                seen.add(end)
        if len(seen) != 2 * self.edge_count:
            missing = 2 * self.edge_count - len(seen)
            raise ValueError(f"{missing} edge-end(s) missing from the rotations")

    @classmethod
    def build(
        cls,
        rotations: Sequence[Sequence[tuple[int, int]]],
        twisted: Iterable[int] = (),
        edge_count: Optional[int] = None,
    ) -> "RibbonGraph":
        """Convenience constructor; ``twisted`` is an iterable of edge indices."""
        rots = tuple(tuple((int(k), int(t)) for (k, t) in rot) for rot in rotations)
        if edge_count is None:
            edge_count = sum(len(r) for r in rots) // 2
        tw = [False] * edge_count
        for k in twisted:
            tw[k] = True
        return cls(len(rots), edge_count, rots, tuple(tw))

    @classmethod
    def from_edges(
        cls,
        vertex_count: int,
        edges: Sequence[tuple[int, int]],
        twisted: Iterable[int] = (),
    ) -> "RibbonGraph":
        """Build some embedding of an abstract multigraph.

        Ends are appended to the rotations in edge order; the resulting
        embedding is arbitrary, so use this only where the answer does not
        depend on the embedding (connectivity, subset families, ...).
        """
        rots: list[list[tuple[int, int]]] = [[] for _ in range(vertex_count)]
        for k, (u, w) in enumerate(edges):
            rots[u].append((k, 0))
            rots[w].append((k, 1))
        tw = [False] * len(edges)
        for k in twisted:
            tw[k] = True
        return cls(vertex_count, len(edges), tuple(tuple(r) for r in rots), tuple(tw))

    # -- derived data ------------------------------------------------------

    @cached_property
    def end_location(self) -> dict[tuple[int, int], tuple[int, int]]:
        """Map from edge-end to ``(vertex, position in rotation)``."""
        loc: dict[tuple[int, int], tuple[int, int]] = {}
        for v, rot in enumerate(self.rotations):
            for i, end in enumerate(rot):
                loc[end] = (v, i)
        return loc

    def endpoints(self, k: int) -> tuple[int, int]:
        """Vertices of end 0 and end 1 of edge ``k`` (equal for loops)."""
        return self.end_location[(k, 0)][0], self.end_location[(k, 1)][0]

    def endpoint_arrays(self) -> tuple[list[int], list[int]]:
        us, ws = [], []
        for k in range(self.edge_count):
            u, w = self.endpoints(k)
            us.append(u)
            ws.append(w)
        return us, ws

    def degree(self, v: int) -> int:
        return len(self.rotations[v])

    def is_loop(self, k: int) -> bool:
        u, w = self.endpoints(k)
        return u == w


# ---------------------------------------------------------------------------
# Flag model construction and queries
# ---------------------------------------------------------------------------


def flag_id(edge: int, end: int, side: int) -> int:
    return 4 * edge + 2 * end + side


def to_gem(g: RibbonGraph) -> GemMap:
    """Flag model of ``g``; orbit counts reproduce its vertices and edges."""
    n = 4 * g.edge_count
    s0 = [0] * n
    s1 = [0] * n
    s2 = [0] * n
    for k in range(g.edge_count):
        base = 4 * k
        s2[base] = base + 1
        s2[base + 1] = base
        s2[base + 2] = base + 3
        s2[base + 3] = base + 2
        if g.twisted[k]:
            for s in (0, 1):
                s0[base + s] = base + 2 + s
                s0[base + 2 + s] = base + s
        else:
            for s in (0, 1):
                s0[base + s] = base + 2 + (1 - s)
                s0[base + 2 + (1 - s)] = base + s
    isolated = 0
    for rot in g.rotations:
        d = len(rot)
        if d == 0:
            isolated += 1
            continue
        for i in range(d):
            k, t = rot[i]
            k2, t2 = rot[(i + 1) % d]
            a = flag_id(k, t, 1)
            b = flag_id(k2, t2, 0)
            s1[a] = b
            s1[b] = a
    return GemMap(tuple(s0), tuple(s1), tuple(s2), isolated)


def _orbit_count(n: int, perms: Sequence[Sequence[int]]) -> int:
    """Number of orbits of the group generated by ``perms`` on ``0..n-1``."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    count = n
    for p in perms:
        for i in range(n):
            a, b = find(i), find(p[i])
            if a != b:
                parent[a] = b
                count -= 1
    return count


def _is_orientable(n: int, perms: Sequence[Sequence[int]]) -> bool:
    """Bipartiteness of the flag-adjacency graph under the involutions."""
    color = [-1] * n
    for start in range(n):
        if color[start] != -1:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            x = stack.pop()
            for p in perms:
                y = p[x]
                if color[y] == -1:
                    color[y] = 1 - color[x]
                    stack.append(y)
                elif color[y] == color[x]:
                    return False
    return True


def gem_counts(gem: GemMap) -> tuple[int, int, int]:
    """``(faces, components, vertices)`` of the map, isolated vertices included."""
    n = gem.flag_count
    f = _orbit_count(n, [gem.s0, gem.s1]) + gem.isolated_vertices
    c = _orbit_count(n, [gem.s0, gem.s1, gem.s2]) + gem.isolated_vertices
    v = _orbit_count(n, [gem.s1, gem.s2]) + gem.isolated_vertices
    return f, c, v


def surface_stats(g: RibbonGraph) -> SurfaceStats:
    """Counts and genus of the surface ``g`` embeds in.

    The Euler relation ``v - e + f = 2c - euler_genus`` holds by
    construction; the orientable genus is reported only when the surface is
    orientable.
    """
    gem = to_gem(g)
    n = gem.flag_count
    f = _orbit_count(n, [gem.s0, gem.s1]) + gem.isolated_vertices
    c = _orbit_count(n, [gem.s0, gem.s1, gem.s2]) + gem.isolated_vertices
    orientable = _is_orientable(n, [gem.s0, gem.s1, gem.s2])
    euler_genus = 2 * c - g.vertex_count + g.edge_count - f
    genus = euler_genus // 2 if orientable else None
    return SurfaceStats(
        v=g.vertex_count,
        e=g.edge_count,
        f=f,
        c=c,
        genus=genus,
        euler_genus=euler_genus,
        orientable=orientable,
    )


def component_count(g: RibbonGraph, mask: Optional[int] = None) -> int:
    """Components of the spanning subgraph with edge set ``mask`` (default all).

    Isolated vertices count as components.
    """
    if mask is None:
        mask = (1 << g.edge_count) - 1
    parent = list(range(g.vertex_count))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    count = g.vertex_count
    m = mask
    while m:
        b = m & -m
        m ^= b
        u, w = g.endpoints(b.bit_length() - 1)
        a, bb = find(u), find(w)
        if a != bb:
            parent[a] = bb
            count -= 1
    return count


def subset_connects(g: RibbonGraph, mask: int, u: int, w: int) -> bool:
    """Whether vertices ``u`` and ``w`` lie in one component of ``(V, mask)``."""
    if u == w:
        return True
    parent = list(range(g.vertex_count))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    m = mask
    while m:
        b = m & -m
        m ^= b
        a, bb = g.endpoints(b.bit_length() - 1)
        ra, rb = find(a), find(bb)
        if ra != rb:
            parent[ra] = rb
    return find(u) == find(w)


def spanning_stats(g: RibbonGraph, a: EdgeSubset) -> SpanningStats:
    """Component/face/genus data of the spanning subgraph ``(V(g), a)``.

    The subgraph keeps every vertex of ``g``; vertices missing all their
    edges contribute one face and one component each.
    """
    if a.width != g.edge_count:
        raise ValueError("subset width does not match the edge count")
    mask = a.bits
    c_a = component_count(g, mask)

    # Faces of the subgraph: restrict each rotation to ends of edges in `a`
    # and trace <s0, s1_restricted> orbits over the flags of those edges.
    edges = a.indices()
    nsub = len(edges)
    if nsub == 0:
        return SpanningStats(c=c_a, f=g.vertex_count, genus=0, euler_genus=0)

    gem = to_gem(g)
    s1r: dict[int, int] = {}
    isolated_in_a = 0
    flags: list[int] = []
    for k in edges:
        flags.extend(range(4 * k, 4 * k + 4))
    flag_pos = {fl: i for i, fl in enumerate(flags)}
    for rot in g.rotations:
        sub = [end for end in rot if end[0] in a]
        d = len(sub)
        if d == 0:
            isolated_in_a += 1
            continue
        for i in range(d):
            k, t = sub[i]
            k2, t2 = sub[(i + 1) % d]
            x = flag_id(k, t, 1)
            y = flag_id(k2, t2, 0)
            s1r[x] = y
            s1r[y] = x

    n = len(flags)
    s0_local = [flag_pos[gem.s0[fl]] for fl in flags]
    s1_local = [flag_pos[s1r[fl]] for fl in flags]
    s2_local = [flag_pos[gem.s2[fl]] for fl in flags]
    f_a = _orbit_count(n, [s0_local, s1_local]) + isolated_in_a
    orientable = _is_orientable(n, [s0_local, s1_local, s2_local])
    euler = 2 * c_a - g.vertex_count + nsub - f_a
    genus = euler // 2 if orientable else None
    return SpanningStats(c=c_a, f=f_a, genus=genus, euler_genus=euler)


# ---------------------------------------------------------------------------
# Partial duality
# ---------------------------------------------------------------------------


def from_gem(gem: GemMap, edge_count: int) -> RibbonGraph:
    """Rotation system of a flag map.

    Vertices are numbered in first-visited flag order; edge indices are kept
    (edge ``k`` owns flags ``4k..4k+3``) with end 0 the half-edge containing
    flag ``4k``.  The per-vertex walk alternates ``s2`` and ``s1``, which
    fixes the local orientation; twist bits are then read off from how
    ``s0`` matches the walk directions at the two ends of each ribbon.
    """
    n = 4 * edge_count
    s0, s1, s2 = gem.s0, gem.s1, gem.s2
    visited = [False] * n
    rotations: list[tuple[tuple[int, int], ...]] = []
    first_flag: dict[tuple[int, int], int] = {}  # end -> flag met first in walk
    for start in range(n):
        if visited[start]:
            continue
        rot: list[tuple[int, int]] = []
        x = start
        while True:
            y = s2[x]
            visited[x] = True
            visited[y] = True
            k = x >> 2
            t = 0 if min(x, y) == 4 * k else 1
            rot.append((k, t))
            first_flag[(k, t)] = x
            x = s1[y]
            if x == start:
                break
        rotations.append(tuple(rot))
    twisted = []
    for k in range(edge_count):
        m0 = first_flag[(k, 0)]
        m1 = first_flag[(k, 1)]
        twisted.append(s0[m0] == m1)
    for _ in range(gem.isolated_vertices):
        rotations.append(())
    return RibbonGraph(
        vertex_count=len(rotations),
        edge_count=edge_count,
        rotations=tuple(rotations),
        twisted=tuple(twisted),
    )


def dual_gem(gem: GemMap, a_bits: int) -> GemMap:
    """Swap the roles of ``s0`` and ``s2`` on the flags of edges in ``a_bits``."""
    s0 = list(gem.s0)
    s2 = list(gem.s2)
    bits = a_bits
    while bits:
        b = bits & -bits
        bits ^= b
        k = b.bit_length() - 1
        for fl in range(4 * k, 4 * k + 4):
            s0[fl], s2[fl] = gem.s2[fl], gem.s0[fl]
    return GemMap(tuple(s0), gem.s1, tuple(s2), gem.isolated_vertices)


def partial_dual(g: RibbonGraph, a: EdgeSubset) -> RibbonGraph:
    """The partial dual of ``g`` over the edge subset ``a``.

    The empty subset returns an equivalent copy of ``g`` and the full subset
    the geometric dual.  Edge indices are preserved; vertex numbering follows
    first-visited flag order.
    """
    if a.width != g.edge_count:
        raise ValueError("subset width does not match the edge count")
    return from_gem(dual_gem(to_gem(g), a.bits), g.edge_count)


def genus_of_partial_dual(g: RibbonGraph, a: EdgeSubset) -> int:
    """Genus of the partial dual over ``a``, without constructing it.

    Uses the spanning-subgraph formula
    ``genus(A) + genus(A^c) + c(G) + v(G) - c(A) - c(A^c)``; for genus-0
    input both subgraph genera vanish, so only component counts are needed
    (checked by a debug assertion).  Non-orientable input is rejected; use
    the Euler-genus enumeration for those graphs.
    """
    st = surface_stats(g)
    if not st.orientable:
        raise PreconditionError(
            "genus of a partial dual is defined for orientable graphs only; "
            "use the Euler-genus route for non-orientable input"
        )
    ac = a.complement()
    if st.genus == 0:
        c_a = component_count(g, a.bits)
        c_ac = component_count(g, ac.bits)
        if __debug__:
            assert spanning_stats(g, a).genus == 0
            assert spanning_stats(g, ac).genus == 0
        g_a = g_ac = 0
    else:
        sa = spanning_stats(g, a)
        sac = spanning_stats(g, ac)
        c_a, c_ac = sa.c, sac.c
        g_a, g_ac = sa.genus, sac.genus
        assert g_a is not None and g_ac is not None
    return g_a + g_ac + st.c + g.vertex_count - c_a - c_ac


def face_degrees(g: RibbonGraph) -> tuple[int, ...]:
    """Sorted face degrees (edge sides per face); isolated vertices give 0."""
    gem = to_gem(g)
    n = gem.flag_count
    seen = [False] * n
    sizes = []
    for start in range(n):
        if seen[start]:
            continue
        size = 0
        x = start
        while True:
            y = gem.s0[x]
            seen[x] = True
            seen[y] = True
            size += 1
            x = gem.s1[y]
            if x == start:
                break
        sizes.append(size)
    sizes.extend([0] * gem.isolated_vertices)
    return tuple(sorted(sizes))
