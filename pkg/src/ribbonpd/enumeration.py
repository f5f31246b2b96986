"""Exhaustive enumeration over the ``2**e`` edge subsets of a ribbon graph.

The genus polynomial counts partial duals by orientable genus, the
Euler-genus polynomial by Euler genus.  Two independent routes are kept
deliberately: the *formula* route evaluates the spanning-subgraph genus
identity per subset (component counts only, for genus-0 input), the
*construct* route builds every partial dual and reads the genus off the
constructed map.  Tests and the verify suites pit them against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Literal

from . import kernels
from .poly import IntPolynomial
from .ribbon import (
    EdgeSubset,
    PreconditionError,
    RibbonGraph,
    component_count,
    partial_dual,
    spanning_stats,
    subset_connects,
    surface_stats,
    to_gem,
)
from .surgery import add_parallel_edge, delete_edge

DEFAULT_SUBSET_CAP = 30


def _check_cap(g: RibbonGraph, cap: int) -> None:
    if g.edge_count > cap:
        raise PreconditionError(
            f"{g.edge_count} edges exceed the subset cap of {cap}; "
            "raise the cap explicitly to enumerate 2^e subsets anyway"
        )


def genus_polynomial(
    g: RibbonGraph,
    method: Literal["formula", "construct"] = "formula",
    *,
    cap: int = DEFAULT_SUBSET_CAP,
    threads: int = 1,
) -> IntPolynomial:
    """Generating polynomial of the partial-dual genera, ``sum_A z^genus(G^A)``.

    ``formula`` requires connected orientable input and evaluates the
    spanning-subgraph identity per subset; ``construct`` builds each dual
    (any orientable input) and is the slow oracle.  The coefficient sum is
    checked to equal ``2**e``.
    """
    _check_cap(g, cap)
    st = surface_stats(g)
    if not st.orientable:
        raise PreconditionError(
            "the genus polynomial needs an orientable ribbon graph; "
            "use the Euler-genus polynomial instead"
        )
    e = g.edge_count
    if method == "construct":
        counts = [0] * (e + g.vertex_count + 2)
        for bits in range(1 << e):
            d = partial_dual(g, EdgeSubset(bits, e))
            genus = surface_stats(d).genus
            assert genus is not None
            counts[genus] += 1
    elif method == "formula":
        if st.c != 1:
            raise PreconditionError("the formula route requires a connected graph")
        if st.genus == 0:
            eu, ew = g.endpoint_arrays()
            counts = kernels.planar_genus_counts(g.vertex_count, eu, ew, threads)
        else:
            counts = _formula_counts_general(g, st)
    else:
        raise ValueError(f"unknown method {method!r}")
    poly = IntPolynomial(counts)
    if poly.coefficient_sum() != 1 << e:
        raise AssertionError("coefficient sum must be 2^e; enumeration is broken")
    return poly


def _formula_counts_general(g: RibbonGraph, st) -> list[int]:
    # Connected orientable but positive genus: the subgraph genera no longer
    # vanish, so both spanning subgraphs are traced per subset.
    e = g.edge_count
    counts = [0] * (e + g.vertex_count + 2)
    for bits in range(1 << e):
        a = EdgeSubset(bits, e)
        sa = spanning_stats(g, a)
        sac = spanning_stats(g, a.complement())
        assert sa.genus is not None and sac.genus is not None
        genus = sa.genus + sac.genus + st.c + g.vertex_count - sa.c - sac.c
        counts[genus] += 1
    return counts


def euler_genus_polynomial(
    g: RibbonGraph,
    *,
    cap: int = DEFAULT_SUBSET_CAP,
    threads: int = 1,
) -> IntPolynomial:
    """Generating polynomial of the partial-dual Euler genera.

    Defined for every ribbon graph, twisted or not.  Each subset's dual is
    realized as the swapped flag map and its vertex/face orbits counted; for
    orientable input the result is the genus polynomial with ``z -> z^2``.
    """
    _check_cap(g, cap)
    e = g.edge_count
    gem = to_gem(g)
    c = component_count(g)
    const_term = 2 * c + e - 2 * gem.isolated_vertices
    counts = kernels.euler_genus_counts(
        e, const_term, gem.s0, gem.s1, gem.s2, threads
    )
    poly = IntPolynomial(counts)
    if poly.coefficient_sum() != 1 << e:
        raise AssertionError("coefficient sum must be 2^e; enumeration is broken")
    return poly


# ---------------------------------------------------------------------------
# Subset families for the deletion recurrences
# ---------------------------------------------------------------------------

CYCLE_WITH_EDGE = "cycle-with-e"
CUT_IN_UNION = "cut-in-union"


@dataclass(frozen=True)
class SubsetFamily:
    """Subsets ``A`` of ``E(G - e)`` classified by the role of ``e`` in ``A + e``.

    ``cycle-with-e`` collects the subsets whose spanning subgraph connects
    the endpoints of the anchor edge (for a loop: every subset); the
    ``cut-in-union`` family is its complement within the powerset.
    """

    kind: str
    anchor_edge: int
    members: tuple[EdgeSubset, ...]


def subset_family(g: RibbonGraph, edge: int, kind: str) -> SubsetFamily:
    if not 0 <= edge < g.edge_count:
        raise ValueError(f"edge {edge} out of range")
    if kind not in (CYCLE_WITH_EDGE, CUT_IN_UNION):
        raise ValueError(f"unknown family kind {kind!r}")
    u, w = g.endpoints(edge)
    reduced = delete_edge(g, edge)
    want_connected = kind == CYCLE_WITH_EDGE
    members = []
    for bits in range(1 << reduced.edge_count):
        if subset_connects(reduced, bits, u, w) == want_connected:
            members.append(EdgeSubset(bits, reduced.edge_count))
    return SubsetFamily(kind=kind, anchor_edge=edge, members=tuple(members))


def correction_sum(g_minus_e: RibbonGraph, fam: SubsetFamily) -> IntPolynomial:
    """``sum over the family of z^genus((G-e)^A)`` for connected genus-0 input."""
    st = surface_stats(g_minus_e)
    if st.c != 1 or not st.orientable or st.genus != 0:
        raise PreconditionError("the correction sum needs a connected genus-0 graph")
    v = g_minus_e.vertex_count
    counts: dict[int, int] = {}
    for a in fam.members:
        genus = 1 + v - component_count(g_minus_e, a.bits) - component_count(
            g_minus_e, a.complement().bits
        )
        counts[genus] = counts.get(genus, 0) + 1
    if not counts:
        return IntPolynomial()
    out = [0] * (max(counts) + 1)
    for genus, n in counts.items():
        out[genus] = n
    return IntPolynomial(out)


# ---------------------------------------------------------------------------
# Spanning-tree statistics and the maximum partial-dual genus
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TreeStats:
    """Spanning-tree data governing the top of the genus polynomial.

    ``min_cotree_components`` is the least component count of a spanning
    tree's complement; the maximum partial-dual genus of a connected genus-0
    graph is ``v - min_cotree_components``.  ``case`` classifies the top
    coefficient: 1 when it is twice the number of minimizing trees, 3 when
    self-complementary spanning trees exist, 2 otherwise.
    """

    min_cotree_components: int
    minimizing_trees: int
    minimizing_complements: int
    self_complementary_trees: int
    max_genus: int
    top_coefficient: int
    case: int


def spanning_tree_masks(g: RibbonGraph) -> Iterator[int]:
    """All spanning trees, as edge masks, by deletion/contraction recursion."""
    if component_count(g) != 1:
        raise PreconditionError("spanning trees require a connected graph")
    edges = [g.endpoints(k) for k in range(g.edge_count)]

    def still_connected(vertex_ids: list[int], nver: int, alive: list[int]) -> bool:
        ids = sorted(set(vertex_ids))
        remap = {x: i for i, x in enumerate(ids)}
        parent = list(range(len(ids)))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        cnt = nver
        for k in alive:
            u, w = edges[k]
            ru, rw = find(remap[vertex_ids[u]]), find(remap[vertex_ids[w]])
            if ru != rw:
                parent[ru] = rw
                cnt -= 1
        return cnt == 1

    def rec(vertex_ids: list[int], nver: int, alive: list[int], chosen: int):
        # vertex_ids maps original vertices to contracted ids, nver distinct
        if nver == 1:
            yield chosen
            return
        pivot = -1
        for k in alive:
            u, w = edges[k]
            if vertex_ids[u] != vertex_ids[w]:
                pivot = k
                break
        if pivot < 0:
            return
        pu, pw = edges[pivot]
        a, b = vertex_ids[pu], vertex_ids[pw]
        rest = [k for k in alive if k != pivot]
        # contract: trees containing the pivot
        merged = [b if x == a else x for x in vertex_ids]
        yield from rec(merged, nver - 1, rest, chosen | (1 << pivot))
        # delete: trees avoiding the pivot, possible only if still spanning
        if still_connected(vertex_ids, nver, rest):
            yield from rec(vertex_ids, nver, rest, chosen)

    yield from rec(list(range(g.vertex_count)), g.vertex_count, list(range(g.edge_count)), 0)


def tree_stats(g: RibbonGraph, *, cap: int = DEFAULT_SUBSET_CAP) -> TreeStats:
    """Spanning-tree summary of a connected genus-0 ribbon graph.

    The case classification scans the full powerset and is limited to 20
    edges; the top coefficient is read off the brute-force genus polynomial.
    """
    st = surface_stats(g)
    if st.c != 1:
        raise PreconditionError("tree statistics require a connected graph")
    if not st.orientable or st.genus != 0:
        raise PreconditionError("tree statistics require a genus-0 ribbon graph")
    if g.edge_count > 20:
        raise PreconditionError("the case classification is limited to 20 edges")
    v = g.vertex_count
    e = g.edge_count
    full = (1 << e) - 1
    eu, ew = g.endpoint_arrays()
    ctab = kernels.component_counts(v, eu, ew)

    trees = list(spanning_tree_masks(g))
    tree_set = set(trees)
    xi = min(ctab[full ^ t] for t in trees) if trees else v
    mu = sum(1 for t in trees if ctab[full ^ t] == xi)
    eta = sum(1 for t in trees if (full ^ t) in tree_set)
    max_genus = v - xi

    poly = genus_polynomial(g, cap=cap)
    top = poly.coefficient(poly.degree())

    if eta:
        case = 3
    else:
        target = 1 + xi
        only_trees = True
        for bits in range(1 << e):
            if ctab[bits] + ctab[full ^ bits] != target:
                continue
            in_t = bits in tree_set and ctab[full ^ bits] == xi
            comp = full ^ bits
            in_tc = comp in tree_set and ctab[bits] == xi
            if not (in_t or in_tc):
                only_trees = False
                break
        case = 1 if only_trees else 2
    return TreeStats(
        min_cotree_components=xi,
        minimizing_trees=mu,
        minimizing_complements=mu,
        self_complementary_trees=eta,
        max_genus=max_genus,
        top_coefficient=top,
        case=case,
    )


def max_partial_dual_genus(
    g: RibbonGraph,
    method: Literal["brute", "xi"] = "brute",
    *,
    cap: int = DEFAULT_SUBSET_CAP,
) -> int:
    """Largest genus among all partial duals.

    ``brute`` takes the degree of the genus polynomial (orientable input);
    ``xi`` uses the spanning-tree formula ``v - min_cotree_components`` and
    requires connected genus-0 input.
    """
    st = surface_stats(g)
    if st.c != 1:
        raise PreconditionError("the maximum partial-dual genus needs a connected graph")
    if method == "brute":
        return genus_polynomial(g, cap=cap).degree()
    if method == "xi":
        if not st.orientable or st.genus != 0:
            raise PreconditionError("the spanning-tree method requires genus-0 input")
        full = (1 << g.edge_count) - 1
        xi = None
        for t in spanning_tree_masks(g):
            c = component_count(g, full ^ t)
            if xi is None or c < xi:
                xi = c
        if xi is None:
            xi = g.vertex_count
        return g.vertex_count - xi
    raise ValueError(f"unknown method {method!r}")


def genus_counts_csv(p: IntPolynomial) -> str:
    """CSV emission of an enumeration polynomial: one ``i,count`` row per
    genus value with a nonzero count."""
    lines = [f"{i},{c}" for i, c in enumerate(p.coeffs) if c]
    return "\n".join(lines) + ("\n" if lines else "")


def parallel_family(g: RibbonGraph, edge: int, copies: int) -> RibbonGraph:
    """``g`` with ``copies - 1`` extra ribbons parallel to ``edge``."""
    if copies < 1:
        raise ValueError("copies must be at least 1")
    out = g
    for _ in range(copies - 1):
        out = add_parallel_edge(out, edge)
    return out
