"""Brute-force enumeration, subset families, spanning-tree statistics."""

import pytest

from ribbonpd.enumeration import (
    CUT_IN_UNION,
    CYCLE_WITH_EDGE,
    correction_sum,
    euler_genus_polynomial,
    genus_counts_csv,
    genus_polynomial,
    max_partial_dual_genus,
    parallel_family,
    spanning_tree_masks,
    subset_family,
    tree_stats,
)
from ribbonpd.families import generate, spec
from ribbonpd.poly import IntPolynomial
from ribbonpd.ribbon import PreconditionError, RibbonGraph
from ribbonpd.surgery import delete_edge
from ribbonpd.theorems import random_planar


def test_cycle_polynomials():
    assert genus_polynomial(generate(spec("cycle", 3))) == IntPolynomial([2, 6])
    assert genus_polynomial(generate(spec("dipole", 2))) == IntPolynomial([2, 2])
    assert genus_polynomial(generate(spec("fan_q", 1))) == IntPolynomial([2])


def test_formula_and_construct_agree():
    for seed in range(8):
        g = random_planar(seed, 4, 6)
        assert genus_polynomial(g, "formula") == genus_polynomial(g, "construct")
    w5 = generate(spec("wheel", 5))  # ten edges
    assert genus_polynomial(w5, "formula") == genus_polynomial(w5, "construct")


def test_formula_on_nonplanar_orientable():
    # the torus dipole: both routes must agree away from genus 0
    g = RibbonGraph.build([[(0, 0), (1, 0), (2, 0)], [(0, 1), (1, 1), (2, 1)]])
    assert genus_polynomial(g, "formula") == genus_polynomial(g, "construct")


def test_twisted_representation_of_orientable_graph():
    # a path whose middle ribbon is twisted is still a genus-0 surface; both
    # routes must accept it and agree with the untwisted embedding
    from ribbonpd.ribbon import surface_stats

    g = RibbonGraph.build(
        [[(0, 0)], [(0, 1), (1, 0)], [(1, 1), (2, 0)], [(2, 1)]], twisted=[1]
    )
    st = surface_stats(g)
    assert st.orientable and st.genus == 0
    assert genus_polynomial(g, "formula") == genus_polynomial(g, "construct") == IntPolynomial([8])


def test_rejects_nonorientable_and_disconnected():
    b1 = generate(spec("bouquet_twisted", 1))
    with pytest.raises(PreconditionError):
        genus_polynomial(b1)
    two = RibbonGraph.build([[(0, 0), (0, 1)], [(1, 0), (1, 1)]])
    with pytest.raises(PreconditionError):
        genus_polynomial(two, "formula")


def test_subset_cap():
    g = generate(spec("cycle", 5))
    with pytest.raises(PreconditionError):
        genus_polynomial(g, cap=4)
    assert genus_polynomial(g, cap=5) == IntPolynomial([2, 30])


def test_edgeless_graph_polynomials():
    g = RibbonGraph.build([[]], edge_count=0)
    assert genus_polynomial(g) == IntPolynomial([1])
    assert euler_genus_polynomial(g) == IntPolynomial([1])


def test_construct_route_on_disconnected_graph():
    # disjoint loop and 2-cycle: genus adds across components, so the
    # polynomial is the product of the parts' polynomials
    from ribbonpd.surgery import disjoint_union

    g = disjoint_union(generate(spec("cycle", 2)), generate(spec("cycle", 1)))
    assert genus_polynomial(g, "construct") == IntPolynomial([2, 2]) * IntPolynomial([2])
    assert euler_genus_polynomial(g) == IntPolynomial([4, 0, 4])


def test_euler_polynomial_with_isolated_vertex():
    g = RibbonGraph.build([[], [(0, 0), (0, 1)]], twisted=[0], edge_count=1)
    assert euler_genus_polynomial(g) == IntPolynomial([0, 2])  # both duals projective


def test_euler_polynomials():
    assert euler_genus_polynomial(generate(spec("cycle", 2))) == IntPolynomial([2, 0, 2])
    assert euler_genus_polynomial(generate(spec("bouquet_twisted", 2))) == IntPolynomial([0, 0, 4])
    cx = generate(spec("join_with_bm", 2, 1))
    assert euler_genus_polynomial(cx) == IntPolynomial([0, 4, 0, 4])


def test_euler_matches_genus_with_squared_variable():
    for seed in range(6):
        g = random_planar(seed, 3, 6)
        assert euler_genus_polynomial(g) == genus_polynomial(g).substituted_power(2)


def test_euler_kernel_matches_constructed_duals_on_twisted_graphs():
    from ribbonpd.ribbon import EdgeSubset, partial_dual, surface_stats
    from ribbonpd.theorems import _random_twisted

    for seed in range(6):
        g = _random_twisted(seed, 3, 7)
        hist = {}
        for bits in range(1 << g.edge_count):
            eg = surface_stats(partial_dual(g, EdgeSubset(bits, g.edge_count))).euler_genus
            hist[eg] = hist.get(eg, 0) + 1
        constructed = IntPolynomial([hist.get(i, 0) for i in range(max(hist) + 1)])
        assert euler_genus_polynomial(g) == constructed


def test_genus_counts_csv():
    p = genus_polynomial(generate(spec("fan_q", 3)))
    assert genus_counts_csv(p) == "0,2\n1,14\n2,16\n"
    assert genus_counts_csv(IntPolynomial()) == ""


# -- subset families ----------------------------------------------------------


def test_family_of_two_cycle():
    c2 = generate(spec("cycle", 2))
    fam = subset_family(c2, 1, CYCLE_WITH_EDGE)
    assert [m.bits for m in fam.members] == [1]
    cut = subset_family(c2, 1, CUT_IN_UNION)
    assert [m.bits for m in cut.members] == [0]


def test_family_of_loop_is_full_powerset():
    g = RibbonGraph.build([[(0, 0), (0, 1), (1, 0)], [(1, 1)]])
    fam = subset_family(g, 0, CYCLE_WITH_EDGE)
    assert len(fam.members) == 2
    assert subset_family(g, 0, CUT_IN_UNION).members == ()


def test_family_of_ladder_example():
    # theta graph c=d via one rung or a three-edge path, plus a handle a-b:
    # exactly two cycles pass through the anchor edge
    # e1=p-q, e2=c-p, e3=c-d, e4=q-d, e5=b-c, e6=d-a, anchor=a-b
    g = RibbonGraph.from_edges(
        6,
        [(4, 5), (2, 4), (2, 3), (5, 3), (1, 2), (3, 0), (0, 1)],
    )
    fam = subset_family(g, 6, CYCLE_WITH_EDGE)
    got = {m.indices() for m in fam.members}
    short = {4, 2, 5}  # e5, e3, e6
    long = {4, 1, 0, 3, 5}  # e5, e2, e1, e4, e6
    expected = set()
    for extra in range(8):
        picks = {i for i, b in zip((0, 1, 3), (1, 2, 4)) if extra & b}
        expected.add(tuple(sorted(short | picks)))
    expected.add(tuple(sorted(long)))
    assert got == expected
    assert len(fam.members) == 9


def test_families_partition_powerset():
    g = random_planar(5, 4, 7)
    for k in range(g.edge_count):
        a = subset_family(g, k, CYCLE_WITH_EDGE)
        b = subset_family(g, k, CUT_IN_UNION)
        assert len(a.members) + len(b.members) == 1 << (g.edge_count - 1)
        assert set(a.members).isdisjoint(b.members)


def test_correction_sum_examples():
    c2 = generate(spec("cycle", 2))
    red = delete_edge(c2, 1)
    fam = subset_family(c2, 1, CYCLE_WITH_EDGE)
    assert correction_sum(red, fam) == IntPolynomial([1])

    c3 = generate(spec("cycle", 3))
    red3 = delete_edge(c3, 0)
    fam3 = subset_family(c3, 0, CYCLE_WITH_EDGE)
    assert len(fam3.members) == 1
    assert correction_sum(red3, fam3) == IntPolynomial([1])

    empty = subset_family(c2, 1, CUT_IN_UNION)
    fam_empty = type(fam)(kind=CUT_IN_UNION, anchor_edge=1, members=())
    assert correction_sum(red, fam_empty) == IntPolynomial()
    assert correction_sum(red, empty) == IntPolynomial([1])  # single empty subset


# -- spanning trees -----------------------------------------------------------


def test_spanning_tree_enumeration_counts():
    assert len(list(spanning_tree_masks(generate(spec("cycle", 4))))) == 4
    assert len(list(spanning_tree_masks(generate(spec("dipole", 3))))) == 3
    assert len(list(spanning_tree_masks(generate(spec("wheel", 3))))) == 16


def test_tree_stats_plane_loop():
    ts = tree_stats(generate(spec("cycle", 1)))
    assert ts.max_genus == 0
    assert ts.top_coefficient == 2 == 2 * ts.minimizing_trees
    assert ts.case == 1


def test_tree_stats_two_cycle():
    ts = tree_stats(generate(spec("cycle", 2)))
    assert ts.self_complementary_trees == 2
    assert ts.top_coefficient == 2
    assert ts.case == 3


def test_tree_stats_four_cycle():
    ts = tree_stats(generate(spec("cycle", 4)))
    assert ts.min_cotree_components == 3
    assert ts.max_genus == 1
    assert ts.minimizing_trees == 4
    assert ts.top_coefficient == 14 > 2 * ts.minimizing_trees
    assert ts.case == 2


def test_tree_stats_case_matches_top_coefficient():
    for seed in range(25):
        e = 2 + seed % 6
        v = 1 + seed % min(5, e + 1)
        g = random_planar(seed * 17 + 1, v, e)
        ts = tree_stats(g)
        if ts.case == 3:
            assert ts.top_coefficient == ts.self_complementary_trees
        elif ts.case == 1:
            assert ts.top_coefficient == 2 * ts.minimizing_trees
        else:
            assert ts.top_coefficient > 2 * ts.minimizing_trees


def test_max_genus_methods_agree():
    for name, n in [("cycle", 5), ("cycle", 8), ("dipole", 4), ("wheel", 4)]:
        g = generate(spec(name, n))
        assert max_partial_dual_genus(g, "brute") == max_partial_dual_genus(g, "xi")


def test_max_genus_of_cycles_and_trees():
    for n in range(1, 9):
        assert max_partial_dual_genus(generate(spec("cycle", n))) == (1 if n > 1 else 0)
    assert max_partial_dual_genus(generate(spec("path", 4))) == 0


def test_parallel_copies_keep_max_genus():
    d2 = generate(spec("dipole", 2))
    for k in (3, 4, 5, 6):
        dk = parallel_family(d2, 0, k - 1)
        assert dk.edge_count == k
        assert max_partial_dual_genus(dk) == 1
