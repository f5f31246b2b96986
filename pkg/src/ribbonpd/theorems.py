"""Recurrence engines for genus polynomials of genus-0 ribbon graphs, and
seeded audits that replay every engine against brute-force enumeration.

The deletion recurrence relates a graph to the graph with one ribbon
removed, with a correction summed over the subsets that close a cycle with
the removed ribbon (or, in the cut form, over the complementary family).
The parallel-ribbon and subdivision engines reduce multi-ribbon and
subdivided graphs to smaller ones, and the ring engine composes a cyclic
chain of genus-0 parts from per-part data alone.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .enumeration import (
    CUT_IN_UNION,
    CYCLE_WITH_EDGE,
    correction_sum,
    genus_polynomial,
    max_partial_dual_genus,
    parallel_family,
    spanning_tree_masks,
    subset_family,
)
from .kernels import component_counts
from .poly import IntPolynomial, divexact
from .ribbon import (
    EdgeSubset,
    PreconditionError,
    RibbonGraph,
    component_count,
    face_degrees,
    genus_of_partial_dual,
    partial_dual,
    spanning_stats,
    subset_connects,
    surface_stats,
)
from .surgery import (
    add_edge_planar,
    add_pendant_edge,
    delete_edge,
    faces_with_gaps,
    insert_edge_at,
    ring_graph,
    subdivide_edge,
)

_2Z = IntPolynomial([0, 2])
_TWO_MINUS_2Z = IntPolynomial([2, -2])
_2Z_MINUS_TWO = IntPolynomial([-2, 2])


def _require_connected_planar(g: RibbonGraph, what: str) -> None:
    st = surface_stats(g)
    if st.c != 1:
        raise PreconditionError(f"{what} requires a connected graph")
    if not st.orientable or st.genus != 0:
        raise PreconditionError(f"{what} requires a genus-0 ribbon graph")


def deletion_recurrence(g: RibbonGraph, edge: int, form: str = "cycle") -> IntPolynomial:
    """Genus polynomial of ``g`` from the graph with ``edge`` deleted.

    ``cycle`` form: ``2z * P(G - e) + (2 - 2z) * correction`` over the
    subsets closing a cycle with ``e``; ``cut`` form: ``2 * P(G - e) +
    (2z - 2) * correction`` over the complementary family.  Requires ``g``
    and ``g - e`` connected and ``g`` genus 0.
    """
    if form not in ("cycle", "cut"):
        raise ValueError(f"unknown form {form!r}")
    _require_connected_planar(g, "the deletion recurrence")
    reduced = delete_edge(g, edge)
    if component_count(reduced) != 1:
        raise PreconditionError("the deletion recurrence requires G - e connected")
    base = genus_polynomial(reduced)
    if form == "cycle":
        fam = subset_family(g, edge, CYCLE_WITH_EDGE)
        return _2Z * base + _TWO_MINUS_2Z * correction_sum(reduced, fam)
    fam = subset_family(g, edge, CUT_IN_UNION)
    return base * 2 + _2Z_MINUS_TWO * correction_sum(reduced, fam)


def parallel_recurrence(g: RibbonGraph, edge: int, copies: int) -> IntPolynomial:
    """Genus polynomial of ``g`` with ``copies - 1`` ribbons added parallel
    to ``edge``, computed from ``g`` and ``g - edge`` alone.

    Which of the two doubling identities applies is detected by testing, for
    every subset that closes a cycle with the doubled ribbon, whether the
    original ribbon is a cut ribbon of the complement; the second identity
    adds a correction over the subsets where both ribbons sit on cycles.
    Three or more copies reduce linearly to the two-copy case.
    """
    if copies < 2:
        raise ValueError("copies must be at least 2")
    _require_connected_planar(g, "the parallel-ribbon recurrence")
    reduced = delete_edge(g, edge)
    if component_count(reduced) != 1:
        raise PreconditionError("the parallel-ribbon recurrence requires G - e connected")
    u, w = g.endpoints(edge)
    e = g.edge_count
    full = (1 << e) - 1
    ebit = 1 << edge

    p_g = genus_polynomial(g)
    p_reduced = genus_polynomial(reduced)
    doubled = IntPolynomial([1, 2]) * p_g - IntPolynomial([0, 0, 2]) * p_reduced

    # case detection over the family {A : e not in A, A joins the endpoints}
    always_cut = True
    second_family = []
    for bits in range(1 << e):
        if bits & ebit or not subset_connects(g, bits, u, w):
            continue
        comp_minus_e = (full ^ bits) & ~ebit
        if subset_connects(g, comp_minus_e, u, w):
            always_cut = False
            second_family.append(bits)
    if not always_cut:
        v = g.vertex_count
        corr = {}
        for bits in second_family:
            genus = 1 + v - component_count(g, bits) - component_count(g, full ^ bits)
            corr[genus] = corr.get(genus, 0) + 1
        corr_poly = IntPolynomial(
            [corr.get(i, 0) for i in range(max(corr) + 1)] if corr else []
        )
        doubled = doubled + IntPolynomial([1, -1]) ** 2 * 2 * corr_poly

    if copies == 2:
        return doubled
    factor = (1 << (copies - 1)) - 1
    return doubled * factor - p_g * (factor - 1)


def subdivision_recurrence(g: RibbonGraph, edge: int) -> IntPolynomial:
    """Genus polynomial of ``g`` with ``edge`` subdivided once.

    A cut ribbon doubles the polynomial; otherwise the polynomial of the
    deletion enters with a ``2z`` weight.
    """
    st = surface_stats(g)
    if st.c != 1:
        raise PreconditionError("the subdivision recurrence requires a connected graph")
    if not st.orientable:
        raise PreconditionError("the subdivision recurrence requires orientable input")
    u, w = g.endpoints(edge)
    full_minus = ((1 << g.edge_count) - 1) & ~(1 << edge)
    is_cut = not subset_connects(g, full_minus, u, w)
    p_g = genus_polynomial(g)
    if is_cut:
        return p_g * 2
    return p_g + _2Z * genus_polynomial(delete_edge(g, edge))


def ring_polynomial(parts: Sequence[tuple[RibbonGraph, int, int]]) -> IntPolynomial:
    """Genus polynomial of the ring of ``parts`` from per-part data alone.

    Each part contributes its polynomial and the polynomial of its closure
    (the part plus a root-to-root edge, which must stay genus 0); the closure
    factor is divided exactly by ``2 - 2z``, and a nonzero remainder reports
    a violated hypothesis.  Equals brute force on :func:`ribbonpd.surgery.ring_graph`.
    """
    if not parts:
        raise ValueError("at least one part is required")
    prod_parts = IntPolynomial([1])
    prod_factors = IntPolynomial([1])
    for idx, (part, r, s) in enumerate(parts):
        _require_connected_planar(part, f"ring part {idx}")
        closure = add_edge_planar(part, r, s)
        if closure is None:
            raise PreconditionError(
                f"ring part {idx}: no genus-preserving closure edge exists"
            )
        p_part = genus_polynomial(part)
        p_closure = genus_polynomial(closure)
        factor = divexact(p_closure - _2Z * p_part, _TWO_MINUS_2Z)
        prod_parts = prod_parts * p_part
        prod_factors = prod_factors * factor
    n = len(parts)
    return (prod_parts * (1 << n)).shifted(1) + _TWO_MINUS_2Z * prod_factors


# ---------------------------------------------------------------------------
# Random planar ribbon graphs
# ---------------------------------------------------------------------------


def random_planar(seed: int, v_target: int, e_target: int) -> RibbonGraph:
    """Seeded random connected genus-0 ribbon graph with the given counts.

    Grows from one vertex by two genus-preserving moves: hanging a new
    vertex off a random gap, and inserting an edge across two random gaps of
    one boundary component.  Deterministic per seed.
    """
    if v_target < 1 or e_target < v_target - 1:
        raise PreconditionError(
            "need v >= 1 and e >= v - 1 for a connected ribbon graph"
        )
    rng = random.Random(seed)
    g = RibbonGraph.build([[]], edge_count=0)
    grow_left = v_target - 1
    close_left = e_target - grow_left
    while grow_left or close_left:
        if rng.randrange(grow_left + close_left) < grow_left:
            v = rng.randrange(g.vertex_count)
            slot = rng.randrange(max(1, g.degree(v)))
            g = add_pendant_edge(g, v, slot)
            grow_left -= 1
        else:
            faces = faces_with_gaps(g)
            gaps = faces[rng.randrange(len(faces))]
            g1 = gaps[rng.randrange(len(gaps))]
            g2 = gaps[rng.randrange(len(gaps))]
            g = insert_edge_at(g, g1[0], g1[1], g2[0], g2[1])
            close_left -= 1
    st = surface_stats(g)
    assert st.c == 1 and st.orientable and st.genus == 0
    return g


def _random_twisted(seed: int, v_target: int, e_target: int) -> RibbonGraph:
    """Random graph with twists sprinkled on a random planar skeleton."""
    g = random_planar(seed, v_target, e_target)
    rng = random.Random(seed ^ 0x5EED)
    twisted = tuple(rng.random() < 0.4 for _ in range(g.edge_count))
    if not any(twisted):
        twisted = (True,) + twisted[1:] if g.edge_count else twisted
    return RibbonGraph(g.vertex_count, g.edge_count, g.rotations, twisted)


def _random_orientable(seed: int, v_target: int, e_target: int) -> RibbonGraph:
    """Random orientable graph: a random partial dual of a random planar one."""
    g = random_planar(seed, v_target, e_target)
    rng = random.Random(seed ^ 0xD0A1)
    bits = rng.randrange(1 << g.edge_count)
    return partial_dual(g, EdgeSubset(bits, g.edge_count))


def _trial_sizes(rng: random.Random, max_edges: int) -> tuple[int, int]:
    e = rng.randint(1, max_edges)
    v = rng.randint(1, e + 1)
    return v, e


# ---------------------------------------------------------------------------
# Audits: replay each statement against brute force
# ---------------------------------------------------------------------------

AUDIT_IDS = (
    "deletion-cycle",
    "deletion-cut",
    "parallel",
    "subdivision",
    "ring",
    "half-sum",
    "component-bound",
    "dual-invariants",
    "genus-formula",
    "parallel-max-genus",
)


@dataclass(frozen=True)
class RecurrenceReport:
    """Outcome of one audited trial.

    ``lhs`` is the engine under audit, ``rhs`` the brute-force value; for
    subset-level audits the polynomials are zero and a failing subset is
    carried as the witness.
    """

    theorem_id: str
    seed: int
    trial: int
    lhs: IntPolynomial
    rhs: IntPolynomial
    agree: bool
    witness: Optional[EdgeSubset] = None

    def csv_row(self) -> str:
        witness = (
            ",".join(str(i) for i in self.witness.indices()) if self.witness else ""
        )
        return f"{self.theorem_id},{self.seed},{self.trial},{int(self.agree)},{witness}"


def _pick_edge_keeping_connected(g: RibbonGraph, rng: random.Random) -> Optional[int]:
    candidates = [
        k
        for k in range(g.edge_count)
        if component_count(delete_edge(g, k)) == 1
    ]
    if not candidates:
        return None
    return candidates[rng.randrange(len(candidates))]


def audit(
    theorem_id: str,
    seed: int = 1,
    trials: int = 50,
    max_edges: int = 9,
    _corrupt: bool = False,
) -> list[RecurrenceReport]:
    """Run seeded random trials of one audited statement.

    Disagreements become report entries (never exceptions); ``_corrupt``
    deliberately perturbs the engine output as a negative control.
    """
    if theorem_id not in AUDIT_IDS:
        raise ValueError(f"unknown audit {theorem_id!r}")
    reports: list[RecurrenceReport] = []
    for trial in range(trials):
        trial_seed = seed * 1_000_003 + trial
        rng = random.Random(trial_seed)
        reports.extend(
            _run_trial(theorem_id, trial_seed, trial, rng, max_edges, _corrupt)
        )
    return reports


def _poly_report(theorem_id, seed, trial, lhs, rhs, witness=None) -> RecurrenceReport:
    return RecurrenceReport(
        theorem_id=theorem_id,
        seed=seed,
        trial=trial,
        lhs=lhs,
        rhs=rhs,
        agree=lhs == rhs and witness is None,
        witness=witness,
    )


def _run_trial(
    theorem_id: str,
    trial_seed: int,
    trial: int,
    rng: random.Random,
    max_edges: int,
    corrupt: bool,
) -> list[RecurrenceReport]:
    zero = IntPolynomial()
    v, e = _trial_sizes(rng, max_edges)

    if theorem_id in ("deletion-cycle", "deletion-cut", "parallel", "subdivision"):
        if theorem_id == "subdivision":
            g = random_planar(trial_seed, v, e)
            edge = rng.randrange(g.edge_count)
            lhs = subdivision_recurrence(g, edge)
            rhs = genus_polynomial(subdivide_edge(g, edge))
        else:
            # resample until the graph has a ribbon whose removal keeps it
            # connected (trees have none)
            edge = None
            for attempt in range(64):
                g = random_planar(trial_seed * 131 + attempt, v, e)
                edge = _pick_edge_keeping_connected(g, rng)
                if edge is not None:
                    break
                v, e = _trial_sizes(rng, max_edges)
            if edge is None:
                raise AssertionError("no applicable trial graph found")
            if theorem_id == "parallel":
                copies = rng.randint(2, 4)
                lhs = parallel_recurrence(g, edge, copies)
                rhs = genus_polynomial(parallel_family(g, edge, copies))
            else:
                form = "cycle" if theorem_id == "deletion-cycle" else "cut"
                lhs = deletion_recurrence(g, edge, form)
                rhs = genus_polynomial(g)
        if corrupt:
            lhs = lhs + IntPolynomial([1])
        return [_poly_report(theorem_id, trial_seed, trial, lhs, rhs)]

    if theorem_id == "ring":
        lhs = None
        for attempt in range(64):
            n_parts = rng.randint(1, 3)
            parts = []
            for i in range(n_parts):
                pe = rng.randint(1, 3)
                pv = rng.randint(2, pe + 1)
                part = random_planar(trial_seed * 31 + 977 * attempt + i, pv, pe)
                roots = rng.sample(range(part.vertex_count), 2)
                parts.append((part, roots[0], roots[1]))
            try:
                lhs = ring_polynomial(parts)
            except PreconditionError:
                continue  # a closure is not genus-preserving; hypothesis fails
            break
        if lhs is None:
            raise AssertionError("no applicable ring trial found")
        rhs = genus_polynomial(ring_graph(parts))
        if corrupt:
            lhs = lhs + IntPolynomial([1])
        return [_poly_report(theorem_id, trial_seed, trial, lhs, rhs)]

    if theorem_id == "half-sum":
        g = random_planar(trial_seed, v, e)
        edge = rng.randrange(g.edge_count)
        total = genus_polynomial(g)
        half = {}
        for bits in range(1 << g.edge_count):
            if not bits >> edge & 1:
                continue
            genus = genus_of_partial_dual(g, EdgeSubset(bits, g.edge_count))
            half[genus] = half.get(genus, 0) + 1
        lhs = IntPolynomial(
            [half.get(i, 0) for i in range(max(half) + 1)] if half else []
        ) * 2
        return [_poly_report(theorem_id, trial_seed, trial, lhs, total)]

    if theorem_id == "component-bound":
        g = random_planar(trial_seed, v, e)
        eu, ew = g.endpoint_arrays()
        ctab = component_counts(g.vertex_count, eu, ew)
        full = (1 << g.edge_count) - 1
        xi = min(ctab[full ^ t] for t in spanning_tree_masks(g))
        witness = None
        for bits in range(1 << g.edge_count):
            if ctab[bits] + ctab[full ^ bits] < 1 + xi:
                witness = EdgeSubset(bits, g.edge_count)
                break
        if corrupt and witness is None:
            witness = EdgeSubset(0, g.edge_count)
        return [_poly_report(theorem_id, trial_seed, trial, zero, zero, witness)]

    if theorem_id == "dual-invariants":
        maker = _random_twisted if trial % 2 else random_planar
        g = maker(trial_seed, v, e)
        witness = _dual_invariant_witness(g)
        return [_poly_report(theorem_id, trial_seed, trial, zero, zero, witness)]

    if theorem_id == "genus-formula":
        g = _random_orientable(trial_seed, v, e)
        witness = None
        for bits in range(1 << g.edge_count):
            a = EdgeSubset(bits, g.edge_count)
            if genus_of_partial_dual(g, a) != surface_stats(partial_dual(g, a)).genus:
                witness = a
                break
        return [_poly_report(theorem_id, trial_seed, trial, zero, zero, witness)]

    if theorem_id == "parallel-max-genus":
        g = random_planar(trial_seed, v, e)
        edge = rng.randrange(g.edge_count)
        g2 = parallel_family(g, edge, 2)
        base = max_partial_dual_genus(g2, "brute")
        witness = None
        for copies in (3, 4, 5):
            gk = parallel_family(g, edge, copies)
            if max_partial_dual_genus(gk, "brute") != base:
                witness = EdgeSubset.from_indices([edge], g.edge_count)
                break
        return [_poly_report(theorem_id, trial_seed, trial, zero, zero, witness)]

    raise AssertionError(theorem_id)


def _dual_invariant_witness(g: RibbonGraph) -> Optional[EdgeSubset]:
    """First subset violating the structural facts about partial duals."""
    st = surface_stats(g)
    e = g.edge_count
    for bits in range(1 << e):
        a = EdgeSubset(bits, e)
        d = partial_dual(g, a)
        ds = surface_stats(d)
        sub = spanning_stats(g, a)
        ok = (
            ds.v == sub.f
            and ds.e == e
            and ds.c == st.c
            and ds.orientable == st.orientable
        )
        if ok:
            dd = partial_dual(d, a)
            dds = surface_stats(dd)
            ok = dds == st and face_degrees(dd) == face_degrees(g)
        if ok and bits == 0:
            ok = ds == st and face_degrees(d) == face_degrees(g)
        if ok and bits == (1 << e) - 1:
            ok = ds.v == st.f and ds.f == st.v
        if not ok:
            return a
    return None


def reports_to_csv(reports: Sequence[RecurrenceReport]) -> str:
    lines = ["theorem,seed,trial,agree,witness_subset"]
    lines.extend(r.csv_row() for r in reports)
    return "\n".join(lines) + "\n"
