"""Canonical generators and closed forms for the named graph families.

Every orientable family is emitted in a fixed genus-0 embedding (the genus
polynomial of a genus-0 graph does not depend on the embedding, but the
generators are frozen and covered by golden-file tests anyway).  Closed
forms and recurrences are exact integer polynomials.

Families and parameters:

========== =========== ====================================================
kind        params      graph
========== =========== ====================================================
cycle       (n,) n>=1   plane cycle with n vertices and n edges
path        (n,) n>=1   path with n edges
dipole      (n,) n>=1   two vertices joined by n parallel ribbons
bouquet_twisted (m,)    one vertex, m twisted loops (m >= 0)
necklace    (n,) n>=1   ring of n two-ribbon beads, 2n vertices, 3n edges
fan_q       (n,) n>=1   apex joined to every vertex of an n-vertex path
fan_f2m2    (m,) m>=0   fan over an (m+2)-vertex path, extreme spokes doubled
wheel       (n,) n>=3   apex joined to every vertex of an n-cycle
wheel_bar   (n,) n>=3   wheel with one doubled spoke
join_with_bm (n, m)     cycle(n) joined to bouquet_twisted(m)
========== =========== ====================================================
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .poly import IntPolynomial
from .ribbon import PreconditionError, RibbonGraph
from .surgery import (
    add_edge_planar,
    add_parallel_edge,
    add_pendant_edge,
    join,
    relabel_edges,
    ring_graph,
)

KINDS = (
    "cycle",
    "path",
    "dipole",
    "bouquet_twisted",
    "necklace",
    "fan_q",
    "fan_f2m2",
    "wheel",
    "wheel_bar",
    "join_with_bm",
)


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown family {self.kind!r}")
        want = 2 if self.kind == "join_with_bm" else 1
        if len(self.params) != want:
            raise ValueError(f"family {self.kind} takes {want} parameter(s)")
        n = self.params[0]
        if self.kind == "bouquet_twisted":
            if n < 0:
                raise ValueError("bouquet_twisted needs m >= 0")
        elif self.kind == "fan_f2m2":
            if n < 0:
                raise ValueError("fan_f2m2 needs m >= 0")
        elif self.kind in ("wheel", "wheel_bar"):
            if n < 3:
                raise ValueError(f"{self.kind} needs n >= 3")
        elif n < 1:
            raise ValueError(f"{self.kind} needs n >= 1")
        if self.kind == "join_with_bm" and self.params[1] < 0:
            raise ValueError("join_with_bm needs m >= 0")


def spec(kind: str, *params: int) -> FamilySpec:
    return FamilySpec(kind, tuple(params))


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------


def _cycle(n: int) -> RibbonGraph:
    if n == 1:
        return RibbonGraph.build([[(0, 0), (0, 1)]])
    rots = []
    for i in range(n):
        rots.append([(i, 0), ((i - 1) % n, 1)])
    return RibbonGraph.build(rots)


def _path(n: int) -> RibbonGraph:
    # n edges, n + 1 vertices
    rots: list[list[tuple[int, int]]] = [[] for _ in range(n + 1)]
    for k in range(n):
        rots[k].append((k, 0))
        rots[k + 1].insert(0, (k, 1))
    return RibbonGraph.build(rots)


def _dipole(n: int) -> RibbonGraph:
    top = [(k, 0) for k in range(n)]
    bottom = [(k, 1) for k in reversed(range(n))]
    return RibbonGraph.build([top, bottom])


def _bouquet(m: int) -> RibbonGraph:
    rot = []
    for k in range(m):
        rot += [(k, 0), (k, 1)]
    return RibbonGraph.build([rot], twisted=range(m), edge_count=m)


def _necklace(n: int) -> RibbonGraph:
    return ring_graph([(_dipole(2), 0, 1)] * n)


def _fan(path_vertices: int) -> RibbonGraph:
    # apex joined to every vertex of a path; spokes first, then path edges
    n = path_vertices
    g = _path_graph_on_vertices(n)
    apex = n
    g = add_pendant_edge(g, 0, 0)
    for i in range(1, n):
        nxt = add_edge_planar(g, apex, i)
        assert nxt is not None
        g = nxt
    # built order: path edges 0..n-2, spokes n-1..2n-2
    perm = [0] * g.edge_count
    for j in range(n - 1):
        perm[j] = n + j
    for i in range(n):
        perm[n - 1 + i] = i
    return relabel_edges(g, perm)


def _path_graph_on_vertices(n: int) -> RibbonGraph:
    rots: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for k in range(n - 1):
        rots[k].append((k, 0))
        rots[k + 1].insert(0, (k, 1))
    return RibbonGraph.build(rots, edge_count=n - 1)


def _fan_f2m2(m: int) -> RibbonGraph:
    g = _fan(m + 2)
    g = add_parallel_edge(g, 0)
    return add_parallel_edge(g, m + 1)


def _wheel(n: int) -> RibbonGraph:
    g = _cycle(n)
    apex = n
    g = add_pendant_edge(g, 0, 0)
    for i in range(1, n):
        nxt = add_edge_planar(g, apex, i)
        assert nxt is not None
        g = nxt
    # built order: rim 0..n-1, spokes n..2n-1; canonical wants spokes first
    perm = [0] * g.edge_count
    for j in range(n):
        perm[j] = n + j
        perm[n + j] = j
    return relabel_edges(g, perm)


def _wheel_bar(n: int) -> RibbonGraph:
    return add_parallel_edge(_wheel(n), n - 1)


def generate(fs: FamilySpec) -> RibbonGraph:
    """The canonical ribbon graph of the family."""
    kind, params = fs.kind, fs.params
    if kind == "cycle":
        return _cycle(params[0])
    if kind == "path":
        return _path(params[0])
    if kind == "dipole":
        return _dipole(params[0])
    if kind == "bouquet_twisted":
        return _bouquet(params[0])
    if kind == "necklace":
        return _necklace(params[0])
    if kind == "fan_q":
        return _fan(params[0])
    if kind == "fan_f2m2":
        return _fan_f2m2(params[0])
    if kind == "wheel":
        return _wheel(params[0])
    if kind == "wheel_bar":
        return _wheel_bar(params[0])
    if kind == "join_with_bm":
        n, m = params
        return join(_cycle(n), 0, 0, _bouquet(m), 0, 0)
    raise AssertionError(kind)


# ---------------------------------------------------------------------------
# Closed forms and recurrences for the genus polynomial
# ---------------------------------------------------------------------------

_Z = IntPolynomial([0, 1])
_ONE = IntPolynomial([1])


def _cycle_closed(n: int) -> IntPolynomial:
    return IntPolynomial([2, (1 << n) - 2])


def _necklace_closed(n: int) -> IntPolynomial:
    first = IntPolynomial([2, 2]) ** n * (1 << n)
    second = IntPolynomial([1, 2]) ** n
    return first.shifted(1) + IntPolynomial([2, -2]) * second


def _fan_g(a: int, b: int) -> IntPolynomial:
    if b < 0 or b > a:
        return IntPolynomial()
    sign = -1 if b & 1 else 1
    coeff = sign * (1 << (2 * b + 1)) * comb(a, b)
    return (IntPolynomial([1, 4]) ** (a - b) * coeff).shifted(2 * b)


def _fan_closed(n: int) -> IntPolynomial:
    total = IntPolynomial()
    for k in range(n + 1):
        total = total + _fan_g(k, n - 1 - k) - _fan_g(k, n - 2 - k).shifted(1)
    return total


def _fan_recurrence_list(n: int) -> list[IntPolynomial]:
    """``[Q_1, ..., Q_n]`` by the three-term recurrence."""
    q = [IntPolynomial([2]), IntPolynomial([2, 6])]
    step = IntPolynomial([1, 4])
    back = IntPolynomial([0, 0, 4])
    while len(q) < n:
        q.append(step * q[-1] - back * q[-2])
    return q[:n]


def _wheel_recurrence_list(n: int) -> list[IntPolynomial]:
    """``[W_1, ..., W_n]`` by the coupled wheel/fan recurrences.

    The doubled-spoke correction term is the weighted combination
    ``2 * sum_(i=2)^(m-1) (m - i) * z^(m-i) * f_i`` of the fan partial sums
    ``f_i``; the multiplicity ``m - i`` is forced by brute force (each
    ``f_i`` class is reached by ``m - i`` distinct rim deletions), and the
    whole chain is pinned to enumeration for every wheel up to 7 rim
    vertices in the tests.
    """
    q = _fan_recurrence_list(max(n, 2))
    w = [IntPolynomial([4]), IntPolynomial([2, 10, 4])]
    f = {2: IntPolynomial([0, 2])}
    one_minus_z = IntPolynomial([1, -1])
    for m in range(3, n + 1):
        acc = IntPolynomial()
        for i in range(2, m):
            acc = acc + f[i].shifted(m - 1 - i)
        f[m] = q[m - 2].shifted(1) + one_minus_z * acc
        spoke_sum = IntPolynomial()  # S_m / z with S_m the doubled-spoke subset sum
        for i in range(2, m):
            spoke_sum = spoke_sum + f[i].shifted(m - i - 1) * (2 * (m - i))
        w.append(
            w[m - 2].shifted(1)
            + q[m - 1]
            + q[m - 2].shifted(2) * 2
            - one_minus_z * one_minus_z * spoke_sum
        )
    return w[:n]


def wheel_polynomial_sequence(n: int) -> list[IntPolynomial]:
    """``[W_1, ..., W_n]`` from the coupled recurrences (initial values included)."""
    if n < 1:
        raise ValueError("need n >= 1")
    return _wheel_recurrence_list(n)


def genus_closed_form(fs: FamilySpec) -> IntPolynomial:
    """Closed-form genus polynomial of the family.

    For fans this is the alternating binomial closed form; wheels are
    evaluated through the coupled recurrences (the only exact description
    available).  Non-orientable families have no genus polynomial.
    """
    kind, params = fs.kind, fs.params
    n = params[0]
    if kind in ("cycle", "dipole"):
        return _cycle_closed(n)
    if kind == "path":
        return IntPolynomial([1 << n])
    if kind == "necklace":
        return _necklace_closed(n)
    if kind == "fan_q":
        return _fan_closed(n)
    if kind == "fan_f2m2":
        return _fan_closed(n + 3)
    if kind == "wheel":
        return _wheel_recurrence_list(n)[n - 1]
    if kind == "wheel_bar":
        wn = _wheel_recurrence_list(n)[n - 1]
        qn = _fan_recurrence_list(n)[n - 1]
        return wn + qn.shifted(1) * 2
    raise PreconditionError(f"family {kind} has no genus closed form")


def genus_by_recurrence(fs: FamilySpec) -> IntPolynomial:
    """Genus polynomial through the family's recurrence.

    Cycles grow by subdividing an edge, dipoles by the multi-ribbon step,
    necklaces compose through the ring formula, fans and wheels use their
    linear recurrences.  Matches :func:`genus_closed_form` everywhere.
    """
    from .theorems import ring_polynomial  # local import, no cycle at module load

    kind, params = fs.kind, fs.params
    n = params[0]
    if kind == "cycle":
        p = IntPolynomial([2])
        for k in range(2, n + 1):
            p = p + IntPolynomial([0, 2]) * (1 << (k - 2))
        return p
    if kind == "path":
        p = IntPolynomial([2])
        for _ in range(n - 1):
            p = p * 2
        return p
    if kind == "dipole":
        d1 = IntPolynomial([2])
        d2 = IntPolynomial([2, 2])
        if n == 1:
            return d1
        if n == 2:
            return d2
        f = (1 << (n - 1)) - 1
        return d2 * f - d1 * (f - 1)
    if kind == "necklace":
        return ring_polynomial([(_dipole(2), 0, 1)] * n)
    if kind == "fan_q":
        return _fan_recurrence_list(n)[n - 1]
    if kind == "fan_f2m2":
        return _fan_recurrence_list(n + 3)[n + 2]
    if kind in ("wheel", "wheel_bar"):
        return genus_closed_form(fs)
    raise PreconditionError(f"family {kind} has no recurrence evaluator")


def euler_closed_form(fs: FamilySpec) -> IntPolynomial:
    """Closed-form Euler-genus polynomial; twisted-bouquet families only.

    A bouquet of m twisted loops gives ``(2z)^m``; joining a cycle to it
    multiplies the cycle's Euler-genus polynomial (its genus polynomial with
    ``z -> z^2``) by ``(2z)^m``.
    """
    kind, params = fs.kind, fs.params
    if kind == "bouquet_twisted":
        m = params[0]
        return IntPolynomial.monomial(1 << m, m)
    if kind == "join_with_bm":
        n, m = params
        return _cycle_closed(n).substituted_power(2) * IntPolynomial.monomial(1 << m, m)
    raise PreconditionError(f"family {kind} has no Euler-genus closed form")
