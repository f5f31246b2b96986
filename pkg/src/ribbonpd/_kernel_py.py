"""Pure-Python subset-enumeration kernels.

Same contracts as the compiled module ``_kernel_cy``; which one is used is
decided in :mod:`ribbonpd.kernels`.  Subsets are enumerated in Gray-code
order with a rebuilt union-find per subset; the table variant fills the
component-count array in index order instead (identical results).
"""

from __future__ import annotations


def planar_genus_counts(v, eu, ew, lo, hi):
    """Histogram of ``1 + v - c(A) - c(A^c)`` over subsets ``gray(lo..hi)``.

    ``eu``/``ew`` are the edge endpoint vertex arrays of a connected genus-0
    graph on ``v`` vertices; the returned list has ``v + 1`` slots (the value
    is the partial-dual genus for such graphs).
    """
    e = len(eu)
    full = (1 << e) - 1
    counts = [0] * (v + 1)
    base = list(range(v))
    parent = base[:]
    for i in range(lo, hi):
        m = i ^ (i >> 1)
        total = 0
        for mask in (m, m ^ full):
            parent[:] = base
            cnt = v
            while mask:
                b = mask & -mask
                mask ^= b
                k = b.bit_length() - 1
                x = eu[k]
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                y = ew[k]
                while parent[y] != y:
                    parent[y] = parent[parent[y]]
                    y = parent[y]
                if x != y:
                    parent[x] = y
                    cnt -= 1
            total += cnt
        counts[1 + v - total] += 1
    return counts


def component_counts(v, eu, ew):
    """``bytearray`` of spanning-subgraph component counts for every mask."""
    if v > 255:
        raise ValueError("component table supports at most 255 vertices")
    e = len(eu)
    out = bytearray(1 << e)
    base = list(range(v))
    parent = base[:]
    for m in range(1 << e):
        parent[:] = base
        cnt = v
        mask = m
        while mask:
            b = mask & -mask
            mask ^= b
            k = b.bit_length() - 1
            x = eu[k]
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            y = ew[k]
            while parent[y] != y:
                parent[y] = parent[parent[y]]
                y = parent[y]
            if x != y:
                parent[x] = y
                cnt -= 1
        out[m] = cnt
    return out


def euler_genus_counts(e, const_term, s0, s1, s2, lo, hi):
    """Histogram of Euler genera of the partial duals over ``gray(lo..hi)``.

    For a subset ``A`` the dual flag map swaps ``s0``/``s2`` on the flags of
    ``A``-edges (flag ``x`` belongs to edge ``x >> 2``).  Vertices of the
    dual are orbits of the swapped ``s2`` with ``s1``, faces orbits of the
    swapped ``s0`` with ``s1``, and the Euler genus is ``const_term`` minus
    both orbit counts, where ``const_term = 2*c + e - 2*isolated``.
    """
    n = 4 * e
    counts = [0] * (const_term + 1 if const_term >= 0 else 1)
    stamp = [0] * n
    token = 0
    for i in range(lo, hi):
        m = i ^ (i >> 1)
        orbit_sum = 0
        for swapped in (s0, s2):
            other = s2 if swapped is s0 else s0
            token += 1
            cnt = 0
            for f0 in range(n):
                if stamp[f0] == token:
                    continue
                cnt += 1
                x = f0
                while True:
                    stamp[x] = token
                    y = swapped[x] if (m >> (x >> 2)) & 1 else other[x]
                    stamp[y] = token
                    x = s1[y]
                    if x == f0:
                        break
            orbit_sum += cnt
        eg = const_term - orbit_sum
        counts[eg] += 1
    return counts
