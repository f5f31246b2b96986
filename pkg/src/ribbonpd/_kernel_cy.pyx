# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled subset-enumeration kernels; contracts match ``_kernel_py``."""

from libc.stdlib cimport calloc, free, malloc
from libc.string cimport memcpy


def planar_genus_counts(int v, eu, ew, long long lo, long long hi):
    cdef int e = len(eu)
    cdef long long full = ((<long long>1) << e) - 1
    cdef int *ceu = <int *> malloc(e * sizeof(int))
    cdef int *cew = <int *> malloc(e * sizeof(int))
    cdef int *parent = <int *> malloc(v * sizeof(int))
    cdef int *base = <int *> malloc(v * sizeof(int))
    cdef long long *hist = <long long *> calloc(v + 1, sizeof(long long))
    if not (ceu and cew and parent and base and hist):
        free(ceu); free(cew); free(parent); free(base); free(hist)
        raise MemoryError()
    cdef int k, x, y, cnt, total
    cdef long long i, m, mask, b
    for k in range(e):
        ceu[k] = eu[k]
        cew[k] = ew[k]
    for k in range(v):
        base[k] = k
    with nogil:
        for i in range(lo, hi):
            m = i ^ (i >> 1)
            total = 0
            for _rep in range(2):
                mask = m if _rep == 0 else (m ^ full)
                memcpy(parent, base, v * sizeof(int))
                cnt = v
                while mask:
                    b = mask & (-mask)
                    mask ^= b
                    k = _bit_index(b)
                    x = ceu[k]
                    while parent[x] != x:
                        parent[x] = parent[parent[x]]
                        x = parent[x]
                    y = cew[k]
                    while parent[y] != y:
                        parent[y] = parent[parent[y]]
                        y = parent[y]
                    if x != y:
                        parent[x] = y
                        cnt -= 1
                total += cnt
            hist[1 + v - total] += 1
    out = [hist[k] for k in range(v + 1)]
    free(ceu); free(cew); free(parent); free(base); free(hist)
    return out


cdef inline int _bit_index(long long b) nogil:
    cdef int k = 0
    while b > 1:
        b >>= 1
        k += 1
    return k


def component_counts(int v, eu, ew):
    if v > 255:
        raise ValueError("component table supports at most 255 vertices")
    cdef int e = len(eu)
    cdef long long size = (<long long>1) << e
    out = bytearray(size)
    cdef unsigned char[::1] view = out
    cdef int *ceu = <int *> malloc(e * sizeof(int))
    cdef int *cew = <int *> malloc(e * sizeof(int))
    cdef int *parent = <int *> malloc(v * sizeof(int))
    cdef int *base = <int *> malloc(v * sizeof(int))
    if not (ceu and cew and parent and base):
        free(ceu); free(cew); free(parent); free(base)
        raise MemoryError()
    cdef int k, x, y, cnt
    cdef long long m, mask, b
    for k in range(e):
        ceu[k] = eu[k]
        cew[k] = ew[k]
    for k in range(v):
        base[k] = k
    with nogil:
        for m in range(size):
            memcpy(parent, base, v * sizeof(int))
            cnt = v
            mask = m
            while mask:
                b = mask & (-mask)
                mask ^= b
                k = _bit_index(b)
                x = ceu[k]
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                y = cew[k]
                while parent[y] != y:
                    parent[y] = parent[parent[y]]
                    y = parent[y]
                if x != y:
                    parent[x] = y
                    cnt -= 1
            view[m] = <unsigned char> cnt
    free(ceu); free(cew); free(parent); free(base)
    return out


def euler_genus_counts(int e, int const_term, s0, s1, s2, long long lo, long long hi):
    cdef int n = 4 * e
    cdef int hist_size = const_term + 1 if const_term >= 0 else 1
    cdef long long *hist = <long long *> calloc(hist_size, sizeof(long long))
    cdef int *cs0 = <int *> malloc(n * sizeof(int))
    cdef int *cs1 = <int *> malloc(n * sizeof(int))
    cdef int *cs2 = <int *> malloc(n * sizeof(int))
    cdef long long *stamp = <long long *> calloc(n if n else 1, sizeof(long long))
    if not (hist and cs0 and cs1 and cs2 and stamp):
        free(hist); free(cs0); free(cs1); free(cs2); free(stamp)
        raise MemoryError()
    cdef int k, f0, x, y, cnt, orbit_sum, rep
    cdef long long i, m, token = 0
    for k in range(n):
        cs0[k] = s0[k]
        cs1[k] = s1[k]
        cs2[k] = s2[k]
    with nogil:
        for i in range(lo, hi):
            m = i ^ (i >> 1)
            orbit_sum = 0
            for rep in range(2):
                token += 1
                cnt = 0
                for f0 in range(n):
                    if stamp[f0] == token:
                        continue
                    cnt += 1
                    x = f0
                    while True:
                        stamp[x] = token
                        if (m >> (x >> 2)) & 1:
                            y = cs0[x] if rep == 0 else cs2[x]
                        else:
                            y = cs2[x] if rep == 0 else cs0[x]
                        stamp[y] = token
                        x = cs1[y]
                        if x == f0:
                            break
                orbit_sum += cnt
            hist[const_term - orbit_sum] += 1
    out = [hist[k] for k in range(hist_size)]
    free(hist); free(cs0); free(cs1); free(cs2); free(stamp)
    return out
