# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled subset-scan kernels: powerset rank tables and rank-axiom scans.

Same contracts as the pure-Python module `pure`.
"""

from libc.stdlib cimport free, malloc

ctypedef unsigned long long u64


def rank_tables(int n_vertices, ends_a, ends_b):
    """Rank tables of the lift and frame matroids over every edge subset.

    All cycles are taken unbalanced.  Returns (lift, frame) bytearrays of
    length 2**m indexed by edge bitmask.
    """
    cdef int m = len(ends_a)
    if len(ends_b) != m:
        raise ValueError("endpoint lists differ in length")
    if m > 26:
        raise ValueError("edge count %d too large for a dense table" % m)
    cdef u64 n_masks = (<u64> 1) << m
    lift = bytearray(n_masks)
    frame = bytearray(n_masks)
    cdef unsigned char[::1] lift_v = lift
    cdef unsigned char[::1] frame_v = frame
    cdef int* ea = <int*> malloc(m * sizeof(int))
    cdef int* eb = <int*> malloc(m * sizeof(int))
    cdef int* parent = <int*> malloc(n_vertices * sizeof(int))
    cdef int* touched = <int*> malloc(2 * m * sizeof(int))
    cdef unsigned char* cyclic = <unsigned char*> malloc(n_vertices)
    cdef unsigned char* seen = <unsigned char*> malloc(n_vertices)
    if not (ea and eb and parent and touched and cyclic and seen):
        free(ea); free(eb); free(parent); free(touched); free(cyclic); free(seen)
        raise MemoryError()
    cdef int i, a, b, ra, rb, nv, merges, ncomp, ntree, ti, v
    cdef u64 mask
    try:
        for i in range(m):
            a = ends_a[i]
            b = ends_b[i]
            if not (0 <= a < n_vertices and 0 <= b < n_vertices):
                raise ValueError("endpoint out of range")
            ea[i] = a
            eb[i] = b
        for i in range(n_vertices):
            seen[i] = 0
        for mask in range(1, n_masks):
            nv = 0
            merges = 0
            for i in range(m):
                if not (mask >> i) & 1:
                    continue
                a = ea[i]
                b = eb[i]
                if not seen[a]:
                    seen[a] = 1
                    parent[a] = a
                    cyclic[a] = 0
                    touched[nv] = a
                    nv += 1
                if not seen[b]:
                    seen[b] = 1
                    parent[b] = b
                    cyclic[b] = 0
                    touched[nv] = b
                    nv += 1
                ra = a
                while parent[ra] != ra:
                    parent[ra] = parent[parent[ra]]
                    ra = parent[ra]
                rb = b
                while parent[rb] != rb:
                    parent[rb] = parent[parent[rb]]
                    rb = parent[rb]
                if ra == rb:
                    cyclic[ra] = 1
                else:
                    parent[rb] = ra
                    if cyclic[rb]:
                        cyclic[ra] = 1
                    merges += 1
            ncomp = nv - merges
            ntree = 0
            for ti in range(nv):
                v = touched[ti]
                if parent[v] == v and not cyclic[v]:
                    ntree += 1
                seen[v] = 0
            frame_v[mask] = <unsigned char> (nv - ntree)
            lift_v[mask] = <unsigned char> (nv - ncomp + (1 if ncomp > ntree else 0))
    finally:
        free(ea); free(eb); free(parent); free(touched); free(cyclic); free(seen)
    return lift, frame


def scan_axioms_table(table, int m, int max_witnesses=8):
    """Scan a full rank table for matroid rank-axiom violations.

    Returns (quadruples_checked, violation_count, witnesses) with each
    witness a (axiom, subset_mask, e, f) tuple.
    """
    cdef const unsigned char[::1] t = table
    cdef u64 full = ((<u64> 1) << m) - 1
    if <u64> t.shape[0] != full + 1:
        raise ValueError("table length does not match ground-set size")
    witnesses = []
    cdef long long checked = 0
    cdef long long violations = 0
    cdef u64 x, be, bf, both, rest
    cdef int e, f, r, re
    if t[0] != 0:
        violations += 1
        witnesses.append(("normalization", 0, None, None))
    for e in range(m):
        be = (<u64> 1) << e
        rest = full ^ be
        x = rest
        while True:
            checked += 1
            r = t[x]
            re = t[x | be]
            if re < r or re > r + 1:
                violations += 1
                if len(witnesses) < max_witnesses:
                    witnesses.append(("unit-increase", int(x), e, None))
            if x == 0:
                break
            x = (x - 1) & rest
    for e in range(m):
        be = (<u64> 1) << e
        for f in range(e + 1, m):
            bf = (<u64> 1) << f
            both = be | bf
            rest = full ^ both
            x = rest
            while True:
                checked += 1
                if t[x | be] + t[x | bf] < t[x | both] + t[x]:
                    violations += 1
                    if len(witnesses) < max_witnesses:
                        witnesses.append(("submodularity", int(x), e, f))
                if x == 0:
                    break
                x = (x - 1) & rest
    return int(checked), int(violations), witnesses
