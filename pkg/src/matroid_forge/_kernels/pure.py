"""Plain-Python implementations of the hot subset-scan kernels.

Same contracts as the compiled module `_fastrank`; selected automatically
when the extension is not built.
"""

from __future__ import annotations


def rank_tables(n_vertices, ends_a, ends_b):
    """Rank tables of the lift and frame matroids over every edge subset.

    All cycles are taken unbalanced.  For a subset X with nv incident
    vertices, nc components and nt acyclic (tree) components:

        frame rank = nv - nt
        lift rank  = nv - nc + (1 if nc > nt else 0)

    Returns (lift, frame) bytearrays of length 2**m indexed by edge bitmask.
    """
    m = len(ends_a)
    if len(ends_b) != m:
        raise ValueError("endpoint lists differ in length")
    if m > 26:
        raise ValueError(f"edge count {m} too large for a dense table")
    for v in list(ends_a) + list(ends_b):
        if not 0 <= v < n_vertices:
            raise ValueError(f"endpoint {v} out of range")
    n_masks = 1 << m
    lift = bytearray(n_masks)
    frame = bytearray(n_masks)
    ea = list(ends_a)
    eb = list(ends_b)
    parent = list(range(n_vertices))
    cyclic = bytearray(n_vertices)
    seen = bytearray(n_vertices)
    for mask in range(1, n_masks):
        touched = []
        merges = 0
        bits = mask
        while bits:
            low = bits & -bits
            e = low.bit_length() - 1
            bits ^= low
            a = ea[e]
            b = eb[e]
            if not seen[a]:
                seen[a] = 1
                parent[a] = a
                cyclic[a] = 0
                touched.append(a)
            if not seen[b]:
                seen[b] = 1
                parent[b] = b
                cyclic[b] = 0
                touched.append(b)
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
        nv = len(touched)
        ntree = 0
        for v in touched:
            if parent[v] == v and not cyclic[v]:
                ntree += 1
            seen[v] = 0
        ncomp = nv - merges
        frame[mask] = nv - ntree
        lift[mask] = nv - ncomp + (1 if ncomp > ntree else 0)
    return lift, frame


def scan_axioms_table(table, m, max_witnesses=8):
    """Scan a full rank table for matroid rank-axiom violations.

    Checks normalization (rank of the empty set is 0), unit increase
    (r(X) <= r(X+e) <= r(X)+1) and local submodularity
    (r(X+e) + r(X+f) >= r(X+e+f) + r(X)) over every applicable triple.

    Returns (quadruples_checked, violation_count, witnesses) where each
    witness is (axiom, subset_mask, e, f).
    """
    full = (1 << m) - 1
    if len(table) != full + 1:
        raise ValueError("table length does not match ground-set size")
    witnesses = []
    violations = 0
    checked = 0
    if table[0] != 0:
        violations += 1
        witnesses.append(("normalization", 0, None, None))
    for e in range(m):
        be = 1 << e
        rest = full ^ be
        x = rest
        while True:
            checked += 1
            r = table[x]
            re = table[x | be]
            if re < r or re > r + 1:
                violations += 1
                if len(witnesses) < max_witnesses:
                    witnesses.append(("unit-increase", x, e, None))
            if x == 0:
                break
            x = (x - 1) & rest
    for e in range(m):
        be = 1 << e
        for f in range(e + 1, m):
            bf = 1 << f
            both = be | bf
            rest = full ^ both
            x = rest
            while True:
                checked += 1
                if table[x | be] + table[x | bf] < table[x | both] + table[x]:
                    violations += 1
                    if len(witnesses) < max_witnesses:
                        witnesses.append(("submodularity", x, e, f))
                if x == 0:
                    break
                x = (x - 1) & rest
    return checked, violations, witnesses
