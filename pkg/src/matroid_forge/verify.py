"""Named verification routines over the crossed-prism family.

Each check answers a specific structural claim at a concrete ring size and
returns a report with counts, witnesses and timing.  Exhaustive checks guard
their estimated step count against the subset-scan cap and raise
ResourceLimitError instead of running for hours.

Registry ids (the CLI surface): easy1, easy2, structure, gh-2,
cocircuit-size, rank-preservation, axioms, inverse.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations

from matroid_forge.bias import BiasedGraph
from matroid_forge.bitset import iter_bits, submasks
from matroid_forge.errors import ResourceLimitError
from matroid_forge.family import (
    CoveringPair,
    CrossedPrism,
    CrossingSelection,
    build_crossed_prism,
    covering_pair,
    iter_covering_pairs,
    validate_covering_pair,
)
from matroid_forge.framework import is_framework
from matroid_forge.matroid import (
    FrameOracle,
    LiftOracle,
    MatroidFacts,
    RankOracle,
    check_rank_axioms,
    circuit_hyperplane_failure,
    closure,
    free_basis_failure,
    full_rank_table,
    subset_cap,
)
from matroid_forge.surgery import relax, tighten, verify_surgery_inverse


@dataclass
class LemmaReport:
    lemma: str
    n: int
    passed: bool
    details: dict = field(default_factory=dict)
    witnesses: list[str] = field(default_factory=list)
    elapsed_s: float = 0.0

    def to_json(self) -> dict:
        return {
            "lemma": self.lemma,
            "n": self.n,
            "passed": self.passed,
            "details": self.details,
            "witnesses": self.witnesses,
            "elapsed_s": round(self.elapsed_s, 3),
        }


def _guard(cost: int, what: str) -> None:
    cap = subset_cap()
    if cost > cap:
        raise ResourceLimitError(
            f"{what} needs ~{cost} scan steps, over the cap {cap}; "
            "raise MATROID_FORGE_MAX_SUBSETS to force it"
        )


def _family_context(n: int):
    fam = build_crossed_prism(n)
    bg = BiasedGraph(fam.graph)
    return fam, LiftOracle(bg), FrameOracle(bg)


def _canonical_site(fam: CrossedPrism) -> CoveringPair:
    """The two-rings site (empty crossing selection)."""
    return covering_pair(fam, CrossingSelection(fam.n, ()))


def check_site_matroid_roles(n: int = 4) -> LemmaReport:
    """Every covering-pair edge set is a circuit-hyperplane of the lift
    matroid and a free basis of the frame matroid.

    At n = 4 the rank-based checks are cross-checked against exhaustive
    circuit/hyperplane/basis enumeration and a full proper-subset closure
    scan; larger rings use the rank-based closure checks only.
    """
    start = time.perf_counter()
    fam, lift, frame = _family_context(n)
    exhaustive = (1 << fam.graph.m) * fam.graph.m <= subset_cap()
    witnesses: list[str] = []
    sites = 0
    lift_facts = MatroidFacts(lift) if exhaustive else None
    frame_facts = MatroidFacts(frame) if exhaustive else None
    for pair in iter_covering_pairs(fam):
        sites += 1
        z = pair.z
        report = validate_covering_pair(fam, pair)
        if not report.passed:
            witnesses.append(f"site {hex(z)}: invalid covering pair")
            continue
        failure = circuit_hyperplane_failure(lift, z)
        if failure is not None:
            witnesses.append(f"site {hex(z)} in lift matroid: {failure}")
        failure = free_basis_failure(frame, z)
        if failure is not None:
            witnesses.append(f"site {hex(z)} in frame matroid: {failure}")
        if exhaustive:
            if z not in lift_facts.circuits or z not in lift_facts.hyperplanes:
                witnesses.append(
                    f"site {hex(z)}: missing from enumerated lift circuit-hyperplanes"
                )
            if z not in frame_facts.bases:
                witnesses.append(f"site {hex(z)}: missing from enumerated frame bases")
            for sub in submasks(z):
                if sub != z and closure(frame, sub) != sub:
                    witnesses.append(
                        f"site {hex(z)}: proper subset {hex(sub)} not closed"
                    )
                    break
    return LemmaReport(
        "easy1",
        n,
        passed=not witnesses,
        details={"sites_checked": sites, "exhaustive_cross_check": exhaustive},
        witnesses=witnesses,
        elapsed_s=time.perf_counter() - start,
    )


def check_surgery_framework(n: int = 4) -> LemmaReport:
    """The graph stays a framework for all four matroid variants.

    Checks the base lift/frame matroids once and the relaxed/tightened
    oracles at every covering-pair site.
    """
    start = time.perf_counter()
    fam, lift, frame = _family_context(n)
    witnesses: list[str] = []
    queries = 0
    for name, oracle in (("lift", lift), ("frame", frame)):
        report = is_framework(fam.graph, oracle)
        queries += report.rank_queries
        if not report.passed:
            witnesses.append(f"{name} matroid: framework check failed")
    sites = 0
    for pair in iter_covering_pairs(fam):
        sites += 1
        z = pair.z
        for name, oracle in (
            ("relaxed lift", relax(lift, z, check=False)),
            ("tightened frame", tighten(frame, z, check=False)),
        ):
            report = is_framework(fam.graph, oracle)
            queries += report.rank_queries
            if not report.passed:
                witnesses.append(f"{name} at site {hex(z)}: framework check failed")
    return LemmaReport(
        "easy2",
        n,
        passed=not witnesses,
        details={"sites_checked": sites, "rank_queries": queries},
        witnesses=witnesses,
        elapsed_s=time.perf_counter() - start,
    )


def _adjacent_in_graph(fam: CrossedPrism, e: int, f: int) -> bool:
    ea, eb = fam.graph.ends[e]
    fa, fb = fam.graph.ends[f]
    return len({ea, eb, fa, fb}) < 4


def _window_circuits(oracle: RankOracle, z: int, g: int, h: int) -> list[int]:
    """Circuits C with {g,h} inside C inside z + {g,h}, by brute force."""
    extra = 1 << g | 1 << h
    out = []
    for sub in submasks(z):
        cand = sub | extra
        size = cand.bit_count()
        if oracle.rank(cand) >= size:
            continue
        if all(oracle.rank(cand ^ 1 << e) == size - 1 for e in iter_bits(cand)):
            out.append(cand)
    return sorted(out)


def _pairable_halves(sizes: list[int], total_half: int) -> bool:
    """Can the four part sizes be split into two groups summing to half each?"""
    if len(sizes) != 4:
        return False
    for i in range(1, 4):
        if sizes[0] + sizes[i] == total_half:
            rest = [sizes[j] for j in range(1, 4) if j != i]
            if sum(rest) == total_half:
                return True
    return False


def _structure_scan(n: int, fam: CrossedPrism, z: int):
    """Per-pair circuit windows inside z + {g,h} for both surgered matroids."""
    _, lift, frame = _family_context(n)
    relaxed = relax(lift, z)
    tightened = tighten(frame, z)
    outside = [e for e in range(fam.graph.m) if not z >> e & 1]
    results = []
    for g, h in combinations(outside, 2):
        in_relaxed = _window_circuits(relaxed, z, g, h)
        in_tightened = _window_circuits(tightened, z, g, h)
        complements = [z & ~c for c in in_relaxed]
        results.append(
            {
                "g": g,
                "h": h,
                "adjacent": _adjacent_in_graph(fam, g, h),
                "circuits": in_relaxed,
                "same_in_both": in_relaxed == in_tightened,
                "part_sizes": sorted(c.bit_count() for c in complements),
                "partition_ok": (
                    sum(complements) == z
                    and all(
                        not (complements[i] & complements[j])
                        for i in range(len(complements))
                        for j in range(i + 1, len(complements))
                    )
                ),
            }
        )
    return results


def check_window_circuits(n: int = 4) -> LemmaReport:
    """Circuit structure between a site and any two outside edges.

    With z the two-rings site: an adjacent outside pair {g,h} lies in exactly
    3 circuits within z + {g,h}, whose complements partition z with sizes
    {2, n-2, n}; a non-adjacent pair lies in exactly 4, whose complements
    partition z and pair up into two halves of size n.  Both surgered
    matroids must agree, and no further circuits exist in the window.
    """
    start = time.perf_counter()
    fam, _, _ = _family_context(n)
    z = _canonical_site(fam).z
    outside_count = fam.graph.m - z.bit_count()
    pairs = outside_count * (outside_count - 1) // 2
    _guard(pairs * (1 << z.bit_count()) * (z.bit_count() + 2), "window circuit scan")
    witnesses: list[str] = []
    adjacent_pattern = 0
    observed_sizes: dict[str, set[tuple[int, ...]]] = {"adjacent": set(), "non-adjacent": set()}
    for row in _structure_scan(n, fam, z):
        g_name = fam.graph.edge_names[row["g"]]
        h_name = fam.graph.edge_names[row["h"]]
        label = f"pair ({g_name}, {h_name})"
        if not row["same_in_both"]:
            witnesses.append(f"{label}: surgered matroids disagree on window circuits")
            continue
        if not row["partition_ok"]:
            witnesses.append(f"{label}: circuit complements do not partition the site")
            continue
        sizes = row["part_sizes"]
        if row["adjacent"]:
            observed_sizes["adjacent"].add(tuple(sizes))
            if len(row["circuits"]) != 3:
                witnesses.append(f"{label}: adjacent pair has {len(row['circuits'])} circuits")
            elif sizes != sorted([2, n - 2, n]):
                witnesses.append(f"{label}: adjacent part sizes {sizes}")
            else:
                adjacent_pattern += 1
        else:
            observed_sizes["non-adjacent"].add(tuple(sizes))
            if len(row["circuits"]) != 4:
                witnesses.append(
                    f"{label}: non-adjacent pair has {len(row['circuits'])} circuits"
                )
            elif not _pairable_halves(sizes, n):
                witnesses.append(f"{label}: part sizes {sizes} admit no half split")
    return LemmaReport(
        "structure",
        n,
        passed=not witnesses,
        details={
            "pairs_checked": pairs,
            "adjacent_pattern_pairs": adjacent_pattern,
            "observed_part_sizes": {
                key: sorted(value) for key, value in observed_sizes.items()
            },
        },
        witnesses=witnesses,
        elapsed_s=time.perf_counter() - start,
    )


def check_adjacent_pair_count(n: int = 4) -> LemmaReport:
    """Exactly 2n outside pairs show the adjacent 3-circuit pattern.

    The edges outside the two-rings site form a 2-regular graph on 2n
    vertices, so graph adjacency alone predicts the same count.
    """
    start = time.perf_counter()
    fam, _, _ = _family_context(n)
    z = _canonical_site(fam).z
    structure = check_window_circuits(n)
    witnesses = list(structure.witnesses)
    pattern_count = structure.details["adjacent_pattern_pairs"]
    outside = [e for e in range(fam.graph.m) if not z >> e & 1]
    graph_adjacent = sum(
        1 for g, h in combinations(outside, 2) if _adjacent_in_graph(fam, g, h)
    )
    degrees = fam.graph.degrees(sum(1 << e for e in outside))
    if sorted(degrees.values()) != [2] * (2 * n):
        witnesses.append("outside edges do not form a 2-regular graph")
    if pattern_count != 2 * n:
        witnesses.append(f"adjacent-pattern pairs: {pattern_count}, expected {2 * n}")
    if graph_adjacent != pattern_count:
        witnesses.append(
            f"graph adjacency count {graph_adjacent} != pattern count {pattern_count}"
        )
    return LemmaReport(
        "gh-2",
        n,
        passed=not witnesses,
        details={"adjacent_pattern_pairs": pattern_count, "expected": 2 * n},
        witnesses=witnesses,
        elapsed_s=time.perf_counter() - start,
    )


def check_cocircuit_sizes(n: int = 4) -> LemmaReport:
    """Every cocircuit of both surgered matroids has at least four elements,
    at every covering-pair site."""
    start = time.perf_counter()
    fam, lift, frame = _family_context(n)
    m = fam.graph.m
    sites = 1 << (n - 1)
    _guard(2 * sites * (1 << m) * m, "cocircuit enumeration over all sites")
    witnesses: list[str] = []
    min_size = m
    cocircuit_counts = []
    for pair in iter_covering_pairs(fam):
        z = pair.z
        for name, oracle in (
            ("relaxed lift", relax(lift, z, check=False)),
            ("tightened frame", tighten(frame, z, check=False)),
        ):
            cocircuits = MatroidFacts(oracle).cocircuits
            cocircuit_counts.append(len(cocircuits))
            smallest = min(c.bit_count() for c in cocircuits)
            min_size = min(min_size, smallest)
            if smallest < 4:
                witnesses.append(
                    f"{name} at site {hex(z)}: cocircuit of size {smallest}"
                )
    return LemmaReport(
        "cocircuit-size",
        n,
        passed=not witnesses,
        details={
            "sites_checked": sites,
            "min_cocircuit_size": min_size,
            "cocircuit_counts": sorted(set(cocircuit_counts)),
        },
        witnesses=witnesses,
        elapsed_s=time.perf_counter() - start,
    )


def check_rank_preservation(n: int = 4) -> LemmaReport:
    """Surgery moves the rank of the site by one and nothing else.

    For every covering-pair site, every subset is compared between the base
    oracle and the surgered oracle: relaxation is +1 at the site, tightening
    -1, with equality everywhere else.
    """
    start = time.perf_counter()
    fam, lift, frame = _family_context(n)
    m = fam.graph.m
    sites = 1 << (n - 1)
    _guard(2 * sites * (1 << m), "exhaustive rank-preservation scan")
    lift_table = full_rank_table(lift)
    frame_table = full_rank_table(frame)
    witnesses: list[str] = []
    subsets = 1 << m
    for pair in iter_covering_pairs(fam):
        z = pair.z
        relaxed = relax(lift, z)
        tightened = tighten(frame, z)
        for mask in range(subsets):
            expected = lift_table[mask] + (1 if mask == z else 0)
            if relaxed.rank(mask) != expected:
                witnesses.append(f"relaxed at {hex(z)}: deviation at {hex(mask)}")
                break
        for mask in range(subsets):
            expected = frame_table[mask] - (1 if mask == z else 0)
            if tightened.rank(mask) != expected:
                witnesses.append(f"tightened at {hex(z)}: deviation at {hex(mask)}")
                break
    return LemmaReport(
        "rank-preservation",
        n,
        passed=not witnesses,
        details={"sites_checked": sites, "subsets_per_site": subsets},
        witnesses=witnesses,
        elapsed_s=time.perf_counter() - start,
    )


def check_surgery_axioms(n: int = 4) -> LemmaReport:
    """Exhaustive rank-axiom certification of the four matroid variants.

    The surgered oracles are taken at the two-rings site.
    """
    start = time.perf_counter()
    fam, lift, frame = _family_context(n)
    z = _canonical_site(fam).z
    oracles = {
        "lift": lift,
        "frame": frame,
        "lift-relaxed": relax(lift, z),
        "frame-tightened": tighten(frame, z),
    }
    witnesses: list[str] = []
    quadruples = {}
    for name, oracle in oracles.items():
        report = check_rank_axioms(oracle, "exhaustive")
        quadruples[name] = report.quadruples
        if not report.passed:
            witnesses.append(f"{name}: {report.violation_count} axiom violations")
    return LemmaReport(
        "axioms",
        n,
        passed=not witnesses,
        details={"quadruples": quadruples},
        witnesses=witnesses,
        elapsed_s=time.perf_counter() - start,
    )


def check_surgery_inverse(n: int = 4) -> LemmaReport:
    """Relax-then-tighten and tighten-then-relax reproduce the base ranks."""
    start = time.perf_counter()
    fam, lift, frame = _family_context(n)
    z = _canonical_site(fam).z
    _guard(4 * (1 << fam.graph.m), "exhaustive inverse comparison")
    witnesses = []
    if not verify_surgery_inverse(lift, z):
        witnesses.append("lift matroid: round trip altered some rank")
    if not verify_surgery_inverse(frame, z):
        witnesses.append("frame matroid: round trip altered some rank")
    return LemmaReport(
        "inverse",
        n,
        passed=not witnesses,
        details={"site": hex(z)},
        witnesses=witnesses,
        elapsed_s=time.perf_counter() - start,
    )


LEMMA_CHECKS = {
    "easy1": check_site_matroid_roles,
    "easy2": check_surgery_framework,
    "structure": check_window_circuits,
    "gh-2": check_adjacent_pair_count,
    "cocircuit-size": check_cocircuit_sizes,
    "rank-preservation": check_rank_preservation,
    "axioms": check_surgery_axioms,
    "inverse": check_surgery_inverse,
}
