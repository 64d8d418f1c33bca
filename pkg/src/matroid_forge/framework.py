"""Deciding whether a graph is a framework for a rank oracle.

Three conditions, checked with rank queries only so the test is valid for
arbitrary oracles:

1. the edge ground sets coincide;
2. each graph component H satisfies rank(E(H)) <= |V(H)|;
3. for each vertex v, no edge at v other than a loop at v lies in the
   closure of the edges avoiding v.

Witnesses are recorded on failure: the offending component for condition 2,
the (vertex, edge) pair for condition 3.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from matroid_forge.bitset import bit, iter_bits
from matroid_forge.graph import Multigraph
from matroid_forge.matroid import RankOracle


@dataclass
class FrameworkReport:
    ground_sets_match: bool
    component_violations: list[dict] = field(default_factory=list)
    closure_violations: list[dict] = field(default_factory=list)
    rank_queries: int = 0

    @property
    def passed(self) -> bool:
        return (
            self.ground_sets_match
            and not self.component_violations
            and not self.closure_violations
        )

    def to_json(self) -> dict:
        return {
            "ground_sets_match": self.ground_sets_match,
            "component_violations": self.component_violations,
            "closure_violations": self.closure_violations,
            "rank_queries": self.rank_queries,
            "passed": self.passed,
        }


def _vertex_components(g: Multigraph) -> list[tuple[list[int], int]]:
    """(vertex indices, edge mask) per component, isolated vertices included."""
    parent = list(range(g.n_vertices))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in g.ends:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra
    groups: dict[int, list[int]] = {}
    for v in range(g.n_vertices):
        groups.setdefault(find(v), []).append(v)
    out = []
    for root in sorted(groups, key=lambda r: min(groups[r])):
        vertices = groups[root]
        edge_mask = 0
        for v in vertices:
            edge_mask |= g.incidence[v]
        out.append((vertices, edge_mask))
    return out


def is_framework(g: Multigraph, oracle: RankOracle) -> FrameworkReport:
    """Check the three framework conditions of g for the oracle's matroid."""
    report = FrameworkReport(ground_sets_match=(g.m == oracle.m))
    if not report.ground_sets_match:
        return report
    for vertices, edge_mask in _vertex_components(g):
        rank = oracle.rank(edge_mask)
        report.rank_queries += 1
        if rank > len(vertices):
            report.component_violations.append(
                {
                    "component_vertices": [str(g.vertex_labels[v]) for v in vertices],
                    "rank": rank,
                    "vertex_count": len(vertices),
                }
            )
    full = g.full_mask
    for v in range(g.n_vertices):
        avoiding = full & ~g.incidence[v]
        base_rank = oracle.rank(avoiding)
        report.rank_queries += 1
        candidates = g.incidence[v] & ~g.loops_at[v]
        for e in iter_bits(candidates):
            report.rank_queries += 1
            if oracle.rank(avoiding | bit(e)) == base_rank:
                report.closure_violations.append(
                    {
                        "vertex": str(g.vertex_labels[v]),
                        "edge": g.edge_names[e],
                        "edge_id": e,
                    }
                )
    return report
