"""Biased graphs: a multigraph plus a distinguished set of balanced cycles.

The distinguished family must respect the theta condition: no theta subgraph
may contain exactly two balanced cycles.  The family is stored extensionally
(explicit cycle masks), which keeps arbitrary bias usable at brute-force
scale; the empty family needs no validation and scales to any graph.
"""

from __future__ import annotations

import json
from typing import Iterable

from matroid_forge.errors import InputError
from matroid_forge.graph import (
    Multigraph,
    components,
    cycles_within,
    graph_from_json,
    graph_to_json,
    is_cycle,
    is_theta,
)


def theta_violation(
    g: Multigraph, balanced: frozenset[int], *, bound: int | None = None
) -> tuple[int, int] | None:
    """First (theta mask, balanced count) with count exactly 2, else None.

    Theta subgraphs are generated as unions of two distinct cycles sharing at
    least one edge and confirmed by the degree-profile test; the third cycle
    of a theta is always the symmetric difference of the other two.
    """
    cycles = cycles_within(g, g.full_mask, bound=bound)
    cycle_set = set(cycles)
    seen: set[int] = set()
    for i, c1 in enumerate(cycles):
        for c2 in cycles[i + 1 :]:
            if not c1 & c2:
                continue
            theta = c1 | c2
            if theta in seen:
                continue
            if not is_theta(g, theta):
                continue
            seen.add(theta)
            third = c1 ^ c2
            assert third in cycle_set
            count = sum(1 for c in (c1, c2, third) if c in balanced)
            if count == 2:
                return theta, count
    return None


def check_theta_property(
    g: Multigraph, balanced: Iterable[int], *, bound: int | None = None
) -> bool:
    """True iff no theta subgraph of g has exactly two balanced cycles."""
    bal = frozenset(balanced)
    for c in bal:
        if not is_cycle(g, c):
            raise InputError(f"balanced member {hex(c)} is not a cycle of the graph")
    if not bal:
        return True
    return theta_violation(g, bal, bound=bound) is None


class BiasedGraph:
    """Immutable (graph, balanced cycles) pair, validated on construction."""

    __slots__ = ("graph", "balanced")

    def __init__(
        self,
        graph: Multigraph,
        balanced: Iterable[int] = (),
        *,
        cycle_bound: int | None = None,
    ):
        bal = frozenset(balanced)
        if bal:
            for c in bal:
                if not is_cycle(graph, c):
                    raise InputError(
                        f"balanced member {hex(c)} is not a cycle of the graph"
                    )
            violation = theta_violation(graph, bal, bound=cycle_bound)
            if violation is not None:
                theta, _ = violation
                raise InputError(
                    "theta condition violated: subgraph "
                    f"{hex(theta)} contains exactly two balanced cycles"
                )
        self.graph = graph
        self.balanced = bal

    def __repr__(self) -> str:
        return f"BiasedGraph({self.graph!r}, {len(self.balanced)} balanced cycles)"


def component_is_balanced(bg: BiasedGraph, comp_mask: int) -> bool:
    """Every cycle of the (connected) edge set lies in the balanced family.

    With no balanced cycles at all this reduces to an acyclicity test, which
    needs no cycle enumeration: a connected edge set is a tree iff it has one
    edge fewer than vertices.
    """
    g = bg.graph
    if not comp_mask:
        return True
    if not bg.balanced:
        return comp_mask.bit_count() == len(g.touched_vertices(comp_mask)) - 1
    return all(c in bg.balanced for c in cycles_within(g, comp_mask))


def is_balanced_component(bg: BiasedGraph, mask: int) -> bool:
    """Balance test for a single connected component edge set."""
    bg.graph.check_mask(mask)
    if mask and components(bg.graph, mask) != [mask]:
        raise InputError("balance test requires a connected edge set")
    return component_is_balanced(bg, mask)


def biased_graph_to_json(bg: BiasedGraph) -> dict:
    doc = graph_to_json(bg.graph)
    doc["balanced"] = sorted(
        sorted(i for i in range(bg.graph.m) if c >> i & 1) for c in bg.balanced
    )
    return doc


def biased_graph_from_json(doc: dict) -> BiasedGraph:
    g = graph_from_json(doc)
    balanced = []
    for ids in doc.get("balanced", []):
        mask = 0
        for i in ids:
            if not 0 <= i < g.m:
                raise InputError(f"balanced cycle references bad edge id {i}")
            mask |= 1 << i
        balanced.append(mask)
    return BiasedGraph(g, balanced)


def load_biased_graph(path, bias_path=None) -> BiasedGraph:
    """Graph JSON plus optional separate bias file carrying `balanced`."""
    with open(path, "r", encoding="utf-8") as handle:
        doc = json.load(handle)
    if bias_path is not None:
        with open(bias_path, "r", encoding="utf-8") as handle:
            bias_doc = json.load(handle)
        doc = dict(doc)
        doc["balanced"] = bias_doc.get("balanced", [])
    return biased_graph_from_json(doc)
