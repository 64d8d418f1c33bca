"""Finite multigraphs with dense integer edge ids.

Loops and parallel edges are first-class: a loop is a cycle of length 1 and a
pair of parallel edges a cycle of length 2.  Edge subsets are int bitmasks
(see :mod:`matroid_forge.bitset`); every operation here is a pure function of
an immutable graph, so values can be shared freely between concurrent scans.

Edge ids are 0..m-1 in construction order.  All enumerations are ordered
deterministically (least edge id first) so that fixtures and serialized
output are stable across runs.
"""

from __future__ import annotations

import json
from typing import Hashable, Iterable, Sequence

from matroid_forge.bitset import bit, iter_bits, to_ids
from matroid_forge.errors import InputError, ResourceLimitError

#: Default ceiling on |A| for exhaustive cycle enumeration.
DEFAULT_CYCLE_EDGE_BOUND = 24

#: Ceiling on the cycle-space dimension for the expansion scan (2**q combos).
_MAX_CYCLE_SPACE_DIM = 22


class Multigraph:
    """An immutable labeled multigraph.

    Vertices are arbitrary hashable labels kept in construction order; edges
    are (label, label) pairs with optional string names.  Both endpoints equal
    means a loop.
    """

    __slots__ = (
        "vertex_labels",
        "edge_names",
        "ends",
        "_vertex_index",
        "_name_index",
        "incidence",
        "loops_at",
    )

    def __init__(
        self,
        vertices: Sequence[Hashable],
        edges: Sequence[tuple[Hashable, Hashable]],
        edge_names: Sequence[str] | None = None,
    ):
        labels = tuple(vertices)
        if len(set(labels)) != len(labels):
            raise InputError("duplicate vertex labels")
        self.vertex_labels = labels
        self._vertex_index = {v: i for i, v in enumerate(labels)}
        if edge_names is None:
            names = tuple(str(i) for i in range(len(edges)))
        else:
            names = tuple(edge_names)
            if len(names) != len(edges):
                raise InputError("edge_names length differs from edge count")
            if len(set(names)) != len(names):
                raise InputError("duplicate edge names")
        self.edge_names = names
        self._name_index = {name: i for i, name in enumerate(names)}
        ends = []
        for a, b in edges:
            if a not in self._vertex_index or b not in self._vertex_index:
                raise InputError(f"edge ({a!r}, {b!r}) references unknown vertex")
            ends.append((self._vertex_index[a], self._vertex_index[b]))
        self.ends = tuple(ends)
        incidence = [0] * len(labels)
        loops = [0] * len(labels)
        for e, (a, b) in enumerate(self.ends):
            incidence[a] |= bit(e)
            incidence[b] |= bit(e)
            if a == b:
                loops[a] |= bit(e)
        self.incidence = tuple(incidence)
        self.loops_at = tuple(loops)

    @property
    def m(self) -> int:
        return len(self.ends)

    @property
    def n_vertices(self) -> int:
        return len(self.vertex_labels)

    @property
    def full_mask(self) -> int:
        return (1 << self.m) - 1

    def check_mask(self, mask: int) -> int:
        if mask < 0 or mask > self.full_mask:
            raise InputError(f"edge mask {hex(mask)} outside ground set of {self.m} edges")
        return mask

    def edge_id(self, name: str) -> int:
        try:
            return self._name_index[name]
        except KeyError:
            raise InputError(f"unknown edge name {name!r}") from None

    def vertex_index(self, label: Hashable) -> int:
        try:
            return self._vertex_index[label]
        except KeyError:
            raise InputError(f"unknown vertex {label!r}") from None

    def mask_of(self, edges: Iterable[str | int]) -> int:
        """Bitmask from an iterable of edge names and/or edge ids."""
        mask = 0
        for item in edges:
            if isinstance(item, str):
                mask |= bit(self.edge_id(item))
            else:
                if not 0 <= item < self.m:
                    raise InputError(f"edge id {item} out of range")
                mask |= bit(item)
        return mask

    def names_of(self, mask: int) -> list[str]:
        """Edge names of a mask, in ascending edge-id order."""
        self.check_mask(mask)
        return [self.edge_names[i] for i in iter_bits(mask)]

    def touched_vertices(self, mask: int) -> list[int]:
        """Vertex indices incident with at least one edge of the mask."""
        self.check_mask(mask)
        seen = set()
        for e in iter_bits(mask):
            a, b = self.ends[e]
            seen.add(a)
            seen.add(b)
        return sorted(seen)

    def degrees(self, mask: int) -> dict[int, int]:
        """Degree of every touched vertex in G[mask]; loops count twice."""
        deg: dict[int, int] = {}
        for e in iter_bits(mask):
            a, b = self.ends[e]
            deg[a] = deg.get(a, 0) + 1
            deg[b] = deg.get(b, 0) + 1
        return deg

    def __repr__(self) -> str:
        return f"Multigraph({self.n_vertices} vertices, {self.m} edges)"


def induced_subgraph(g: Multigraph, mask: int) -> Multigraph:
    """The subgraph with edge set `mask` and exactly the incident vertices."""
    g.check_mask(mask)
    touched = g.touched_vertices(mask)
    labels = [g.vertex_labels[i] for i in touched]
    edges = []
    names = []
    for e in iter_bits(mask):
        a, b = g.ends[e]
        edges.append((g.vertex_labels[a], g.vertex_labels[b]))
        names.append(g.edge_names[e])
    return Multigraph(labels, edges, names)


def components(g: Multigraph, mask: int) -> list[int]:
    """Connected components of G[mask] as edge masks, least edge id first."""
    g.check_mask(mask)
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for e in iter_bits(mask):
        a, b = g.ends[e]
        parent.setdefault(a, a)
        parent.setdefault(b, b)
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra
    groups: dict[int, int] = {}
    order: list[int] = []
    for e in iter_bits(mask):
        root = find(g.ends[e][0])
        if root not in groups:
            groups[root] = 0
            order.append(root)
        groups[root] |= bit(e)
    return [groups[root] for root in order]


def is_cycle(g: Multigraph, mask: int) -> bool:
    """True iff G[mask] is connected and 2-regular (and nonempty)."""
    if not mask:
        return False
    deg: dict[int, int] = {}
    for e in iter_bits(mask):
        a, b = g.ends[e]
        deg[a] = deg.get(a, 0) + 1
        deg[b] = deg.get(b, 0) + 1
    if any(d != 2 for d in deg.values()):
        return False
    return len(components(g, mask)) == 1


def cycles_within(
    g: Multigraph, mask: int, *, bound: int | None = None
) -> list[int]:
    """Every cycle of G[mask], each as a canonical edge mask, ascending.

    Enumerates the cycle space of G[mask] by expanding fundamental cycles of a
    spanning forest: each cycle is the XOR of the fundamental cycles of its
    chords, so every cycle is produced exactly once.  The scan is exponential
    in the number of chords, hence the explicit bound on |mask|.
    """
    g.check_mask(mask)
    if bound is None:
        bound = DEFAULT_CYCLE_EDGE_BOUND
    n_edges = mask.bit_count()
    if n_edges > bound:
        raise ResourceLimitError(
            f"cycle enumeration over {n_edges} edges exceeds the bound {bound}"
        )

    parent: dict[int, int] = {}

    def find(x: int) -> int:
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    adjacency: dict[int, list[tuple[int, int]]] = {}
    chords: list[int] = []
    for e in iter_bits(mask):
        a, b = g.ends[e]
        parent.setdefault(a, a)
        parent.setdefault(b, b)
        if a != b and find(a) != find(b):
            parent[find(b)] = find(a)
            adjacency.setdefault(a, []).append((b, e))
            adjacency.setdefault(b, []).append((a, e))
        else:
            chords.append(e)
    if not chords:
        return []
    if len(chords) > _MAX_CYCLE_SPACE_DIM:
        raise ResourceLimitError(
            f"cycle space dimension {len(chords)} exceeds the expansion limit "
            f"{_MAX_CYCLE_SPACE_DIM}"
        )

    def forest_path(src: int, dst: int) -> int:
        if src == dst:
            return 0
        prev: dict[int, tuple[int, int]] = {src: (-1, -1)}
        queue = [src]
        while queue:
            nxt = []
            for v in queue:
                for w, e in adjacency.get(v, ()):
                    if w not in prev:
                        prev[w] = (v, e)
                        if w == dst:
                            path = 0
                            while w != src:
                                v2, e2 = prev[w]
                                path |= bit(e2)
                                w = v2
                            return path
                        nxt.append(w)
            queue = nxt
        raise AssertionError("forest path lookup failed")

    fundamental = []
    for e in chords:
        a, b = g.ends[e]
        fundamental.append(forest_path(a, b) | bit(e))

    out = []
    acc = 0
    for k in range(1, 1 << len(chords)):
        acc ^= fundamental[(k & -k).bit_length() - 1]
        if is_cycle(g, acc):
            out.append(acc)
    out.sort()
    return out


def find_chords(g: Multigraph, cycle_mask: int) -> list[int]:
    """Edge ids outside the cycle whose endpoints both lie on the cycle."""
    if not is_cycle(g, cycle_mask):
        raise InputError("chord scan requires a cycle edge set")
    on_cycle = set(g.touched_vertices(cycle_mask))
    chords = []
    for e in range(g.m):
        if cycle_mask >> e & 1:
            continue
        a, b = g.ends[e]
        if a in on_cycle and b in on_cycle:
            chords.append(e)
    return chords


def is_chordless(g: Multigraph, cycle_mask: int) -> bool:
    return not find_chords(g, cycle_mask)


def is_theta(g: Multigraph, mask: int) -> bool:
    """True iff G[mask] is two vertices joined by three internally disjoint paths.

    Works by walking the three edge-threads out of one degree-3 vertex through
    the degree-2 interior; all three must terminate at the other degree-3
    vertex and jointly use every edge.
    """
    g.check_mask(mask)
    if not mask:
        return False
    deg: dict[int, int] = {}
    inc: dict[int, list[int]] = {}
    for e in iter_bits(mask):
        a, b = g.ends[e]
        if a == b:
            return False  # paths never traverse loops
        deg[a] = deg.get(a, 0) + 1
        deg[b] = deg.get(b, 0) + 1
        inc.setdefault(a, []).append(e)
        inc.setdefault(b, []).append(e)
    branch = sorted(v for v, d in deg.items() if d == 3)
    if len(branch) != 2:
        return False
    if any(d not in (2, 3) for d in deg.values()):
        return False
    if len(components(g, mask)) != 1:
        return False
    start, goal = branch
    used: set[int] = set()
    for first in inc[start]:
        if first in used:
            return False
        here, edge = start, first
        while True:
            used.add(edge)
            a, b = g.ends[edge]
            here = b if here == a else a
            if here in (start, goal):
                break
            nxt = [e for e in inc[here] if e != edge]
            if len(nxt) != 1:
                return False
            edge = nxt[0]
        if here != goal:
            return False  # thread returned to its start: a petal, not a path
    return len(used) == mask.bit_count()


def graph_to_json(g: Multigraph) -> dict:
    return {
        "vertices": [str(v) for v in g.vertex_labels],
        "edges": [
            {
                "id": e,
                "name": g.edge_names[e],
                "ends": [str(g.vertex_labels[a]), str(g.vertex_labels[b])],
            }
            for e, (a, b) in enumerate(g.ends)
        ],
    }


def graph_from_json(doc: dict) -> Multigraph:
    """Parse the graph JSON form; the edge order in the file fixes edge ids."""
    try:
        vertices = list(doc["vertices"])
        raw_edges = list(doc["edges"])
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed graph document: {exc}") from None
    edges = []
    names = []
    for pos, entry in enumerate(raw_edges):
        try:
            ends = entry["ends"]
            name = entry.get("name", str(pos))
        except (TypeError, KeyError):
            raise InputError(f"malformed edge entry at position {pos}") from None
        if len(ends) != 2:
            raise InputError(f"edge {name!r} must have exactly two endpoints")
        if "id" in entry and entry["id"] != pos:
            raise InputError(
                f"edge {name!r} declares id {entry['id']} but sits at position {pos}"
            )
        edges.append((ends[0], ends[1]))
        names.append(name)
    return Multigraph(vertices, edges, names)


def load_graph(path) -> Multigraph:
    with open(path, "r", encoding="utf-8") as handle:
        return graph_from_json(json.load(handle))


def save_graph(g: Multigraph, path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(graph_to_json(g), handle, indent=2)
        handle.write("\n")
