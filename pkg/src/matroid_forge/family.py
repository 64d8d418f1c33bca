"""The crossed-prism graph family and its covering pairs of disjoint cycles.

For even n >= 4 the graph has vertices u_1..u_n, v_1..v_n and four kinds of
edges: the outer ring u_1u_2...u_nu_1, the inner ring v_1v_2...v_nv_1, rungs
e_i = u_iv_i and diagonals f_{i,i+2} = v_iu_{i+2} (indices wrap modulo n into
1..n).  Every vertex has degree 4; |V| = 2n, |E| = 4n.

Rung e_{i+1} and diagonal f_{i,i+2} cross each other; that edge pair is the
crossing at index i.  Each even-sized set of crossing indices selects a
unique pair of vertex-disjoint chordless n-cycles that together cover every
vertex, giving 2^(n-1) covering pairs in total.  The construction walks the
selected crossings in ascending order, alternating which cycle absorbs each
crossing and splicing ring arcs in between; validation is a separate post-hoc
check rather than trusted arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from matroid_forge.bitset import iter_bits, lowest_id
from matroid_forge.errors import InputError
from matroid_forge.graph import Multigraph, find_chords, is_cycle

#: Largest supported ring size: 4n edge bits must fit one 64-bit word.
MAX_RING = 16


@dataclass(frozen=True)
class CrossingSelection:
    """An even-sized set of crossing indices, each in 1..n."""

    n: int
    indices: tuple[int, ...]

    def __post_init__(self):
        idx = tuple(sorted(self.indices))
        if len(set(idx)) != len(idx):
            raise InputError("crossing indices must be distinct")
        if any(not 1 <= i <= self.n for i in idx):
            raise InputError(f"crossing indices must lie in 1..{self.n}")
        if len(idx) % 2 != 0:
            raise InputError("a covering-pair selection needs an even number of crossings")
        object.__setattr__(self, "indices", idx)


class CrossedPrism:
    """The order-n crossed prism with its canonical edge numbering.

    Edge ids: outer ring 0..n-1, inner ring n..2n-1, rungs 2n..3n-1,
    diagonals 3n..4n-1, each block ascending in the ring index.
    """

    def __init__(self, n: int):
        if n % 2 != 0 or n < 4:
            raise InputError(f"ring size must be an even integer >= 4, got {n}")
        if n > MAX_RING:
            raise InputError(f"ring size {n} exceeds the supported maximum {MAX_RING}")
        self.n = n
        labels = [f"u{i}" for i in range(1, n + 1)] + [f"v{i}" for i in range(1, n + 1)]
        edges = []
        names = []
        for i in range(1, n + 1):
            j = self.wrap(i + 1)
            edges.append((f"u{i}", f"u{j}"))
            names.append(f"u{i}u{j}")
        for i in range(1, n + 1):
            j = self.wrap(i + 1)
            edges.append((f"v{i}", f"v{j}"))
            names.append(f"v{i}v{j}")
        for i in range(1, n + 1):
            edges.append((f"u{i}", f"v{i}"))
            names.append(f"e{i}")
        for i in range(1, n + 1):
            j = self.wrap(i + 2)
            edges.append((f"v{i}", f"u{j}"))
            names.append(f"f_{i}_{j}")
        self.graph = Multigraph(labels, edges, names)

    def wrap(self, i: int) -> int:
        """Map any integer ring index to its representative in 1..n."""
        return (i - 1) % self.n + 1

    def u_edge_id(self, i: int) -> int:
        """Edge u_i -- u_{i+1}."""
        return self.wrap(i) - 1

    def v_edge_id(self, i: int) -> int:
        """Edge v_i -- v_{i+1}."""
        return self.n + self.wrap(i) - 1

    def rung_id(self, i: int) -> int:
        """Edge e_i = u_i -- v_i."""
        return 2 * self.n + self.wrap(i) - 1

    def diag_id(self, i: int) -> int:
        """Edge f_{i,i+2} = v_i -- u_{i+2}."""
        return 3 * self.n + self.wrap(i) - 1

    @property
    def u_ring(self) -> int:
        return (1 << self.n) - 1

    @property
    def v_ring(self) -> int:
        return ((1 << self.n) - 1) << self.n

    @property
    def odd_weave(self) -> int:
        """The cycle u_1 v_1 u_3 v_3 ... u_{n-1} v_{n-1} u_1."""
        mask = 0
        for i in range(1, self.n + 1, 2):
            mask |= 1 << self.rung_id(i)
            mask |= 1 << self.diag_id(i)
        return mask

    @property
    def even_weave(self) -> int:
        """The cycle u_2 v_2 u_4 v_4 ... u_n v_n u_2."""
        mask = 0
        for i in range(2, self.n + 1, 2):
            mask |= 1 << self.rung_id(i)
            mask |= 1 << self.diag_id(i)
        return mask

    @property
    def crossing_edges(self) -> int:
        """All rungs and diagonals: the union of both weave cycles."""
        return self.odd_weave | self.even_weave

    def crossing_pair_ids(self, i: int) -> tuple[int, int]:
        """Edge ids of the crossing at index i: (rung e_{i+1}, diagonal f_{i,i+2})."""
        if not 1 <= i <= self.n:
            raise InputError(f"crossing index must lie in 1..{self.n}")
        return self.rung_id(i + 1), self.diag_id(i)

    def selection_edges(self, sel: CrossingSelection) -> int:
        mask = 0
        for i in sel.indices:
            rung, diag = self.crossing_pair_ids(i)
            mask |= 1 << rung | 1 << diag
        return mask

    def _u_arc(self, a: int, b: int) -> int:
        """Outer-ring edges walking from u_a up to u_b (empty when a == b)."""
        mask = 0
        j = a
        while self.wrap(j) != self.wrap(b):
            mask |= 1 << self.u_edge_id(j)
            j += 1
        return mask

    def _v_arc(self, a: int, b: int) -> int:
        mask = 0
        j = a
        while self.wrap(j) != self.wrap(b):
            mask |= 1 << self.v_edge_id(j)
            j += 1
        return mask

    def __repr__(self) -> str:
        return f"CrossedPrism(n={self.n})"


def build_crossed_prism(n: int) -> CrossedPrism:
    return CrossedPrism(n)


@dataclass(frozen=True)
class CoveringPair:
    """Two cycles intended to be disjoint, chordless and covering.

    cycle_a always holds the lower least edge id; selection is None for
    hand-built pairs that did not come from a crossing selection.
    """

    selection: CrossingSelection | None
    cycle_a: int
    cycle_b: int

    @property
    def z(self) -> int:
        return self.cycle_a | self.cycle_b


def covering_pair(fam: CrossedPrism, sel: CrossingSelection) -> CoveringPair:
    """The unique covering pair selected by an even set of crossings.

    With no crossings selected the pair is the two rings; with all n selected
    it is the two weave cycles.
    """
    if sel.n != fam.n:
        raise InputError("selection ring size differs from the graph")
    idx = sel.indices
    if not idx:
        return CoveringPair(sel, fam.u_ring, fam.v_ring)
    first = 0
    second = 0
    count = len(idx)
    for t in range(0, count, 2):
        i, j = idx[t], idx[t + 1]
        nxt = idx[(t + 2) % count]
        # first cycle: rung at crossing i, inner arc, diagonal at crossing j
        first |= 1 << fam.rung_id(i + 1)
        first |= fam._v_arc(i + 1, j)
        first |= 1 << fam.diag_id(j)
        first |= fam._u_arc(j + 2, nxt + 1)
        # second cycle: the complementary choice at both crossings
        second |= 1 << fam.diag_id(i)
        second |= fam._u_arc(i + 2, j + 1)
        second |= 1 << fam.rung_id(j + 1)
        second |= fam._v_arc(j + 1, nxt)
    if lowest_id(first) > lowest_id(second):
        first, second = second, first
    return CoveringPair(sel, first, second)


def iter_selections(fam: CrossedPrism) -> Iterator[CrossingSelection]:
    """Even-sized crossing selections in ascending bitmask order.

    Bit j of the enumeration mask stands for crossing index j+1, so the empty
    selection comes first and the all-crossings selection last.
    """
    n = fam.n
    for mask in range(1 << n):
        if mask.bit_count() % 2 == 0:
            yield CrossingSelection(n, tuple(j + 1 for j in iter_bits(mask)))


def iter_covering_pairs(fam: CrossedPrism) -> Iterator[CoveringPair]:
    """The 2^(n-1) covering pairs, streamed in selection order."""
    for sel in iter_selections(fam):
        yield covering_pair(fam, sel)


def covering_pair_family(fam: CrossedPrism) -> list[CoveringPair]:
    return list(iter_covering_pairs(fam))


@dataclass
class CoveringPairReport:
    """Validation outcome for a covering pair, with witnesses on failure."""

    cycles_ok: bool
    disjoint: bool
    shared_vertices: tuple[str, ...]
    chordless: bool
    chords: tuple[str, ...]
    covering: bool
    uncovered_vertices: tuple[str, ...]
    lengths: tuple[int, int]
    lengths_ok: bool
    crossing_edges_ok: bool | None
    alternation_ok: bool | None

    @property
    def passed(self) -> bool:
        checks = [
            self.cycles_ok,
            self.disjoint,
            self.chordless,
            self.covering,
            self.lengths_ok,
        ]
        if self.crossing_edges_ok is not None:
            checks.append(self.crossing_edges_ok)
        if self.alternation_ok is not None:
            checks.append(self.alternation_ok)
        return all(checks)

    def to_json(self) -> dict:
        return {
            "cycles_ok": self.cycles_ok,
            "disjoint": self.disjoint,
            "shared_vertices": list(self.shared_vertices),
            "chordless": self.chordless,
            "chords": list(self.chords),
            "covering": self.covering,
            "uncovered_vertices": list(self.uncovered_vertices),
            "lengths": list(self.lengths),
            "lengths_ok": self.lengths_ok,
            "crossing_edges_ok": self.crossing_edges_ok,
            "alternation_ok": self.alternation_ok,
            "passed": self.passed,
        }


def _alternation_sets(fam: CrossedPrism, sel: CrossingSelection) -> tuple[int, int]:
    """The two alternating crossing-edge sets the cycles must split between.

    Walking the selected crossings in ascending order, one cycle takes the
    rung of the first crossing, the diagonal of the second, the rung of the
    third, and so on; the other takes the complement.
    """
    one = 0
    other = 0
    for t, i in enumerate(sel.indices):
        rung, diag = fam.crossing_pair_ids(i)
        if t % 2 == 0:
            one |= 1 << rung
            other |= 1 << diag
        else:
            one |= 1 << diag
            other |= 1 << rung
    return one, other


def validate_covering_pair(fam: CrossedPrism, pair: CoveringPair) -> CoveringPairReport:
    """Check disjointness, chordlessness, covering and both lengths = n.

    Pairs built from a selection are additionally checked against it: the
    crossing edges used must be exactly the selected ones, split in the
    alternating pattern.
    """
    g = fam.graph
    a, b = pair.cycle_a, pair.cycle_b
    cycles_ok = is_cycle(g, a) and is_cycle(g, b)
    va = set(g.touched_vertices(a))
    vb = set(g.touched_vertices(b))
    shared = tuple(g.vertex_labels[i] for i in sorted(va & vb))
    chords: list[str] = []
    if cycles_ok:
        for cyc in (a, b):
            chords.extend(g.edge_names[e] for e in find_chords(g, cyc))
    covered = va | vb
    uncovered = tuple(
        g.vertex_labels[i] for i in range(g.n_vertices) if i not in covered
    )
    lengths = (a.bit_count(), b.bit_count())
    crossing_ok: bool | None = None
    alternation_ok: bool | None = None
    if pair.selection is not None:
        sel = pair.selection
        crossing_ok = (pair.z & fam.crossing_edges) == fam.selection_edges(sel)
        if sel.indices:
            one, other = _alternation_sets(fam, sel)
            alternation_ok = (one & a == one and other & b == other) or (
                one & b == one and other & a == other
            )
        else:
            alternation_ok = {a, b} == {fam.u_ring, fam.v_ring}
    return CoveringPairReport(
        cycles_ok=cycles_ok,
        disjoint=not shared,
        shared_vertices=shared,
        chordless=cycles_ok and not chords,
        chords=tuple(chords),
        covering=not uncovered,
        uncovered_vertices=uncovered,
        lengths=lengths,
        lengths_ok=lengths == (fam.n, fam.n),
        crossing_edges_ok=crossing_ok,
        alternation_ok=alternation_ok,
    )
