"""Rank oracles and brute-force matroid analytics.

Rank is the primitive everywhere: independence, closure, circuits,
hyperplanes, cocircuits and bases are all derived from rank queries, so every
routine here works against an arbitrary :class:`RankOracle`, not only the
built-in lift/frame oracles.

The lift and frame matroid ranks of a biased graph use the closed-form
component formulas (vertices, components, balanced components of the induced
subgraph); the definitional maximum-independent-subset characterization is
kept as a test oracle because it is exponential.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import cached_property
from typing import IO, Iterable

from matroid_forge import _kernels
from matroid_forge.bias import BiasedGraph, component_is_balanced
from matroid_forge.bitset import format_mask, iter_bits, parse_mask
from matroid_forge.errors import InputError, ResourceLimitError
from matroid_forge.graph import Multigraph, components

#: Default ceiling on elementary steps of exhaustive subset scans.
DEFAULT_SUBSET_CAP = 1 << 24

_FACT_KINDS = ("circuits", "hyperplanes", "cocircuits", "bases")


def subset_cap() -> int:
    """Scan cap, overridable through MATROID_FORGE_MAX_SUBSETS."""
    raw = os.environ.get("MATROID_FORGE_MAX_SUBSETS")
    if raw is None:
        return DEFAULT_SUBSET_CAP
    try:
        return int(raw, 0)
    except ValueError:
        raise InputError(
            f"MATROID_FORGE_MAX_SUBSETS must be an integer, got {raw!r}"
        ) from None


class RankOracle:
    """A ground set 0..m-1 with a total rank function on edge masks.

    Subclasses implement :meth:`rank`; everything else is derived.  Oracles
    are immutable and rank is pure, so instances are safe to share.
    """

    m: int

    @property
    def full_mask(self) -> int:
        return (1 << self.m) - 1

    def check_mask(self, mask: int) -> int:
        if mask < 0 or mask > self.full_mask:
            raise InputError(
                f"mask {hex(mask)} outside ground set of {self.m} elements"
            )
        return mask

    def rank(self, mask: int) -> int:
        raise NotImplementedError

    def try_rank_table(self) -> bytearray | None:
        """Full rank table when a fast path exists, else None."""
        return None


def _profile_no_bias(g: Multigraph, mask: int) -> tuple[int, int, int]:
    """(incident vertices, components, tree components) of G[mask]."""
    parent: dict[int, int] = {}
    cyclic: set[int] = set()
    merges = 0
    bits = mask
    while bits:
        low = bits & -bits
        e = low.bit_length() - 1
        bits ^= low
        a, b = g.ends[e]
        if a not in parent:
            parent[a] = a
        if b not in parent:
            parent[b] = b
        ra = a
        while parent[ra] != ra:
            parent[ra] = parent[parent[ra]]
            ra = parent[ra]
        rb = b
        while parent[rb] != rb:
            parent[rb] = parent[parent[rb]]
            rb = parent[rb]
        if ra == rb:
            cyclic.add(ra)
        else:
            parent[rb] = ra
            if rb in cyclic:
                cyclic.add(ra)
            merges += 1
    nv = len(parent)
    ntree = sum(1 for v, p in parent.items() if v == p and v not in cyclic)
    return nv, nv - merges, ntree


def _balance_profile(bg: BiasedGraph, mask: int) -> tuple[int, int, int]:
    """(incident vertices, components, balanced components) of G[mask]."""
    g = bg.graph
    if not bg.balanced:
        nv, ncomp, ntree = _profile_no_bias(g, mask)
        return nv, ncomp, ntree
    parts = components(g, mask)
    nv = len(g.touched_vertices(mask))
    nbal = sum(1 for part in parts if component_is_balanced(bg, part))
    return nv, len(parts), nbal


def lift_rank(bg: BiasedGraph, mask: int) -> int:
    """Lift-matroid rank: |V(X)| - c(X), plus 1 if any component is unbalanced."""
    bg.graph.check_mask(mask)
    if not mask:
        return 0
    nv, ncomp, nbal = _balance_profile(bg, mask)
    return nv - ncomp + (1 if ncomp > nbal else 0)


def frame_rank(bg: BiasedGraph, mask: int) -> int:
    """Frame-matroid rank: |V(X)| minus the number of balanced components."""
    bg.graph.check_mask(mask)
    if not mask:
        return 0
    nv, _, nbal = _balance_profile(bg, mask)
    return nv - nbal


def lift_independent(bg: BiasedGraph, mask: int) -> bool:
    """No balanced cycle and at most one cycle in all of G[mask]."""
    return lift_rank(bg, mask) == mask.bit_count()


def frame_independent(bg: BiasedGraph, mask: int) -> bool:
    """No balanced cycle and at most one cycle per component of G[mask]."""
    return frame_rank(bg, mask) == mask.bit_count()


class LiftOracle(RankOracle):
    """Rank oracle of the lift matroid of a biased graph."""

    def __init__(self, bg: BiasedGraph):
        self.bg = bg
        self.m = bg.graph.m

    def rank(self, mask: int) -> int:
        return lift_rank(self.bg, mask)

    def try_rank_table(self) -> bytearray | None:
        if self.bg.balanced:
            return None
        g = self.bg.graph
        ends_a = [a for a, _ in g.ends]
        ends_b = [b for _, b in g.ends]
        return _kernels.rank_tables(g.n_vertices, ends_a, ends_b)[0]


class FrameOracle(RankOracle):
    """Rank oracle of the frame matroid of a biased graph."""

    def __init__(self, bg: BiasedGraph):
        self.bg = bg
        self.m = bg.graph.m

    def rank(self, mask: int) -> int:
        return frame_rank(self.bg, mask)

    def try_rank_table(self) -> bytearray | None:
        if self.bg.balanced:
            return None
        g = self.bg.graph
        ends_a = [a for a, _ in g.ends]
        ends_b = [b for _, b in g.ends]
        return _kernels.rank_tables(g.n_vertices, ends_a, ends_b)[1]


class TableOracle(RankOracle):
    """Rank oracle backed by a precomputed full table."""

    def __init__(self, m: int, table):
        if len(table) != 1 << m:
            raise InputError("table length does not match ground-set size")
        self.m = m
        self.table = bytes(table)

    def rank(self, mask: int) -> int:
        self.check_mask(mask)
        return self.table[mask]

    def try_rank_table(self) -> bytearray | None:
        return bytearray(self.table)


def full_rank_table(
    oracle: RankOracle, *, cap: int | None = None, honest: bool = False
) -> bytearray:
    """Rank of every subset as a bytearray indexed by mask.

    With honest=True the table is always built one oracle call per subset;
    otherwise an oracle fast path (compiled kernel, table copy) may be used.
    """
    cap = subset_cap() if cap is None else cap
    if (1 << oracle.m) > cap:
        raise ResourceLimitError(
            f"full table of 2^{oracle.m} subsets exceeds the cap {cap}"
        )
    if not honest:
        table = oracle.try_rank_table()
        if table is not None:
            return table
    rank = oracle.rank
    return bytearray(rank(mask) for mask in range(1 << oracle.m))


def closure(oracle: RankOracle, mask: int) -> int:
    """mask together with every element whose addition keeps the rank."""
    oracle.check_mask(mask)
    r = oracle.rank(mask)
    closed = mask
    for e in range(oracle.m):
        if mask >> e & 1:
            continue
        if oracle.rank(mask | 1 << e) == r:
            closed |= 1 << e
    return closed


def is_independent(oracle: RankOracle, mask: int) -> bool:
    return oracle.rank(mask) == mask.bit_count()


def is_circuit(oracle: RankOracle, mask: int) -> bool:
    """Minimal dependent: mask is dependent, every one-deletion independent."""
    oracle.check_mask(mask)
    size = mask.bit_count()
    if oracle.rank(mask) >= size:
        return False
    return all(oracle.rank(mask ^ 1 << e) == size - 1 for e in iter_bits(mask))


def circuit_hyperplane_failure(oracle: RankOracle, mask: int) -> str | None:
    """None if mask is a circuit-hyperplane, else the failed property."""
    oracle.check_mask(mask)
    size = mask.bit_count()
    if oracle.rank(mask) >= size:
        return "not a circuit: the set is independent"
    for e in iter_bits(mask):
        if oracle.rank(mask ^ 1 << e) < size - 1:
            return "not a circuit: a proper subset is dependent"
    if oracle.rank(mask) != oracle.rank(oracle.full_mask) - 1:
        return "not a hyperplane: rank differs from full rank minus one"
    if closure(oracle, mask) != mask:
        return "not a hyperplane: the set is not closed"
    return None


def is_circuit_hyperplane(oracle: RankOracle, mask: int) -> bool:
    return circuit_hyperplane_failure(oracle, mask) is None


def free_basis_failure(oracle: RankOracle, mask: int) -> str | None:
    """None if mask is a basis with every proper subset closed.

    Checking only the subsets of size |B|-1 suffices: closure is monotone, so
    an unclosed smaller subset forces an unclosed one of size |B|-1.
    """
    oracle.check_mask(mask)
    size = mask.bit_count()
    r_full = oracle.rank(oracle.full_mask)
    if size != r_full or oracle.rank(mask) != r_full:
        return "not a basis"
    for e in iter_bits(mask):
        sub = mask ^ 1 << e
        if closure(oracle, sub) != sub:
            return "not free: a maximal proper subset is not closed"
    return None


def is_free_basis(oracle: RankOracle, mask: int) -> bool:
    return free_basis_failure(oracle, mask) is None


def enumerate_facts(
    oracle: RankOracle, kind: str, *, cap: int | None = None
) -> list[int]:
    """Exhaustive list of circuits, hyperplanes, cocircuits or bases.

    Scans the full rank table, so the ground set must fit the subset cap.
    Output is ascending by mask, hence deterministic.
    """
    if kind not in _FACT_KINDS:
        raise InputError(f"unknown fact kind {kind!r}; expected one of {_FACT_KINDS}")
    m = oracle.m
    table = full_rank_table(oracle, cap=cap)
    full = (1 << m) - 1
    r_full = table[full]
    out = []
    if kind == "bases":
        for mask in range(full + 1):
            if table[mask] == r_full and mask.bit_count() == r_full:
                out.append(mask)
        return out
    if kind == "circuits":
        for mask in range(1, full + 1):
            size = mask.bit_count()
            if table[mask] >= size:
                continue
            if all(table[mask ^ 1 << e] == size - 1 for e in iter_bits(mask)):
                out.append(mask)
        return out
    # hyperplanes, cocircuits
    hyperplanes = []
    for mask in range(full + 1):
        if table[mask] != r_full - 1:
            continue
        closed = True
        for e in range(m):
            if not mask >> e & 1 and table[mask | 1 << e] == table[mask]:
                closed = False
                break
        if closed:
            hyperplanes.append(mask)
    if kind == "hyperplanes":
        return hyperplanes
    return sorted(full ^ h for h in hyperplanes)


class MatroidFacts:
    """Lazily computed circuit/hyperplane/cocircuit/basis lists of an oracle."""

    def __init__(self, oracle: RankOracle, *, cap: int | None = None):
        self.oracle = oracle
        self._cap = cap

    @cached_property
    def circuits(self) -> list[int]:
        return enumerate_facts(self.oracle, "circuits", cap=self._cap)

    @cached_property
    def hyperplanes(self) -> list[int]:
        return enumerate_facts(self.oracle, "hyperplanes", cap=self._cap)

    @cached_property
    def cocircuits(self) -> list[int]:
        return enumerate_facts(self.oracle, "cocircuits", cap=self._cap)

    @cached_property
    def bases(self) -> list[int]:
        return enumerate_facts(self.oracle, "bases", cap=self._cap)


@dataclass
class RankAxiomReport:
    """Outcome of a rank-axiom scan; empty violation list means pass."""

    mode: str
    quadruples: int
    violation_count: int
    witnesses: list[tuple] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.violation_count == 0

    def to_json(self) -> dict:
        return {
            "mode": self.mode,
            "quadruples": self.quadruples,
            "violations": self.violation_count,
            "witnesses": [
                {
                    "axiom": axiom,
                    "subset": format_mask(x),
                    "e": e,
                    "f": f,
                }
                for axiom, x, e, f in self.witnesses
            ],
            "passed": self.passed,
        }


def check_rank_axioms(
    oracle: RankOracle,
    mode: str = "exhaustive",
    *,
    samples: int = 20000,
    seed: int = 0,
    cap: int | None = None,
) -> RankAxiomReport:
    """Certify normalization, unit increase and local submodularity.

    Exhaustive mode walks every (X, e, f) triple via a full rank table built
    one oracle call per subset; it requires 2^m * m^2 within the scan cap.
    Sampled mode draws random triples and queries the oracle directly.
    """
    m = oracle.m
    if mode == "exhaustive":
        cost = (1 << m) * m * m
        limit = subset_cap() if cap is None else cap
        if cost > limit:
            raise ResourceLimitError(
                f"exhaustive axiom scan needs ~{cost} steps, over the cap {limit}; "
                "use sampled mode or raise MATROID_FORGE_MAX_SUBSETS"
            )
        table = full_rank_table(oracle, cap=limit, honest=True)
        checked, nviol, witnesses = _kernels.scan_axioms_table(table, m)
        return RankAxiomReport("exhaustive", checked, nviol, list(witnesses))
    if mode != "sampled":
        raise InputError(f"unknown axiom-check mode {mode!r}")
    import random

    rng = random.Random(seed)
    witnesses: list[tuple] = []
    nviol = 0
    checked = 1
    if oracle.rank(0) != 0:
        nviol += 1
        witnesses.append(("normalization", 0, None, None))
    for _ in range(samples):
        x = rng.getrandbits(m) & oracle.full_mask
        outside = [e for e in range(m) if not x >> e & 1]
        if not outside:
            continue
        e = rng.choice(outside)
        r = oracle.rank(x)
        re = oracle.rank(x | 1 << e)
        checked += 1
        if re < r or re > r + 1:
            nviol += 1
            if len(witnesses) < 8:
                witnesses.append(("unit-increase", x, e, None))
        if len(outside) < 2:
            continue
        f = rng.choice([v for v in outside if v != e])
        checked += 1
        if oracle.rank(x | 1 << e) + oracle.rank(x | 1 << f) < oracle.rank(
            x | 1 << e | 1 << f
        ) + r:
            nviol += 1
            if len(witnesses) < 8:
                witnesses.append(("submodularity", x, e, f))
    return RankAxiomReport("sampled", checked, nviol, witnesses)


def write_rank_log(stream: IO[str], entries: Iterable[tuple[int, int]]) -> None:
    """One line per query: hex bitmask, decimal rank."""
    for mask, rank in entries:
        stream.write(f"{format_mask(mask)} {rank}\n")


def read_rank_log(stream: IO[str]) -> list[tuple[int, int | None]]:
    """Parse a query log; lines may omit the rank (query-only transcripts)."""
    out: list[tuple[int, int | None]] = []
    for lineno, line in enumerate(stream, start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) not in (1, 2):
            raise InputError(f"line {lineno}: expected 'mask [rank]', got {line!r}")
        try:
            mask = parse_mask(parts[0])
        except ValueError as exc:
            raise InputError(f"line {lineno}: {exc}") from None
        rank = None
        if len(parts) == 2:
            try:
                rank = int(parts[1])
            except ValueError:
                raise InputError(f"line {lineno}: bad rank {parts[1]!r}") from None
        out.append((mask, rank))
    return out
