"""The rank-query distinguishing game over the crossed-prism family.

The honest player answers rank queries from the frame matroid (kind "frame")
or the lift matroid (kind "lift") of the prism with no balanced cycles.  Any
transcript whose distinct queries miss at least one covering-pair site admits
an indistinguishable alternative: tighten (frame) or relax (lift) at an
unqueried site.  The alternative's rank differs from the honest one on that
single subset only, so it agrees with the whole transcript while having the
opposite class status.

Since there are 2^(n-1) sites and only 4n edges, any polynomial query budget
is eventually too small; `required_n_for_budget` computes the crossover.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from matroid_forge.bias import BiasedGraph
from matroid_forge.errors import FamilyExhaustedError, InputError
from matroid_forge.family import (
    CoveringPair,
    CrossedPrism,
    iter_covering_pairs,
)
from matroid_forge.matroid import FrameOracle, LiftOracle, RankOracle, read_rank_log
from matroid_forge.surgery import SurgeredOracle, relax, tighten

KINDS = ("frame", "lift")


def _check_kind(kind: str) -> str:
    if kind not in KINDS:
        raise InputError(f"kind must be one of {KINDS}, got {kind!r}")
    return kind


def honest_oracle(fam: CrossedPrism, kind: str) -> RankOracle:
    """The matroid the honest player answers from."""
    bg = BiasedGraph(fam.graph)
    return FrameOracle(bg) if _check_kind(kind) == "frame" else LiftOracle(bg)


@dataclass(frozen=True)
class QueryTranscript:
    """Ordered (query mask, answered rank) pairs against one target kind."""

    kind: str
    entries: tuple[tuple[int, int], ...]

    @property
    def queries(self) -> list[int]:
        return [mask for mask, _ in self.entries]

    @property
    def distinct_queries(self) -> int:
        return len({mask for mask, _ in self.entries})


def answer_queries(
    oracle: RankOracle, queries: Sequence[int], kind: str
) -> QueryTranscript:
    """Honest answers in query order; duplicates answer consistently."""
    _check_kind(kind)
    entries = []
    for mask in queries:
        oracle.check_mask(mask)
        entries.append((mask, oracle.rank(mask)))
    return QueryTranscript(kind, tuple(entries))


def find_unqueried_site(fam: CrossedPrism, queries: Iterable[int]) -> CoveringPair:
    """First covering pair (in selection order) whose edge set was not queried."""
    asked = set(queries)
    for pair in iter_covering_pairs(fam):
        if pair.z not in asked:
            return pair
    raise FamilyExhaustedError(
        f"all {1 << (fam.n - 1)} covering-pair sites appear among the queries"
    )


@dataclass(frozen=True)
class GameOutcome:
    """An unqueried site, the alternative oracle, and the agreement record."""

    kind: str
    site: CoveringPair
    alternative: SurgeredOracle
    transcript: QueryTranscript
    agreement: tuple[bool, ...]

    @property
    def all_agree(self) -> bool:
        return all(self.agreement)

    def to_json(self, fam: CrossedPrism) -> dict:
        sel = self.site.selection
        return {
            "kind": self.kind,
            "n": fam.n,
            "site": {
                "selection": list(sel.indices) if sel is not None else None,
                "z": fam.graph.names_of(self.site.z),
                "cycles": [
                    fam.graph.names_of(self.site.cycle_a),
                    fam.graph.names_of(self.site.cycle_b),
                ],
            },
            "alternative": self.alternative.kind,
            "queries": len(self.transcript.entries),
            "distinct_queries": self.transcript.distinct_queries,
            "agreement": list(self.agreement),
            "all_agree": self.all_agree,
        }


def indistinguishable_alternative(
    fam: CrossedPrism, kind: str, queries: Sequence[int]
) -> GameOutcome:
    """Answer honestly, then exhibit an opposite-status matroid agreeing everywhere.

    kind "frame": the honest frame matroid versus a tightened (non-frame)
    alternative; kind "lift": the honest lift matroid versus a relaxed
    (non-lift) alternative.  The agreement certificate re-derives every
    answer from the alternative oracle.

    The surgery site is taken unchecked: every family site is a
    circuit-hyperplane of the lift matroid and a free basis of the frame
    matroid, a family-level guarantee checked once by the verification suite
    rather than per game.
    """
    base = honest_oracle(fam, kind)
    transcript = answer_queries(base, queries, kind)
    site = find_unqueried_site(fam, transcript.queries)
    if kind == "frame":
        alternative = tighten(base, site.z, check=False)
    else:
        alternative = relax(base, site.z, check=False)
    agreement = tuple(
        alternative.rank(mask) == answer for mask, answer in transcript.entries
    )
    return GameOutcome(kind, site, alternative, transcript, agreement)


class QuerySession:
    """Streaming variant: ask queries one by one, then conclude.

    Adaptivity gains nothing, since every answer is the honest matroid rank
    regardless of what was asked before.
    """

    def __init__(self, fam: CrossedPrism, kind: str):
        self.fam = fam
        self.kind = _check_kind(kind)
        self._oracle = honest_oracle(fam, kind)
        self._queries: list[int] = []

    def ask(self, mask: int) -> int:
        self._oracle.check_mask(mask)
        self._queries.append(mask)
        return self._oracle.rank(mask)

    @property
    def asked(self) -> list[int]:
        return list(self._queries)

    def conclude(self) -> GameOutcome:
        return indistinguishable_alternative(self.fam, self.kind, self._queries)


def required_n_for_budget(coefficients: Sequence[int | float]) -> int:
    """Smallest even n >= 4 with 2^(n-1) covering pairs beating p(4n) queries.

    `coefficients` lists p's coefficients from the constant term up; all must
    be nonnegative, which makes the answer monotone in every coefficient.
    """
    coeffs = list(coefficients)
    if any(c < 0 for c in coeffs):
        raise InputError("polynomial coefficients must be nonnegative")

    def poly(x: int) -> float:
        total = 0.0
        power = 1
        for c in coeffs:
            total += c * power
            power *= x
        return total

    n = 4
    while (1 << (n - 1)) <= poly(4 * n):
        n += 2
    return n


def random_queries(m: int, count: int, seed: int) -> list[int]:
    """Seeded uniform query masks over a ground set of m edges."""
    if count < 0:
        raise InputError("query count must be nonnegative")
    rng = random.Random(seed)
    return [rng.getrandbits(m) for _ in range(count)]


def read_transcript(path) -> list[tuple[int, int | None]]:
    """Query-log file: one hex mask per line, optional answered rank."""
    with open(path, "r", encoding="utf-8") as handle:
        return read_rank_log(handle)
