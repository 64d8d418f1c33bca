"""Rank-preserving basis surgeries delivered as wrapped rank oracles.

Relaxing a circuit-hyperplane adds it to the basis family; tightening a free
basis removes it.  Either way the rank function changes on exactly one
subset, the surgery site, so both are constant-overhead wrappers around the
base oracle rather than materialized basis lists.
"""

from __future__ import annotations

from matroid_forge.errors import InputError
from matroid_forge.matroid import (
    RankOracle,
    circuit_hyperplane_failure,
    free_basis_failure,
    full_rank_table,
    is_circuit_hyperplane,
    is_free_basis,
    subset_cap,
)

_DELTAS = {"relaxed": 1, "tightened": -1}


class SurgeredOracle(RankOracle):
    """A rank oracle differing from its base only at the surgery site."""

    def __init__(self, base: RankOracle, site: int, kind: str, *, check: bool = True):
        if kind not in _DELTAS:
            raise InputError(f"unknown surgery kind {kind!r}")
        base.check_mask(site)
        if check:
            if kind == "relaxed":
                failure = circuit_hyperplane_failure(base, site)
            else:
                failure = free_basis_failure(base, site)
            if failure is not None:
                raise InputError(f"cannot build {kind} oracle: site is {failure}")
        self.base = base
        self.site = site
        self.kind = kind
        self.m = base.m

    @property
    def delta(self) -> int:
        return _DELTAS[self.kind]

    def rank(self, mask: int) -> int:
        r = self.base.rank(mask)
        if mask == self.site:
            r += self.delta
        return r

    def try_rank_table(self):
        table = self.base.try_rank_table()
        if table is None:
            return None
        table[self.site] += self.delta
        return table

    def __repr__(self) -> str:
        return f"SurgeredOracle({self.kind} at {hex(self.site)})"


def relax(base: RankOracle, site: int, *, check: bool = True) -> SurgeredOracle:
    """Raise the rank of a circuit-hyperplane by one (it becomes a basis)."""
    return SurgeredOracle(base, site, "relaxed", check=check)


def tighten(base: RankOracle, site: int, *, check: bool = True) -> SurgeredOracle:
    """Lower the rank of a free basis by one (it stops being a basis)."""
    return SurgeredOracle(base, site, "tightened", check=check)


def verify_surgery_inverse(
    oracle: RankOracle, site: int, *, cap: int | None = None
) -> bool:
    """Round-tripping the surgeries at one site reproduces the base ranks.

    For a circuit-hyperplane site: relax then tighten; for a free-basis site:
    tighten then relax.  Equality is checked on every subset, so the ground
    set must fit the scan cap.
    """
    cap = subset_cap() if cap is None else cap
    round_trips = []
    if is_circuit_hyperplane(oracle, site):
        round_trips.append(tighten(relax(oracle, site), site))
    if is_free_basis(oracle, site):
        round_trips.append(relax(tighten(oracle, site), site))
    if not round_trips:
        raise InputError(
            "site is neither a circuit-hyperplane nor a free basis of the oracle"
        )
    base_table = full_rank_table(oracle, cap=cap, honest=True)
    for wrapped in round_trips:
        for mask in range(1 << oracle.m):
            if wrapped.rank(mask) != base_table[mask]:
                return False
    return True
