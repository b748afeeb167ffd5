"""Cover-style characterizations of full downward/upward reach, and
existence of strict bounds for subsets, all relative to a nest's order.

``down_reach_covers`` decides whether every point lies strictly below the
target region; when it holds, the members not containing the region form a
cover of the universe with no single member swallowing the region, and that
cover is returned as the constructive witness.  ``up_reach_covers`` is the
mirror image, witnessed by the members meeting the region, whose
intersection must then be empty.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Nest, SetFamily, Subset, _check_same_universe
from .orders import generated_order, reflexive_closure
from .topology import down_set, up_set


@dataclass(frozen=True)
class CoverWitness:
    holds: bool
    witness_family: SetFamily | None
    violating_member: Subset | None

    def to_dict(self) -> dict:
        return {
            "holds": self.holds,
            "witness_family": (
                None
                if self.witness_family is None
                else [list(Subset(self.witness_family.universe, m).indices)
                      for m in self.witness_family.masks]
            ),
            "violating_member": (
                None if self.violating_member is None
                else list(self.violating_member.indices)
            ),
        }


def down_reach_covers(nest: Nest, region: Subset, want_witness: bool = True) -> CoverWitness:
    """Does the strict downward reach of the region cover the universe?"""
    _check_same_universe(nest.universe, region.universe)
    reach = down_set(generated_order(nest), region)
    full = nest.universe.full_mask
    if reach.mask == full:
        witness = None
        if want_witness:
            witness = Nest(
                nest.universe,
                tuple(m for m in nest.masks if region.mask & ~m),
            )
        return CoverWitness(True, witness, None)
    return CoverWitness(False, None, Subset(nest.universe, full ^ reach.mask))


def up_reach_covers(nest: Nest, region: Subset, want_witness: bool = True) -> CoverWitness:
    """Does the strict upward reach of the region cover the universe?"""
    _check_same_universe(nest.universe, region.universe)
    reach = up_set(generated_order(nest), region)
    full = nest.universe.full_mask
    if reach.mask == full:
        witness = None
        if want_witness:
            witness = Nest(
                nest.universe,
                tuple(m for m in nest.masks if region.mask & m),
            )
        return CoverWitness(True, witness, None)
    return CoverWitness(False, None, Subset(nest.universe, full ^ reach.mask))


def has_upper_bound(nest: Nest, region: Subset, strict: bool = True) -> bool:
    """Is there an x with y < x (or y <= x) for every y in the region?

    The strict form is the primary predicate; a strict bound automatically
    lies outside the region.  The reflexive form is the one that matches the
    downward-reach dichotomy on T0-separating nests (see the bound-covers
    suite for the divergence witnesses of the strict form).
    """
    _check_same_universe(nest.universe, region.universe)
    rel = generated_order(nest)
    if not strict:
        rel = reflexive_closure(rel)
    bounds = nest.universe.full_mask
    remaining = region.mask
    y = 0
    while remaining:
        if remaining & 1:
            bounds &= rel.rows[y]
        remaining >>= 1
        y += 1
    return bounds != 0


def has_lower_bound(nest: Nest, region: Subset, strict: bool = True) -> bool:
    """Mirror of `has_upper_bound`: some x below every element of the region."""
    _check_same_universe(nest.universe, region.universe)
    rel = generated_order(nest)
    if not strict:
        rel = reflexive_closure(rel)
    return any(
        rel.rows[x] & region.mask == region.mask
        for x in nest.universe.elements()
    )


def covering_subfamilies(nest: Nest) -> list[tuple[int, ...]]:
    """All subfamilies whose union is the whole universe (exhaustive helper
    for the cover characterizations; exponential in the nest size)."""
    full = nest.universe.full_mask
    out = []
    members = nest.masks
    for pick in range(1 << len(members)):
        union = 0
        chosen = tuple(members[i] for i in range(len(members)) if pick >> i & 1)
        for m in chosen:
            union |= m
        if union == full:
            out.append(chosen)
    return out
