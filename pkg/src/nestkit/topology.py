"""Finite topology engine: subbase generation, order topologies, products.

Topologies are stored as the explicit family of open masks.  That is only
viable because the verification universes stay tiny (|X| <= 6 or so), and it
makes every comparison in the suites an exact set comparison.

Convention notes, since the source material uses both:

* point-level up/down sets (``point_up_set``/``point_down_set``) expect the
  reflexive order chosen by the caller, matching how the worked examples
  compute them;
* set-level up/down sets (``up_set``/``down_set``) expect the strict order,
  matching the definition "x is above A iff some y in A lies strictly below".

Empty intersections close to X and empty unions to the empty set.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .core import (
    InstanceError,
    SetFamily,
    Subset,
    Universe,
    _check_same_universe,
    canonical_masks,
)
from .orders import Relation


@dataclass(frozen=True)
class Topology:
    """Family of open masks containing X and {} and closed under ∪ and ∩."""

    universe: Universe
    opens: tuple[int, ...]

    def __post_init__(self) -> None:
        opens = canonical_masks(self.opens)
        object.__setattr__(self, "opens", opens)
        members = set(opens)
        if len(members) != len(opens):
            raise InstanceError("open families must be duplicate-free")
        full = self.universe.full_mask
        if 0 not in members or full not in members:
            raise InstanceError("a topology contains the empty set and the universe")
        for a in opens:
            for b in opens:
                if a & b not in members or a | b not in members:
                    raise InstanceError("open family is not closed under ∩/∪")

    @cached_property
    def _open_set(self) -> frozenset[int]:
        return frozenset(self.opens)

    def is_open(self, mask: int) -> bool:
        return mask in self._open_set

    def is_discrete(self) -> bool:
        return len(self.opens) == 1 << self.universe.size

    def as_family(self) -> SetFamily:
        return SetFamily(self.universe, self.opens)

    def render(self) -> str:
        return self.as_family().render()


def topology_from_subbase(family: SetFamily) -> Topology:
    """Smallest topology containing the family.

    Closes under finite intersections first (the empty intersection giving X),
    then under unions (the empty union giving the empty set).
    """
    universe = family.universe
    base = {universe.full_mask}
    for s in family.masks:
        base |= {b & s for b in base}
    opens = {0} | base
    frontier = True
    while frontier:
        frontier = False
        for b in base:
            for o in tuple(opens):
                u = o | b
                if u not in opens:
                    opens.add(u)
                    frontier = True
    return Topology(universe, tuple(opens))


def point_up_set(rel: Relation, x: int) -> Subset:
    """All y with x rel y; pass the reflexive order for the usual up-set of x."""
    return Subset(rel.universe, rel.rows[x])


def point_down_set(rel: Relation, x: int) -> Subset:
    """All y with y rel x; pass the reflexive order for the usual down-set of x."""
    mask = 0
    for y in rel.universe.elements():
        if rel.holds(y, x):
            mask |= 1 << y
    return Subset(rel.universe, mask)


def up_set(rel: Relation, region: Subset) -> Subset:
    """Strict upward reach: all x such that some y in the region has y rel x."""
    _check_same_universe(rel.universe, region.universe)
    mask = 0
    remaining = region.mask
    y = 0
    while remaining:
        if remaining & 1:
            mask |= rel.rows[y]
        remaining >>= 1
        y += 1
    return Subset(rel.universe, mask)


def down_set(rel: Relation, region: Subset) -> Subset:
    """Strict downward reach: all x such that some y in the region has x rel y."""
    _check_same_universe(rel.universe, region.universe)
    mask = 0
    for x in rel.universe.elements():
        if rel.rows[x] & region.mask:
            mask |= 1 << x
    return Subset(rel.universe, mask)


def lower_topology(rel_reflexive: Relation) -> Topology:
    """Generated by the subbase {X - up(x)}; expects the reflexive order."""
    u = rel_reflexive.universe
    subbase = SetFamily.dedupe(
        u, (point_up_set(rel_reflexive, x).mask ^ u.full_mask for x in u.elements())
    )
    return topology_from_subbase(subbase)


def upper_topology(rel_reflexive: Relation) -> Topology:
    """Generated by the subbase {X - down(x)}; expects the reflexive order."""
    u = rel_reflexive.universe
    subbase = SetFamily.dedupe(
        u, (point_down_set(rel_reflexive, x).mask ^ u.full_mask for x in u.elements())
    )
    return topology_from_subbase(subbase)


def join(t1: Topology, t2: Topology) -> Topology:
    """Coarsest topology refining both (their supremum in the topology lattice)."""
    _check_same_universe(t1.universe, t2.universe)
    return topology_from_subbase(SetFamily.dedupe(t1.universe, t1.opens + t2.opens))


def interval_topology(rel_reflexive: Relation) -> Topology:
    return join(upper_topology(rel_reflexive), lower_topology(rel_reflexive))


def alexandroff_family(rel_strict: Relation) -> SetFamily:
    """All subsets equal to their strict upward reach.

    This is the fixed-point family of `up_set` under the strict order.  It is
    closed under unions and intersections but need not contain X, so it is
    returned as a family, not a Topology.
    """
    u = rel_strict.universe
    fixed = []
    for mask in range(u.full_mask + 1):
        if up_set(rel_strict, Subset(u, mask)).mask == mask:
            fixed.append(mask)
    return SetFamily(u, tuple(fixed))


def is_closed(topology: Topology, subset: Subset) -> bool:
    _check_same_universe(topology.universe, subset.universe)
    return topology.is_open(subset.complement().mask)


def is_closed_in_family(family: SetFamily, subset: Subset) -> bool:
    """Closedness relative to an arbitrary open family (e.g. an Alexandroff one)."""
    _check_same_universe(family.universe, subset.universe)
    return family.contains_mask(subset.complement().mask)


def product_universe(u1: Universe, u2: Universe) -> Universe:
    labels = tuple(
        f"({u1.label(x)},{u2.label(y)})"
        for x in u1.elements()
        for y in u2.elements()
    )
    return Universe(u1.size * u2.size, labels)


def pair_index(u1: Universe, u2: Universe, x: int, y: int) -> int:
    return x * u2.size + y


def product_topology(t1: Topology, t2: Topology) -> Topology:
    """Topology generated by the rectangle subbase {U x V : U, V open}."""
    u = product_universe(t1.universe, t2.universe)
    rects = set()
    for a in t1.opens:
        for b in t2.opens:
            mask = 0
            for x in t1.universe.elements():
                if a >> x & 1:
                    for y in t2.universe.elements():
                        if b >> y & 1:
                            mask |= 1 << pair_index(t1.universe, t2.universe, x, y)
            rects.add(mask)
    return topology_from_subbase(SetFamily(u, tuple(rects)))


def preimage(mapping: Sequence[int], domain: Universe, open_mask: int) -> int:
    mask = 0
    for x in domain.elements():
        if open_mask >> mapping[x] & 1:
            mask |= 1 << x
    return mask


def is_continuous(mapping: Sequence[int], tdom: Topology, tcod: Topology) -> bool:
    """Preimage of every open is open; the mapping must be total on the domain."""
    n = tdom.universe.size
    if len(mapping) != n:
        raise ValueError(f"mapping must assign all {n} domain elements")
    if any(not 0 <= v < tcod.universe.size for v in mapping):
        raise ValueError("mapping hits elements outside the codomain universe")
    return all(
        tdom.is_open(preimage(mapping, tdom.universe, o)) for o in tcod.opens
    )
