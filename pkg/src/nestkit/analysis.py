"""Suprema under nest orders, the sup-condition ladder, dual nests,
interlocking characterizations, and the linear-orderability report.

The sup-condition ladder on a nest, always taken with respect to the
reflexive closure of the nest's generated order:

* ``sups_exist``   - every member has a supremum;
* ``sups_escape``  - every member has a supremum lying outside the member;
* ``sups_onto``    - additionally every point of the universe arises as such
                     an escaping supremum of some member.

A supremum only exists when the set of upper bounds has a unique least
element; incomparable upper bounds yield "does not exist" with a reason,
never an arbitrary pick.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    InstanceError,
    Nest,
    SetFamily,
    Subset,
    _check_same_universe,
    family_complement,
)
from .orders import (
    Relation,
    generated_order,
    is_linear_order,
    reflexive_closure,
    t0_separates,
    transpose,
)
from .topology import (
    Topology,
    alexandroff_family,
    down_set,
    point_down_set,
    point_up_set,
    topology_from_subbase,
)

REASON_OK = "ok"
REASON_NO_BOUND = "no_upper_bound"
REASON_NO_LEAST = "no_least_upper_bound"
REASON_NO_LOWER = "no_lower_bound"
REASON_NO_GREATEST = "no_greatest_lower_bound"


@dataclass(frozen=True)
class SupResult:
    exists: bool
    element: int | None
    reason: str

    def __post_init__(self) -> None:
        if self.exists != (self.element is not None):
            raise InstanceError("element must be present exactly when it exists")


def sup_of(rel_reflexive: Relation, region_mask: int) -> SupResult:
    """Least upper bound of the region under the given reflexive order.

    The supremum of the empty region is the least element of the whole
    universe, when that is unique.
    """
    rows = rel_reflexive.rows
    bounds = rel_reflexive.universe.full_mask
    remaining = region_mask
    y = 0
    while remaining:
        if remaining & 1:
            bounds &= rows[y]
        remaining >>= 1
        y += 1
    if bounds == 0:
        return SupResult(False, None, REASON_NO_BOUND)
    least = [m for m in rel_reflexive.universe.elements()
             if bounds >> m & 1 and bounds & ~rows[m] == 0]
    if len(least) != 1:
        return SupResult(False, None, REASON_NO_LEAST)
    return SupResult(True, least[0], REASON_OK)


def inf_of(rel_reflexive: Relation, region_mask: int) -> SupResult:
    """Greatest lower bound; dual of `sup_of` via the transposed order."""
    result = sup_of(transpose(rel_reflexive), region_mask)
    if result.exists:
        return result
    reason = REASON_NO_LOWER if result.reason == REASON_NO_BOUND else REASON_NO_GREATEST
    return SupResult(False, None, reason)


def nest_order(nest: SetFamily) -> Relation:
    return generated_order(nest)


def nest_preorder(nest: SetFamily) -> Relation:
    return reflexive_closure(generated_order(nest))


@dataclass(frozen=True)
class SupConditions:
    sups_exist: bool
    sups_escape: bool
    sups_onto: bool


def member_sups(nest: Nest) -> dict[int, SupResult]:
    rel = nest_preorder(nest)
    return {m: sup_of(rel, m) for m in nest.masks}


def sup_conditions(nest: Nest) -> SupConditions:
    sups = member_sups(nest)
    exist = all(r.exists for r in sups.values())
    escape = exist and all(
        not (m >> r.element & 1) for m, r in sups.items()
    )
    onto = escape and all(
        any(r.element == x and not (m >> x & 1) for m, r in sups.items())
        for x in nest.universe.elements()
    )
    return SupConditions(exist, escape, onto)


@dataclass(frozen=True)
class DualPair:
    """Two nests whose generated orders are mutual transposes.

    Nothing here demands that either nest separates the universe; only the
    order-reversal property is enforced.
    """

    left: Nest
    right: Nest

    def __post_init__(self) -> None:
        _check_same_universe(self.left.universe, self.right.universe)
        lorder = generated_order(self.left)
        rorder = generated_order(self.right)
        flipped = transpose(rorder)
        if lorder != flipped:
            witness = next(
                (x, y)
                for x in lorder.universe.elements()
                for y in lorder.universe.elements()
                if lorder.holds(x, y) != flipped.holds(x, y)
            )
            raise InstanceError(
                f"nests are not dual: orders disagree at pair {witness}"
            )


def dual_pair(left: Nest, right: Nest) -> DualPair:
    return DualPair(left, right)


def complement_dual(left: Nest) -> DualPair:
    """Pair a nest with its complement family, which is always its dual."""
    return DualPair(left, family_complement(left))


def dual_sup_conditions(pair: DualPair) -> SupConditions:
    """The sup-condition ladder for the right nest of a dual pair.

    Computed twice: as suprema under the right nest's own (reversed) order,
    and as infima under the left nest's order.  The two routes must agree;
    disagreement means the duality invariant was broken.
    """
    right = pair.right
    rel_right = nest_preorder(right)
    rel_left = nest_preorder(pair.left)
    by_sup = {m: sup_of(rel_right, m) for m in right.masks}
    by_inf = {m: inf_of(rel_left, m) for m in right.masks}
    for m in right.masks:
        if (by_sup[m].exists, by_sup[m].element) != (by_inf[m].exists, by_inf[m].element):
            raise InstanceError(
                "sup-under-reversed-order and inf routes disagree; dual-pair "
                "invariant violated"
            )
    exist = all(r.exists for r in by_sup.values())
    escape = exist and all(not (m >> r.element & 1) for m, r in by_sup.items())
    onto = escape and all(
        any(r.element == x and not (m >> x & 1) for m, r in by_sup.items())
        for x in right.universe.elements()
    )
    return SupConditions(exist, escape, onto)


def is_interlocking(family: SetFamily) -> bool:
    """Definition route, on an arbitrary family.

    Whenever a member equals the intersection of its strict supersets in the
    family (empty intersection = X), it must also equal the union of its
    strict subsets (empty union = empty set).
    """
    full = family.universe.full_mask
    for t in family.masks:
        inter = full
        for s in family.masks:
            if s != t and t & ~s == 0:
                inter &= s
        if inter != t:
            continue
        union = 0
        for s in family.masks:
            if s != t and s & ~t == 0:
                union |= s
        if union != t:
            return False
    return True


def is_interlocking_via_alexandroff(nest: Nest) -> bool:
    """Alexandroff route: members closed for the nest's order must have their
    complements closed for the complement nest's order."""
    alex = alexandroff_family(generated_order(nest))
    alex_c = alexandroff_family(generated_order(family_complement(nest)))
    full = nest.universe.full_mask
    for m in nest.masks:
        closed_here = alex.contains_mask(m ^ full)
        if closed_here and not alex_c.contains_mask(m):
            return False
    return True


def is_interlocking_via_lower_sets(nest: Nest) -> bool:
    """Lower-set route: if a member's complement is a lower set for the
    complement nest's order, the member is a lower set for the nest's order."""
    rel = generated_order(nest)
    rel_c = generated_order(family_complement(nest))
    u = nest.universe
    full = u.full_mask
    for m in nest.masks:
        comp = Subset(u, m ^ full)
        if down_set(rel_c, comp).mask == comp.mask:
            if down_set(rel, Subset(u, m)).mask != m:
                return False
    return True


def member_closed_by_intersections(nest: Nest, member_mask: int) -> bool:
    """Nest-member closedness in the Alexandroff sense, via the member formula:
    the member equals the intersection of its strict member-supersets."""
    inter = nest.universe.full_mask
    for s in nest.masks:
        if s != member_mask and member_mask & ~s == 0:
            inter &= s
    return inter == member_mask


def member_union_of_smaller(nest: Nest, member_mask: int) -> int:
    union = 0
    for s in nest.masks:
        if s != member_mask and s & ~member_mask == 0:
            union |= s
    return union


def down_set_by_members(nest: Nest, region: Subset) -> Subset:
    """Downward reach computed from the nest: the union of members that do
    not contain the region."""
    _check_same_universe(nest.universe, region.universe)
    mask = 0
    for m in nest.masks:
        if region.mask & ~m:
            mask |= m
    return Subset(nest.universe, mask)


def up_set_by_complements(nest: Nest, region: Subset) -> Subset:
    """Upward reach computed from the nest: the union of complements of
    members meeting the region."""
    _check_same_universe(nest.universe, region.universe)
    full = nest.universe.full_mask
    mask = 0
    for m in nest.masks:
        if region.mask & m:
            mask |= m ^ full
    return Subset(nest.universe, mask)


@dataclass(frozen=True)
class MemberLowerSetReport:
    """Three views of "this member is a lower set".

    ``union_of_smaller_matches`` and ``is_lower_set`` agree on every nest;
    ``no_greatest_element`` is only promised to agree when the nest
    T0-separates the universe (the recorded two-nest counterexample shows the
    hypothesis is needed).
    """

    union_of_smaller_matches: bool
    is_lower_set: bool
    no_greatest_element: bool


def member_lower_set_report(nest: Nest, member: Subset) -> MemberLowerSetReport:
    _check_same_universe(nest.universe, member.universe)
    if member.mask not in nest.masks:
        raise InstanceError("subset is not a member of the nest")
    union_matches = member_union_of_smaller(nest, member.mask) == member.mask
    rel = generated_order(nest)
    lower = down_set(rel, member).mask == member.mask
    pre = nest_preorder(nest)
    greatest = any(
        member.mask & ~pre.rows[g] == 0
        for g in nest.universe.elements()
        if member.mask >> g & 1
    )
    return MemberLowerSetReport(union_matches, lower, not greatest)


def open_ray_topology(rel_strict: Relation) -> Topology:
    """Topology generated by the strict down-rays and up-rays of all points."""
    u = rel_strict.universe
    rays = [point_down_set(rel_strict, x).mask for x in u.elements()]
    rays += [point_up_set(rel_strict, x).mask for x in u.elements()]
    return topology_from_subbase(SetFamily.dedupe(u, rays))


@dataclass(frozen=True)
class LotsReport:
    """Hypotheses and conclusion of the linear-orderability checks on a pair.

    ``is_lots`` pins down "the universe is a linearly ordered topological
    space" concretely: the left order is linear and the topology generated by
    both nests equals the open-ray topology of that order.  On finite linear
    orders the latter is the discrete topology.
    """

    sup_onto_pair: bool
    t0_escape_pair: bool
    order_linear: bool
    ray_topology_matches: bool

    @property
    def hypotheses_hold(self) -> bool:
        return self.sup_onto_pair or self.t0_escape_pair

    @property
    def is_lots(self) -> bool:
        return self.order_linear and self.ray_topology_matches


def lots_report(pair: DualPair) -> LotsReport:
    left, right = pair.left, pair.right
    cond = sup_conditions(left)
    cond_dual = dual_sup_conditions(pair)
    sup_onto_pair = cond.sups_onto and cond_dual.sups_onto
    t0_escape_pair = (
        t0_separates(left)
        and t0_separates(right)
        and cond.sups_escape
        and cond_dual.sups_escape
    )
    rel = generated_order(left)
    both = topology_from_subbase(
        SetFamily.dedupe(left.universe, left.masks + right.masks)
    )
    return LotsReport(
        sup_onto_pair=sup_onto_pair,
        t0_escape_pair=t0_escape_pair,
        order_linear=is_linear_order(rel),
        ray_topology_matches=both == open_ray_topology(rel),
    )
