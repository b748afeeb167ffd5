import pytest

from nestkit.core import InstanceError, Nest, SetFamily, Subset, Universe
from nestkit.orders import Relation, generated_order, reflexive_closure
from nestkit.topology import (
    Topology,
    alexandroff_family,
    down_set,
    interval_topology,
    is_closed,
    is_closed_in_family,
    is_continuous,
    join,
    lower_topology,
    point_down_set,
    point_up_set,
    product_topology,
    topology_from_subbase,
    up_set,
    upper_topology,
)

U2 = Universe(2)
U3 = Universe(3)
U4 = Universe(4)
QUAD = Nest.of(U4, [[0, 1], [0, 1, 2, 3]])
QUAD_PRE = reflexive_closure(generated_order(QUAD))
PAIR = Nest.of(U2, [[0]])
PAIR_PRE = reflexive_closure(generated_order(PAIR))


def test_topology_invariants_enforced():
    with pytest.raises(InstanceError):
        Topology(U2, (0,))  # missing the whole set
    with pytest.raises(InstanceError):
        Topology(U3, (0, 0b001, 0b010, 0b111))  # not closed under union
    Topology(U3, (0, 0b001, 0b011, 0b111))


def test_subbase_examples():
    assert topology_from_subbase(PAIR).opens == (0, 0b01, 0b11)
    assert topology_from_subbase(QUAD).opens == (0, 0b0011, 0b1111)
    singles = SetFamily.of(U3, [[0], [1], [2]])
    assert topology_from_subbase(singles).is_discrete()
    # empty subbase gives the indiscrete topology
    assert topology_from_subbase(SetFamily.of(U3, [])).opens == (0, 0b111)


def test_point_up_down_sets_reflexive_convention():
    assert point_up_set(QUAD_PRE, 0).indices == (0, 2, 3)
    assert point_up_set(QUAD_PRE, 0).complement().indices == (1,)
    assert point_down_set(PAIR_PRE, 1).indices == (0, 1)
    isolated = Relation.diagonal(U3)
    assert point_up_set(isolated, 1).indices == (1,)


def test_strict_region_reach():
    order = generated_order(QUAD)
    assert up_set(order, Subset(U4, 0)).mask == 0
    assert up_set(order, Subset.of(U4, [0])).indices == (2, 3)
    chain = Nest.of(U3, [[], [0], [0, 1]])
    assert down_set(generated_order(chain), Subset(U3, U3.full_mask)).indices == (0, 1)


def test_lower_and_upper_topology_rosters():
    lower = lower_topology(QUAD_PRE)
    assert lower.opens == (0, 0b0001, 0b0010, 0b0011, 0b0111, 0b1011, 0b1111)
    upper = upper_topology(QUAD_PRE)
    assert upper.opens == (0, 0b0100, 0b1000, 0b1100, 0b1101, 0b1110, 0b1111)
    assert upper_topology(PAIR_PRE).opens == (0, 0b10, 0b11)
    # antichain: both order topologies come from the co-singleton subbase
    diag = Relation.diagonal(U3)
    cosingles = SetFamily.of(U3, [[1, 2], [0, 2], [0, 1]])
    assert lower_topology(diag) == topology_from_subbase(cosingles)
    assert upper_topology(diag) == topology_from_subbase(cosingles)


def test_join_and_interval():
    assert interval_topology(PAIR_PRE).is_discrete()
    assert interval_topology(QUAD_PRE).is_discrete()
    t = topology_from_subbase(PAIR)
    indiscrete = Topology(U2, (0, U2.full_mask))
    assert join(t, indiscrete) == t
    assert join(t, t) == t


def test_alexandroff_family():
    order = generated_order(QUAD)
    family = alexandroff_family(order)
    assert family.contains_mask(0)
    assert not family.contains_mask(0b1100)  # {x3,x4} has empty upward reach
    # nothing reaches above x3/x4, so the empty set is the only fixed point
    assert family.masks == (0,)
    # the whole universe need not belong: under a chain the bottom is unreachable
    chain_order = generated_order(Nest.of(U3, [[0], [0, 1], [0, 1, 2]]))
    assert not alexandroff_family(chain_order).contains_mask(U3.full_mask)


def test_is_closed():
    topo = topology_from_subbase(QUAD)
    assert is_closed(topo, Subset(U4, 0))
    assert is_closed(topo, Subset(U4, U4.full_mask))
    assert is_closed(topo, Subset.of(U4, [2, 3]))
    assert not is_closed(topo, Subset.of(U4, [0]))
    family = alexandroff_family(generated_order(QUAD))
    assert is_closed_in_family(family, Subset(U4, U4.full_mask))
    assert not is_closed_in_family(family, Subset.of(U4, [0, 1]))


def test_product_and_continuity():
    t = topology_from_subbase(PAIR)
    prod = product_topology(t, t)
    assert prod.universe.size == 4
    identity = list(range(2))
    assert is_continuous(identity, t, t)
    indiscrete = Topology(U2, (0, U2.full_mask))
    assert is_continuous([1, 0], t, indiscrete)  # anything into indiscrete
    assert not is_continuous([1, 0], t, t)  # swapping breaks {x1}
    # projections from the product are continuous
    first = [x for x in range(2) for _ in range(2)]
    second = [y for _ in range(2) for y in range(2)]
    assert is_continuous(first, prod, t)
    assert is_continuous(second, prod, t)
    with pytest.raises(ValueError):
        is_continuous([0], t, t)
