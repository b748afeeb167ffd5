from nestkit.bounds import (
    covering_subfamilies,
    down_reach_covers,
    has_lower_bound,
    has_upper_bound,
    up_reach_covers,
)
from nestkit.core import Nest, Subset, Universe, enumerate_nests
from nestkit.topology import down_set, up_set
from nestkit.orders import generated_order

U2 = Universe(2)
U3 = Universe(3)
CHAIN = Nest.of(U3, [[], [0], [0, 1]])
FULL_CHAIN = Nest.of(U3, [[0], [0, 1], [0, 1, 2]])


def test_down_reach_examples():
    result = down_reach_covers(FULL_CHAIN, Subset.of(U3, [2]))
    assert not result.holds
    assert result.witness_family is None
    # the uncovered remainder is everything not strictly below the region
    assert result.violating_member.indices == (2,)
    whole = down_reach_covers(FULL_CHAIN, Subset(U3, U3.full_mask))
    assert not whole.holds
    assert whole.violating_member.indices == (2,)  # only x3 escapes the reach


def test_up_reach_examples():
    u = Universe(2)
    nest = Nest.of(u, [[0], [0, 1]])
    result = up_reach_covers(nest, Subset.of(u, [0]))
    assert not result.holds
    assert result.violating_member.indices == (0,)
    # a region meeting no member reaches nothing at all
    lonely = up_reach_covers(Nest.of(U3, [[0]]), Subset.of(U3, [1]))
    assert not lonely.holds
    assert lonely.violating_member.mask == U3.full_mask


def test_reach_never_covers_finite_universes():
    # a nest order is a finite strict partial order, so maximal elements
    # escape every downward reach and minimal ones every upward reach; the
    # covering verdict can only fire on infinite carriers
    for n in (1, 2, 3):
        u = Universe(n)
        for nest in enumerate_nests(u):
            order = generated_order(nest)
            for mask in range(u.full_mask + 1):
                region = Subset(u, mask)
                down = down_reach_covers(nest, region)
                up = up_reach_covers(nest, region)
                assert not down.holds and not up.holds
                assert down.violating_member.mask == (
                    u.full_mask ^ down_set(order, region).mask
                )
                assert up.violating_member.mask == (
                    u.full_mask ^ up_set(order, region).mask
                )


def test_bound_predicates():
    assert has_upper_bound(CHAIN, Subset.of(U3, [0]))  # x2 sits strictly above
    assert has_upper_bound(CHAIN, Subset(U3, 0))  # vacuous for the empty region
    assert not has_upper_bound(CHAIN, Subset(U3, U3.full_mask))
    assert has_lower_bound(CHAIN, Subset.of(U3, [1, 2]))
    assert not has_lower_bound(CHAIN, Subset.of(U3, [0]))
    # reflexive bounds accept points of the region itself
    assert has_upper_bound(CHAIN, Subset(U3, U3.full_mask), strict=False)


def test_strict_form_diverges_at_the_top():
    nest = Nest.of(U2, [[0]])
    whole = Subset(U2, U2.full_mask)
    assert not down_reach_covers(nest, whole, want_witness=False).holds
    assert not has_upper_bound(nest, whole, strict=True)
    assert has_upper_bound(nest, whole, strict=False)


def test_member_bound_facts_on_t0_chains():
    # any member other than the whole set has a strict upper bound outside,
    # and a nonempty member has a strict lower bound iff the minimum escapes it
    for member in ([0], [0, 1]):
        assert has_upper_bound(FULL_CHAIN, Subset.of(U3, member))
    assert not has_lower_bound(FULL_CHAIN, Subset.of(U3, [0]))
    assert not has_lower_bound(CHAIN, Subset.of(U3, [0]))


def test_covering_subfamilies():
    covers = covering_subfamilies(FULL_CHAIN)
    assert covers
    for chosen in covers:
        union = 0
        for m in chosen:
            union |= m
        assert union == U3.full_mask
    assert covering_subfamilies(CHAIN) == []  # the chain never reaches x3
