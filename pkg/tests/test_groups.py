import pytest

from nestkit.core import InstanceError, Nest, SetFamily, Subset
from nestkit.groups import (
    BUILTIN_GROUPS,
    FiniteGroup,
    inversion_continuity,
    multiplication_continuity,
    multiplication_continuous,
    multiplication_continuous_via_product,
    nest_members_trivial,
    order_compatible,
    set_inverse,
    set_product,
    subbase_topology,
    translate,
    translation_closed,
)

Z3 = FiniteGroup.cyclic(3)
Z4 = FiniteGroup.cyclic(4)


def test_builtins_are_groups():
    for name, make in BUILTIN_GROUPS.items():
        group = make()
        e = group.identity
        for a in range(group.order):
            assert group.mul(a, group.inverse[a]) == e
            assert group.mul(e, a) == a
    s3 = BUILTIN_GROUPS["s3"]()
    assert any(
        s3.mul(a, b) != s3.mul(b, a)
        for a in range(6)
        for b in range(6)
    )
    assert BUILTIN_GROUPS["d4"]().order == 8


def test_invalid_tables_rejected():
    with pytest.raises(InstanceError):
        FiniteGroup(((0, 1), (1, 1)))  # the and-monoid: 1 has no inverse
    with pytest.raises(InstanceError):
        # subtraction mod 3 is a quasigroup without a two-sided identity
        FiniteGroup(tuple(tuple((a - b) % 3 for b in range(3)) for a in range(3)))
    with pytest.raises(InstanceError):
        FiniteGroup(((0, 1), (1, 2)))  # entry out of range
    # a relabelled two-cycle is still a group even with identity index 1
    assert FiniteGroup(((1, 0), (0, 1))).identity == 1


def test_translate():
    u = Z3.universe
    s = Subset.of(u, [0])
    assert translate(Z3, 1, s, "left").indices == (1,)
    assert translate(Z3, 0, s, "left") == s
    shifted = translate(Z3, 2, Subset.of(u, [0, 1]), "right")
    assert translate(Z3, Z3.inverse[2], shifted, "right").indices == (0, 1)
    with pytest.raises(ValueError):
        translate(Z3, 1, s, "sideways")


def test_translation_closed():
    u4 = Z4.universe
    assert not translation_closed(Z4, SetFamily.of(u4, [[0, 1]]))
    assert translation_closed(Z4, SetFamily.of(u4, [[]]))
    assert translation_closed(Z4, SetFamily.of(u4, [[], [0, 1, 2, 3]]))


def test_order_compatible():
    u = Z3.universe
    assert not order_compatible(Z3, Nest.of(u, [[0]]))
    assert order_compatible(Z3, Nest.of(u, [[]]))
    assert order_compatible(Z3, Nest.of(u, [[], [0, 1, 2]]))
    assert nest_members_trivial(Z3, Nest.of(u, [[], [0, 1, 2]]))
    assert not nest_members_trivial(Z3, Nest.of(u, [[0]]))


def test_set_algebra():
    u = Z3.universe
    assert set_product(Z3, 0b011, 0b001) == 0b011
    assert set_inverse(Z3, 0b010) == 0b100  # 1^-1 = 2 in the 3-cycle


def test_inversion_continuity():
    u = Z3.universe
    left = SetFamily.of(u, [[1]])
    right = SetFamily.of(u, [[2]])
    report = inversion_continuity(Z3, left, right)
    assert report.premise and report.continuous
    whole = SetFamily.of(u, [[0, 1, 2]])
    report = inversion_continuity(Z3, whole, whole)
    assert report.premise and report.continuous
    # a one-sided family misses the premise
    report = inversion_continuity(Z3, left, SetFamily.of(u, []))
    assert not report.premise


def test_multiplication_continuity():
    u = Z3.universe
    whole = SetFamily.of(u, [[0, 1, 2]])
    report = multiplication_continuity(Z3, whole, SetFamily.of(u, []))
    assert report.premise and report.continuous
    singles = SetFamily.of(u, [[0], [1], [2]])
    report = multiplication_continuity(Z3, singles, SetFamily.of(u, []))
    assert report.premise and report.continuous  # discrete topology
    partial = SetFamily.of(u, [[0, 1]])
    assert not multiplication_continuity(Z3, partial, partial).premise


def test_continuity_routes_agree():
    z2 = BUILTIN_GROUPS["z2"]()
    for pick_l in range(16):
        for pick_r in range(0, 16, 3):
            left = SetFamily(z2.universe, tuple(m for m in range(4) if pick_l >> m & 1))
            right = SetFamily(z2.universe, tuple(m for m in range(4) if pick_r >> m & 1))
            topo = subbase_topology(z2, left, right)
            assert multiplication_continuous(z2, topo) == (
                multiplication_continuous_via_product(z2, topo)
            )
