from fractions import Fraction

import pytest

from nestkit.core import InstanceError
from nestkit.rays import (
    Carrier,
    EndpointSet,
    Quadratic,
    RayNest,
    Window,
    dual,
    dual_sup_conditions,
    exists_endpoint_between,
    group_compatibility,
    order_holds,
    order_matches_carrier,
    rational_between,
    separates,
    separation_witness,
    shift_closure_description,
    sup_conditions,
)

Q = Quadratic.rational
R2 = Quadratic.sqrt2
LINE = Carrier("Qsqrt2")
UNIT = Carrier("Qsqrt2", Window(Q(0), Q(1)))


def test_quadratic_arithmetic_and_order():
    x = Q(Fraction(1, 2)) + R2(Fraction(1, 3))
    assert x.a == Fraction(1, 2) and x.b == Fraction(1, 3)
    assert (R2() * R2()).a == 2
    assert (x - x).sign() == 0
    assert Q(1) < R2() < Q(2) < R2(2)
    assert R2() > Q(Fraction(7, 5))  # 1.4 < sqrt2
    assert R2() < Q(Fraction(3, 2))
    assert (R2() / R2()).a == 1
    assert (Q(1) / (Q(1) + R2())).b == Fraction(1)  # 1/(1+√2) = -1+√2
    with pytest.raises(ZeroDivisionError):
        Q(1) / Q(0)


def test_quadratic_floor_and_between():
    assert Q(Fraction(7, 2)).floor() == 3
    assert Q(-Fraction(7, 2)).floor() == -4
    assert R2().floor() == 1
    assert (R2(3)).floor() == 4  # 3*sqrt2 = 4.2426
    assert (-R2()).floor() == -2
    q = rational_between(Q(0), R2(Fraction(1, 100)))
    assert Q(0) < Q(q) < R2(Fraction(1, 100))
    with pytest.raises(ValueError):
        rational_between(Q(1), Q(1))


def test_ray_membership():
    nest = RayNest(LINE, "open", EndpointSet.all_carrier())
    assert nest.ray_contains(Q(Fraction(1, 2)), Q(1))
    assert not nest.ray_contains(Q(1), Q(1))
    closed = RayNest(LINE, "closed", EndpointSet.all_carrier())
    assert closed.ray_contains(Q(1), Q(1))
    assert RayNest(Carrier("Qsqrt2"), "open", EndpointSet.all_carrier()).ray_contains(
        R2(), Q(2)
    )  # sqrt2 < 2 by the square comparison
    windowed = RayNest(UNIT, "open", EndpointSet.all_carrier())
    with pytest.raises(InstanceError):
        windowed.ray_contains(Q(2), Q(1))


def test_windows_and_carriers():
    assert UNIT.contains(Q(Fraction(1, 2)))
    assert not UNIT.contains(Q(1))
    assert not Carrier("Q").contains(R2())
    with pytest.raises(InstanceError):
        Window(Q(1), Q(0))


def test_sup_condition_table():
    half, one = Q(Fraction(1, 2)), Q(1)
    open_dense = RayNest(LINE, "open", EndpointSet.all_carrier())
    assert sup_conditions(open_dense) == type(sup_conditions(open_dense))(True, True, True)
    closed_window = RayNest(UNIT, "closed", EndpointSet.dense_interval(half, one))
    cond = sup_conditions(closed_window)
    assert cond.sups_exist and not cond.sups_escape
    open_window = RayNest(UNIT, "open", EndpointSet.dense_interval(half, one))
    cond = sup_conditions(open_window)
    assert cond.sups_escape and not cond.sups_onto
    irrational = RayNest(Carrier("Q"), "open", EndpointSet.finite([R2()]))
    assert not sup_conditions(irrational).sups_exist
    naturals = RayNest(LINE, "open", EndpointSet.progression(Q(0), Q(1)))
    cond = sup_conditions(naturals)
    assert cond.sups_escape and not cond.sups_onto


def test_t0_rule_and_witnesses():
    assert separates(RayNest(LINE, "closed", EndpointSet.all_carrier()))
    gappy = RayNest(UNIT, "closed", EndpointSet.dense_interval(Q(Fraction(1, 2)), Q(1)))
    witness = separation_witness(gappy)
    assert witness is not None
    x, y = witness
    assert Q(0) < Q(x) < Q(y) < Q(Fraction(1, 2))
    naturals = RayNest(LINE, "open", EndpointSet.progression(Q(0), Q(1)))
    assert not separates(naturals)
    wx, wy = separation_witness(naturals)
    assert not order_holds(naturals, Q(wx), Q(wy))


def test_order_matches_carrier():
    matched, why = order_matches_carrier(RayNest(LINE, "open", EndpointSet.all_carrier()))
    assert matched and "dense" in why
    failed, why = order_matches_carrier(
        RayNest(LINE, "open", EndpointSet.progression(Q(0), Q(1)))
    )
    assert not failed and "no ray endpoint" in why
    failed, _ = order_matches_carrier(RayNest(LINE, "open", EndpointSet.finite([Q(0)])))
    assert not failed


def test_dual_mirror():
    naturals = RayNest(LINE, "open", EndpointSet.progression(Q(0), Q(1)))
    mirrored = dual(naturals)
    assert mirrored.orientation == "upper"
    assert dual(mirrored) == naturals
    assert dual_sup_conditions(naturals) == sup_conditions(naturals)
    assert separates(mirrored) == separates(naturals)
    # upper-ray order is the reverse of the carrier order where endpoints allow
    assert order_holds(mirrored, Q(2), Q(1))
    assert not order_holds(mirrored, Q(1), Q(2))


def test_symbolic_order_evaluation():
    dense = RayNest(LINE, "open", EndpointSet.all_carrier())
    assert order_holds(dense, Q(0), Q(1))
    assert not order_holds(dense, Q(1), Q(0))
    assert not order_holds(dense, Q(1), Q(1))
    closed = RayNest(LINE, "closed", EndpointSet.all_carrier())
    assert order_holds(closed, Q(0), Q(1))
    finite = RayNest(LINE, "open", EndpointSet.finite([R2()]))
    assert order_holds(finite, Q(1), Q(2))  # sqrt2 in (1, 2]
    assert not order_holds(finite, Q(2), Q(3))
    assert exists_endpoint_between(finite, Q(1), Q(2), True, False)
    assert not exists_endpoint_between(finite, Q(2), Q(3), True, False)


def test_group_compatibility():
    dense = RayNest(LINE, "open", EndpointSet.all_carrier())
    add = group_compatibility("add", dense)
    assert add.premise_translation_closed and add.compatible
    mult = group_compatibility("multiply", dense)
    assert not mult.compatible and mult.witness
    naturals = RayNest(LINE, "open", EndpointSet.progression(Q(0), Q(1)))
    shifted = group_compatibility("add", naturals)
    assert not shifted.premise_translation_closed and not shifted.compatible
    assert "gap" in shifted.witness
    assert "one-sided" in shift_closure_description(naturals)
    with pytest.raises(ValueError):
        group_compatibility("add", RayNest(UNIT, "open", EndpointSet.all_carrier()))
    with pytest.raises(ValueError):
        group_compatibility("divide", dense)


def test_additive_witness_is_sound():
    # re-check a recorded witness through the symbolic order
    for eps in (
        EndpointSet.progression(Q(0), Q(1)),
        EndpointSet.dense_interval(Q(Fraction(1, 2)), Q(1)),
        EndpointSet.finite([R2()]),
        EndpointSet.finite([Q(0), Q(2)]),
    ):
        for shape in ("open", "closed"):
            nest = RayNest(LINE, shape, eps)
            report = group_compatibility("add", nest)
            assert not report.compatible and report.witness is not None
