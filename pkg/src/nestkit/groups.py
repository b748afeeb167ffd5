"""Finite groups as validated Cayley tables, and the compatibility of
nest-generated orders with the group operation.

Built-in constructors cover the small abelian groups plus S3 and D4, so the
sweeps exercise a non-abelian case as well.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .core import InstanceError, Nest, SetFamily, Subset, Universe
from .orders import generated_order
from .topology import (
    Topology,
    is_continuous,
    pair_index,
    product_topology,
    topology_from_subbase,
)


@dataclass(frozen=True)
class FiniteGroup:
    """Group given by its Cayley table; structure is verified on construction."""

    table: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        n = len(self.table)
        if n < 1:
            raise InstanceError("a group has at least one element")
        table = tuple(tuple(row) for row in self.table)
        object.__setattr__(self, "table", table)
        for row in table:
            if len(row) != n or any(not 0 <= v < n for v in row):
                raise InstanceError("Cayley table must be a square over element indices")
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if table[table[a][b]][c] != table[a][table[b][c]]:
                        raise InstanceError(
                            f"operation is not associative at ({a},{b},{c})"
                        )
        identities = [
            e for e in range(n)
            if all(table[e][a] == a == table[a][e] for a in range(n))
        ]
        if len(identities) != 1:
            raise InstanceError("table has no (unique) identity element")
        e = identities[0]
        for a in range(n):
            if not any(table[a][b] == e == table[b][a] for b in range(n)):
                raise InstanceError(f"element {a} has no inverse")

    @property
    def order(self) -> int:
        return len(self.table)

    @cached_property
    def identity(self) -> int:
        n = self.order
        return next(
            e for e in range(n)
            if all(self.table[e][a] == a == self.table[a][e] for a in range(n))
        )

    @cached_property
    def inverse(self) -> tuple[int, ...]:
        e = self.identity
        n = self.order
        return tuple(
            next(b for b in range(n) if self.table[a][b] == e)
            for a in range(n)
        )

    @cached_property
    def universe(self) -> Universe:
        return Universe(self.order, self.labels)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    @classmethod
    def cyclic(cls, n: int) -> FiniteGroup:
        table = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
        return cls(table, tuple(str(i) for i in range(n)))

    @classmethod
    def klein_four(cls) -> FiniteGroup:
        # indices encode (bit0, bit1); xor is the operation
        table = tuple(tuple(a ^ b for b in range(4)) for a in range(4))
        return cls(table, ("e", "a", "b", "ab"))

    @classmethod
    def symmetric_3(cls) -> FiniteGroup:
        perms = [(0, 1, 2), (1, 0, 2), (2, 1, 0), (0, 2, 1), (1, 2, 0), (2, 0, 1)]
        names = ("e", "(01)", "(02)", "(12)", "(012)", "(021)")
        compose = lambda p, q: tuple(p[q[i]] for i in range(3))
        table = tuple(
            tuple(perms.index(compose(p, q)) for q in perms) for p in perms
        )
        return cls(table, names)

    @classmethod
    def dihedral_4(cls) -> FiniteGroup:
        # elements r^i s^j, i mod 4, j mod 2, encoded as i + 4j
        def mul(x: int, y: int) -> int:
            i, j = x % 4, x // 4
            k, l = y % 4, y // 4
            if j == 0:
                return (i + k) % 4 + 4 * l
            return (i - k) % 4 + 4 * ((j + l) % 2)

        table = tuple(tuple(mul(a, b) for b in range(8)) for a in range(8))
        names = ("e", "r", "r2", "r3", "s", "rs", "r2s", "r3s")
        return cls(table, names)


BUILTIN_GROUPS = {
    "z2": lambda: FiniteGroup.cyclic(2),
    "z3": lambda: FiniteGroup.cyclic(3),
    "z4": lambda: FiniteGroup.cyclic(4),
    "z2xz2": FiniteGroup.klein_four,
    "s3": FiniteGroup.symmetric_3,
    "d4": FiniteGroup.dihedral_4,
}


def translate(group: FiniteGroup, g: int, subset: Subset, side: str) -> Subset:
    """Image of a subset under left (g*x) or right (x*g) translation."""
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    mask = 0
    for x in group.universe.elements():
        if subset.mask >> x & 1:
            y = group.mul(g, x) if side == "left" else group.mul(x, g)
            mask |= 1 << y
    return Subset(group.universe, mask)


def set_product(group: FiniteGroup, a_mask: int, b_mask: int) -> int:
    out = 0
    for a in group.universe.elements():
        if a_mask >> a & 1:
            for b in group.universe.elements():
                if b_mask >> b & 1:
                    out |= 1 << group.mul(a, b)
    return out


def set_inverse(group: FiniteGroup, mask: int) -> int:
    out = 0
    for a in group.universe.elements():
        if mask >> a & 1:
            out |= 1 << group.inverse[a]
    return out


def translation_closed(group: FiniteGroup, family: SetFamily) -> bool:
    """Every left and right translate of every member stays in the family."""
    members = set(family.masks)
    for g in group.universe.elements():
        for m in family.masks:
            left = translate(group, g, Subset(group.universe, m), "left").mask
            right = translate(group, g, Subset(group.universe, m), "right").mask
            if left not in members or right not in members:
                return False
    return True


def order_compatible(group: FiniteGroup, nest: SetFamily) -> bool:
    """Is the generated order invariant, as a biconditional, under every left
    and right translation?"""
    rel = generated_order(nest)
    n = group.order
    for a in range(n):
        for b in range(n):
            v = rel.holds(a, b)
            for g in range(n):
                if rel.holds(group.mul(a, g), group.mul(b, g)) != v:
                    return False
                if rel.holds(group.mul(g, a), group.mul(g, b)) != v:
                    return False
    return True


@dataclass(frozen=True)
class ContinuityReport:
    premise: bool
    continuous: bool


def subbase_topology(group: FiniteGroup, left: SetFamily, right: SetFamily) -> Topology:
    return topology_from_subbase(
        SetFamily.dedupe(group.universe, left.masks + right.masks)
    )


def inversion_continuity(
    group: FiniteGroup, left: SetFamily, right: SetFamily
) -> ContinuityReport:
    """Premise: the two families swap under elementwise inversion.
    Conclusion: x -> x^-1 is continuous for the topology they generate."""
    topo = subbase_topology(group, left, right)
    return ContinuityReport(
        inversion_premise(group, left, right), inversion_continuous(group, topo)
    )


def inversion_premise(group: FiniteGroup, left: SetFamily, right: SetFamily) -> bool:
    lmembers, rmembers = set(left.masks), set(right.masks)
    return all(set_inverse(group, m) in rmembers for m in left.masks) and all(
        set_inverse(group, m) in lmembers for m in right.masks
    )


def inversion_continuous(group: FiniteGroup, topo: Topology) -> bool:
    return is_continuous(group.inverse, topo, topo)


def multiplication_continuity(
    group: FiniteGroup, left: SetFamily, right: SetFamily
) -> ContinuityReport:
    """Premise: products factor through member neighbourhoods, family by
    family.  Conclusion: (x,y) -> x*y is continuous from the product topology."""
    premise = multiplication_premise(group, left) and multiplication_premise(group, right)
    topo = subbase_topology(group, left, right)
    return ContinuityReport(premise, multiplication_continuous(group, topo))


def multiplication_premise(group: FiniteGroup, family: SetFamily) -> bool:
    return _product_factorization(group, family)


def multiplication_continuous(group: FiniteGroup, topo: Topology) -> bool:
    """Continuity of (x,y) -> x*y from the product topology, decided through
    basic rectangles: the preimage of an open O is product-open iff every
    point of it sits inside some open rectangle U x V with U*V inside O.

    This never materializes the product topology, which is what keeps the
    sweeps over six-element groups tractable; `product_topology` plus
    `is_continuous` gives the same answer and the suites cross-check the two
    routes on the two- and three-element groups.
    """
    n = group.order
    opens_at = [
        [o for o in topo.opens if o >> x & 1] for x in range(n)
    ]
    for target in topo.opens:
        for x in range(n):
            for y in range(n):
                if not target >> group.mul(x, y) & 1:
                    continue
                if not any(
                    set_product(group, u, v) & ~target == 0
                    for u in opens_at[x]
                    for v in opens_at[y]
                ):
                    return False
    return True


def multiplication_continuous_via_product(
    group: FiniteGroup, topo: Topology
) -> bool:
    """Reference route through the explicit product topology; exponential in
    the group order, so only suitable for the smallest groups."""
    tprod = product_topology(topo, topo)
    n = group.order
    mapping = [group.mul(x, y) for x in range(n) for y in range(n)]
    assert all(
        mapping[pair_index(group.universe, group.universe, x, y)] == group.mul(x, y)
        for x in range(n)
        for y in range(n)
    )
    return is_continuous(mapping, tprod, topo)


def _product_factorization(group: FiniteGroup, family: SetFamily) -> bool:
    n = group.order
    for target in family.masks:
        for x in range(n):
            for y in range(n):
                if not target >> group.mul(x, y) & 1:
                    continue
                if not any(
                    fx >> x & 1 and fy >> y & 1
                    and set_product(group, fx, fy) & ~target == 0
                    for fx in family.masks
                    for fy in family.masks
                ):
                    return False
    return True


def nest_members_trivial(group: FiniteGroup, nest: Nest) -> bool:
    """Structural fact surfaced by the sweeps: a translation-closed nest on a
    finite group can only contain the empty set and the whole group
    (translations preserve cardinality, and nest members have distinct
    cardinalities)."""
    full = group.universe.full_mask
    return all(m in (0, full) for m in nest.masks)
