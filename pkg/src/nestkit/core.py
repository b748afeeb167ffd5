"""Finite ground model: universes, bitmask subsets, set families and nests.

Subsets are value-semantic membership masks over a fixed universe, so
equality is extensional, everything is hashable, and enumeration is cheap.
Families are kept in a canonical order (cardinality, then mask) so that
serialized instances and reports are byte-stable across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

NEST_ENUMERATION_BOUND = 4
FAMILY_ENUMERATION_BOUND = 3


class InstanceError(ValueError):
    """A value violates a structural invariant of its type."""


@dataclass(frozen=True)
class Universe:
    """Ground set of ``size`` elements, optionally carrying display labels."""

    size: int
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if self.size < 1:
            raise InstanceError(f"universe size must be >= 1, got {self.size}")
        if self.labels is not None:
            labels = tuple(self.labels)
            object.__setattr__(self, "labels", labels)
            if len(labels) != self.size:
                raise InstanceError(
                    f"expected {self.size} labels, got {len(labels)}"
                )
            if len(set(labels)) != len(labels):
                raise InstanceError("labels must be distinct")

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def label(self, index: int) -> str:
        if self.labels is not None:
            return self.labels[index]
        return f"x{index + 1}"

    def elements(self) -> range:
        return range(self.size)


def mask_of(indices: Iterable[int], size: int) -> int:
    """Pack element indices into a membership mask, validating the range."""
    mask = 0
    for i in indices:
        if not 0 <= i < size:
            raise InstanceError(f"element index {i} out of range for size {size}")
        mask |= 1 << i
    return mask


def indices_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return mask.bit_count()


@dataclass(frozen=True)
class Subset:
    """A subset of a universe, stored as a membership mask."""

    universe: Universe
    mask: int

    def __post_init__(self) -> None:
        if not 0 <= self.mask <= self.universe.full_mask:
            raise InstanceError(f"mask {self.mask:#x} does not fit the universe")

    @classmethod
    def of(cls, universe: Universe, indices: Iterable[int]) -> Subset:
        return cls(universe, mask_of(indices, universe.size))

    @property
    def indices(self) -> tuple[int, ...]:
        return indices_of(self.mask)

    @property
    def cardinality(self) -> int:
        return popcount(self.mask)

    def contains(self, index: int) -> bool:
        return bool(self.mask >> index & 1)

    def complement(self) -> Subset:
        return Subset(self.universe, self.mask ^ self.universe.full_mask)

    def union(self, other: Subset) -> Subset:
        _check_same_universe(self.universe, other.universe)
        return Subset(self.universe, self.mask | other.mask)

    def intersection(self, other: Subset) -> Subset:
        _check_same_universe(self.universe, other.universe)
        return Subset(self.universe, self.mask & other.mask)

    def issubset(self, other: Subset) -> bool:
        _check_same_universe(self.universe, other.universe)
        return self.mask & ~other.mask == 0

    def render(self) -> str:
        if self.mask == 0:
            return "{}"
        return "{" + ",".join(self.universe.label(i) for i in self.indices) + "}"


def _check_same_universe(a: Universe, b: Universe) -> None:
    if a != b:
        raise InstanceError("operands live in different universes")


def canonical_masks(masks: Iterable[int]) -> tuple[int, ...]:
    """Sort masks by (cardinality, mask value); the one canonical family order."""
    return tuple(sorted(masks, key=lambda m: (popcount(m), m)))


@dataclass(frozen=True)
class SetFamily:
    """A duplicate-free collection of subsets of one universe."""

    universe: Universe
    masks: tuple[int, ...]

    def __post_init__(self) -> None:
        masks = canonical_masks(self.masks)
        object.__setattr__(self, "masks", masks)
        full = self.universe.full_mask
        for m in masks:
            if not 0 <= m <= full:
                raise InstanceError(f"member mask {m:#x} does not fit the universe")
        if len(set(masks)) != len(masks):
            raise InstanceError("family members must be distinct")

    @classmethod
    def of(cls, universe: Universe, members: Iterable[Iterable[int]]) -> SetFamily:
        return cls(universe, tuple(mask_of(ids, universe.size) for ids in members))

    @classmethod
    def dedupe(cls, universe: Universe, masks: Iterable[int]) -> SetFamily:
        return cls(universe, tuple(set(masks)))

    def __len__(self) -> int:
        return len(self.masks)

    def __iter__(self) -> Iterator[int]:
        return iter(self.masks)

    def subsets(self) -> tuple[Subset, ...]:
        return tuple(Subset(self.universe, m) for m in self.masks)

    def contains_mask(self, mask: int) -> bool:
        return mask in self.masks

    def render(self) -> str:
        if not self.masks:
            return "{}"
        inner = ", ".join(Subset(self.universe, m).render() for m in self.masks)
        return "{" + inner + "}"


class Nest(SetFamily):
    """A set family totally ordered by inclusion."""

    def __post_init__(self) -> None:
        super().__post_init__()
        # canonical order sorts by cardinality, so a chain is nested in order
        for small, big in zip(self.masks, self.masks[1:]):
            if small & ~big:
                raise InstanceError(
                    f"members {small:#x} and {big:#x} are not inclusion-comparable"
                )


def is_nest(family: SetFamily) -> bool:
    """True iff every pair of members is inclusion-comparable."""
    masks = canonical_masks(family.masks)
    return all(small & ~big == 0 for small, big in zip(masks, masks[1:]))


def as_nest(family: SetFamily) -> Nest:
    return Nest(family.universe, family.masks)


def family_complement(family: SetFamily) -> SetFamily:
    """The family of complements {X-L : L in the family}; nests stay nests."""
    full = family.universe.full_mask
    complements = tuple(m ^ full for m in family.masks)
    if isinstance(family, Nest):
        return Nest(family.universe, complements)
    return SetFamily(family.universe, complements)


def enumerate_nests(
    universe: Universe,
    include_trivial: bool = True,
    max_members: int | None = None,
    *,
    bound: int = NEST_ENUMERATION_BOUND,
    offset: int = 0,
    stride: int = 1,
) -> Iterator[Nest]:
    """Yield every inclusion-chain of distinct subsets exactly once.

    The stream is deterministic; ``offset``/``stride`` select a residue class
    of the global sequence so workers can split the space and any slice can be
    regenerated independently.  ``include_trivial`` controls whether the empty
    set and the whole universe may appear as members.
    """
    if universe.size > bound:
        raise ValueError(
            f"universe size {universe.size} exceeds the nest enumeration bound "
            f"{bound}; pass bound= explicitly to go higher"
        )
    candidates = _nest_candidates(universe, include_trivial)
    chain: list[int] = []
    counter = 0

    def emit() -> Nest | None:
        nonlocal counter
        selected = counter % stride == offset
        counter += 1
        return Nest(universe, tuple(chain)) if selected else None

    def extend(start: int) -> Iterator[Nest]:
        if max_members is not None and len(chain) >= max_members:
            return
        for j in range(start, len(candidates)):
            top = chain[-1]
            cand = candidates[j]
            if top & ~cand == 0 and cand != top:
                chain.append(cand)
                nest = emit()
                if nest is not None:
                    yield nest
                yield from extend(j + 1)
                chain.pop()

    nest = emit()
    if nest is not None:
        yield nest
    for i in range(len(candidates)):
        chain.append(candidates[i])
        nest = emit()
        if nest is not None:
            yield nest
        yield from extend(i + 1)
        chain.pop()


def count_nests(
    universe: Universe,
    include_trivial: bool = True,
    max_members: int | None = None,
) -> int:
    """Number of nests `enumerate_nests` yields, via an independent recursion."""
    candidates = _nest_candidates(universe, include_trivial)
    cap = len(candidates) if max_members is None else max_members

    @lru_cache(maxsize=None)
    def chains_from(i: int, budget: int) -> int:
        # chains whose minimum member is candidates[i], with <= budget members
        if budget <= 0:
            return 0
        total = 1
        if budget > 1:
            for j in range(i + 1, len(candidates)):
                if candidates[i] & ~candidates[j] == 0 and candidates[j] != candidates[i]:
                    total += chains_from(j, budget - 1)
        return total

    return 1 + sum(chains_from(i, cap) for i in range(len(candidates)))


def _nest_candidates(universe: Universe, include_trivial: bool) -> list[int]:
    full = universe.full_mask
    masks = range(full + 1) if include_trivial else range(1, full)
    return sorted(masks, key=lambda m: (popcount(m), m))


def enumerate_families(
    universe: Universe,
    *,
    bound: int = FAMILY_ENUMERATION_BOUND,
) -> Iterator[SetFamily]:
    """Yield all 2^(2^n) families over the universe (exhaustive test driver)."""
    if universe.size > bound:
        raise ValueError(
            f"universe size {universe.size} exceeds the family enumeration bound "
            f"{bound}; pass bound= explicitly to go higher"
        )
    subsets = list(range(universe.full_mask + 1))
    for pick in range(1 << len(subsets)):
        masks = tuple(subsets[i] for i in range(len(subsets)) if pick >> i & 1)
        yield SetFamily(universe, masks)


def power_set_masks(universe: Universe) -> range:
    return range(universe.full_mask + 1)
