"""Core domain model for 0-1 knapsack instances and packings.

An instance is an ordered list of items (positive integer weight,
nonnegative integer value) plus a nonnegative integer capacity. A packing
is a set of 1-based item indices. The module also provides a brute-force
enumerator over all 2^n packings, used as ground truth for the dynamic
programming counters on small instances.
"""

import hashlib
from dataclasses import dataclass, field

import numpy as np

# A packing: frozenset of 1-based item indices.
Solution = frozenset

# Default ceiling for exhaustive enumeration (2^24 subsets).
MAX_ORACLE_ITEMS = 24

_I64_MAX = int(np.iinfo(np.int64).max)


class KnapsackError(Exception):
    """Base class for errors raised by this package."""


class InvalidInstanceError(KnapsackError):
    """An operation received an instance that violates its invariants."""


class InvalidSolutionError(KnapsackError):
    """A packing references item indices outside the instance."""


class InstanceTooLargeError(KnapsackError):
    """The brute-force enumerator refused an instance above its ceiling."""


@dataclass(frozen=True)
class Item:
    """One knapsack item: weight must be >= 1, value >= 0."""

    weight: int
    value: int


@dataclass(frozen=True)
class Instance:
    """An ordered collection of items plus a knapsack capacity.

    Items are indexed 1..n everywhere in this package. Construction is
    permissive; run ``validate_instance`` (or ``ensure_valid``) to check
    the invariants. Degenerate instances (n = 0 or capacity 0) are legal
    and have the empty packing as their unique optimum.
    """

    items: tuple = field(default=())
    capacity: int = 0

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(self.items))

    @classmethod
    def from_lists(cls, weights, values, capacity) -> "Instance":
        if len(weights) != len(values):
            raise ValueError("weights and values must have equal length")
        items = tuple(Item(int(w), int(v)) for w, v in zip(weights, values))
        return cls(items, int(capacity))

    @property
    def n(self) -> int:
        return len(self.items)

    @property
    def weights(self) -> tuple:
        return tuple(it.weight for it in self.items)

    @property
    def values(self) -> tuple:
        return tuple(it.value for it in self.items)

    def fingerprint(self) -> str:
        """Content digest over (n, capacity, weights, values).

        Binds derived artifacts (DP tables) to the exact instance they
        were computed from.
        """
        h = hashlib.sha256()
        h.update(f"{self.n} {self.capacity}".encode())
        for it in self.items:
            h.update(f"|{it.weight} {it.value}".encode())
        return h.hexdigest()


@dataclass(frozen=True)
class OracleResult:
    """Exhaustive enumeration result.

    ``optima`` lists every feasible packing of maximum value, so
    ``count == len(optima)`` always holds.
    """

    v_max: int
    count: int
    optima: list


def validate_instance(inst: Instance) -> list:
    """Return the list of violated invariants; an empty list means valid."""
    problems = []
    for pos, item in enumerate(inst.items, start=1):
        if item.weight < 1:
            problems.append(f"item {pos}: weight must be >= 1")
        if item.value < 0:
            problems.append(f"item {pos}: value must be >= 0")
    if inst.capacity < 0:
        problems.append("capacity must be >= 0")
    return problems


def ensure_valid(inst: Instance) -> None:
    problems = validate_instance(inst)
    if problems:
        raise InvalidInstanceError("; ".join(problems))


def _check_indices(s, inst):
    for i in s:
        if not 1 <= i <= inst.n:
            raise InvalidSolutionError(f"item index {i} outside 1..{inst.n}")


def total_weight(s, inst: Instance) -> int:
    """Sum of weights of the indexed items; 0 for the empty packing."""
    _check_indices(s, inst)
    return sum(inst.items[i - 1].weight for i in s)


def total_value(s, inst: Instance) -> int:
    """Sum of values of the indexed items; 0 for the empty packing."""
    _check_indices(s, inst)
    return sum(inst.items[i - 1].value for i in s)


def is_feasible(s, inst: Instance) -> bool:
    return total_weight(s, inst) <= inst.capacity


def _decode_subset(mask: int, n: int) -> frozenset:
    return frozenset(i for i in range(1, n + 1) if (mask >> (i - 1)) & 1)


def _subset_sums_int64(inst):
    # Doubling construction: index j encodes membership bitmask, bit i-1
    # for item i. Stays exact while totals fit in int64.
    sw = np.zeros(1, dtype=np.int64)
    sv = np.zeros(1, dtype=np.int64)
    for it in inst.items:
        sw = np.concatenate([sw, sw + it.weight])
        sv = np.concatenate([sv, sv + it.value])
    return sw, sv


def brute_force_optima(inst: Instance, max_n: int = MAX_ORACLE_ITEMS) -> OracleResult:
    """Enumerate all 2^n packings; exact optimum value, count and list.

    Ground truth for the DP counters. Cost doubles per item, hence the
    ceiling; raise it explicitly if you can afford the blow-up.
    """
    ensure_valid(inst)
    if inst.n > max_n:
        raise InstanceTooLargeError(
            f"{inst.n} items exceed the enumeration ceiling of {max_n}"
        )
    if max(sum(inst.weights), sum(inst.values), inst.capacity, 0) <= _I64_MAX:
        sw, sv = _subset_sums_int64(inst)
        feasible = sw <= inst.capacity
        v_max = int(sv[feasible].max())
        hits = np.flatnonzero(feasible & (sv == v_max)).tolist()
    else:
        # Totals beyond int64: same doubling with plain Python integers.
        sw, sv = [0], [0]
        for it in inst.items:
            sw += [x + it.weight for x in sw]
            sv += [x + it.value for x in sv]
        v_max = max(v for w, v in zip(sw, sv) if w <= inst.capacity)
        hits = [
            j
            for j, (w, v) in enumerate(zip(sw, sv))
            if w <= inst.capacity and v == v_max
        ]
    optima = [_decode_subset(j, inst.n) for j in hits]
    return OracleResult(v_max=v_max, count=len(optima), optima=optima)
