"""Dual-table dynamic program: optimal value and exact number of optima.

The value table holds, at cell (i, w), the best value achievable with
items 1..i under capacity w; the companion count table holds the number
of distinct packings attaining that value. Both corners (n, W) together
answer the counting problem exactly.

Cell (i, w) resolves a leave/take comparison against row i-1. When both
branches reach the same maximum, their counts add; the two packing
families are disjoint (one contains item i, the other does not), so the
sum is exact. Counts are plain Python integers and can grow to any size;
the value table is int64, and the instance's total value is checked
against that width up front.

Row i depends only on row i-1. Counting therefore runs in two-row mode
by default, with memory proportional to the capacity. Full tables are
kept only when a sampler will walk them afterwards.
"""

from dataclasses import dataclass

import numpy as np

from .core import Instance, KnapsackError, ensure_valid

MODE_FULL = "full-table"
MODE_TWO_ROW = "two-row"
MODES = (MODE_FULL, MODE_TWO_ROW)

# Width of the value table. Counts are unbounded; values are not.
VALUE_LIMIT = int(np.iinfo(np.int64).max)


class ValueOverflowError(KnapsackError):
    """Total instance value exceeds the fixed-width value table."""


@dataclass(frozen=True)
class CountResult:
    """Optimal value and the exact number of optimal packings."""

    v_max: int
    num_optima: int


@dataclass(frozen=True)
class DpTables:
    """Fully materialized DP tables plus the owning instance's digest.

    ``value`` is (n+1, W+1) int64; ``count`` is (n+1, W+1) object holding
    Python integers. Row 0 and column 0 are the base cases (value 0,
    count 1: the empty packing). Immutable by convention; share freely
    across threads.
    """

    value: np.ndarray
    count: np.ndarray
    fingerprint: str


def _check_representable(inst: Instance) -> None:
    total = sum(inst.values)
    if total > VALUE_LIMIT:
        raise ValueOverflowError(
            f"total value {total} exceeds the value-table limit {VALUE_LIMIT}"
        )


def _fresh_rows(capacity: int):
    value = np.zeros(capacity + 1, dtype=np.int64)
    count = np.empty(capacity + 1, dtype=object)
    count[:] = 1
    return value, count


def _advance_row(prev_v, prev_c, weight: int, value: int):
    """One DP step: row i-1 -> row i for an item (weight, value).

    Columns w < weight copy straight down (the item cannot fit). The rest
    resolve leave vs take; ties add the two branch counts. Row entries
    are independent of each other, so the whole row is computed with
    vectorized slices; the resulting cells are identical to a scalar
    w = 1..W sweep.
    """
    new_v = prev_v.copy()
    new_c = prev_c.copy()
    top = len(prev_v) - 1
    if weight > top:
        return new_v, new_c
    stay = prev_v[weight:]
    take = prev_v[: top - weight + 1] + value
    better = take > stay
    tie = take == stay
    np.copyto(new_v[weight:], take, where=better)
    out = new_c[weight:]
    np.copyto(out, prev_c[: top - weight + 1], where=better)
    if tie.any():
        out[tie] = prev_c[weight:][tie] + prev_c[: top - weight + 1][tie]
    return new_v, new_c


def build_tables(inst: Instance) -> DpTables:
    """Populate both tables fully; needed when sampling will follow.

    Memory is O(n * W); use ``count_optima`` in two-row mode when only
    the count is wanted.
    """
    ensure_valid(inst)
    _check_representable(inst)
    value, count = _fresh_rows(inst.capacity)
    v_rows, c_rows = [value], [count]
    for item in inst.items:
        value, count = _advance_row(value, count, item.weight, item.value)
        v_rows.append(value)
        c_rows.append(count)
    return DpTables(
        value=np.vstack(v_rows),
        count=np.vstack(c_rows),
        fingerprint=inst.fingerprint(),
    )


def count_optima(inst: Instance, mode: str = MODE_TWO_ROW) -> CountResult:
    """Optimal value and exact optimum count.

    Both modes return identical results; two-row keeps only the current
    and previous rows and is the default for count-only workloads.
    """
    if mode == MODE_FULL:
        tables = build_tables(inst)
        return CountResult(
            v_max=int(tables.value[-1, -1]), num_optima=tables.count[-1, -1]
        )
    if mode != MODE_TWO_ROW:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    ensure_valid(inst)
    _check_representable(inst)
    value, count = _fresh_rows(inst.capacity)
    for item in inst.items:
        value, count = _advance_row(value, count, item.weight, item.value)
    return CountResult(v_max=int(value[-1]), num_optima=count[-1])


def optimal_value(inst: Instance) -> int:
    """Best achievable value only; skips all count bookkeeping."""
    ensure_valid(inst)
    _check_representable(inst)
    cap = inst.capacity
    value = np.zeros(cap + 1, dtype=np.int64)
    for item in inst.items:
        if item.weight > cap:
            continue
        take = value[: cap - item.weight + 1] + item.value
        value[item.weight :] = np.maximum(value[item.weight :], take)
    return int(value[-1])
