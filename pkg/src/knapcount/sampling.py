"""Uniform draws from the set of optimal packings.

A draw walks the full DP tables from the corner (n, W) down to a base
case. Wherever only one branch preserves optimality the step is forced;
where both do, item i is taken with probability

    count(i-1, w - w_i) / count(i, w),

the exact fraction of optima at (i, w) that contain item i. The branch
probabilities telescope along any root-to-base path, so every optimal
packing comes out with probability exactly 1 / count(n, W).

Branch decisions compare uniform big integers instead of floats: a draw
r in [0, count(i, w)) takes the item iff r < count(i-1, w - w_i).
Converting huge counts to floats would skew the ratios; integer
comparison keeps them exact at any magnitude.
"""

import random
from dataclasses import dataclass

from .core import Instance, KnapsackError
from .dp import DpTables
from .seeding import derive_seed, make_rng


@dataclass(frozen=True)
class SampleRequest:
    """Number of independent draws and the base seed for their streams."""

    k: int
    seed: int = 0


class TableMismatchError(KnapsackError):
    """The tables were built from a different instance."""


class InsufficientTablesError(KnapsackError):
    """Sampling needs full (n+1) x (W+1) tables; a reduced set was given."""


def _randbelow(rng: random.Random, bound: int) -> int:
    """Uniform integer in [0, bound), unbiased for any size of bound.

    Rejection sampling over the minimal bit width: no modular skew, and
    fewer than two draws needed on average.
    """
    if bound <= 1:
        return 0
    bits = bound.bit_length()
    draw = rng.getrandbits(bits)
    while draw >= bound:
        draw = rng.getrandbits(bits)
    return draw


def _check_tables(tables: DpTables, inst: Instance) -> None:
    if tables.fingerprint != inst.fingerprint():
        raise TableMismatchError(
            "tables were built from a different instance (fingerprint mismatch)"
        )
    want = (inst.n + 1, inst.capacity + 1)
    if tables.value.shape != want or tables.count.shape != want:
        raise InsufficientTablesError(
            f"sampling needs full {want[0]}x{want[1]} tables, "
            f"got {tables.value.shape[0]}x{tables.value.shape[1]}"
        )


def reconstruct_one(tables: DpTables, inst: Instance, rng: random.Random):
    """One backtrack walk from (n, W); returns an optimal packing.

    O(n) table probes per walk, plus one bounded random draw per
    two-way branch.
    """
    value, count = tables.value, tables.count
    i, w = inst.n, inst.capacity
    chosen = []
    while i > 0 and w > 0:
        item = inst.items[i - 1]
        if (
            item.weight <= w
            and value[i, w] == value[i - 1, w]
            and value[i, w] == value[i - 1, w - item.weight] + item.value
        ):
            # Both branches optimal: randomize with the exact count ratio.
            if _randbelow(rng, count[i, w]) < count[i - 1, w - item.weight]:
                chosen.append(i)
                w -= item.weight
        elif value[i, w] > value[i - 1, w]:
            chosen.append(i)
            w -= item.weight
        i -= 1
    return frozenset(chosen)


def sample_optima(tables: DpTables, inst: Instance, req: SampleRequest) -> list:
    """req.k independent uniform draws; duplicates are possible by design.

    Draw j uses its own stream derived from (req.seed, j): a k-draw run
    is a prefix of any longer run with the same seed, and draws can be
    split across workers without changing the result.
    """
    if req.k < 1:
        raise ValueError("k must be >= 1")
    _check_tables(tables, inst)
    return [
        reconstruct_one(tables, inst, make_rng(derive_seed(req.seed, j)))
        for j in range(req.k)
    ]
