"""Seeded random instance generators and hand-built extreme constructions.

The six classic benchmark groups draw item weights uniformly from
{low..high} and derive values per group rule (invscorr goes the other
way: values first, weights derived). Items are drawn one at a time, base
quantity before dependent quantity, through a Mersenne Twister stream
seeded from the spec, so identical specs give identical items on every
platform.

Groups:

    uncorr    value drawn independently from {low..high}
    wcorr     value within +-offset of the weight (clamped to >= 1)
    ascorr    value within +-jitter of weight + offset
    scorr     value = weight + offset
    susu      value = weight (subset sum)
    invscorr  weight = value + offset

where offset = max(1, high // 10) and jitter = max(1, high // 500).
The ratios high/10 and high/500 are floored with a minimum of 1 so the
bands stay non-degenerate at small ranges (item data must be integer).
"""

from dataclasses import dataclass, field

from .core import Instance, Item
from .seeding import make_rng

GROUPS = ("uncorr", "wcorr", "ascorr", "scorr", "susu", "invscorr")


def value_offset(high: int) -> int:
    """Additive profit offset used by the correlated groups."""
    return max(1, high // 10)


def value_jitter(high: int) -> int:
    """Half-width of the ascorr profit band."""
    return max(1, high // 500)


@dataclass(frozen=True)
class GeneratorSpec:
    """Parameters of one random instance: group, size, data range, seed."""

    group: str
    n: int
    low: int
    high: int
    seed: int


def _validate_spec(spec: GeneratorSpec) -> None:
    if spec.group not in GROUPS:
        raise ValueError(f"unknown group {spec.group!r}; expected one of {GROUPS}")
    if spec.n < 1:
        raise ValueError("n must be >= 1")
    if spec.low < 1:
        raise ValueError("low must be >= 1")
    if spec.low >= spec.high:
        raise ValueError("low must be strictly below high")


def generate(spec: GeneratorSpec) -> list:
    """Items only; pick a capacity separately (see capacity_series)."""
    _validate_spec(spec)
    rng = make_rng(spec.seed)
    offset = value_offset(spec.high)
    jitter = value_jitter(spec.high)
    items = []
    for _ in range(spec.n):
        if spec.group == "invscorr":
            value = rng.randint(spec.low, spec.high)
            weight = value + offset
        else:
            weight = rng.randint(spec.low, spec.high)
            if spec.group == "uncorr":
                value = rng.randint(spec.low, spec.high)
            elif spec.group == "wcorr":
                value = max(1, rng.randint(weight - offset, weight + offset))
            elif spec.group == "ascorr":
                value = rng.randint(weight + offset - jitter, weight + offset + jitter)
            elif spec.group == "scorr":
                value = weight + offset
            else:  # susu
                value = weight
        items.append(Item(weight, value))
    return items


@dataclass(frozen=True)
class CapacitySeries:
    """Capacity sweep: fraction d/(d_max+1) of the total weight.

    An empty d_values means the full sweep 1..d_max. The classic study
    uses d_max = 11, i.e. capacities from ~8% to ~92% of total weight.
    """

    d_max: int = 11
    d_values: tuple = field(default=())

    def __post_init__(self):
        if self.d_max < 1:
            raise ValueError("d_max must be >= 1")
        ds = tuple(self.d_values) or tuple(range(1, self.d_max + 1))
        for d in ds:
            if not 1 <= d <= self.d_max:
                raise ValueError(f"d={d} outside 1..{self.d_max}")
        object.__setattr__(self, "d_values", ds)


def capacity_for(weights, d: int, d_max: int = 11) -> int:
    """Single capacity: floor(d * sum(weights) / (d_max + 1))."""
    return d * sum(weights) // (d_max + 1)


def capacity_series(weights, series: CapacitySeries = CapacitySeries()) -> list:
    """Capacities for every d in the series, in ascending d order."""
    if not weights:
        raise ValueError("weights must be nonempty")
    return [capacity_for(weights, d, series.d_max) for d in sorted(series.d_values)]


def pathological_instance(n: int):
    """Capacity-cliff construction: (instance at capacity n/2, capacity n/2 + 1).

    n-1 unit items plus one heavy item of weight n/2 + 1 and value
    n/2 + 2. At capacity n/2 every choice of n/2 unit items is optimal,
    binomial(n-1, n/2) of them; one unit of extra capacity lets the heavy
    item in, and it alone beats them all, collapsing the count to 1.
    """
    if n < 4 or n % 2:
        raise ValueError("n must be even and >= 4")
    half = n // 2
    items = [Item(1, 1)] * (n - 1) + [Item(half + 1, half + 2)]
    return Instance(tuple(items), half), half + 1


def structured_subset_sum(n: int, high: int) -> Instance:
    """Balanced subset-sum block with at least 2^(n/2) optima.

    n/high copies of each weight 1..high, value = weight, capacity half
    the total weight. Half of each weight class fills the knapsack
    exactly, and the ways to pick those halves multiply across classes.
    """
    if n < 1 or high < 1 or n % (2 * high):
        raise ValueError("n must be a positive multiple of 2 * high")
    copies = n // high
    items = [Item(w, w) for w in range(1, high + 1) for _ in range(copies)]
    total = sum(it.weight for it in items)
    return Instance(tuple(items), total // 2)
