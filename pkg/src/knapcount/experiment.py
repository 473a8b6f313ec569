"""Grid runner: generate instances, sweep capacities, count optima.

One instance per (group, n, R, replicate) cell; every capacity fraction
d runs against the same instance, so capacity effects can be read
instance-wise. Cell seeds derive from the base seed and the cell
coordinates only, never from execution order, so sequential and parallel
runs produce identical rows.

Runtime measurement is off by default: with it off, identical configs
yield byte-identical CSV output. Turn record_runtime on when profiling;
the timing column is then real and the byte-identity guarantee is
waived.
"""

import csv
import io
import logging
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial

from .core import Instance, KnapsackError
from .dp import MODE_TWO_ROW, MODES, count_optima
from .fileio import ResultRow, log2_int
from .generators import GROUPS, GeneratorSpec, capacity_for, generate
from .seeding import derive_seed

log = logging.getLogger(__name__)

# The classic study fixes the weight lower bound at 1.
WEIGHT_LOW = 1


@dataclass(frozen=True)
class ExperimentConfig:
    """Grid definition. Field names double as the config-file schema.

    An empty d_values means the full capacity sweep 1..D. The reference
    study uses 25 replicates and n up to 500; the defaults here are
    desk-scale.
    """

    groups: tuple
    n_values: tuple
    R_values: tuple
    D: int = 11
    d_values: tuple = field(default=())
    replicates: int = 10
    base_seed: int = 0
    count_mode: str = MODE_TWO_ROW
    record_runtime: bool = False
    out: str = ""

    def __post_init__(self):
        object.__setattr__(self, "groups", tuple(self.groups))
        object.__setattr__(self, "n_values", tuple(self.n_values))
        object.__setattr__(self, "R_values", tuple(self.R_values))
        ds = tuple(self.d_values) or tuple(range(1, self.D + 1))
        object.__setattr__(self, "d_values", ds)
        for g in self.groups:
            if g not in GROUPS:
                raise ValueError(f"unknown group {g!r}")
        if not self.groups or not self.n_values or not self.R_values:
            raise ValueError("groups, n_values and R_values must be nonempty")
        if self.replicates < 1:
            raise ValueError("replicates must be >= 1")
        if self.D < 1:
            raise ValueError("D must be >= 1")
        for d in ds:
            if not 1 <= d <= self.D:
                raise ValueError(f"d={d} outside 1..{self.D}")
        if self.count_mode not in MODES:
            raise ValueError(f"count_mode must be one of {MODES}")

    @classmethod
    def from_mapping(cls, data) -> "ExperimentConfig":
        known = {
            "groups",
            "n_values",
            "R_values",
            "D",
            "d_values",
            "replicates",
            "base_seed",
            "count_mode",
            "record_runtime",
            "out",
        }
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        if not {"groups", "n_values", "R_values"} <= set(data):
            raise ValueError("config needs groups, n_values and R_values")
        kwargs = dict(data)
        for key in ("groups", "n_values", "R_values", "d_values"):
            if key in kwargs:
                kwargs[key] = tuple(kwargs[key])
        return cls(**kwargs)


def cell_seed(base_seed: int, group: str, n: int, R: int, replicate: int) -> int:
    """Instance seed for one grid cell; independent of execution order."""
    return derive_seed(base_seed, group, n, R, replicate)


def _run_cell(cfg: ExperimentConfig, cell) -> list:
    group, n, R, replicate = cell
    seed = cell_seed(cfg.base_seed, group, n, R, replicate)
    items = tuple(generate(GeneratorSpec(group, n, WEIGHT_LOW, R, seed)))
    weights = [it.weight for it in items]
    rows = []
    for d in cfg.d_values:
        capacity = capacity_for(weights, d, cfg.D)
        started = time.perf_counter()
        result = count_optima(Instance(items, capacity), cfg.count_mode)
        elapsed_ms = (time.perf_counter() - started) * 1e3
        rows.append(
            ResultRow(
                group=group,
                n=n,
                R=R,
                d=d,
                capacity_pct=100 * d // (cfg.D + 1),
                replicate=replicate,
                seed=seed,
                v_max=result.v_max,
                num_optima=str(result.num_optima),
                log2_count=log2_int(result.num_optima),
                h_ratio=n / R,
                runtime_ms=elapsed_ms if cfg.record_runtime else 0.0,
            )
        )
    return rows


def _run_cell_safe(cfg: ExperimentConfig, cell) -> list:
    # A failing cell must not abort the grid; log and move on.
    try:
        return _run_cell(cfg, cell)
    except (KnapsackError, ValueError) as exc:
        log.warning("cell %s failed: %s", cell, exc)
        return []


def run_experiment(cfg: ExperimentConfig, jobs: int = 1) -> list:
    """All grid rows, sorted by (group, n, R, d, replicate).

    Cells are independent; jobs > 1 fans them out over a process pool
    and yields exactly the sequential result.
    """
    cells = [
        (group, n, R, replicate)
        for group in cfg.groups
        for n in cfg.n_values
        for R in cfg.R_values
        for replicate in range(1, cfg.replicates + 1)
    ]
    rows = []
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for cell_rows in pool.map(partial(_run_cell_safe, cfg), cells):
                rows.extend(cell_rows)
    else:
        for cell in cells:
            rows.extend(_run_cell_safe(cfg, cell))
    rows.sort(key=ResultRow.sort_key)
    return rows


SUMMARY_FIELDS = (
    "group",
    "n",
    "R",
    "d",
    "capacity_pct",
    "h_ratio",
    "cells",
    "min_log2",
    "q1_log2",
    "median_log2",
    "q3_log2",
    "max_log2",
)


@dataclass(frozen=True)
class SummaryRow:
    """Boxplot statistics of log2(count) for one (group, n, R, d) cell."""

    group: str
    n: int
    R: int
    d: int
    capacity_pct: int
    h_ratio: float
    cells: int
    min_log2: float
    q1_log2: float
    median_log2: float
    q3_log2: float
    max_log2: float


def summarize(rows) -> list:
    """Per (group, n, R, d): median, quartiles and range of log2(count).

    Feeds external boxplot tooling; quartiles use the inclusive
    (Tukey-style) method.
    """
    if not rows:
        raise ValueError("no rows to summarize")
    buckets = {}
    for row in rows:
        buckets.setdefault((row.group, row.n, row.R, row.d), []).append(row)
    out = []
    for key in sorted(buckets):
        cell = buckets[key]
        xs = sorted(r.log2_count for r in cell)
        if len(xs) >= 2:
            q1, median, q3 = statistics.quantiles(xs, n=4, method="inclusive")
        else:
            q1 = median = q3 = xs[0]
        out.append(
            SummaryRow(
                group=key[0],
                n=key[1],
                R=key[2],
                d=key[3],
                capacity_pct=cell[0].capacity_pct,
                h_ratio=cell[0].h_ratio,
                cells=len(xs),
                min_log2=xs[0],
                q1_log2=q1,
                median_log2=median,
                q3_log2=q3,
                max_log2=xs[-1],
            )
        )
    return out


def write_summary_csv(rows, dest) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SUMMARY_FIELDS)
    for row in rows:
        writer.writerow([getattr(row, f) for f in SUMMARY_FIELDS])
    text = buf.getvalue()
    if hasattr(dest, "write"):
        dest.write(text)
    else:
        with open(dest, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    return text
