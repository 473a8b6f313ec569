"""Bit-exact text formats: instance files and the experiment results CSV.

Instance format (canonical bytes, UTF-8, LF endings, no trailing blank
lines):

    line 1      "n W"
    lines 2..   "w_i v_i", one item per line

The results CSV keeps optimum counts as unquoted decimal strings.
Counts grow exponentially on correlated instances and overflow every
fixed-width consumer type; downstream tools must parse them as big
integers or fall back to the log2_count column.
"""

import csv
import io
import math
from dataclasses import dataclass

from .core import Instance, Item, KnapsackError, ensure_valid


class ParseError(KnapsackError):
    """Malformed instance text; messages name the offending line."""


def format_instance(inst: Instance) -> str:
    """Canonical text for a valid instance."""
    ensure_valid(inst)
    lines = [f"{inst.n} {inst.capacity}"]
    lines.extend(f"{it.weight} {it.value}" for it in inst.items)
    return "\n".join(lines) + "\n"


def write_instance(inst: Instance, dest) -> str:
    """Write canonical bytes to a path or text file object; returns them."""
    text = format_instance(inst)
    if hasattr(dest, "write"):
        dest.write(text)
    else:
        with open(dest, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    return text


def _int_token(token: str, line_no: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"{what} {token!r} is not an integer (line {line_no})") from None


def parse_instance(text: str) -> Instance:
    """Parse canonical instance text.

    Trailing whitespace per line and trailing blank lines are tolerated;
    anything else must match the format exactly. Invariants are enforced
    during the parse so errors carry line numbers.
    """
    lines = [ln.rstrip() for ln in text.split("\n")]
    while lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ParseError("empty input (line 1)")
    header = lines[0].split()
    if len(header) != 2:
        raise ParseError("header must be 'n W' (line 1)")
    n = _int_token(header[0], 1, "item count")
    capacity = _int_token(header[1], 1, "capacity")
    if n < 0:
        raise ParseError("item count must be >= 0 (line 1)")
    if capacity < 0:
        raise ParseError("capacity must be >= 0 (line 1)")
    body = lines[1:]
    if len(body) != n:
        raise ParseError(f"expected {n} items, found {len(body)}")
    items = []
    for line_no, line in enumerate(body, start=2):
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"item line must be 'w v' (line {line_no})")
        weight = _int_token(parts[0], line_no, "weight")
        value = _int_token(parts[1], line_no, "value")
        if weight < 1:
            raise ParseError(f"weight must be >= 1 (line {line_no})")
        if value < 0:
            raise ParseError(f"value must be >= 0 (line {line_no})")
        items.append(Item(weight, value))
    return Instance(tuple(items), capacity)


def read_instance(src) -> Instance:
    """Parse an instance from a path or text file object."""
    if hasattr(src, "read"):
        return parse_instance(src.read())
    with open(src, "r", encoding="utf-8") as fh:
        return parse_instance(fh.read())


def log2_int(m: int) -> float:
    """log2 of a positive integer of any size, good to ~1e-15 relative."""
    if m <= 0:
        raise ValueError("m must be positive")
    bits = m.bit_length()
    if bits <= 53:
        return math.log2(m)
    shift = bits - 53
    return math.log2(m >> shift) + shift


RESULT_FIELDS = (
    "group",
    "n",
    "R",
    "d",
    "capacity_pct",
    "replicate",
    "seed",
    "v_max",
    "num_optima",
    "log2_count",
    "h_ratio",
    "runtime_ms",
)


@dataclass(frozen=True)
class ResultRow:
    """One experiment record: one (instance, capacity fraction) cell.

    num_optima is a decimal string (lossless at any magnitude);
    log2_count mirrors it on a float scale for plotting. h_ratio = n/R,
    the expected number of items per weight value.
    """

    group: str
    n: int
    R: int
    d: int
    capacity_pct: int
    replicate: int
    seed: int
    v_max: int
    num_optima: str
    log2_count: float
    h_ratio: float
    runtime_ms: float

    def sort_key(self):
        return (self.group, self.n, self.R, self.d, self.replicate)


def write_results_csv(rows, dest) -> str:
    """Rows sorted by (group, n, R, d, replicate); header always present."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(RESULT_FIELDS)
    for row in sorted(rows, key=ResultRow.sort_key):
        writer.writerow(
            [
                row.group,
                row.n,
                row.R,
                row.d,
                row.capacity_pct,
                row.replicate,
                row.seed,
                row.v_max,
                row.num_optima,
                row.log2_count,
                row.h_ratio,
                row.runtime_ms,
            ]
        )
    text = buf.getvalue()
    if hasattr(dest, "write"):
        dest.write(text)
    else:
        with open(dest, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    return text


def read_results_csv(src) -> list:
    """Inverse of write_results_csv; num_optima stays a decimal string."""
    if hasattr(src, "read"):
        text = src.read()
    else:
        with open(src, "r", encoding="utf-8") as fh:
            text = fh.read()
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames is None or tuple(reader.fieldnames) != RESULT_FIELDS:
        raise ParseError(f"results header must be {','.join(RESULT_FIELDS)}")
    rows = []
    for rec in reader:
        rows.append(
            ResultRow(
                group=rec["group"],
                n=int(rec["n"]),
                R=int(rec["R"]),
                d=int(rec["d"]),
                capacity_pct=int(rec["capacity_pct"]),
                replicate=int(rec["replicate"]),
                seed=int(rec["seed"]),
                v_max=int(rec["v_max"]),
                num_optima=rec["num_optima"],
                log2_count=float(rec["log2_count"]),
                h_ratio=float(rec["h_ratio"]),
                runtime_ms=float(rec["runtime_ms"]),
            )
        )
    return rows
