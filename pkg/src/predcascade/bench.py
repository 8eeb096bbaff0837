"""Seeded instance generator and the build/query benchmark sweep."""
from __future__ import annotations

import csv
import io
import math
import random
import time
from dataclasses import dataclass
from typing import List, Optional, Sequence

from .core import ArrayCollection, ComparisonCounter, QueryKind
from .index import build, choose_s

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1

CSV_HEADER = [
    "n",
    "k",
    "s",
    "t",
    "build_comparisons",
    "build_ms",
    "mean_query_comparisons",
    "p99_query_comparisons",
    "mean_query_ns",
]


def random_int64(rng: random.Random) -> int:
    return rng.getrandbits(64) + INT64_MIN


def generate_instance(n: int, k: int, rng: random.Random) -> ArrayCollection:
    """n distinct int64 values dealt round-robin to k arrays, each then sorted."""
    seen = {}
    while len(seen) < n:
        seen.setdefault(random_int64(rng), None)
    values = list(seen)
    arrays = [sorted(values[i::k]) for i in range(k)]
    return ArrayCollection(arrays, check=False)


def sweep_sizes(k: int) -> List[int]:
    out = []
    s = 1
    while s < k:
        out.append(s)
        s *= 2
    out.append(k)
    return out


def percentile(sorted_values: Sequence[int], frac: float) -> int:
    """Nearest-rank percentile."""
    rank = max(1, math.ceil(frac * len(sorted_values)))
    return sorted_values[rank - 1]


@dataclass
class BenchRow:
    n: int
    k: int
    s: int
    t: int
    build_comparisons: int
    mean_query_comparisons: float
    p99_query_comparisons: int
    build_ms: Optional[float] = None
    mean_query_ns: Optional[float] = None

    def csv_fields(self) -> List[str]:
        return [
            str(self.n),
            str(self.k),
            str(self.s),
            str(self.t),
            str(self.build_comparisons),
            "" if self.build_ms is None else f"{self.build_ms:.3f}",
            f"{self.mean_query_comparisons:.6f}",
            str(self.p99_query_comparisons),
            "" if self.mean_query_ns is None else f"{self.mean_query_ns:.1f}",
        ]


def measure(
    c: ArrayCollection,
    s: Optional[int],
    queries: Sequence[int],
    kind: QueryKind = QueryKind.NON_STRICT,
    timing: bool = False,
) -> BenchRow:
    ix = build(c, s)
    counts = []
    for q in queries:
        counter = ComparisonCounter()
        ix.query(q, kind, counter)
        counts.append(counter.count)
    row = BenchRow(
        c.n,
        c.k,
        ix.s,
        ix.t,
        ix.build_stats.comparisons,
        sum(counts) / len(counts) if counts else 0.0,
        percentile(sorted(counts), 0.99) if counts else 0,
    )
    if timing:
        row.build_ms = ix.build_stats.seconds * 1e3
        start = time.perf_counter_ns()
        for q in queries:
            ix.query(q, kind)
        row.mean_query_ns = (time.perf_counter_ns() - start) / max(1, len(queries))
    return row


def run_bench(
    n: int,
    k: int,
    seed: int = 0,
    sweep: bool = False,
    num_queries: int = 10_000,
    timing: bool = False,
) -> List[BenchRow]:
    if n < 1 or k < 1:
        raise ValueError("n and k must be >= 1")
    rng = random.Random(seed)
    c = generate_instance(n, k, rng)
    queries = [random_int64(rng) for _ in range(num_queries)]
    s_values = sweep_sizes(k) if sweep else [choose_s(n, k)]
    return [measure(c, s, queries, timing=timing) for s in s_values]


def bench_csv(rows: Sequence[BenchRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(row.csv_fields())
    return buf.getvalue()
