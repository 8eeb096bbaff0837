"""Brute-force check of the component-counting step behind the lower bound.

An instance distributes n distinct values into k sorted arrays of fixed
sizes.  Listing the values in increasing order and recording which array
each one lands in gives a *coloring*: a sequence over the k colors with
``sizes[i]`` occurrences of color i.  Query separators are placed after
every ``block_size`` entries.  Entries may be permuted freely inside a block
without changing any query's strict predecessor class, but no entry may
cross a separator.  Two colorings are therefore equivalent iff they have the
same multiset of colors in every block.

The lab counts these classes exactly and checks them against

    multinomial(sizes) / prod(len(block)! for block in blocks)

which holds because each class is an orbit of the within-block permutation
group acting on colorings.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Sequence, Tuple

DEFAULT_BUDGET = 10
MULTINOMIAL_BUDGET = 12


@dataclass(frozen=True)
class SwapClassInstance:
    sizes: Tuple[int, ...]
    block_size: int
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        object.__setattr__(self, "sizes", tuple(self.sizes))
        if not self.sizes or any(s < 0 for s in self.sizes):
            raise ValueError("sizes must be a non-empty list of non-negative counts")
        if self.block_size < 1:
            raise ValueError("block size must be >= 1")
        if self.n > self.budget:
            raise ValueError(f"n={self.n} exceeds the enumeration budget {self.budget}")

    @property
    def n(self) -> int:
        return sum(self.sizes)

    @property
    def k(self) -> int:
        return len(self.sizes)

    @property
    def blocks(self) -> List[Tuple[int, int]]:
        """Half-open ``(start, stop)`` ranges; the last one may be short."""
        b = self.block_size
        return [(i, min(i + b, self.n)) for i in range(0, self.n, b)]

    @property
    def m(self) -> int:
        """Number of query separators, one after each block."""
        return len(self.blocks)

    @property
    def dimension(self) -> int:
        """n array entries plus a (query, answer) pair per separator."""
        return self.n + 2 * self.m

    def colorings(self) -> Iterator[Tuple[int, ...]]:
        return multiset_permutations(self.sizes)


def multiset_permutations(sizes: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    """All sequences with exactly ``sizes[i]`` copies of color i, lexicographic."""
    remaining = list(sizes)
    n = sum(remaining)
    seq = [0] * n

    def rec(pos):
        if pos == n:
            yield tuple(seq)
            return
        for color, left in enumerate(remaining):
            if left:
                remaining[color] -= 1
                seq[pos] = color
                yield from rec(pos + 1)
                remaining[color] += 1

    return rec(0)


def count_distributions(sizes: Sequence[int]) -> int:
    n = sum(sizes)
    if n > MULTINOMIAL_BUDGET:
        raise ValueError(f"n={n} exceeds the budget {MULTINOMIAL_BUDGET}")
    out = math.factorial(n)
    for s in sizes:
        out //= math.factorial(s)
    return out


def canonical_form(coloring: Sequence[int], blocks) -> Tuple[Tuple[int, ...], ...]:
    return tuple(tuple(sorted(coloring[a:b])) for a, b in blocks)


def count_swap_classes(inst: SwapClassInstance) -> int:
    blocks = inst.blocks
    return len({canonical_form(c, blocks) for c in inst.colorings()})


class _DisjointSets:
    def __init__(self, size: int):
        self.parent = list(range(size))
        self.count = size

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra
            self.count -= 1


def count_swap_classes_union_find(inst: SwapClassInstance) -> int:
    """Independent count: connect colorings that differ by one adjacent swap
    inside a block, then count connected components."""
    colorings = list(inst.colorings())
    index = {c: i for i, c in enumerate(colorings)}
    ds = _DisjointSets(len(colorings))
    for i, c in enumerate(colorings):
        for a, b in inst.blocks:
            for p in range(a, b - 1):
                if c[p] != c[p + 1]:
                    swapped = list(c)
                    swapped[p], swapped[p + 1] = swapped[p + 1], swapped[p]
                    ds.union(i, index[tuple(swapped)])
    return ds.count


@dataclass(frozen=True)
class BoundReport:
    instance: SwapClassInstance
    classes: int
    distributions: int
    bound: Fraction

    @property
    def holds(self) -> bool:
        return self.classes >= self.bound


def block_bound(inst: SwapClassInstance) -> Fraction:
    denom = 1
    for a, b in inst.blocks:
        denom *= math.factorial(b - a)
    return Fraction(count_distributions(inst.sizes), denom)


def check_bound(inst: SwapClassInstance) -> BoundReport:
    return BoundReport(
        inst, count_swap_classes(inst), count_distributions(inst.sizes), block_bound(inst)
    )


def balanced_sizes(n: int, k: int) -> Tuple[int, ...]:
    """n entries over k arrays, lengths differing by at most one."""
    base, extra = divmod(n, k)
    return tuple(base + (1 if i < extra else 0) for i in range(k))


CSV_HEADER = ["k", "n", "b", "classes", "log2_classes", "bound_log2"]


@dataclass(frozen=True)
class ScalingRow:
    k: int
    n: int
    b: int
    classes: int
    bound: Fraction
    reference: float  # n * log2(k / b), the asymptotic exponent

    @property
    def log2_classes(self) -> float:
        return math.log2(self.classes)

    @property
    def bound_log2(self) -> float:
        return math.log2(self.bound)

    def csv_fields(self) -> List[str]:
        return [
            str(self.k),
            str(self.n),
            str(self.b),
            str(self.classes),
            f"{self.log2_classes:.6f}",
            f"{self.bound_log2:.6f}",
        ]


def row_for(inst: SwapClassInstance) -> Tuple[ScalingRow, BoundReport]:
    report = check_bound(inst)
    ref = inst.n * math.log2(inst.k / inst.block_size)
    row = ScalingRow(inst.k, inst.n, inst.block_size, report.classes, report.bound, ref)
    return row, report


def scaling_table(
    k_values: Sequence[int], n: int, b: int, budget: int = DEFAULT_BUDGET
) -> List[ScalingRow]:
    rows = []
    for k in k_values:
        row, report = row_for(SwapClassInstance(balanced_sizes(n, k), b, budget))
        if not report.holds:
            raise AssertionError(f"bound violated for k={k}, n={n}, b={b}")
        rows.append(row)
    return rows


def table_csv(rows: Sequence[ScalingRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(row.csv_fields())
    return buf.getvalue()
