"""Input model, query semantics and the brute-force reference oracle.

Values only need a total order (``<`` and ``<=``).  Positions and array
indices are 0-based throughout the package.  Among equal values the merged
order is stable by (array index, position), and a predecessor query reports
the rightmost qualifying occurrence.
"""
from __future__ import annotations

import enum
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import Any, Iterable, Optional, Sequence, Tuple

Source = Tuple[int, int]


class QueryKind(enum.Enum):
    NON_STRICT = "non-strict"  # predecessor <= q
    STRICT = "strict"  # predecessor < q


@dataclass(frozen=True)
class PredAnswer:
    """Answer to a predecessor query; ``value is None`` means no predecessor."""

    value: Any = None
    source: Optional[Source] = None

    @property
    def absent(self) -> bool:
        return self.source is None


ABSENT = PredAnswer()


class ComparisonCounter:
    """Tally of value comparisons.  One instance per query or build, never shared."""

    __slots__ = ("count",)

    def __init__(self) -> None:
        self.count = 0

    def add(self, n: int) -> None:
        self.count += n

    def __repr__(self) -> str:
        return f"ComparisonCounter({self.count})"


class ArrayCollection:
    """k sorted arrays holding n values in total."""

    def __init__(self, arrays: Iterable[Sequence[Any]], *, check: bool = True):
        self.arrays = [list(a) for a in arrays]
        if not self.arrays:
            raise ValueError("a collection needs at least one array (k >= 1)")
        if check:
            for i, arr in enumerate(self.arrays):
                for j in range(1, len(arr)):
                    if arr[j] < arr[j - 1]:
                        raise ValueError(
                            f"array {i} is not sorted at position {j}: "
                            f"{arr[j - 1]!r} > {arr[j]!r}"
                        )
        self.lengths = [len(a) for a in self.arrays]
        self.n = sum(self.lengths)

    @property
    def k(self) -> int:
        return len(self.arrays)

    def __getitem__(self, source: Source) -> Any:
        i, pos = source
        return self.arrays[i][pos]

    def __repr__(self) -> str:
        return f"ArrayCollection(k={self.k}, n={self.n})"


@dataclass(frozen=True)
class SortedMerged:
    """The fully merged array with a back-reference per element."""

    values: list
    sources: list

    def __len__(self) -> int:
        return len(self.values)


def oracle_build(c: ArrayCollection) -> SortedMerged:
    triples = sorted(
        (v, i, pos) for i, arr in enumerate(c.arrays) for pos, v in enumerate(arr)
    )
    return SortedMerged([t[0] for t in triples], [(t[1], t[2]) for t in triples])


def oracle_query(m: SortedMerged, q: Any, kind: QueryKind = QueryKind.NON_STRICT) -> PredAnswer:
    if kind is QueryKind.STRICT:
        idx = bisect_left(m.values, q) - 1
    else:
        idx = bisect_right(m.values, q) - 1
    if idx < 0:
        return ABSENT
    return PredAnswer(m.values[idx], m.sources[idx])
