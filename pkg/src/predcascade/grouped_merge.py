"""Partition the input arrays into contiguous groups and heap-merge each group."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .core import ArrayCollection, ComparisonCounter, Source


@dataclass(frozen=True)
class GroupingPlan:
    s: int
    group_bounds: List[Tuple[int, int]]  # inclusive (first, last) array index

    @property
    def t(self) -> int:
        return len(self.group_bounds)


@dataclass
class MergedGroup:
    values: list
    sources: List[Source] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.values)


def plan_groups(k: int, s: int) -> GroupingPlan:
    if s < 1:
        raise ValueError("group size must be >= 1")
    if k < 1:
        raise ValueError("k must be >= 1")
    bounds = [(first, min(first + s, k) - 1) for first in range(0, k, s)]
    return GroupingPlan(s, bounds)


class KWayMerger:
    """Min-heap merge over several sorted arrays, counting key comparisons.

    Heap items are ``(value, array index, cursor)`` tuples.  Array indices are
    unique inside one heap, so tuple order is (value, array index) order and
    ties resolve by array index.  One tuple ``<`` counts as one comparison.

    Replacing the top uses the bottom-up sift (walk the smaller-child path to
    a leaf, then sift the new item up), which costs about log2(size)
    comparisons instead of the 2*log2(size) of a textbook sift-down.
    """

    def __init__(self, arrays: List[list], first_index: int = 0):
        self.arrays = arrays
        self.first_index = first_index
        self.comparisons = 0
        self.heap = [(a[0], first_index + j, 0) for j, a in enumerate(arrays) if a]
        self.peak = len(self.heap)
        for pos in reversed(range(len(self.heap) // 2)):
            self._sift_down(pos)

    def _sift_down(self, pos: int) -> None:
        heap = self.heap
        end = len(heap)
        item = heap[pos]
        c = 0
        child = 2 * pos + 1
        while child < end:
            right = child + 1
            if right < end:
                c += 1
                if heap[right] < heap[child]:
                    child = right
            c += 1
            if not heap[child] < item:
                break
            heap[pos] = heap[child]
            pos = child
            child = 2 * pos + 1
        heap[pos] = item
        self.comparisons += c

    def _replace_top(self, item) -> None:
        heap = self.heap
        end = len(heap)
        pos = 0
        c = 0
        child = 1
        while child < end:
            right = child + 1
            if right < end:
                c += 1
                if heap[right] < heap[child]:
                    child = right
            heap[pos] = heap[child]
            pos = child
            child = 2 * pos + 1
        while pos > 0:
            parent = (pos - 1) >> 1
            c += 1
            if item < heap[parent]:
                heap[pos] = heap[parent]
                pos = parent
            else:
                break
        heap[pos] = item
        self.comparisons += c

    def __iter__(self):
        heap = self.heap
        arrays = self.arrays
        base = self.first_index
        while heap:
            value, idx, cur = heap[0]
            yield value, idx, cur
            arr = arrays[idx - base]
            cur += 1
            if cur < len(arr):
                self._replace_top((arr[cur], idx, cur))
            else:
                last = heap.pop()
                if heap:
                    self._replace_top(last)


def merge_group(
    c: ArrayCollection,
    bounds: Tuple[int, int],
    counter: Optional[ComparisonCounter] = None,
) -> MergedGroup:
    """Merge arrays ``bounds[0]..bounds[1]`` into one stably ordered run.

    A single-array group is copied without touching a heap.
    """
    first, last = bounds
    if first == last:
        arr = c.arrays[first]
        return MergedGroup(list(arr), [(first, pos) for pos in range(len(arr))])

    merger = KWayMerger(c.arrays[first : last + 1], first)
    values = []
    sources = []
    for value, idx, pos in merger:
        values.append(value)
        sources.append((idx, pos))
    if counter is not None:
        counter.add(merger.comparisons)
    return MergedGroup(values, sources)


def merge_all(
    c: ArrayCollection, plan: GroupingPlan, counter: Optional[ComparisonCounter] = None
) -> List[MergedGroup]:
    return [merge_group(c, b, counter) for b in plan.group_bounds]
