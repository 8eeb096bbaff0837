"""Fractional cascading over the chain of merged groups B_0, ..., B_{t-1}.

The last augmented list is the last group verbatim.  Every earlier list
merges its own group with the entries at odd positions (1, 3, 5, ...) of the
next augmented list.  Each entry stores two bridges:

``own``
    index into its own group of the nearest native entry at or before it,
    -1 if there is none.  This is the per-group predecessor once the
    position in the augmented list is known.
``down``
    position in the next augmented list of the nearest copied entry at or
    before it (for a copied entry, its own origin), -1 if there is none.

A query binary-searches the first list only.  If ``p`` is the last position
satisfying the query relation, the nearest copied entry at or before ``p``
came from ``d = down[p]`` in the next list and the next copied one (at
``d + 2`` there) fails the relation, so the answer in the next list is ``d``
or ``d + 1``: one comparison per hop.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, List, Optional

from .core import ABSENT, ComparisonCounter, PredAnswer, QueryKind, Source
from .grouped_merge import MergedGroup

# Positions examined in the next list after following a down bridge.
WINDOW = 2


@dataclass(frozen=True)
class AugmentedEntry:
    value: Any
    native: bool
    own_bridge: int
    down_bridge: int
    source: Optional[Source]


@dataclass
class AugmentedList:
    values: list
    native: bytearray
    own: List[int]
    down: List[int]
    own_count: int

    def __len__(self) -> int:
        return len(self.values)

    def entry(self, pos: int, group: MergedGroup) -> AugmentedEntry:
        is_native = bool(self.native[pos])
        src = group.sources[self.own[pos]] if is_native else None
        return AugmentedEntry(
            self.values[pos], is_native, self.own[pos], self.down[pos], src
        )

    def entries(self, group: MergedGroup) -> List[AugmentedEntry]:
        return [self.entry(p, group) for p in range(len(self.values))]


@dataclass
class CascadeChain:
    lists: List[AugmentedList]
    groups: List[MergedGroup]

    @property
    def t(self) -> int:
        return len(self.lists)

    @property
    def n(self) -> int:
        return sum(len(g) for g in self.groups)

    @property
    def total_size(self) -> int:
        return sum(len(m) for m in self.lists)


def _terminal_list(group: MergedGroup) -> AugmentedList:
    size = len(group)
    return AugmentedList(
        list(group.values), bytearray(b"\x01") * size, list(range(size)), [-1] * size, size
    )


def _augment(group: MergedGroup, nxt: AugmentedList, counter_box: List[int]) -> AugmentedList:
    """Merge ``group`` with the odd-position entries of ``nxt``; copies win ties."""
    own_vals = group.values
    next_vals = nxt.values
    n_own = len(own_vals)
    n_next = len(next_vals)
    size = n_own + n_next // 2
    values = [None] * size
    native = bytearray(size)
    own = [0] * size
    down = [0] * size

    i = 0  # next native index
    j = 1  # next sampled position in nxt
    last_own = -1
    last_down = -1
    c = 0
    for p in range(size):
        if i < n_own and j < n_next:
            c += 1
            take_copy = next_vals[j] <= own_vals[i]
        else:
            take_copy = j < n_next
        if take_copy:
            values[p] = next_vals[j]
            last_down = j
            j += 2
        else:
            values[p] = own_vals[i]
            native[p] = 1
            last_own = i
            i += 1
        own[p] = last_own
        down[p] = last_down
    counter_box[0] += c
    return AugmentedList(values, native, own, down, n_own)


def build_chain(
    groups: List[MergedGroup], counter: Optional[ComparisonCounter] = None
) -> CascadeChain:
    if not groups:
        raise ValueError("a chain needs at least one group")
    box = [0]
    lists = [_terminal_list(groups[-1])]
    for group in reversed(groups[:-1]):
        lists.append(_augment(group, lists[-1], box))
    lists.reverse()
    if counter is not None:
        counter.add(box[0])
    chain = CascadeChain(lists, groups)
    if chain.total_size > 2 * chain.n:
        raise AssertionError(
            f"augmented size {chain.total_size} exceeds 2n = {2 * chain.n}"
        )
    return chain


def _walk(chain: CascadeChain, q: Any, strict: bool) -> tuple:
    """Positions of ``q`` in every augmented list, plus the comparisons spent."""
    lists = chain.lists
    first = lists[0].values
    lo, hi = 0, len(first)
    c = 0
    if strict:
        while lo < hi:
            mid = (lo + hi) >> 1
            c += 1
            if first[mid] < q:
                lo = mid + 1
            else:
                hi = mid
    else:
        while lo < hi:
            mid = (lo + hi) >> 1
            c += 1
            if first[mid] <= q:
                lo = mid + 1
            else:
                hi = mid
    p = lo - 1
    positions = [p]
    for i in range(1, len(lists)):
        d = lists[i - 1].down[p] if p >= 0 else -1
        vals = lists[i].values
        cand = d + 1
        if cand < len(vals):
            c += 1
            if (vals[cand] < q) if strict else (vals[cand] <= q):
                d = cand
        p = d
        positions.append(p)
    return positions, c


def per_group_predecessors(
    chain: CascadeChain,
    q: Any,
    kind: QueryKind = QueryKind.NON_STRICT,
    counter: Optional[ComparisonCounter] = None,
) -> List[PredAnswer]:
    positions, c = _walk(chain, q, kind is QueryKind.STRICT)
    if counter is not None:
        counter.add(c)
    out = []
    for m, group, p in zip(chain.lists, chain.groups, positions):
        b = m.own[p] if p >= 0 else -1
        out.append(PredAnswer(group.values[b], group.sources[b]) if b >= 0 else ABSENT)
    return out


def chain_query(
    chain: CascadeChain,
    q: Any,
    kind: QueryKind = QueryKind.NON_STRICT,
    counter: Optional[ComparisonCounter] = None,
) -> PredAnswer:
    """Predecessor of ``q`` over the union of all groups.

    Groups hold increasing array indices, so on equal values the later group
    holds the rightmost occurrence and wins.
    """
    positions, c = _walk(chain, q, kind is QueryKind.STRICT)
    best_group = None
    best_b = -1
    best_value = None
    for gi, p in enumerate(positions):
        if p < 0:
            continue
        b = chain.lists[gi].own[p]
        if b < 0:
            continue
        value = chain.groups[gi].values[b]
        if best_group is not None:
            c += 1
            if value < best_value:
                continue
        best_group, best_b, best_value = gi, b, value
    if counter is not None:
        counter.add(c)
    if best_group is None:
        return ABSENT
    return PredAnswer(best_value, chain.groups[best_group].sources[best_b])
