"""The predecessor index: choose a group size, merge groups, cascade, query."""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Any, List, Optional

from .cascade import CascadeChain, build_chain, chain_query, per_group_predecessors
from .core import ArrayCollection, ComparisonCounter, PredAnswer, QueryKind
from .grouped_merge import GroupingPlan, merge_all, plan_groups


def floor_log2(n: int) -> int:
    return max(n, 1).bit_length() - 1


def choose_s(n: int, k: int) -> int:
    """Group size ceil(k / floor(log2 n)), or 1 once k <= floor(log2 n)."""
    log_n = max(1, floor_log2(n))
    return max(1, -(-k // log_n))


@dataclass
class BuildStats:
    merge_comparisons: int = 0
    cascade_comparisons: int = 0
    seconds: float = 0.0

    @property
    def comparisons(self) -> int:
        return self.merge_comparisons + self.cascade_comparisons


@dataclass
class PredIndex:
    plan: GroupingPlan
    chain: CascadeChain
    n: int
    k: int
    lengths: List[int]
    build_stats: BuildStats

    @property
    def s(self) -> int:
        return self.plan.s

    @property
    def t(self) -> int:
        return self.plan.t

    def query(
        self,
        q: Any,
        kind: QueryKind = QueryKind.NON_STRICT,
        counter: Optional[ComparisonCounter] = None,
    ) -> PredAnswer:
        return chain_query(self.chain, q, kind, counter)

    def per_group(self, q: Any, kind: QueryKind = QueryKind.NON_STRICT) -> List[PredAnswer]:
        return per_group_predecessors(self.chain, q, kind)


def build(c: ArrayCollection, s_override: Optional[int] = None) -> PredIndex:
    if s_override is not None and s_override < 1:
        raise ValueError("group size must be >= 1")
    s = s_override if s_override is not None else choose_s(c.n, c.k)
    start = time.perf_counter()
    plan = plan_groups(c.k, s)
    merge_counter = ComparisonCounter()
    groups = merge_all(c, plan, merge_counter)
    cascade_counter = ComparisonCounter()
    chain = build_chain(groups, cascade_counter)
    stats = BuildStats(
        merge_counter.count, cascade_counter.count, time.perf_counter() - start
    )
    return PredIndex(plan, chain, c.n, c.k, list(c.lengths), stats)


def query(
    ix: PredIndex,
    q: Any,
    kind: QueryKind = QueryKind.NON_STRICT,
    counter: Optional[ComparisonCounter] = None,
) -> PredAnswer:
    return ix.query(q, kind, counter)
