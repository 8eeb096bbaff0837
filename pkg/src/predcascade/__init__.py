"""Predecessor search over k sorted arrays without a full merge.

Arrays are merged in groups of ``s`` with a heap, and fractional cascading
over the merged groups answers a query with one binary search plus constant
work per group.
"""
from .cascade import CascadeChain, build_chain, chain_query, per_group_predecessors
from .core import (
    ABSENT,
    ArrayCollection,
    ComparisonCounter,
    PredAnswer,
    QueryKind,
    SortedMerged,
    oracle_build,
    oracle_query,
)
from .grouped_merge import GroupingPlan, MergedGroup, merge_group, plan_groups
from .index import BuildStats, PredIndex, build, choose_s, query

__all__ = [
    "ABSENT",
    "ArrayCollection",
    "BuildStats",
    "CascadeChain",
    "ComparisonCounter",
    "GroupingPlan",
    "MergedGroup",
    "PredAnswer",
    "PredIndex",
    "QueryKind",
    "SortedMerged",
    "build",
    "build_chain",
    "chain_query",
    "choose_s",
    "merge_group",
    "oracle_build",
    "oracle_query",
    "per_group_predecessors",
    "plan_groups",
    "query",
]
