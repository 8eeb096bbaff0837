"""Versioned binary file format for a built index.

Layout (all integers little-endian)::

    b"CPRD1"
    u64 n, k, s, t, merge_comparisons, cascade_comparisons
    u64 lengths[k]
    t times (merged groups):
        u64 size
        i64 values[size]; i64 source_array[size]; i64 source_pos[size]
    t times (augmented lists):
        u64 size, u64 own_count
        i64 values[size]; u8 native[size]; i64 own[size]; i64 down[size]

Only 64-bit signed integer values can be stored.  Build wall time is not
written, so equal indexes serialize to equal bytes.
"""
from __future__ import annotations

import struct
import sys
from array import array
from typing import BinaryIO, List

from .cascade import AugmentedList, CascadeChain
from .grouped_merge import MergedGroup, plan_groups
from .index import BuildStats, PredIndex

MAGIC = b"CPRD1"
_HEADER = struct.Struct("<6Q")
_U64 = struct.Struct("<Q")
_SWAP = sys.byteorder != "little"


class FormatError(ValueError):
    pass


def _i64(values) -> bytes:
    try:
        arr = array("q", values)
    except (OverflowError, TypeError) as exc:
        raise ValueError(f"only 64-bit signed integers can be serialized: {exc}") from None
    if _SWAP:
        arr.byteswap()
    return arr.tobytes()


class _Reader:
    def __init__(self, data: bytes):
        self.data = memoryview(data)
        self.pos = 0

    def take(self, size: int) -> memoryview:
        end = self.pos + size
        if end > len(self.data):
            raise FormatError("truncated index file")
        chunk = self.data[self.pos : end]
        self.pos = end
        return chunk

    def u64(self) -> int:
        return _U64.unpack(self.take(8))[0]

    def i64s(self, count: int) -> List[int]:
        arr = array("q")
        arr.frombytes(self.take(8 * count))
        if _SWAP:
            arr.byteswap()
        return arr.tolist()


def dumps(ix: PredIndex) -> bytes:
    out = [
        MAGIC,
        _HEADER.pack(
            ix.n,
            ix.k,
            ix.s,
            ix.t,
            ix.build_stats.merge_comparisons,
            ix.build_stats.cascade_comparisons,
        ),
        b"".join(_U64.pack(length) for length in ix.lengths),
    ]
    for g in ix.chain.groups:
        out.append(_U64.pack(len(g)))
        out.append(_i64(g.values))
        out.append(_i64([a for a, _ in g.sources]))
        out.append(_i64([p for _, p in g.sources]))
    for m in ix.chain.lists:
        out.append(_U64.pack(len(m)) + _U64.pack(m.own_count))
        out.append(_i64(m.values))
        out.append(bytes(m.native))
        out.append(_i64(m.own))
        out.append(_i64(m.down))
    return b"".join(out)


def loads(data: bytes) -> PredIndex:
    if data[: len(MAGIC)] != MAGIC:
        raise FormatError("not a CPRD1 index file")
    r = _Reader(data)
    r.take(len(MAGIC))
    n, k, s, t, merge_cmp, cascade_cmp = _HEADER.unpack(r.take(_HEADER.size))
    if k < 1 or s < 1:
        raise FormatError("corrupt header")
    plan = plan_groups(k, s)
    if plan.t != t:
        raise FormatError(f"header says t={t} but k={k}, s={s} gives t={plan.t}")
    lengths = [r.u64() for _ in range(k)]
    if sum(lengths) != n:
        raise FormatError("array lengths do not sum to n")
    groups = []
    for _ in range(t):
        size = r.u64()
        values = r.i64s(size)
        arrs = r.i64s(size)
        poss = r.i64s(size)
        groups.append(MergedGroup(values, list(zip(arrs, poss))))
    lists = []
    for _ in range(t):
        size = r.u64()
        own_count = r.u64()
        values = r.i64s(size)
        native = bytearray(r.take(size))
        own = r.i64s(size)
        down = r.i64s(size)
        lists.append(AugmentedList(values, native, own, down, own_count))
    if r.pos != len(r.data):
        raise FormatError("trailing bytes after index")
    return PredIndex(
        plan, CascadeChain(lists, groups), n, k, lengths, BuildStats(merge_cmp, cascade_cmp)
    )


def dump(ix: PredIndex, fp: BinaryIO) -> None:
    fp.write(dumps(ix))


def load(fp: BinaryIO) -> PredIndex:
    return loads(fp.read())
