import io
import random

import pytest

from conftest import random_collection, sweep_queries
from predcascade import ArrayCollection, QueryKind, build
from predcascade import serialize
from predcascade.bench import generate_instance, random_int64


def test_magic_and_header():
    data = serialize.dumps(build(ArrayCollection([[1, 5], [3, 7]])))
    assert data.startswith(b"CPRD1")
    assert int.from_bytes(data[5:13], "little") == 4  # n
    assert int.from_bytes(data[13:21], "little") == 2  # k


def test_round_trip_structure():
    c = random_collection(random.Random(2), 200, 30, "dups")
    ix = build(c, 4)
    back = serialize.loads(serialize.dumps(ix))
    assert (back.n, back.k, back.s, back.t, back.lengths) == (ix.n, ix.k, ix.s, ix.t, ix.lengths)
    assert back.build_stats.comparisons == ix.build_stats.comparisons
    for a, b in zip(ix.chain.lists, back.chain.lists):
        assert (a.values, bytes(a.native), a.own, a.down) == (b.values, bytes(b.native), b.own, b.down)
    for a, b in zip(ix.chain.groups, back.chain.groups):
        assert (a.values, a.sources) == (b.values, b.sources)
    assert serialize.dumps(back) == serialize.dumps(ix)


def test_round_trip_queries():
    rng = random.Random(77)
    c = generate_instance(3000, 90, rng)
    ix = build(c)
    buf = io.BytesIO()
    serialize.dump(ix, buf)
    buf.seek(0)
    back = serialize.load(buf)
    for _ in range(10_000):
        q = random_int64(rng)
        kind = rng.choice(list(QueryKind))
        assert back.query(q, kind) == ix.query(q, kind)


def test_round_trip_empty_arrays_and_extremes():
    c = ArrayCollection([[], [-(2**63), 0, 2**63 - 1], []])
    ix = build(c)
    back = serialize.loads(serialize.dumps(ix))
    for q in sweep_queries(c):
        for kind in QueryKind:
            assert back.query(q, kind) == ix.query(q, kind)


def test_same_input_same_bytes():
    c = random_collection(random.Random(3), 500, 20)
    assert serialize.dumps(build(c)) == serialize.dumps(build(c))


@pytest.mark.parametrize(
    "mutate",
    [
        lambda d: b"XXXXX" + d[5:],
        lambda d: d[:-3],
        lambda d: d + b"\x00",
    ],
)
def test_rejects_corrupt(mutate):
    data = serialize.dumps(build(ArrayCollection([[1, 2], [3]])))
    with pytest.raises(serialize.FormatError):
        serialize.loads(mutate(data))


def test_rejects_non_int64():
    with pytest.raises(ValueError):
        serialize.dumps(build(ArrayCollection([[2**63]])))
    with pytest.raises(ValueError):
        serialize.dumps(build(ArrayCollection([["a"]])))
