"""Exit criteria.  Each test records one PASS/FAIL line, printed at the end of
the pytest run under "acceptance criteria"."""
import io
import itertools
import math
import random
import statistics
import time

import pytest

from conftest import random_collection, sweep_queries
from predcascade import ComparisonCounter, QueryKind, build, choose_s, oracle_build, oracle_query
from predcascade import serialize
from predcascade.bench import generate_instance, random_int64
from predcascade.cli import main
from predcascade.lowerbound_lab import (
    SwapClassInstance,
    check_bound,
    count_distributions,
    count_swap_classes,
    count_swap_classes_union_find,
    scaling_table,
)

KINDS = (QueryKind.NON_STRICT, QueryKind.STRICT)


def compositions(n, max_parts=None):
    """Ordered size vectors of positive parts summing to n."""
    for cuts in range(n if max_parts is None else min(n, max_parts)):
        for positions in itertools.combinations(range(1, n), cuts):
            bounds = (0, *positions, n)
            yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


def mean_query_comparisons(ix, queries):
    total = ComparisonCounter()
    for q in queries:
        ix.query(q, QueryKind.NON_STRICT, total)
    return total.count / len(queries)


def criterion_1_instances():
    rng = random.Random(20241016)
    styles = ["random", "random", "dups", "all_equal", "giant", "interleaved"]
    for i in range(216):
        if i % 4 == 0:
            # k > n/2 needs n < 512 to keep k <= 256
            n = int(2 ** rng.uniform(4, 9))
            k = rng.randint(n // 2 + 1, min(256, 2 * n))
        elif i == 1:
            n, k = 2**12, 256
        else:
            n = int(2 ** rng.uniform(4, 12))
            k = rng.randint(1, 256)
        yield random_collection(rng, n, k, styles[i % len(styles)])


def test_criterion_1_oracle_equivalence(report):
    start = time.perf_counter()
    instances = mismatches = queries_checked = 0
    for c in criterion_1_instances():
        ix = build(c)
        m = oracle_build(c)
        for q in sweep_queries(c):
            for kind in KINDS:
                queries_checked += 1
                if ix.query(q, kind) != oracle_query(m, q, kind):
                    mismatches += 1
        instances += 1
    elapsed = time.perf_counter() - start
    ok = mismatches == 0 and instances >= 200 and elapsed <= 120
    report(
        "1 oracle equivalence",
        ok,
        f"{instances} instances, {queries_checked} queries, {mismatches} mismatches, {elapsed:.1f}s",
    )
    assert ok


def test_criterion_2_space_bound(report):
    builds = violations = 0
    worst = 0.0
    for c in criterion_1_instances():
        ix = build(c)
        builds += 1
        violations += ix.chain.total_size > 2 * c.n
        worst = max(worst, ix.chain.total_size / c.n)
    ok = violations == 0
    report("2 space bound", ok, f"{builds} builds, {violations} violations, max sum|M_i|/n = {worst:.3f}")
    assert ok


@pytest.mark.slow
def test_criterion_3_construction_scaling(report):
    start = time.perf_counter()
    c = generate_instance(2**18, 256, random.Random(3))
    xs, ys = [], []
    for e in range(9):
        ix = build(c, 2**e)
        xs.append(e)
        ys.append(ix.build_stats.comparisons / c.n)
    slope, intercept = statistics.linear_regression(xs, ys)
    mean_y = statistics.fmean(ys)
    ss_res = sum((y - (slope * x + intercept)) ** 2 for x, y in zip(xs, ys))
    ss_tot = sum((y - mean_y) ** 2 for y in ys)
    r2 = 1 - ss_res / ss_tot
    elapsed = time.perf_counter() - start
    ok = 0.8 <= slope <= 2.2 and r2 >= 0.95 and elapsed <= 300
    report("3 construction scaling", ok, f"slope={slope:.3f} R^2={r2:.4f} ({elapsed:.1f}s)")
    assert ok


@pytest.mark.slow
def test_criterion_4_query_scaling(report):
    start = time.perf_counter()
    rng = random.Random(4)
    means = {}
    for e in (16, 20):
        n = 2**e
        ix = build(generate_instance(n, n // 16, rng))
        assert ix.s == choose_s(n, n // 16)
        means[e] = mean_query_comparisons(ix, [random_int64(rng) for _ in range(10_000)])
    ratio = means[20] / means[16]
    elapsed = time.perf_counter() - start
    ok = ratio <= 1.6 and elapsed <= 300
    report(
        "4 query scaling",
        ok,
        f"mean cmp {means[16]:.2f} @2^16 -> {means[20]:.2f} @2^20, ratio {ratio:.3f} ({elapsed:.1f}s)",
    )
    assert ok


def test_criterion_5_degenerate_regime(report):
    rng = random.Random(5)
    n, k = 2**16, 8
    s = choose_s(n, k)
    ix = build(generate_instance(n, k, rng))
    mean = mean_query_comparisons(ix, [random_int64(rng) for _ in range(10_000)])
    limit = 2 * math.log2(n) + 4 * k
    ok = s == 1 and ix.t == k and mean <= limit
    report("5 degenerate regime", ok, f"s={s}, mean cmp {mean:.2f} <= {limit:.0f}")
    assert ok


def test_criterion_6_lab_exact(report):
    failures = []
    if count_swap_classes(SwapClassInstance((2, 2), 2)) != 3:
        failures.append("(2,2), b=2")
    b1_checked = 0
    for n in range(1, 9):
        for sizes in compositions(n):
            b1_checked += 1
            if count_swap_classes(SwapClassInstance(sizes, 1)) != count_distributions(sizes):
                failures.append(f"b=1 {sizes}")
    uf_checked = 0
    for k in range(1, 4):
        for sizes in itertools.product(range(9), repeat=k):
            if sum(sizes) > 8:
                continue
            for b in range(1, 5):
                inst = SwapClassInstance(sizes, b)
                uf_checked += 1
                if count_swap_classes(inst) != count_swap_classes_union_find(inst):
                    failures.append(f"union-find {sizes} b={b}")
    ok = not failures
    report(
        "6 lab exact counts",
        ok,
        f"{b1_checked} b=1 vectors, {uf_checked} union-find instances, {len(failures)} mismatches",
    )
    assert ok, failures[:10]


def test_criterion_7_lab_bound(report):
    violations = []
    checked = 0
    for n in range(0, 11):
        for sizes in compositions(n, max_parts=4) if n else [(0,)]:
            for b in (1, 2, 3):
                checked += 1
                if not check_bound(SwapClassInstance(sizes, b)).holds:
                    violations.append((sizes, b))
    rows = scaling_table([2, 4, 8], 8, 2)
    logs = [r.log2_classes for r in rows]
    increasing = all(a < b for a, b in zip(logs, logs[1:]))
    ok = not violations and increasing
    report(
        "7 lab inequality",
        ok,
        f"{checked} instances, {len(violations)} violations; log2 classes k=2,4,8: "
        + ", ".join(f"{x:.3f}" for x in logs),
    )
    assert ok


def test_criterion_8_determinism_and_serialization(report, tmp_path):
    rng = random.Random(8)
    ix = build(generate_instance(2**14, 300, rng))
    buf = io.BytesIO()
    serialize.dump(ix, buf)
    loaded = serialize.loads(buf.getvalue())
    mismatches = 0
    for _ in range(10_000):
        q = random_int64(rng)
        for kind in KINDS:
            mismatches += loaded.query(q, kind) != ix.query(q, kind)

    paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
    for path in paths:
        main(["bench", "--n", "4096", "--k", "64", "--sweep-s", "--seed", "17", "--csv", str(path)])
    identical = paths[0].read_bytes() == paths[1].read_bytes()
    ok = mismatches == 0 and identical
    report(
        "8 determinism and serialization",
        ok,
        f"{mismatches} round-trip mismatches on 10^4 queries x 2 kinds; bench CSVs identical={identical}",
    )
    assert ok
