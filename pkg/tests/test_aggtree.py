import random
import time

import pytest
from hypothesis import given, settings, strategies as st

from covline.aggtree import AggregateOrderedSet, KeyOverlap, NotAdjacent


def make(key_of=lambda x: x):
    return AggregateOrderedSet(key_of=key_of)


class TestBasics:
    def test_insert_into_empty(self):
        t = make()
        t.insert(5.0, 3.0)
        assert len(t) == 1
        assert t.global_min() == (3.0, 5.0)

    def test_aggregate_tracks_minimum(self):
        t = make()
        t.insert(1.0, 3.0)
        t.insert(2.0, 1.0)
        assert t.global_min()[0] == 1.0

    def test_delete_min_weight_recovers_second(self):
        t = make()
        nodes = {}
        for k, w in [(1, 5.0), (2, 2.0), (3, 9.0), (4, 4.0), (5, 7.0)]:
            nodes[k] = t.insert(float(k), w)
        t.delete(nodes[2])
        assert t.global_min()[0] == 4.0

    def test_split_empty(self):
        a, b = make().split_le(0.0)
        assert len(a) == 0 and len(b) == 0

    def test_split_le(self):
        t = make()
        for k in (1.0, 2.0, 3.0):
            t.insert(k, k)
        left, right = t.split_le(2.0)
        assert [n.payload for n in left] == [1.0, 2.0]
        assert [n.payload for n in right] == [3.0]

    def test_split_lt(self):
        t = make()
        for k in (1.0, 2.0, 3.0):
            t.insert(k, k)
        left, right = t.split_lt(2.0)
        assert [n.payload for n in left] == [1.0]
        assert [n.payload for n in right] == [2.0, 3.0]

    def test_split_then_merge_round_trip(self):
        t = make()
        items = [(float(k), float(10 - k)) for k in range(10)]
        for k, w in items:
            t.insert(k, w)
        left, right = t.split_le(4.5)
        back = AggregateOrderedSet.merge(left, right)
        assert back.to_list() == items
        assert back.global_min()[0] == min(w for _k, w in items)
        back.check()

    def test_merge_empty_identity(self):
        t = make()
        t.insert(9.0, 2.0)
        merged = AggregateOrderedSet.merge(make(), t)
        assert merged.to_list() == [(9.0, 2.0)]

    def test_merge_aggregate(self):
        a, b = make(), make()
        a.insert(1.0, 5.0)
        b.insert(9.0, 2.0)
        assert AggregateOrderedSet.merge(a, b).global_min()[0] == 2.0

    def test_merge_sizes_add(self):
        a, b = make(), make()
        for k in range(5):
            a.insert(float(k), 1.0)
        for k in range(7):
            b.insert(100.0 + k, 1.0)
        assert len(AggregateOrderedSet.merge(a, b)) == 12

    def test_merge_overlap_rejected_in_debug(self, monkeypatch):
        monkeypatch.setenv("COVLINE_DEBUG_AUDITS", "1")
        a, b = make(), make()
        a.insert(5.0, 1.0)
        b.insert(1.0, 1.0)
        with pytest.raises(KeyOverlap):
            AggregateOrderedSet.merge(a, b)

    def test_min_weight_below(self):
        t = make()
        for k, w in [(1.0, 7.0), (4.0, 2.0), (9.0, 1.0)]:
            t.insert(k, w)
        assert t.min_weight_le(5.0) == (2.0, 4.0)
        assert t.min_weight_le(0.0) is None
        assert t.min_weight_le(9.0)[0] == t.global_min()[0]
        assert t.min_weight_lt(9.0) == (2.0, 4.0)

    def test_swap_adjacent(self):
        t = make()
        na = t.insert(1.0, 5.0)
        nb = t.insert(2.0, 3.0)
        t.swap_adjacent(na, nb)
        assert [n.weight for n in t] == [3.0, 5.0]
        assert t.global_min()[0] == 3.0
        t.swap_adjacent(na, nb)
        assert [n.weight for n in t] == [5.0, 3.0]

    def test_swap_non_adjacent_raises(self):
        t = make()
        na = t.insert(1.0, 1.0)
        t.insert(2.0, 1.0)
        nc = t.insert(3.0, 1.0)
        with pytest.raises(NotAdjacent):
            t.swap_adjacent(na, nc)

    def test_partition_point(self):
        t = make()
        for k in range(10):
            t.insert(float(k), 1.0)
        node = t.partition_point(lambda p: p >= 6.5)
        assert node.payload == 7.0
        assert t.partition_point(lambda p: p > 100) is None

    def test_owner_of_tracks_merges(self):
        a, b = make(), make()
        node = a.insert(1.0, 1.0)
        b.insert(5.0, 1.0)
        merged = AggregateOrderedSet.merge(a, b)
        assert AggregateOrderedSet.owner_of(node) is merged


class _Reference:
    """Sorted-list mirror of the tree, for randomized differential testing."""

    def __init__(self):
        self.items: list[tuple[float, float, int]] = []  # (key, weight, tag)

    def insert(self, key, weight, tag):
        import bisect

        keys = [k for k, _w, _t in self.items]
        self.items.insert(bisect.bisect_right(keys, key), (key, weight, tag))

    def delete(self, tag):
        self.items = [it for it in self.items if it[2] != tag]

    def split_le(self, key):
        left = [it for it in self.items if it[0] <= key]
        right = [it for it in self.items if it[0] > key]
        return left, right

    def min_weight_le(self, key):
        cand = [(w, k) for k, w, _t in self.items if k <= key]
        return min(cand)[0] if cand else None


def test_randomized_against_sorted_list_reference():
    rng = random.Random(1234)
    key_of = lambda tag: tags[tag][0]  # noqa: E731
    tags: dict[int, tuple[float, float]] = {}
    tree = AggregateOrderedSet(key_of)
    nodes: dict[int, object] = {}
    ref = _Reference()
    next_tag = 0
    ops = 0
    for _ in range(12000):
        ops += 1
        roll = rng.random()
        if roll < 0.45 or not tags:
            key = rng.uniform(0, 100)
            w = rng.uniform(0, 10)
            tags[next_tag] = (key, w)
            nodes[next_tag] = tree.insert(next_tag, w)
            ref.insert(key, w, next_tag)
            next_tag += 1
        elif roll < 0.70:
            tag = rng.choice(list(tags))
            tree.delete(nodes.pop(tag))
            ref.delete(tag)
            del tags[tag]
        elif roll < 0.85:
            key = rng.uniform(-5, 105)
            got = tree.min_weight_le(key)
            want = ref.min_weight_le(key)
            if want is None:
                assert got is None
            else:
                assert got[0] == want
        else:
            key = rng.uniform(-5, 105)
            left, right = tree.split_le(key)
            lref, rref = ref.split_le(key)
            assert [n.payload for n in left] == [t for _k, _w, t in lref]
            assert [n.payload for n in right] == [t for _k, _w, t in rref]
            tree = AggregateOrderedSet.merge(left, right)
        if ops % 1000 == 0:
            tree.check()
            assert [n.payload for n in tree] == [t for _k, _w, t in ref.items]
    assert ops >= 10_000


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 50), st.integers(0, 100)), min_size=1, max_size=60))
def test_aggregate_always_matches_recomputation(pairs):
    t = make(key_of=lambda p: p[0])
    nodes = []
    for i, (k, w) in enumerate(pairs):
        nodes.append(t.insert((k, i), float(w)))
        t.check()
    want = min(float(w) for _k, w in pairs)
    assert t.global_min()[0] == want
    for node in nodes[: len(nodes) // 2]:
        t.delete(node)
        t.check()


@pytest.mark.slow
def test_per_op_time_grows_logarithmically():
    """Insert+delete cost at 2^20 entries stays within ~2x of the 2^10 cost."""
    rng = random.Random(9)

    def per_op_cost(size: int) -> float:
        t = make()
        nodes = [t.insert(rng.random(), rng.random()) for _ in range(size)]
        probe = rng.sample(nodes, 512)
        t0 = time.perf_counter()
        for node in probe:
            t.delete(node)
        fresh = [t.insert(rng.random(), rng.random()) for _ in range(512)]
        elapsed = time.perf_counter() - t0
        for node in fresh:
            t.delete(node)
        return elapsed / 1024

    small = min(per_op_cost(1 << 10) for _ in range(3))
    big = per_op_cost(1 << 20)
    assert big <= 2.5 * small, f"per-op cost grew {big / small:.2f}x from 2^10 to 2^20"
