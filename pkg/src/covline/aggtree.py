"""Ordered multiset with subtree minimum-weight aggregates (treap).

Entries are ordered by a caller-supplied key function that is evaluated at
comparison time, never stored. That lets a sweep use time-varying keys
(e.g. arc height at the current sweep position) as long as the stored
order stays consistent with the key function whenever the tree is
consulted; crossing events repair the order with ``swap_adjacent``.

Insert, delete, split, merge, min-key/max-key lookup and aggregate range
queries are all O(log n) expected. Nodes survive splits and merges, so a
caller may keep long-lived handle maps from payload ids to nodes and find
the owning set of any node via ``owner_of``.
"""

from __future__ import annotations

import os
import random
import sys
from typing import Any, Callable, Iterator, Optional

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))

_prio = random.Random(0x5EED5EED).random

AUDIT_ENV = "COVLINE_DEBUG_AUDITS"


def audits_enabled() -> bool:
    return os.environ.get(AUDIT_ENV, "") not in ("", "0")


class KeyOverlap(Exception):
    """merge() precondition violated: key ranges of the two sets overlap."""


class NotAdjacent(Exception):
    """swap_adjacent() called on entries that are not neighbors in order."""


class Node:
    __slots__ = ("payload", "weight", "prio", "left", "right", "parent",
                 "agg_w", "agg_payload", "size", "set_ref")

    def __init__(self, payload: Any, weight: float):
        self.payload = payload
        self.weight = weight
        self.prio = _prio()
        self.left: Optional[Node] = None
        self.right: Optional[Node] = None
        self.parent: Optional[Node] = None
        self.agg_w = weight
        self.agg_payload = payload
        self.size = 1
        self.set_ref = None  # meaningful only while this node is a root


def _pull(n: Node) -> None:
    w, p, s = n.weight, n.payload, 1
    l, r = n.left, n.right
    if l is not None:
        s += l.size
        if l.agg_w <= w:  # prefer the leftmost minimum for determinism
            w, p = l.agg_w, l.agg_payload
    if r is not None:
        s += r.size
        if r.agg_w < w:
            w, p = r.agg_w, r.agg_payload
    n.agg_w, n.agg_payload, n.size = w, p, s


class AggregateOrderedSet:
    def __init__(self, key_of: Callable[[Any], Any], label: Any = None):
        self.key_of = key_of
        self.root: Optional[Node] = None
        self.label = label

    # -- bookkeeping ------------------------------------------------------

    def _reroot(self, node: Optional[Node]) -> None:
        self.root = node
        if node is not None:
            node.parent = None
            node.set_ref = self

    @staticmethod
    def owner_of(node: Node) -> "AggregateOrderedSet":
        while node.parent is not None:
            node = node.parent
        return node.set_ref

    def __len__(self) -> int:
        return self.root.size if self.root is not None else 0

    def __iter__(self) -> Iterator[Node]:
        stack: list[Node] = []
        cur = self.root
        while stack or cur is not None:
            while cur is not None:
                stack.append(cur)
                cur = cur.left
            cur = stack.pop()
            yield cur
            cur = cur.right

    def to_list(self) -> list[tuple[Any, float]]:
        return [(n.payload, n.weight) for n in self]

    # -- structural primitives --------------------------------------------

    def _split(self, node: Optional[Node], key, strict: bool):
        """Split subtree by key: left gets keys < key (strict) or <= key."""
        if node is None:
            return None, None
        k = self.key_of(node.payload)
        if k < key or (not strict and k == key):
            l, r = self._split(node.right, key, strict)
            node.right = l
            if l is not None:
                l.parent = node
            _pull(node)
            node.parent = None
            if r is not None:
                r.parent = None
            return node, r
        l, r = self._split(node.left, key, strict)
        node.left = r
        if r is not None:
            r.parent = node
        _pull(node)
        node.parent = None
        if l is not None:
            l.parent = None
        return l, node

    @staticmethod
    def _join(a: Optional[Node], b: Optional[Node]) -> Optional[Node]:
        if a is None:
            return b
        if b is None:
            return a
        if a.prio > b.prio:
            sub = AggregateOrderedSet._join(a.right, b)
            a.right = sub
            sub.parent = a
            _pull(a)
            a.parent = None
            return a
        sub = AggregateOrderedSet._join(a, b.left)
        b.left = sub
        sub.parent = b
        _pull(b)
        b.parent = None
        return b

    def _bubble(self, node: Optional[Node]) -> None:
        last = None
        while node is not None:
            _pull(node)
            last = node
            node = node.parent
        if last is not None:
            self._reroot(last)

    # -- public operations --------------------------------------------------

    def insert(self, payload: Any, weight: float) -> Node:
        node = Node(payload, weight)
        l, r = self._split(self.root, self.key_of(payload), strict=False)
        self._reroot(self._join(self._join(l, node), r))
        return node

    def delete(self, node: Node) -> None:
        sub = self._join(node.left, node.right)
        parent = node.parent
        if sub is not None:
            sub.parent = parent
        if parent is None:
            self._reroot(sub)
        else:
            if parent.left is node:
                parent.left = sub
            else:
                parent.right = sub
            self._bubble(parent)
        node.left = node.right = node.parent = None

    def split_le(self, key) -> tuple["AggregateOrderedSet", "AggregateOrderedSet"]:
        """(keys <= key, keys > key); self is consumed."""
        return self._split_off(key, strict=False)

    def split_lt(self, key) -> tuple["AggregateOrderedSet", "AggregateOrderedSet"]:
        """(keys < key, keys >= key); self is consumed."""
        return self._split_off(key, strict=True)

    def _split_off(self, key, strict: bool):
        l, r = self._split(self.root, key, strict)
        a = AggregateOrderedSet(self.key_of)
        b = AggregateOrderedSet(self.key_of)
        a._reroot(l)
        b._reroot(r)
        self.root = None
        return a, b

    @staticmethod
    def merge(left: "AggregateOrderedSet", right: "AggregateOrderedSet") -> "AggregateOrderedSet":
        """Concatenate two key-disjoint sets (all left keys <= all right keys).

        Both arguments are consumed. The precondition is checked when debug
        audits are enabled.
        """
        key_of = left.key_of if left.root is not None else right.key_of
        if audits_enabled() and left.root is not None and right.root is not None:
            kmax = key_of(left.max_node().payload)
            kmin = key_of(right.min_node().payload)
            if kmax > kmin:
                raise KeyOverlap(f"left max key {kmax!r} > right min key {kmin!r}")
        out = AggregateOrderedSet(key_of)
        out._reroot(AggregateOrderedSet._join(left.root, right.root))
        left.root = None
        right.root = None
        return out

    def min_node(self) -> Optional[Node]:
        n = self.root
        if n is None:
            return None
        while n.left is not None:
            n = n.left
        return n

    def max_node(self) -> Optional[Node]:
        n = self.root
        if n is None:
            return None
        while n.right is not None:
            n = n.right
        return n

    def global_min(self) -> Optional[tuple[float, Any]]:
        if self.root is None:
            return None
        return self.root.agg_w, self.root.agg_payload

    def _min_weight(self, key, strict: bool) -> Optional[tuple[float, Any]]:
        best_w = None
        best_p = None
        node = self.root
        while node is not None:
            k = self.key_of(node.payload)
            if k < key or (not strict and k == key):
                l = node.left
                if l is not None and (best_w is None or l.agg_w < best_w):
                    best_w, best_p = l.agg_w, l.agg_payload
                if best_w is None or node.weight < best_w:
                    best_w, best_p = node.weight, node.payload
                node = node.right
            else:
                node = node.left
        if best_w is None:
            return None
        return best_w, best_p

    def min_weight_le(self, key) -> Optional[tuple[float, Any]]:
        """Minimum weight among entries with key <= key, or None."""
        return self._min_weight(key, strict=False)

    def min_weight_lt(self, key) -> Optional[tuple[float, Any]]:
        """Minimum weight among entries with key < key, or None."""
        return self._min_weight(key, strict=True)

    def partition_point(self, pred: Callable[[Any], bool]) -> Optional[Node]:
        """First entry in key order satisfying pred; pred must be monotone
        (False... then True...) along the order."""
        best = None
        node = self.root
        while node is not None:
            if pred(node.payload):
                best = node
                node = node.left
            else:
                node = node.right
        return best

    @staticmethod
    def successor(node: Node) -> Optional[Node]:
        if node.right is not None:
            node = node.right
            while node.left is not None:
                node = node.left
            return node
        while node.parent is not None and node.parent.right is node:
            node = node.parent
        return node.parent

    @staticmethod
    def predecessor(node: Node) -> Optional[Node]:
        if node.left is not None:
            node = node.left
            while node.right is not None:
                node = node.right
            return node
        while node.parent is not None and node.parent.left is node:
            node = node.parent
        return node.parent

    def swap_adjacent(self, a: Node, b: Node) -> None:
        """Exchange the order of two neighboring entries.

        Swaps the (payload, weight) contents; node identities keep their
        positions, so callers tracking payload->node maps must swap those
        entries too.
        """
        if self.successor(a) is b or self.successor(b) is a:
            a.payload, b.payload = b.payload, a.payload
            a.weight, b.weight = b.weight, a.weight
            self._bubble(a)
            self._bubble(b)
            return
        raise NotAdjacent("entries are not adjacent in key order")

    # -- verification -------------------------------------------------------

    def check(self, order_tol: float = 0.0) -> None:
        """Recompute everything and compare with the stored structure.

        ``order_tol`` admits transient sub-epsilon key inversions right at a
        crossing, where float heights of two just-swapped arcs can disagree
        by an ulp; exact key regimes pass 0.
        """
        def walk(node):
            if node is None:
                return None, 0
            assert node.left is None or node.left.parent is node
            assert node.right is None or node.right.parent is node
            la, ls = walk(node.left)
            ra, rs = walk(node.right)
            w = node.weight
            if la is not None:
                w = min(w, la)
            if ra is not None:
                w = min(w, ra)
            assert node.agg_w == w, f"aggregate mismatch at {node.payload!r}"
            assert node.size == ls + rs + 1
            return w, node.size

        walk(self.root)
        keys = [self.key_of(n.payload) for n in self]
        assert all(
            keys[i] <= keys[i + 1] + order_tol for i in range(len(keys) - 1)
        ), "order violated"
