"""Dynamic list with order comparison and colored predecessor/successor.

Items live in buckets chained in list order.  A bucket carries a widely
spaced integer label and every item a local label inside its bucket, so
comparing two items is one tuple comparison of (bucket label, local label).
Inserting relabels at most the affected bucket (splitting it when full);
exhausting the bucket-label gaps respaces the bucket chain.  Relabeling
never changes the relative order of existing items, which is what makes the
per-color indexes safe: each color keeps a treap of the items carrying it,
ordered by the *live* order key, so label churn needs no rekeying.

Colors are small integers.  Letter colors are the letter codes themselves;
two reserved negative codes mark derived properties of tree nodes.
"""
from __future__ import annotations

import random
from bisect import bisect_left

from .counters import OpCounters
from .errors import HandleError

# Reserved colors, distinct from every letter code.
MULTI = -1  # node has two or more defined W-links
HARD = -2   # node has at least one stored hard W-link

LESS, EQUAL, GREATER = -1, 0, 1

_BUCKET_CAP = 64
_LOCAL_GAP = 1 << 32
_BUCKET_GAP = 1 << 32


class ListItem:
    """Handle to one list element.  ``node`` backrefs the owning tree node."""

    __slots__ = ("owner", "bucket", "local", "colors", "node")

    def __init__(self, owner, bucket, local):
        self.owner = owner
        self.bucket = bucket
        self.local = local
        self.colors = None
        self.node = None

    def has_color(self, color: int) -> bool:
        return self.colors is not None and color in self.colors


class _Bucket:
    __slots__ = ("label", "items", "prev", "next")

    def __init__(self, label):
        self.label = label
        self.items: list[ListItem] = []
        self.prev = None
        self.next = None


class _TreapNode:
    __slots__ = ("item", "prio", "left", "right")

    def __init__(self, item, prio):
        self.item = item
        self.prio = prio
        self.left = None
        self.right = None


def _local(item: ListItem) -> int:
    return item.local


class OrderedColoredList:
    """Insert-only ordered list; see module docstring for the structure."""

    def __init__(self, seed: int = 0, counters: OpCounters | None = None):
        self.counters = counters if counters is not None else OpCounters()
        self._rng = random.Random(seed)
        self._colors: dict[int, _TreapNode] = {}
        first = _Bucket(0)
        self._first_bucket = first
        self.head = ListItem(self, first, 0)
        first.items.append(self.head)

    # ------------------------------------------------------------------
    # order maintenance

    def order(self, a: ListItem, b: ListItem) -> int:
        """-1, 0, or 1 as ``a`` precedes, equals, or follows ``b``."""
        if a.owner is not self or b.owner is not self:
            raise HandleError("items belong to a different list")
        if a is b:
            return EQUAL
        ka = (a.bucket.label, a.local)
        kb = (b.bucket.label, b.local)
        return LESS if ka < kb else GREATER

    def _key(self, item: ListItem):
        return (item.bucket.label, item.local)

    def _respace_bucket(self, bucket: _Bucket):
        for k, it in enumerate(bucket.items):
            it.local = k * _LOCAL_GAP

    def _respace_chain(self):
        bucket, k = self._first_bucket, 0
        while bucket is not None:
            bucket.label = k * _BUCKET_GAP
            bucket, k = bucket.next, k + 1

    def _split(self, bucket: _Bucket):
        half = len(bucket.items) // 2
        nxt = bucket.next
        if nxt is None:
            label = bucket.label + _BUCKET_GAP
        else:
            label = (bucket.label + nxt.label) // 2
            if label <= bucket.label:
                self._respace_chain()
                label = (bucket.label + nxt.label) // 2
        right = _Bucket(label)
        right.items = bucket.items[half:]
        del bucket.items[half:]
        for k, it in enumerate(right.items):
            it.bucket = right
            it.local = k * _LOCAL_GAP
        right.prev, right.next = bucket, nxt
        bucket.next = right
        if nxt is not None:
            nxt.prev = right

    def _insert_one_after(self, anchor: ListItem) -> ListItem:
        bucket = anchor.bucket
        items = bucket.items
        i = bisect_left(items, anchor.local, key=_local)
        nxt_local = items[i + 1].local if i + 1 < len(items) else anchor.local + 2 * _LOCAL_GAP
        if nxt_local - anchor.local < 2:
            self._respace_bucket(bucket)
            i = bisect_left(items, anchor.local, key=_local)
            nxt_local = items[i + 1].local if i + 1 < len(items) else anchor.local + 2 * _LOCAL_GAP
        item = ListItem(self, bucket, (anchor.local + nxt_local) // 2)
        items.insert(i + 1, item)
        if len(items) > _BUCKET_CAP:
            self._split(bucket)
        return item

    def insert_after(self, anchor: ListItem, count: int = 1):
        """Insert ``count`` (1 or 2) new uncolored items right after ``anchor``.

        Returns the new item, or a pair in list order when count is 2.
        """
        if anchor.owner is not self:
            raise HandleError("anchor belongs to a different list")
        if count not in (1, 2):
            raise HandleError(f"count must be 1 or 2, got {count}")
        self.counters.list_ops += count
        first = self._insert_one_after(anchor)
        if count == 1:
            return first
        return first, self._insert_one_after(first)

    def insert_before(self, item: ListItem, count: int = 1):
        """Dual of insert_after; the head sentinel guarantees a predecessor."""
        if item.owner is not self:
            raise HandleError("item belongs to a different list")
        if item is self.head:
            raise HandleError("cannot insert before the head sentinel")
        bucket = item.bucket
        i = bisect_left(bucket.items, item.local, key=_local)
        if i > 0:
            anchor = bucket.items[i - 1]
        else:
            anchor = bucket.prev.items[-1]
        return self.insert_after(anchor, count)

    # ------------------------------------------------------------------
    # colors

    def set_color(self, item: ListItem, color: int):
        """Add ``color`` to the item; idempotent, colors are never removed."""
        if item.owner is not self:
            raise HandleError("item belongs to a different list")
        self.counters.list_ops += 1
        if item.colors is None:
            item.colors = set()
        elif color in item.colors:
            return
        item.colors.add(color)
        self._colors[color] = self._treap_insert(
            self._colors.get(color), item, self._key(item), self._rng.getrandbits(30)
        )

    def _treap_insert(self, node, item, key, prio):
        if node is None:
            return _TreapNode(item, prio)
        nk = (node.item.bucket.label, node.item.local)
        if key < nk:
            node.left = self._treap_insert(node.left, item, key, prio)
            if node.left.prio > node.prio:
                left = node.left
                node.left = left.right
                left.right = node
                return left
        else:
            node.right = self._treap_insert(node.right, item, key, prio)
            if node.right.prio > node.prio:
                right = node.right
                node.right = right.left
                right.left = node
                return right
        return node

    def pred(self, item: ListItem, color: int) -> ListItem | None:
        """Closest item strictly before ``item`` carrying ``color``."""
        if item.owner is not self:
            raise HandleError("item belongs to a different list")
        self.counters.list_ops += 1
        key = (item.bucket.label, item.local)
        node = self._colors.get(color)
        best = None
        while node is not None:
            if (node.item.bucket.label, node.item.local) < key:
                best = node.item
                node = node.right
            else:
                node = node.left
        return best

    def succ(self, item: ListItem, color: int) -> ListItem | None:
        """Closest item strictly after ``item`` carrying ``color``."""
        if item.owner is not self:
            raise HandleError("item belongs to a different list")
        self.counters.list_ops += 1
        key = (item.bucket.label, item.local)
        node = self._colors.get(color)
        best = None
        while node is not None:
            if (node.item.bucket.label, node.item.local) > key:
                best = node.item
                node = node.left
            else:
                node = node.right
        return best

    # ------------------------------------------------------------------

    def __iter__(self):
        """All items in list order, head sentinel included."""
        bucket = self._first_bucket
        while bucket is not None:
            yield from bucket.items
            bucket = bucket.next

    def __len__(self) -> int:
        return sum(len(b.items) for b in self._buckets())

    def _buckets(self):
        bucket = self._first_bucket
        while bucket is not None:
            yield bucket
            bucket = bucket.next
