"""Dynamic-tree services over an Euler tour of the growing tree.

Every tree node owns two adjacent-in-spirit list items (first and last
visit).  A subtree is a contiguous interval of the tour, so ancestor tests
are two order comparisons, and the lowest colored ancestor reduces to one
colored pred, one colored succ, and two LCA computations.

Explicit color marks live only on open items; a node counts as colored when
its subtree contains an explicit mark (clients maintain marks so that this
"fringe" reading matches their semantics).
"""
from __future__ import annotations

from .colored_list import ListItem, OrderedColoredList
from .counters import OpCounters
from .errors import HandleError, InvariantError


class TopoNode:
    """Tree handle: parent pointer, the two tour items, and a client payload."""

    __slots__ = ("parent", "open_item", "close_item", "payload")

    def __init__(self, parent, open_item: ListItem, close_item: ListItem, payload):
        self.parent = parent
        self.open_item = open_item
        self.close_item = close_item
        self.payload = payload


class TreeTopology:
    def __init__(self, counters: OpCounters | None = None, seed: int = 0):
        self.counters = counters if counters is not None else OpCounters()
        self.list = OrderedColoredList(seed=seed, counters=self.counters)
        self.root: TopoNode | None = None

    def add_root(self, payload=None) -> TopoNode:
        if self.root is not None:
            raise HandleError("tree already has a root")
        o, c = self.list.insert_after(self.list.head, 2)
        self.root = TopoNode(None, o, c, payload)
        o.node = c.node = self.root
        self.counters.tree_updates += 1
        return self.root

    def add_leaf(self, parent: TopoNode, payload=None) -> TopoNode:
        """New rightmost child: its items go immediately before close(parent)."""
        o, c = self.list.insert_before(parent.close_item, 2)
        node = TopoNode(parent, o, c, payload)
        o.node = c.node = node
        self.counters.tree_updates += 1
        return node

    def subdivide_edge(self, parent: TopoNode, child: TopoNode, payload=None) -> TopoNode:
        """Split the parent-child edge; the new node wraps the child's interval.

        The new node receives no explicit marks: implicit coloring through
        tour containment already carries the child subtree's colors up.
        """
        if child.parent is not parent:
            raise HandleError("nodes are not a parent/child pair")
        o = self.list.insert_before(child.open_item)
        c = self.list.insert_after(child.close_item)
        node = TopoNode(parent, o, c, payload)
        o.node = c.node = node
        child.parent = node
        self.counters.tree_updates += 1
        return node

    # ------------------------------------------------------------------
    # queries

    def mark(self, node: TopoNode, color: int):
        """Place an explicit mark; only open items ever carry marks."""
        self.counters.tree_updates += 1
        self.list.set_color(node.open_item, color)

    def has_mark(self, node: TopoNode, color: int) -> bool:
        return node.open_item.has_color(color)

    def is_ancestor(self, a: TopoNode, b: TopoNode) -> bool:
        """True iff ``a`` is an ancestor of ``b`` or a == b."""
        L = self.list
        return (
            L.order(a.open_item, b.open_item) <= 0
            and L.order(b.close_item, a.close_item) <= 0
        )

    def lca(self, a: TopoNode, b: TopoNode) -> TopoNode:
        """Deepest common ancestor; climbs parent links from ``a``.

        Callers pass the likely-shallower node first: the climb costs
        depth(a) - depth(lca) ancestor tests.
        """
        if self.is_ancestor(a, b):
            return a
        node = a.parent
        while node is not None:
            self.counters.lca_steps += 1
            if self.is_ancestor(node, b):
                return node
            node = node.parent
        raise InvariantError("nodes share no ancestor")

    def lowest_colored_ancestor(self, node: TopoNode, color: int) -> TopoNode | None:
        """Lowest proper ancestor whose subtree holds an explicit ``color`` mark.

        Caller guarantees node's own subtree is mark-free for this color.
        The two tour neighbors carrying the color pin the answer: it is the
        lower of lca(pred, node) and lca(node, succ).
        """
        L = self.list
        left = L.pred(node.open_item, color)
        right = L.succ(node.close_item, color)
        c1 = self.lca(left.node, node) if left is not None else None
        c2 = self.lca(right.node, node) if right is not None else None
        if c1 is None:
            return c2
        if c2 is None:
            return c1
        return c2 if self.is_ancestor(c1, c2) else c1

    def first_marked_in_subtree(self, node: TopoNode, color: int) -> TopoNode | None:
        """Earliest explicitly marked node in the subtree, in tour order.

        Returns ``node`` itself when marked.  When the subtree's marks all
        descend from one closest marked node (as with hard-link marks), the
        earliest open item is exactly that node.
        """
        if node.open_item.has_color(color):
            return node
        s = self.list.succ(node.open_item, color)
        if s is not None and self.list.order(s, node.close_item) < 0:
            return s.node
        return None

    # ------------------------------------------------------------------

    def euler_nodes(self) -> list[tuple[TopoNode, bool]]:
        """Tour as (node, is_open) pairs, for structural checks."""
        out = []
        for item in self.list:
            if item.node is None:
                continue
            out.append((item.node, item is item.node.open_item))
        return out
