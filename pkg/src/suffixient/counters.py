"""Per-step operation counters for benchmarking."""
from __future__ import annotations


class OpCounters:
    """Counts the primitive operations a stream step performs.

    list_ops     - colored-list API calls (insert, color, pred, succ)
    lca_steps    - parent-chain hops inside LCA / ancestor walks
    tree_updates - tree mutations and marks (add_leaf, subdivide, mark)
    """

    __slots__ = ("list_ops", "lca_steps", "tree_updates")

    def __init__(self):
        self.list_ops = 0
        self.lca_steps = 0
        self.tree_updates = 0

    def snapshot(self) -> tuple[int, int, int]:
        return (self.list_ops, self.lca_steps, self.tree_updates)

    def total(self) -> int:
        return self.list_ops + self.lca_steps + self.tree_updates
