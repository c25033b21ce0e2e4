"""Right-to-left online suffix tree with hard-link-only W-link bookkeeping.

One ``prepend`` turns the tree of the current string into the tree of the
string with one letter in front.  Only hard W-links are stored (as per-node
tables plus explicit color marks on the tour); soft links are recovered on
demand from the closest marked descendant, whose hard link provably targets
the same node.

The tree string is the sequence of prepended letters read newest-first.  In
RTL use it equals the logical text; in LTR use the maintainer feeds the text
in arrival order so the tree indexes the reversed text, and former full-
string leaves may later gain children (out-degree-1 internal nodes are
expected there).

Recorded positions per node (``rec_pos``) are write-once:

* RTL - from-right end offset (<= 0) of the rightmost occurrence of the
  node's label; leaves store 0.
* LTR - from-left end position in the text of the leftmost occurrence of
  the text substring whose reverse is the label; leaves store the length of
  the text at creation time.
"""
from __future__ import annotations

from dataclasses import dataclass

from .colored_list import HARD
from .counters import OpCounters
from .errors import InvariantError, UsageError
from .text import Direction, TextBuffer
from .topology import TopoNode, TreeTopology

ENGINES = ("fringe", "naive-walk")

_COMPUTE = object()  # sentinel: prepend() finds alpha itself


class STNode:
    __slots__ = ("nid", "parent", "children", "depth", "rec_pos", "hard", "topo")

    def __init__(self, nid: int, parent, depth: int, rec_pos: int):
        self.nid = nid
        self.parent: STNode | None = parent
        self.children: dict[int, STNode] | None = None
        self.depth = depth
        self.rec_pos = rec_pos
        self.hard: dict[int, STNode] | None = None
        self.topo: TopoNode | None = None

    def child_count(self) -> int:
        return len(self.children) if self.children else 0


@dataclass(frozen=True)
class RoundReport:
    """What one prepend round did; drives the extension-set maintainers."""

    letter: int
    lambda_old: STNode | None
    lambda_new: STNode
    alpha: STNode | None
    gamma: STNode
    gamma_created: bool
    y_letter: int | None
    z_letter: int | None
    root_children_before: int


class WeinerTree:
    def __init__(
        self,
        buffer: TextBuffer,
        counters: OpCounters | None = None,
        engine: str = "fringe",
        seed: int = 0,
    ):
        if engine not in ENGINES:
            raise UsageError(f"unknown engine {engine!r}")
        self.buffer = buffer
        self.direction = buffer.direction
        self.engine = engine
        self.counters = counters if counters is not None else OpCounters()
        self.topo = TreeTopology(counters=self.counters, seed=seed)
        self.size = 0
        self.nodes: list[STNode] = []
        self.root = self._new_node(None, 0, 0)
        self.root.topo = self.topo.add_root(payload=self.root)
        self.lam: STNode | None = None

    def _new_node(self, parent, depth, rec_pos) -> STNode:
        node = STNode(len(self.nodes), parent, depth, rec_pos)
        self.nodes.append(node)
        return node

    # ------------------------------------------------------------------
    # letter access through the recorded coordinates

    def _old_letter(self, d: int) -> int:
        """Letter at 1-based depth ``d`` of the pre-round tree string."""
        return self.buffer.arrival(self.size - 1 - d)

    def label_letter(self, node: STNode, t: int) -> int:
        """Letter at 1-based depth ``t`` of ``label(node)``."""
        if self.direction is Direction.RTL:
            return self.buffer.arrival(node.depth - t - node.rec_pos)
        return self.buffer.arrival(node.rec_pos - t)

    def label_bytes(self, node: STNode) -> bytes:
        return bytes(self.label_letter(node, t) for t in range(1, node.depth + 1))

    def tree_string(self) -> bytes:
        """Current tree string (newest prepended letter first)."""
        return bytes(self.buffer.arrival(self.size - d) for d in range(1, self.size + 1))

    # ------------------------------------------------------------------
    # ancestor queries (engine switch lives here)

    def lowest_colored_ancestor(self, node: STNode, color: int) -> STNode | None:
        """Lowest proper ancestor of ``node`` that is ``color``-colored."""
        if self.engine == "fringe":
            t = self.topo.lowest_colored_ancestor(node.topo, color)
            return t.payload if t is not None else None
        t = node.topo.parent
        while t is not None:
            self.counters.lca_steps += 1
            if self.topo.first_marked_in_subtree(t, color) is not None:
                return t.payload
            t = t.parent
        return None

    # ------------------------------------------------------------------
    # the round

    def prepend(self, x: int, alpha: STNode | None = _COMPUTE) -> RoundReport:
        """One Weiner round; the caller has already appended ``x`` to the buffer.

        ``alpha`` may be passed in when the caller already ran the ancestor
        query on the pre-round tree (the two must be the same tree state).
        """
        if self.buffer.n != self.size + 1:
            raise UsageError("buffer and tree lengths out of step")
        self.size = self.buffer.n
        leaf_pos = 0 if self.direction is Direction.RTL else self.size

        if self.lam is None:
            lam = self._attach_leaf(self.root, x, leaf_pos)
            self._set_hard(self.root, x, lam)
            self.lam = lam
            return RoundReport(x, None, lam, None, self.root, False, None, None, 0)

        lam_old = self.lam
        rcb = self.root.child_count()
        if alpha is _COMPUTE:
            alpha = self.lowest_colored_ancestor(lam_old, x)

        z: int | None = None
        if alpha is None:
            gamma, created = self.root, False
            y = self._old_letter(1)
            lam_new = self._attach_leaf(self.root, x, leaf_pos)
        elif alpha.hard is not None and x in alpha.hard:
            gamma, created = alpha.hard[x], False
            y = self._old_letter(alpha.depth + 1)
            lam_new = self._attach_leaf(gamma, y, leaf_pos)
        else:
            zt = self.topo.first_marked_in_subtree(alpha.topo, x)
            if zt is None or zt.payload is alpha:
                raise InvariantError("soft link without a marked proper descendant")
            d0 = zt.payload.hard[x]
            gamma, z = self._split(d0, alpha.depth + 1)
            created = True
            y = self._old_letter(alpha.depth + 1)
            lam_new = self._attach_leaf(gamma, y, leaf_pos)

        self._set_hard(lam_old, x, lam_new)
        if alpha is not None:
            self._set_hard(alpha, x, gamma)
        self.lam = lam_new
        return RoundReport(x, lam_old, lam_new, alpha, gamma, created, y, z, rcb)

    def _attach_leaf(self, parent: STNode, edge_letter: int, rec_pos: int) -> STNode:
        if parent.children is None:
            parent.children = {}
        elif edge_letter in parent.children:
            raise InvariantError("attachment edge letter already present")
        leaf = self._new_node(parent, self.size, rec_pos)
        parent.children[edge_letter] = leaf
        leaf.topo = self.topo.add_leaf(parent.topo, payload=leaf)
        return leaf

    def _split(self, below: STNode, depth: int) -> tuple[STNode, int]:
        """New node at ``depth`` on the edge into ``below``; returns (node, z)."""
        parent = below.parent
        if not parent.depth < depth < below.depth:
            raise InvariantError("split depth outside the edge")
        key = self.label_letter(below, parent.depth + 1)
        z = self.label_letter(below, depth + 1)
        if self.direction is Direction.RTL:
            rec = below.rec_pos - (below.depth - depth)
        else:
            rec = below.rec_pos
        node = self._new_node(parent, depth, rec)
        parent.children[key] = node
        node.children = {z: below}
        below.parent = node
        node.topo = self.topo.subdivide_edge(parent.topo, below.topo, payload=node)
        return node, z

    def _set_hard(self, node: STNode, letter: int, dest: STNode):
        if node.hard is None:
            node.hard = {}
        prev = node.hard.get(letter)
        if prev is not None and prev is not dest:
            raise InvariantError("hard link retargeted")
        node.hard[letter] = dest
        self.topo.mark(node.topo, letter)
        self.topo.mark(node.topo, HARD)

    # ------------------------------------------------------------------

    def resolve_wlink(self, node: STNode, x: int) -> STNode | None:
        """Destination of the node's ``x``-link, hard or recovered soft.

        Requires the link to be defined (node is ``x``-colored); returns
        None when it is not, which callers treat as "no defined link".
        """
        if node.hard is not None and x in node.hard:
            return node.hard[x]
        t = self.topo.first_marked_in_subtree(node.topo, x)
        if t is None:
            return None
        return t.payload.hard[x]
