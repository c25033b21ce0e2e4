"""Left-to-right stream: maintain the extension set and its leftmost-ends
position set while the text grows by appended letters.

The tree indexes the reversed text, so appending runs one prepend round.
All decisions are read off the pre-round tree through three monotone mark
families - letter marks (hard links), MULTI (two or more defined W-links),
HARD (any stored hard link) - never from stored per-node letter sets:

with lam the pre-round full-string leaf, nu its parent, alpha the lowest
ancestor of lam with an x-link,

* nu == alpha: nothing changes;
* otherwise (nu, x) is new, and when nu had a single defined link letter y,
  (nu, y) is new too; (alpha, x) dies if live; and with mu the lowest
  MULTI ancestor of lam, (mu, y) dies if live.  nu is then explicitly
  MULTI-marked unless it already was multi-linked.

Positions of added pairs are read from the resolved link destination after
the round: its recorded position is the leftmost end of the extension.
"""
from __future__ import annotations

from .colored_list import MULTI, HARD
from .counters import OpCounters
from .errors import InvariantError
from .ledger import DeltaReport, SreChange, SreKey, SreLedger
from .text import Direction, TextBuffer
from .weiner import STNode, WeinerTree


class LeftToRightMaintainer:
    def __init__(
        self,
        sigma: int = 256,
        engine: str = "fringe",
        counters: OpCounters | None = None,
        incremental_bits: bool = False,
    ):
        self.counters = counters if counters is not None else OpCounters()
        self.buffer = TextBuffer(Direction.LTR, sigma)
        self.tree = WeinerTree(self.buffer, counters=self.counters, engine=engine)
        self.ledger = SreLedger(Direction.LTR, incremental_bits)
        self.step = 0
        self._chi_trace: list[int] = []

    @property
    def chi(self) -> int:
        return self.ledger.chi

    def feed(self, letter: int) -> DeltaReport:
        self.buffer.append(letter)
        if self.tree.lam is None:
            self.tree.prepend(letter)
            return self._finish(letter, [], [])

        lam = self.tree.lam
        nu = lam.parent
        alpha = self.tree.lowest_colored_ancestor(lam, letter)
        mu = self.tree.lowest_colored_ancestor(lam, MULTI)
        nu_was_multi = mu is nu
        y = None
        if alpha is not nu and not nu_was_multi:
            y = self._sole_link_letter(nu)

        self.tree.prepend(letter, alpha=alpha)

        if alpha is nu:
            return self._finish(letter, [], [])

        removals: list[tuple[STNode, int]] = []
        if alpha is not None:
            removals.append((alpha, letter))
        if not nu_was_multi and mu is not None:
            removals.append((mu, y))

        removed = []
        for node, c in removals:
            key = SreKey(node.nid, c)
            if key in self.ledger.live:
                pos = self.ledger.remove(key)
                removed.append(SreChange(node.nid, node.depth, c, pos))

        added = []
        for c in (letter,) if nu_was_multi else (letter, y):
            dest = self.tree.resolve_wlink(nu, c)
            if dest is None:
                raise InvariantError("added extension has no resolvable link")
            self.ledger.add(SreKey(nu.nid, c), dest.rec_pos)
            added.append(SreChange(nu.nid, nu.depth, c, dest.rec_pos))

        if not nu_was_multi:
            self.tree.topo.mark(nu.topo, MULTI)
        return self._finish(letter, added, removed)

    def _finish(self, letter, added, removed) -> DeltaReport:
        self.step += 1
        self._chi_trace.append(self.chi)
        return DeltaReport(self.step, letter, tuple(added), tuple(removed), self.chi)

    def _sole_link_letter(self, nu: STNode) -> int:
        """The single defined link letter of a single-linked node.

        Descendants' defined letters are a subset of the node's, so any hard
        letter found below (or at) the node is the one.
        """
        if nu.hard:
            return next(iter(nu.hard))
        t = self.tree.topo.first_marked_in_subtree(nu.topo, HARD)
        if t is None:
            raise InvariantError("node with a defined link has no hard-marked descendant")
        return next(iter(t.payload.hard))

    def current_sss(self) -> list[int]:
        return self.ledger.positions(self.buffer.n)

    def chi_trace(self) -> list[int]:
        """chi of every prefix fed so far, one entry per letter."""
        return list(self._chi_trace)

    def live_pairs(self) -> set[tuple[bytes, int]]:
        """Live extensions as (text substring, letter) pairs.

        A locus label is the reverse of the text substring it stands for;
        the substring ends one position before the recorded extension end.
        """
        out = set()
        for key, pos in self.ledger.live.items():
            node = self.tree.nodes[key.node_id]
            u = bytes(
                self.buffer.letter_at(p) for p in range(pos - node.depth, pos)
            )
            out.add((u, key.letter))
        return out
