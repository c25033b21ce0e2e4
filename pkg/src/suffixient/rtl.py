"""Right-to-left stream: maintain the extension set and its rightmost-ends
position set while letters of the text arrive last-to-first.

The first letter must be the sentinel (a letter that never occurs again);
with it every suffix locus stays a leaf and each round changes the live set
by at most two additions and two removals:

* round attached the new leaf under an existing node gamma: (gamma, y) is
  new; (alpha, y) dies if it was live.
* round split an edge at gamma: (gamma, y) and (gamma, z) are new;
  (alpha, y) and (alpha, z) die if live.
* the prepended letter was never seen: (root, x) is new, plus (root, c0)
  when the root previously had a single child with edge letter c0.

Positions are from-right end offsets of the rightmost occurrence, computed
from the recorded position of the child node along the extension edge.
"""
from __future__ import annotations

from .counters import OpCounters
from .errors import SentinelError
from .ledger import DeltaReport, SreChange, SreKey, SreLedger
from .text import Direction, TextBuffer
from .weiner import STNode, WeinerTree


class RightToLeftMaintainer:
    def __init__(
        self,
        sentinel: int = 0,
        sigma: int = 256,
        engine: str = "fringe",
        counters: OpCounters | None = None,
        incremental_bits: bool = False,
    ):
        self.sentinel = sentinel
        self.counters = counters if counters is not None else OpCounters()
        self.buffer = TextBuffer(Direction.RTL, sigma)
        self.tree = WeinerTree(self.buffer, counters=self.counters, engine=engine)
        self.ledger = SreLedger(Direction.RTL, incremental_bits)
        self.step = 0

    @property
    def chi(self) -> int:
        return self.ledger.chi

    def feed(self, letter: int) -> DeltaReport:
        if self.step == 0:
            if letter != self.sentinel:
                raise SentinelError(
                    f"first letter must be the sentinel {self.sentinel}, got {letter}"
                )
        elif letter == self.sentinel:
            raise SentinelError("sentinel letter fed twice")
        self.buffer.append(letter)
        r = self.tree.prepend(letter)

        adds: list[tuple[STNode, int]] = []
        removals: list[tuple[STNode, int]] = []
        if r.lambda_old is None:
            pass  # one-letter string: nothing is right-maximal
        elif r.alpha is None:
            adds.append((self.tree.root, letter))
            if r.root_children_before == 1:
                c0 = next(k for k in self.tree.root.children if k != letter)
                adds.append((self.tree.root, c0))
        elif not r.gamma_created:
            adds.append((r.gamma, r.y_letter))
            removals.append((r.alpha, r.y_letter))
        else:
            adds.append((r.gamma, r.y_letter))
            adds.append((r.gamma, r.z_letter))
            removals.append((r.alpha, r.y_letter))
            removals.append((r.alpha, r.z_letter))

        removed = []
        for node, c in removals:
            key = SreKey(node.nid, c)
            if key in self.ledger.live:
                pos = self.ledger.remove(key)
                removed.append(SreChange(node.nid, node.depth, c, pos))
        added = []
        for node, c in adds:
            pos = self._extension_position(node, c)
            self.ledger.add(SreKey(node.nid, c), pos)
            added.append(SreChange(node.nid, node.depth, c, pos))

        self.step += 1
        return DeltaReport(self.step, letter, tuple(added), tuple(removed), self.chi)

    def _extension_position(self, node: STNode, c: int) -> int:
        """Rightmost end offset of label(node)+c, read off the c-edge child."""
        child = node.children[c]
        return child.rec_pos - (child.depth - node.depth - 1)

    def current_sss(self) -> list[int]:
        """Live positions as sorted 1-based from-left values."""
        return self.ledger.positions(self.buffer.n)

    def live_pairs(self) -> set[tuple[bytes, int]]:
        """Live extensions materialized as (substring, letter) pairs."""
        out = set()
        for key in self.ledger.live:
            node = self.tree.nodes[key.node_id]
            out.add((self.tree.label_bytes(node), key.letter))
        return out
