"""Live extension bookkeeping shared by both stream directions.

A supermaximal extension is keyed by (locus node id, extension letter) and
carries the write-once position its occurrence was booked at.  The paired
bit tracker enforces that no two live extensions share a position.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .bits import GrowableBits
from .errors import InvariantError
from .text import Direction


class SreKey(NamedTuple):
    node_id: int
    letter: int


class SreChange(NamedTuple):
    """One addition or removal: locus depth stands in for the substring."""

    node_id: int
    u_len: int
    letter: int
    position: int


@dataclass(frozen=True)
class DeltaReport:
    """Ledger changes of one stream step."""

    step: int
    letter: int
    added: tuple[SreChange, ...]
    removed: tuple[SreChange, ...]
    chi: int


class SreLedger:
    def __init__(self, direction: Direction, incremental_bits: bool = False):
        self.direction = direction
        self.live: dict[SreKey, int] = {}
        self.bits = GrowableBits(incremental=incremental_bits)

    def _slot(self, position: int) -> int:
        return -position if self.direction is Direction.RTL else position - 1

    @property
    def chi(self) -> int:
        return len(self.live)

    def add(self, key: SreKey, position: int):
        if key in self.live:
            raise InvariantError(f"SRE {key} already live")
        self.live[key] = position
        self.bits.set(self._slot(position))

    def remove(self, key: SreKey) -> int:
        position = self.live.pop(key)
        self.bits.clear(self._slot(position))
        return position

    def positions(self, n: int) -> list[int]:
        """Live positions as sorted 1-based from-left values for text length n."""
        if self.direction is Direction.RTL:
            return sorted(n - slot for slot in self.bits.ones())
        return sorted(slot + 1 for slot in self.bits.ones())

    def check_counts(self):
        if self.bits.count != len(self.live):
            raise InvariantError("bit count diverged from live-set size")
