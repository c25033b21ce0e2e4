"""Growable bit vector over position slots with exact popcount.

This is the store behind the maintained suffixient set: one bit per text
position (RTL slot = negated offset, LTR slot = position - 1).  ``set`` and
``clear`` are strict: flipping a bit to the value it already has raises,
because that would mean two live extensions were booked on one position.
"""
from __future__ import annotations

from .errors import BoundsError, InvariantError

_CHUNK = 4096  # bytes per chunk in incremental mode


class GrowableBits:
    """Bit vector growing at the active end, counting ones incrementally.

    With ``incremental=True`` storage grows by fixed-size chunks and no byte
    is ever copied, giving a constant per-operation bound; the default mode
    uses a single doubling bytearray (amortized growth).
    """

    __slots__ = ("_incremental", "_buf", "_chunks", "_count")

    def __init__(self, incremental: bool = False):
        self._incremental = incremental
        self._buf = bytearray(16)
        self._chunks: list[bytearray] = [bytearray(_CHUNK)]
        self._count = 0

    @property
    def count(self) -> int:
        return self._count

    def _slot(self, slot: int):
        if slot < 0:
            raise BoundsError(f"slot {slot} is negative")
        byte, bit = slot >> 3, 1 << (slot & 7)
        if self._incremental:
            chunk = byte // _CHUNK
            while chunk >= len(self._chunks):
                self._chunks.append(bytearray(_CHUNK))
            return self._chunks[chunk], byte % _CHUNK, bit
        if byte >= len(self._buf):
            grow = max(len(self._buf) * 2, byte + 1)
            self._buf.extend(bytes(grow - len(self._buf)))
        return self._buf, byte, bit

    def set(self, slot: int):
        arr, byte, bit = self._slot(slot)
        if arr[byte] & bit:
            raise InvariantError(f"slot {slot} already set (positions must be distinct)")
        arr[byte] |= bit
        self._count += 1

    def clear(self, slot: int):
        arr, byte, bit = self._slot(slot)
        if not arr[byte] & bit:
            raise InvariantError(f"slot {slot} already clear")
        arr[byte] &= ~bit
        self._count -= 1

    def test(self, slot: int) -> bool:
        arr, byte, bit = self._slot(slot)
        return bool(arr[byte] & bit)

    def ones(self) -> list[int]:
        """Sorted list of set slots."""
        out = []
        if self._incremental:
            pieces = self._chunks
        else:
            pieces = [self._buf]
        base = 0
        for piece in pieces:
            for i, b in enumerate(piece):
                if b:
                    for k in range(8):
                        if b & (1 << k):
                            out.append(base + 8 * i + k)
            base += 8 * len(piece)
        return out
