"""Letter storage and the direction-aware coordinate system.

Letters are small unsigned integers (byte values in the CLI).  A buffer is
append-only: the physical (arrival) index of a letter never changes.  The
*logical* string differs per direction:

* RTL - letters arrive last-to-first, so arrival index ``i`` holds the
  letter at from-right offset ``-i`` (offset 0 is the last letter).
* LTR - letters arrive first-to-last, so arrival index ``i`` holds the
  letter at from-left position ``i + 1``.

Coordinates are stored in the scheme that is stable for the direction
(from-right offsets for RTL, from-left positions for LTR), so recorded
values never need updating as the text grows.
"""
from __future__ import annotations

import enum

from .errors import AlphabetError, BoundsError


class Direction(enum.Enum):
    RTL = "rtl"
    LTR = "ltr"


def offset_to_position(offset: int, n: int) -> int:
    """Convert a from-right offset (<= 0) to a 1-based from-left position."""
    return offset + n


def position_to_offset(position: int, n: int) -> int:
    """Convert a 1-based from-left position to a from-right offset (<= 0)."""
    return position - n


class TextBuffer:
    """Append-only letter sequence with direction-aware logical coordinates."""

    __slots__ = ("direction", "sigma", "_data")

    def __init__(self, direction: Direction, sigma: int = 256):
        if sigma < 1:
            raise AlphabetError(f"alphabet size must be >= 1, got {sigma}")
        self.direction = direction
        self.sigma = sigma
        self._data = bytearray() if sigma <= 256 else []

    def __len__(self) -> int:
        return len(self._data)

    @property
    def n(self) -> int:
        return len(self._data)

    def append(self, letter: int) -> int:
        """Append one letter; returns its (permanent) arrival index."""
        if not 0 <= letter < self.sigma:
            raise AlphabetError(f"letter {letter} outside alphabet of size {self.sigma}")
        self._data.append(letter)
        return len(self._data) - 1

    def arrival(self, index: int) -> int:
        """Letter by physical arrival index."""
        if not 0 <= index < len(self._data):
            raise BoundsError(f"arrival index {index} out of range")
        return self._data[index]

    def letter_at(self, coord: int) -> int:
        """Letter at a logical coordinate in this buffer's scheme.

        RTL buffers take from-right offsets in [-(n-1), 0]; LTR buffers take
        from-left positions in [1, n].
        """
        n = len(self._data)
        if self.direction is Direction.RTL:
            if not -(n - 1) <= coord <= 0 or n == 0:
                raise BoundsError(f"offset {coord} out of range for n={n}")
            return self._data[-coord]
        if not 1 <= coord <= n:
            raise BoundsError(f"position {coord} out of range for n={n}")
        return self._data[coord - 1]

    def logical_bytes(self) -> bytes:
        """The logical string as bytes (first letter first)."""
        if self.direction is Direction.RTL:
            return bytes(reversed(self._data))
        return bytes(self._data)
