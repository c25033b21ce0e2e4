"""Online maintenance of supermaximal right-extensions and smallest
suffixient sets, with a brute-force oracle and streaming tooling."""

from .bits import GrowableBits
from .colored_list import HARD, MULTI, OrderedColoredList
from .counters import OpCounters
from .ledger import DeltaReport, SreChange, SreKey, SreLedger
from .ltr import LeftToRightMaintainer
from .naive_tree import build_reference
from .rtl import RightToLeftMaintainer
from .text import Direction, TextBuffer, offset_to_position, position_to_offset
from .topology import TreeTopology
from .weiner import RoundReport, STNode, WeinerTree

__version__ = "0.1.0"

__all__ = [
    "Direction",
    "TextBuffer",
    "offset_to_position",
    "position_to_offset",
    "OrderedColoredList",
    "MULTI",
    "HARD",
    "TreeTopology",
    "WeinerTree",
    "STNode",
    "RoundReport",
    "build_reference",
    "GrowableBits",
    "SreKey",
    "SreChange",
    "SreLedger",
    "DeltaReport",
    "RightToLeftMaintainer",
    "LeftToRightMaintainer",
    "OpCounters",
    "__version__",
]
