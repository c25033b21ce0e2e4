"""Quadratic reference tree built from definitions, for structural checks.

Node set: the empty string, every right-maximal substring, and every suffix
of the tree string.  With a unique terminal letter this is the classic
suffix tree; without one it matches the online construction, where every
suffix keeps its own node (possibly out-degree 1).

Shares no code with the incremental builder on purpose.
"""
from __future__ import annotations

from .text import Direction


class RefNode:
    __slots__ = ("label", "parent", "depth", "rec_pos", "children", "hard", "soft")

    def __init__(self, label: bytes):
        self.label = label
        self.parent: bytes | None = None
        self.depth = len(label)
        self.rec_pos = 0
        self.children: dict[int, bytes] = {}
        self.hard: dict[int, bytes] = {}
        self.soft: dict[int, bytes] = {}

    def wlink(self, x: int) -> bytes | None:
        if x in self.hard:
            return self.hard[x]
        return self.soft.get(x)


def _followers(v: bytes) -> dict[bytes, set[int]]:
    d: dict[bytes, set[int]] = {b"": set(v)}
    n = len(v)
    for i in range(n):
        for j in range(i + 1, n + 1):
            u = v[i:j]
            s = d.get(u)
            if s is None:
                s = set()
                d[u] = s
            if j < n:
                s.add(v[j])
    return d


def _occurrence_ends(v: bytes, s: bytes) -> list[int]:
    """1-based end positions of all occurrences of ``s`` in ``v``."""
    ends, start = [], 0
    while True:
        i = v.find(s, start)
        if i < 0:
            return ends
        ends.append(i + len(s))
        start = i + 1


def build_reference(v: bytes, direction: Direction) -> dict[bytes, RefNode]:
    """Tree of ``v`` keyed by node label, with full W-link tables.

    ``rec_pos`` follows the incremental convention for the direction: the
    from-right end offset of the rightmost occurrence (RTL), or the
    from-left end in the text of the leftmost occurrence of the reversed
    label (LTR, where v is the reversed text).
    """
    followers = _followers(v)
    n = len(v)
    labels = {b""} | {u for u, f in followers.items() if len(f) >= 2}
    labels |= {v[i:] for i in range(n)}

    nodes = {lab: RefNode(lab) for lab in labels}
    for lab, node in nodes.items():
        if not lab:
            continue  # root keeps rec_pos 0, matching the incremental tree
        for k in range(len(lab) - 1, -1, -1):
            if lab[:k] in nodes:
                node.parent = lab[:k]
                nodes[lab[:k]].children[lab[k]] = lab
                break
        ends = _occurrence_ends(v, lab)
        if direction is Direction.RTL:
            node.rec_pos = max(ends) - n
        else:
            # leftmost end in the text = n + 1 - rightmost start in v
            node.rec_pos = n + 1 - (max(ends) - len(lab) + 1)

    by_len = sorted(labels, key=len)
    alphabet = sorted(set(v))
    substrings = set(followers)
    for lab, node in nodes.items():
        for x in alphabet:
            xl = bytes([x]) + lab
            if xl not in substrings:
                continue
            if xl in nodes:
                node.hard[x] = xl
            else:
                for cand in by_len:
                    if len(cand) > len(xl) and cand.startswith(xl):
                        node.soft[x] = cand
                        break
                else:
                    raise AssertionError("soft link without descendant node")
    return nodes


def root_of(nodes: dict[bytes, RefNode]) -> RefNode:
    return nodes[b""]
