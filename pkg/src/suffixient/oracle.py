"""Definition-level brute force: the ground truth for every engine check.

Everything here is computed by direct enumeration over substrings and
occurrences, with no code shared with the incremental engine.  Strings may
be ``str`` or ``bytes``; results use bytes for substrings and ints for
letters.
"""
from __future__ import annotations

import itertools
import math

from .errors import SizeError

RIGHTMOST = "rightmost"
LEFTMOST = "leftmost"

DEFAULT_BOUND = 2048


def _as_bytes(w) -> bytes:
    return w.encode() if isinstance(w, str) else bytes(w)


def _followers(w: bytes) -> dict[bytes, set[int]]:
    """Every substring (incl. the empty one) -> set of letters following it."""
    d: dict[bytes, set[int]] = {b"": set(w)}
    n = len(w)
    for i in range(n):
        for j in range(i + 1, n + 1):
            u = w[i:j]
            s = d.get(u)
            if s is None:
                s = set()
                d[u] = s
            if j < n:
                s.add(w[j])
    return d


def _check_bound(w: bytes, bound: int):
    if len(w) > bound:
        raise SizeError(f"string length {len(w)} exceeds oracle bound {bound}")


def right_extensions(w, bound: int = DEFAULT_BOUND) -> set[tuple[bytes, int]]:
    """All (u, x) with u followed by two distinct letters somewhere and ux a substring."""
    w = _as_bytes(w)
    _check_bound(w, bound)
    f = _followers(w)
    return {(u, x) for u, fs in f.items() if len(fs) >= 2 for x in fs}


def supermaximal_extensions(w, bound: int = DEFAULT_BOUND) -> set[tuple[bytes, int]]:
    """Right extensions (u, x) such that no (zu, x) is a right extension."""
    w = _as_bytes(w)
    _check_bound(w, bound)
    f = _followers(w)
    letters = sorted(set(w))
    out = set()
    for u, fs in f.items():
        if len(fs) < 2:
            continue
        for x in fs:
            for z in letters:
                zfs = f.get(bytes([z]) + u)
                if zfs is not None and len(zfs) >= 2 and x in zfs:
                    break
            else:
                out.add((u, x))
    return out


def chi(w, bound: int = DEFAULT_BOUND) -> int:
    return len(supermaximal_extensions(w, bound))


def occurrence_ends(w, s) -> list[int]:
    """Sorted 1-based end positions of occurrences of ``s`` in ``w``."""
    w, s = _as_bytes(w), _as_bytes(s)
    ends, start = [], 0
    while True:
        i = w.find(s, start)
        if i < 0:
            return ends
        ends.append(i + len(s))
        start = i + 1


def is_suffixient(w, positions, bound: int = DEFAULT_BOUND) -> bool:
    """True iff every right extension ux has an occurrence ending in ``positions``."""
    w = _as_bytes(w)
    pos = set(positions)
    for u, x in right_extensions(w, bound):
        if not pos.intersection(occurrence_ends(w, u + bytes([x]))):
            return False
    return True


def canonical_sss(w, side: str, bound: int = DEFAULT_BOUND) -> set[int]:
    """One extreme occurrence end per supermaximal extension.

    ``side`` picks the rightmost or leftmost end.  Distinct extensions land
    on distinct positions; this is asserted.
    """
    if side not in (RIGHTMOST, LEFTMOST):
        raise ValueError(f"side must be {RIGHTMOST!r} or {LEFTMOST!r}")
    w = _as_bytes(w)
    pick = max if side == RIGHTMOST else min
    out = set()
    for u, x in supermaximal_extensions(w, bound):
        p = pick(occurrence_ends(w, u + bytes([x])))
        assert p not in out, "distinct extensions mapped to one position"
        out.add(p)
    return out


def all_sss(w, product_bound: int = 10**6) -> set[frozenset[int]]:
    """Every smallest suffixient set: one occurrence end per extension."""
    w = _as_bytes(w)
    sres = sorted(supermaximal_extensions(w, bound=len(w)))
    end_lists = [occurrence_ends(w, u + bytes([x])) for u, x in sres]
    if math.prod(len(e) for e in end_lists) > product_bound:
        raise SizeError("occurrence-count product exceeds the enumeration bound")
    return {frozenset(combo) for combo in itertools.product(*end_lists)}
