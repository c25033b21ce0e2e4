"""Corpus generators: repetitive, anti-repetitive, and random strings."""
from __future__ import annotations

import random

from .errors import UsageError


def fibonacci_word(n: int) -> bytes:
    """First ``n`` letters of the infinite word a, ab, aba, abaab, ..."""
    if n < 0:
        raise UsageError("length must be non-negative")
    if n <= 1:
        return b"a"[:n]
    prev, cur = b"a", b"ab"
    while len(cur) < n:
        prev, cur = cur, cur + prev
    return cur[:n]


def de_bruijn(sigma: int, order: int, linearize: bool = True) -> bytes:
    """Cyclic sequence containing every length-``order`` word once.

    Lyndon-word concatenation; ``linearize`` appends the first order-1
    letters so every word also appears in the flat string.
    """
    if not 1 <= sigma <= 26:
        raise UsageError("sigma must be in [1, 26] for letter output")
    if order < 1:
        raise UsageError("order must be >= 1")
    seq: list[int] = []
    a = [0] * sigma * order

    def gen(t: int, p: int):
        if t > order:
            if order % p == 0:
                seq.extend(a[1 : p + 1])
        else:
            a[t] = a[t - p]
            gen(t + 1, p)
            for j in range(a[t - p] + 1, sigma):
                a[t] = j
                gen(t + 1, t)

    gen(1, 1)
    out = bytes(97 + c for c in seq)
    if linearize and order > 1:
        out += out[: order - 1]
    return out


def random_string(n: int, sigma: int, seed: int) -> bytes:
    if not 1 <= sigma <= 26:
        raise UsageError("sigma must be in [1, 26] for letter output")
    rng = random.Random(seed)
    return bytes(rng.randrange(97, 97 + sigma) for _ in range(n))
