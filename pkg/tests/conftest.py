"""Shared corpus builders so module tests and the acceptance suite agree."""

from __future__ import annotations

import random
from itertools import product

ALPHABET = b"abcdefghijklmnopqrstuvwxyz"


def exhaustive_texts(sigma: int, max_len: int):
    """Yield every text over the first *sigma* letters up to *max_len*."""
    letters = ALPHABET[:sigma]
    for n in range(1, max_len + 1):
        for tup in product(letters, repeat=n):
            yield bytes(tup)


def randomized_corpus(sigma: int, count: int, max_len: int, seed: int) -> list[bytes]:
    """Deterministic list of random texts, lengths uniform in 1..max_len."""
    rng = random.Random(seed)
    letters = ALPHABET[:sigma]
    out = []
    for _ in range(count):
        n = rng.randint(1, max_len)
        out.append(bytes(rng.choices(letters, k=n)))
    return out


def random_binary(n: int, seed: int) -> bytes:
    """One random text over {a, b} of exact length *n*."""
    rng = random.Random(seed)
    return bytes(rng.choices(b"ab", k=n))
