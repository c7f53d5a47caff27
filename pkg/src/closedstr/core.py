"""Border and open/closed structure of byte texts.

A text is *closed* when it has length one, or when it has a nonempty
border that occurs nowhere strictly inside the text; otherwise it is
*open*.  This module computes, for every prefix of a text, the border
length, the length of the longest repeated prefix, and a 0/1 closedness
indicator, plus small helpers over those arrays.

Arrays are plain Python lists.  The entry at list index ``k`` describes
the prefix of length ``k + 1``; prefix lengths and positions appearing
in public signatures are 1-based.  Texts are bytes; ``str`` input is
accepted and encoded latin-1 so one character is one byte.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import accumulate, groupby
from typing import NamedTuple, Sequence


class Span(NamedTuple):
    """Substring occurrence as 1-based inclusive endpoints."""

    start: int
    end: int


def as_bytes(text: str | bytes | bytearray | memoryview) -> bytes:
    """Coerce *text* to immutable bytes.

    str is encoded latin-1 so that every code point 0..255 maps to the
    byte of the same value; anything outside that range is rejected
    rather than silently multi-byte encoded.
    """
    if isinstance(text, bytes):
        return text
    if isinstance(text, (bytearray, memoryview)):
        return bytes(text)
    if isinstance(text, str):
        try:
            return text.encode("latin-1")
        except UnicodeEncodeError as exc:
            raise ValueError(
                "str text must be latin-1 encodable; pass bytes instead"
            ) from exc
    raise TypeError(f"expected str or bytes-like text, got {type(text).__name__}")


def border_array(text: str | bytes) -> list[int]:
    """Length of the longest proper border of every prefix.

    ``border_array(t)[k]`` is the longest border length of the prefix
    of length ``k + 1``.  The empty text yields an empty list.  Bytes
    are compared by value only.
    """
    t = as_bytes(text)
    n = len(t)
    b = [0] * n
    k = 0
    for i in range(1, n):
        while k > 0 and t[i] != t[k]:
            k = b[k - 1]
        if t[i] == t[k]:
            k += 1
        b[i] = k
    return b


def borders_at(border: Sequence[int], i: int) -> list[int]:
    """All border lengths of the prefix of length *i*, ascending.

    Walks the border chain ``i -> border[i] -> ...``; 0 (the empty
    border) is always included.  Raises IndexError when *i* is not in
    ``1..len(border)``.
    """
    n = len(border)
    if not 1 <= i <= n:
        raise IndexError(f"prefix length {i} out of range 1..{n}")
    chain = []
    k = border[i - 1]
    while k > 0:
        chain.append(k)
        k = border[k - 1]
    chain.append(0)
    chain.reverse()
    return chain


def repeated_prefix_array(border: Sequence[int]) -> list[int]:
    """Running maximum of the border array.

    Entry ``k`` is the length of the longest prefix of the text that
    occurs at least twice within the prefix of length ``k + 1``.
    """
    return list(accumulate(border, max))


def oc_array(text: str | bytes) -> list[int]:
    """Closedness bit for every prefix: 1 closed, 0 open.

    The first prefix (a single character) is closed by definition; for
    longer prefixes the bit is the increment of the repeated-prefix
    length, which rises by at most one per character.  Raises
    ValueError on empty text.
    """
    t = as_bytes(text)
    if not t:
        raise ValueError("oc_array requires a nonempty text")
    b = border_array(t)
    oc = [1] * len(t)
    best = 0
    for i in range(1, len(t)):
        if b[i] > best:
            best = b[i]
        else:
            oc[i] = 0
    return oc


def is_closed(text: str | bytes) -> bool:
    """True when the whole text is closed.  Raises ValueError on empty text."""
    return oc_array(text)[-1] == 1


@dataclass(frozen=True)
class OcRuns:
    """Run-length encoding of a 0/1 array as (bit, length) pairs."""

    runs: tuple[tuple[int, int], ...]

    @property
    def one_runs(self) -> int:
        """Number of maximal runs of 1s."""
        return sum(1 for bit, _ in self.runs if bit == 1)


def oc_runs(oc: Sequence[int]) -> OcRuns:
    """Run-length encode a closedness array.

    Rejects values other than 0 and 1 so that accidental use on other
    integer arrays fails loudly.
    """
    for v in oc:
        if v not in (0, 1):
            raise ValueError(f"closedness arrays contain only 0 and 1, got {v!r}")
    return OcRuns(tuple((bit, sum(1 for _ in grp)) for bit, grp in groupby(oc)))


def sqrt_run_bound(n: int) -> float:
    """Upper bound ``2*sqrt(n) + 2`` on the 1-run count of a closedness array."""
    return 2.0 * math.sqrt(n) + 2.0


def mcs_total_bound(n: int) -> float:
    """Upper bound ``(4/3)(n+1)^1.5 + 2n + 4`` on the number of maximal
    closed substrings of a text of length *n*."""
    return (4.0 / 3.0) * (n + 1) ** 1.5 + 2.0 * n + 4.0
