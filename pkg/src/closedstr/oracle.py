"""Reference enumeration of maximal closed substrings.

A substring occurrence ``t[i..j]`` is a maximal closed substring (MCS)
when it is closed and neither one-character extension ``t[i-1..j]`` nor
``t[i..j+1]`` is closed.  Two independent routes are provided:

* ``closed_definitional`` / ``is_mcs_definitional`` / ``mcs_definitional``
  work straight from the definition with naive occurrence scans; they
  are the ground truth everything else is measured against.
* ``mcs_oracle`` walks one closedness array per suffix.  The span
  ``(i, j)`` is reported exactly when the array of the suffix starting
  at ``i`` has a 1 at prefix length ``j - i + 1``, a 0 right after it
  (or the text ends there), and the array of the suffix starting at
  ``i - 1`` has a 0 at prefix length ``j - i + 2`` (or ``i`` is 1).
  Only two suffix arrays are alive at a time, so memory stays linear.

Spans are 1-based inclusive and sorted by (start, end).
"""

from __future__ import annotations

from closedstr import _accel
from closedstr.core import Span, as_bytes, oc_array

# Below this length the pure-Python loops win or the difference is noise.
_ACCEL_MIN = 2048


def closed_definitional(text: str | bytes) -> bool:
    """Closedness checked from the definition.

    Tries every border and scans for an occurrence strictly inside the
    text.  Quadratic and obviously correct; use ``is_closed`` for speed.
    """
    t = as_bytes(text)
    n = len(t)
    if n == 0:
        raise ValueError("closedness is undefined for the empty text")
    if n == 1:
        return True
    for k in range(1, n):
        if t[:k] == t[n - k :] and t.find(t[:k], 1) == n - k:
            return True
    return False


def is_mcs_definitional(text: str | bytes, i: int, j: int) -> bool:
    """Is ``t[i..j]`` closed while both one-character extensions are open?"""
    t = as_bytes(text)
    n = len(t)
    if not 1 <= i <= j <= n:
        raise IndexError(f"span ({i}, {j}) out of range for length {n}")
    if not closed_definitional(t[i - 1 : j]):
        return False
    if i > 1 and closed_definitional(t[i - 2 : j]):
        return False
    if j < n and closed_definitional(t[i - 1 : j + 1]):
        return False
    return True


def mcs_definitional(text: str | bytes) -> list[Span]:
    """All maximal closed substrings by brute force over every span.

    Memoizes closedness per span so each substring is classified once.
    Only suitable for short texts.
    """
    t = as_bytes(text)
    n = len(t)
    if n == 0:
        raise ValueError("the empty text has no substrings")
    closed: dict[tuple[int, int], bool] = {}

    def c(i: int, j: int) -> bool:
        r = closed.get((i, j))
        if r is None:
            r = closed_definitional(t[i - 1 : j])
            closed[i, j] = r
        return r

    out = []
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            if c(i, j) and (i == 1 or not c(i - 1, j)) and (j == n or not c(i, j + 1)):
                out.append(Span(i, j))
    return out


def suffix_oc(text: str | bytes, i: int) -> list[int]:
    """Closedness array of the suffix starting at 1-based position *i*."""
    t = as_bytes(text)
    if not 1 <= i <= len(t):
        raise IndexError(f"suffix start {i} out of range 1..{len(t)}")
    return oc_array(t[i - 1 :])


def mcs_oracle(text: str | bytes, *, engine: str = "auto") -> list[Span]:
    """All maximal closed substrings via per-suffix closedness arrays.

    Quadratic time, linear memory.  *engine* selects the pure-Python
    loop or its compiled twin ("auto" switches on input size).
    """
    t = as_bytes(text)
    n = len(t)
    if n == 0:
        raise ValueError("the empty text has no substrings")
    if _accel.resolve_engine(engine, n, _ACCEL_MIN):
        arr = _accel.oracle_spans(_accel.text_to_array(t))
        return [Span(s, e) for s, e in arr.tolist()]
    out = []
    prev: list[int] = []
    for i in range(1, n + 1):
        cur = oc_array(t[i - 1 :])
        length = n - i + 1
        for l in range(1, length + 1):
            if (
                cur[l - 1] == 1
                and (l == length or cur[l] == 0)
                and (i == 1 or prev[l] == 0)
            ):
                out.append(Span(i, i + l - 1))
        prev = cur
    return out


def suffix_one_run_total(text: str | bytes, *, engine: str = "auto") -> int:
    """Sum over all suffixes of the number of 1-runs in their closedness arrays.

    Dominates the MCS count: every maximal closed substring starting at
    position ``i`` ends a distinct 1-run in the array of suffix ``i``.
    """
    t = as_bytes(text)
    n = len(t)
    if n == 0:
        raise ValueError("no suffixes in the empty text")
    if _accel.resolve_engine(engine, n, _ACCEL_MIN):
        return int(_accel.suffix_one_run_total(_accel.text_to_array(t)))
    total = 0
    for i in range(n):
        oc = oc_array(t[i:])
        total += sum(
            1 for k, v in enumerate(oc) if v == 1 and (k == 0 or oc[k - 1] == 0)
        )
    return total
