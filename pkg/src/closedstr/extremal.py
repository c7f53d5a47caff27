"""Extremal texts for run counts, and measured-versus-bound reports.

The closedness array of a text switches between runs of ones and runs
of zeroes.  A square-root number of one-runs is the most a single text
can show, and the construction here reaches it: starting from "a",
round k appends the complement of the k-th character followed by the
first k characters.  Every prefix length gained per round grows by one,
which puts the ones of the closedness array exactly on the triangular
numbers and keeps each of them isolated.

`bound_report` tabulates measured quantities against the proven bounds
for a family of texts, which is handy for eyeballing tightness.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import as_bytes, mcs_total_bound, oc_array, oc_runs, sqrt_run_bound
from .fast import mcs_fast
from .oracle import mcs_oracle, suffix_one_run_total

_A = ord("a")
_B = ord("b")

# oracle/fast cross-check band for report rows
_CROSS_LO = 1000
_CROSS_HI = 2000


def extremal_string(n: int) -> bytes:
    """The length-n prefix of the run-maximizing binary text."""
    if n < 1:
        raise ValueError("length must be positive")
    u = bytearray(b"a")
    k = 1
    while len(u) < n:
        u.append(_B if u[k - 1] == _A else _A)
        u.extend(u[:k])
        k += 1
    return bytes(u[:n])


def triangular_positions(n: int) -> list[int]:
    """Triangular numbers k(k+1)/2 that do not exceed n."""
    out = []
    k = 1
    while k * (k + 1) // 2 <= n:
        out.append(k * (k + 1) // 2)
        k += 1
    return out


def verify_extremal_oc(n: int) -> bool:
    """Check that the extremal text's closed prefixes sit exactly on triangulars."""
    oc = oc_array(extremal_string(n))
    tri = set(triangular_positions(n))
    return all((oc[i - 1] == 1) == (i in tri) for i in range(1, n + 1))


@dataclass(frozen=True)
class BoundRow:
    n: int
    mcs_count: int
    oc_one_runs: int
    suffix_run_total: int
    bound_sqrt: float
    bound_mcs: float


def _text_for(n: int, source: str, seed: int) -> bytes:
    if source == "extremal":
        return extremal_string(n)
    if source == "random":
        rng = random.Random(f"{seed}:{n}")
        return bytes(rng.choices(b"ab", k=n))
    raise ValueError(f"unknown source {source!r}, expected 'extremal' or 'random'")


def bound_row(text: bytes | str) -> BoundRow:
    """Measure one text against the run and enumeration bounds.

    Short texts are counted by the quadratic scan, long ones by the tree
    traversal, and in between both run and must agree.
    """
    t = as_bytes(text)
    n = len(t)
    if n <= _CROSS_HI:
        count = len(mcs_oracle(t))
        if n >= _CROSS_LO:
            fast_count = len(mcs_fast(t))
            assert fast_count == count, f"engines disagree at n={n}"
    else:
        count = len(mcs_fast(t))
    return BoundRow(
        n=n,
        mcs_count=count,
        oc_one_runs=oc_runs(oc_array(t)).one_runs,
        suffix_run_total=suffix_one_run_total(t),
        bound_sqrt=sqrt_run_bound(n),
        bound_mcs=mcs_total_bound(n),
    )


def bound_report(
    lengths: Sequence[int], *, source: str = "extremal", seed: int = 0
) -> list[BoundRow]:
    """One measured row per requested length, texts drawn from `source`."""
    return [bound_row(_text_for(n, source, seed)) for n in lengths]


def render_report(rows: Iterable[BoundRow]) -> str:
    """Rows as tab-separated text with a header line."""
    lines = ["n\tmcs_count\toc_one_runs\tsuffix_run_total\tbound_sqrt\tbound_mcs"]
    for r in rows:
        lines.append(
            f"{r.n}\t{r.mcs_count}\t{r.oc_one_runs}\t{r.suffix_run_total}"
            f"\t{r.bound_sqrt:.2f}\t{r.bound_mcs:.2f}"
        )
    return "\n".join(lines)
