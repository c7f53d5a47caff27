"""Maximal closed substrings via suffix-tree traversal.

The closed substrings of S that cannot be extended are recovered from
the suffix tree in one bottom-up pass.  Each node carries the starting
positions of the suffixes below it, partitioned by the character that
precedes each position (positions starting at 1 form their own class).
When the children of a node merge, a pair of positions p < q drawn from
different children witnesses a repeat of the node's path label; the
pair contributes the span (p, q + depth - 1) exactly when the two
positions are adjacent in the merged order and their preceding
characters differ.  Length-one spans never show up this way and come
from a direct scan instead.

Two engines share this contract.  The pure engine walks the binarized
tree with ordered sets of boxed positions and is the readable
reference.  The accelerated engine runs the identical algorithm inside
a compiled kernel over flat arrays and exists for large inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np

from . import _accel
from .core import Span, as_bytes
from .posset import BEGIN, ClassedPosSets, PosSet, merge
from .suffixtree import BinarizedTree, binarize, bottom_up, build_suffix_tree

_KERNEL_MIN = 4096


class CandidatePair(NamedTuple):
    """A cross-child position pair (p < q) proposed at tree depth `depth`."""

    p: int
    q: int
    depth: int


@dataclass(frozen=True)
class FastRun:
    """Result of one traversal: spans plus cost accounting."""

    spans: list[Span]
    smaller_total: int
    engine: str


def position_class(text: bytes, p: int) -> int:
    """Class of starting position p: the preceding byte, or BEGIN at p == 1."""
    if not 1 <= p <= len(text):
        raise IndexError(f"position {p} out of range 1..{len(text)}")
    if p == 1:
        return BEGIN
    return text[p - 2]


def _singleton_positions(t: bytes) -> "np.ndarray":
    """1-based positions whose neighbours (when present) hold a different byte."""
    data = np.frombuffer(t, dtype=np.uint8)
    n = len(data)
    ok = np.ones(n, dtype=bool)
    ok[1:] &= data[1:] != data[:-1]
    ok[:-1] &= data[:-1] != data[1:]
    return np.nonzero(ok)[0] + 1


def singleton_mcs(text: bytes | str) -> set[Span]:
    """Single positions i where both neighbours (when present) differ from S[i]."""
    t = as_bytes(text)
    return {Span(int(i), int(i)) for i in _singleton_positions(t)}


def pairs_at_node(
    smaller: ClassedPosSets, larger: ClassedPosSets, depth: int
) -> list[CandidatePair]:
    """Candidate pairs between two children of a node at the given depth.

    Every element of the smaller side contributes at most two pairs: its
    nearest predecessor and nearest successor among the larger side's
    positions of any other class.
    """
    cands: list[CandidatePair] = []
    for cls in smaller.classes():
        others = [s for c, s in larger.sets() if c != cls]
        for e in smaller.get(cls):
            best_pred = None
            best_succ = None
            for s in others:
                pr = s.pred(e)
                if pr is not None and (best_pred is None or pr > best_pred):
                    best_pred = pr
                su = s.succ(e)
                if su is not None and (best_succ is None or su < best_succ):
                    best_succ = su
            if best_pred is not None:
                cands.append(CandidatePair(best_pred, e, depth))
            if best_succ is not None:
                cands.append(CandidatePair(e, best_succ, depth))
    return cands


def filter_consecutive(
    cands: Iterable[CandidatePair], sets: Iterable[PosSet]
) -> list[CandidatePair]:
    """Keep the pairs whose positions are adjacent across the given sets.

    A pair (p, q) survives when no position from any of the sets lies
    strictly between p and q, i.e. q is the global successor of p.  The
    sets must together hold every occurrence that could intervene, which
    for a tree node means its complete position collection, not just the
    two children of one merge step.
    """
    all_sets = list(sets)

    def global_succ(x: int) -> int | None:
        best = None
        for s in all_sets:
            v = s.succ(x)
            if v is not None and (best is None or v < best):
                best = v
        return best

    return [c for c in cands if global_succ(c.p) == c.q]


def _run_pure(t: bytes, bt: BinarizedTree) -> tuple[list[Span], int]:
    states: dict[int, ClassedPosSets] = {}
    pending: dict[int, list[CandidatePair]] = {}
    spans: list[Span] = []
    counter = 0

    def visit(v: int) -> None:
        nonlocal counter
        if bt.is_leaf(v):
            p = bt.leafpos[v]
            state = ClassedPosSets()
            if p > 0:
                state.add(p, position_class(t, p))
            states[v] = state
            return
        a = states.pop(bt.left[v])
        b = states.pop(bt.right[v])
        if bt.odepth[v] == 0:
            states[v] = ClassedPosSets()
            return
        if a.total <= b.total:
            sm, lg = a, b
        else:
            sm, lg = b, a
        counter += sm.total
        orig = bt.origin[v]
        pending.setdefault(orig, []).extend(pairs_at_node(sm, lg, bt.odepth[v]))
        lg.merge_from(sm)
        states[v] = lg
        if not bt.synthetic[v]:
            # every position below the node is now merged in: settle its pairs
            cands = pending.pop(orig, [])
            full = [s for _, s in lg.sets()]
            for c in filter_consecutive(cands, full):
                spans.append(Span(c.p, c.q + c.depth - 1))

    bottom_up(bt, visit)
    assert not pending, "unsettled candidate pairs"
    return spans, counter


def _run_kernel(t: bytes, bt: BinarizedTree) -> tuple["np.ndarray", int]:
    nb = len(bt.left)
    left = np.array(bt.left, dtype=np.int64)
    right = np.array(bt.right, dtype=np.int64)
    odepth = np.array(bt.odepth, dtype=np.int64)
    leafpos = np.array(bt.leafpos, dtype=np.int64)
    origin = np.array(bt.origin, dtype=np.int64)
    synth = np.array(bt.synthetic, dtype=np.int64)
    post = np.empty(nb, dtype=np.int64)
    k = 0

    def visit(v: int) -> None:
        nonlocal k
        post[k] = v
        k += 1

    bottom_up(bt, visit)
    cls = np.empty(len(t) + 1, dtype=np.int64)
    cls[0] = 0
    cls[1] = 0
    data = np.frombuffer(t, dtype=np.uint8)
    cls[2:] = data[: len(t) - 1].astype(np.int64) + 1
    arr, counter = _accel.fast_spans(
        left, right, odepth, leafpos, origin, synth, post, cls, len(t)
    )
    return arr, int(counter)


def run_fast(text: bytes | str, *, engine: str = "auto") -> FastRun:
    """Traverse the suffix tree of `text` and collect every maximal closed span.

    Returns the sorted spans together with the summed size of the
    smaller child over all merges, which bounds the traversal's work.
    """
    t = as_bytes(text)
    if not t:
        raise ValueError("text must be non-empty")
    accel = _accel.resolve_engine(engine, len(t), _KERNEL_MIN)
    tree = build_suffix_tree(t)
    bt = binarize(tree)
    if accel:
        arr, counter = _run_kernel(t, bt)
        singles = _singleton_positions(t)
        rows = np.empty((arr.shape[0] + singles.size, 2), dtype=np.int64)
        rows[: arr.shape[0]] = arr
        rows[arr.shape[0] :, 0] = singles
        rows[arr.shape[0] :, 1] = singles
        order = np.lexsort((rows[:, 1], rows[:, 0]))
        rows = rows[order]
        dup = (rows[1:] == rows[:-1]).all(axis=1)
        assert not dup.any(), f"duplicate span {rows[1:][dup][:1]}"
        spans = list(map(Span._make, rows.tolist()))
    else:
        spans, counter = _run_pure(t, bt)
        spans.extend(singleton_mcs(t))
        spans.sort()
        for i in range(1, len(spans)):
            assert spans[i - 1] != spans[i], f"duplicate span {spans[i]}"
    return FastRun(spans, counter, "accel" if accel else "pure")


def mcs_fast(text: bytes | str, *, engine: str = "auto") -> list[Span]:
    """All maximal closed substrings of `text` as sorted (start, end) spans."""
    return run_fast(text, engine=engine).spans
