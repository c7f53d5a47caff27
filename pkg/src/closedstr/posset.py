"""Height-balanced ordered sets of text positions.

PosSet is an AVL set of distinct integers supporting insert, successor,
predecessor and a destructive merge that inserts the smaller set's
elements into the larger one.  Duplicate insertion, and therefore any
merge of non-disjoint sets, raises ValueError: these are contract
violations, not recoverable conditions.

ClassedPosSets groups one PosSet per *class*, where a class is the byte
preceding an occurrence, or BEGIN for an occurrence at position 1.
BEGIN sorts before every byte so iteration over classes is ascending
with BEGIN first.
"""

from __future__ import annotations

import math
from typing import Iterator

BEGIN = -1

# AVL worst-case height is about 1.44 * log2(size); with the +1 slack this
# factor is safe for every size and is what the balance audit checks.
HEIGHT_FACTOR = 1.5


class _Node:
    __slots__ = ("key", "left", "right", "height")

    def __init__(self, key):
        self.key = key
        self.left = None
        self.right = None
        self.height = 1


class PosSet:
    """Ordered set of distinct integers on an AVL tree."""

    __slots__ = ("_root", "_size")

    def __init__(self, items=()):
        self._root = None
        self._size = 0
        for x in items:
            self.insert(x)

    def __len__(self) -> int:
        return self._size

    def __bool__(self) -> bool:
        return self._size > 0

    @property
    def height(self) -> int:
        return self._root.height if self._root is not None else 0

    def __contains__(self, x: int) -> bool:
        node = self._root
        while node is not None:
            if x < node.key:
                node = node.left
            elif x > node.key:
                node = node.right
            else:
                return True
        return False

    def __iter__(self) -> Iterator[int]:
        stack = []
        node = self._root
        while stack or node is not None:
            while node is not None:
                stack.append(node)
                node = node.left
            node = stack.pop()
            yield node.key
            node = node.right

    def __repr__(self) -> str:
        return f"PosSet({list(self)})"

    def insert(self, x: int) -> None:
        """Insert *x*; raises ValueError when already present."""
        node = self._root
        if node is None:
            self._root = _Node(x)
            self._size = 1
            return
        path = []
        while True:
            path.append(node)
            if x < node.key:
                nxt = node.left
                if nxt is None:
                    node.left = _Node(x)
                    break
            elif x > node.key:
                nxt = node.right
                if nxt is None:
                    node.right = _Node(x)
                    break
            else:
                raise ValueError(f"duplicate insert of {x}")
            node = nxt
        self._size += 1
        # walk back up, restoring heights and balance
        for idx in range(len(path) - 1, -1, -1):
            node = path[idx]
            lh = node.left.height if node.left is not None else 0
            rh = node.right.height if node.right is not None else 0
            bal = lh - rh
            if bal > 1 or bal < -1:
                fresh = _rebalance(node, bal)
                if idx == 0:
                    self._root = fresh
                else:
                    parent = path[idx - 1]
                    if parent.left is node:
                        parent.left = fresh
                    else:
                        parent.right = fresh
                # one rebalance restores the AVL invariant on insert
                break
            nh = (lh if lh > rh else rh) + 1
            if nh == node.height:
                break
            node.height = nh

    def succ(self, x: int) -> int | None:
        """Smallest element strictly greater than *x*, or None."""
        node = self._root
        best = None
        while node is not None:
            if node.key > x:
                best = node.key
                node = node.left
            else:
                node = node.right
        return best

    def pred(self, x: int) -> int | None:
        """Largest element strictly smaller than *x*, or None."""
        node = self._root
        best = None
        while node is not None:
            if node.key < x:
                best = node.key
                node = node.right
            else:
                node = node.left
        return best


def _height(node) -> int:
    return node.height if node is not None else 0


def _fix(node) -> None:
    lh = _height(node.left)
    rh = _height(node.right)
    node.height = (lh if lh > rh else rh) + 1


def _rebalance(node, bal):
    if bal > 1:
        child = node.left
        if _height(child.left) >= _height(child.right):
            node.left = child.right
            child.right = node
            _fix(node)
            _fix(child)
            return child
        grand = child.right
        child.right = grand.left
        grand.left = child
        node.left = grand.right
        grand.right = node
        _fix(child)
        _fix(node)
        _fix(grand)
        return grand
    child = node.right
    if _height(child.right) >= _height(child.left):
        node.right = child.left
        child.left = node
        _fix(node)
        _fix(child)
        return child
    grand = child.left
    child.left = grand.right
    grand.right = child
    node.right = grand.left
    grand.left = node
    _fix(child)
    _fix(node)
    _fix(grand)
    return grand


def merge(a: PosSet, b: PosSet) -> PosSet:
    """Merge two disjoint sets, inserting the smaller into the larger.

    Returns the surviving (mutated) larger set; the smaller argument
    must not be used afterwards.  Overlapping inputs raise ValueError
    from the duplicate-insert guard.
    """
    small, large = (a, b) if len(a) <= len(b) else (b, a)
    for x in small:
        large.insert(x)
    return large


def audit_height(s: PosSet) -> bool:
    """Balance audit: the tree height stays logarithmic in the size."""
    return s.height <= HEIGHT_FACTOR * math.log2(len(s) + 1) + 1


class ClassedPosSets:
    """One PosSet per preceding-character class."""

    __slots__ = ("_sets", "_total")

    def __init__(self):
        self._sets: dict[int, PosSet] = {}
        self._total = 0

    @property
    def total(self) -> int:
        """Total number of positions across all classes."""
        return self._total

    def add(self, pos: int, cls: int) -> None:
        s = self._sets.get(cls)
        if s is None:
            s = self._sets[cls] = PosSet()
        s.insert(pos)
        self._total += 1

    def classes(self) -> list[int]:
        """Class keys ascending; BEGIN (-1) first when present."""
        return sorted(self._sets)

    def get(self, cls: int) -> PosSet | None:
        return self._sets.get(cls)

    def sets(self) -> list[tuple[int, PosSet]]:
        return [(c, self._sets[c]) for c in self.classes()]

    def merge_from(self, other: "ClassedPosSets") -> None:
        """Fold *other* into self class-by-class, smaller set into larger.

        *other* is consumed and must not be used afterwards.
        """
        for cls, theirs in other._sets.items():
            mine = self._sets.get(cls)
            if mine is None:
                self._sets[cls] = theirs
            else:
                self._sets[cls] = merge(mine, theirs)
        self._total += other._total
        other._sets = {}
        other._total = 0

    def __repr__(self) -> str:
        parts = ", ".join(f"{c}: {list(s)}" for c, s in self.sets())
        return f"ClassedPosSets({{{parts}}})"
