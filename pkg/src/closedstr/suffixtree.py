"""Suffix tree of a byte text with a virtual terminator, plus binarization.

The tree indexes the text followed by one terminator that exists only
as an edge key (SENTINEL, outside the byte range), so every one of the
n+1 suffixes ends at its own leaf and all 256 byte values stay legal in
texts.  Nodes live in a flat arena; children are keyed by the first
character of their edge and iterate terminator-first, then byte order.

Construction sorts the suffixes (numpy prefix doubling), computes the
LCP array, and folds the lexicographic leaf sequence into the tree with
a stack, creating one internal node per distinct branching depth.

``binarize`` rewrites nodes of degree above two into balanced binary
gadgets of synthetic nodes so that bottom-up merging always combines
exactly two children; synthetic nodes remember the original node and
its string depth.  ``bottom_up`` is an iterative postorder driver that
is safe for very deep trees.
"""

from __future__ import annotations

from typing import Callable

from closedstr._sa import sa_and_lcp
from closedstr.core import as_bytes

SENTINEL = 256


def _child_sort_key(key: int) -> tuple[int, int]:
    return (0 if key == SENTINEL else 1, key)


class SuffixTree:
    """Arena-backed suffix tree; build with :func:`build_suffix_tree`."""

    __slots__ = (
        "text",
        "n",
        "root",
        "_depth",
        "_parent",
        "_suffix",
        "_children",
        "_edge",
        "_leaf_by_suffix",
    )

    def __init__(self, text, n, root, depth, parent, suffix, children, edge, leaf_by_suffix):
        self.text = text
        self.n = n
        self.root = root
        self._depth = depth
        self._parent = parent
        self._suffix = suffix
        self._children = children
        self._edge = edge
        self._leaf_by_suffix = leaf_by_suffix

    def __len__(self) -> int:
        return len(self._depth)

    def is_leaf(self, v: int) -> bool:
        return self._suffix[v] != 0

    def string_depth(self, v: int) -> int:
        """Characters from the root to *v*; for leaves this counts the terminator."""
        return self._depth[v]

    def parent(self, v: int) -> int:
        """Parent id; the root's parent is -1."""
        return self._parent[v]

    def leaf_suffix(self, v: int) -> int:
        """1-based start of the suffix this leaf spells; n+1 means the
        terminator-only leaf; 0 means *v* is internal."""
        return self._suffix[v]

    def leaf(self, suffix: int) -> int:
        """Leaf id for the 1-based suffix start (n+1 for the terminator leaf)."""
        if not 1 <= suffix <= self.n + 1:
            raise IndexError(f"suffix {suffix} out of range 1..{self.n + 1}")
        return self._leaf_by_suffix[suffix]

    def children(self, v: int) -> dict[int, int]:
        """Children keyed by the first character of their edge."""
        return self._children[v]

    def sorted_children(self, v: int) -> list[tuple[int, int]]:
        """(key, child) pairs, SENTINEL first then byte order."""
        return sorted(self._children[v].items(), key=lambda kv: _child_sort_key(kv[0]))

    def edge(self, v: int) -> tuple[int, int]:
        """Half-open 0-based slice of text-plus-terminator labelling the
        edge into *v*; (0, 0) for the root."""
        return self._edge[v]

    def path_label(self, v: int) -> bytes:
        """Bytes from root to *v*, with the virtual terminator omitted."""
        start = self._leftmost_start(v)
        length = min(self._depth[v], self.n - start)
        return self.text[start : start + length]

    def _leftmost_start(self, v: int) -> int:
        while self._suffix[v] == 0:
            first = min(self._children[v].items(), key=lambda kv: _child_sort_key(kv[0]))
            v = first[1]
        return self._suffix[v] - 1

    def internal_ids(self) -> list[int]:
        return [v for v in range(len(self._depth)) if self._suffix[v] == 0]

    def leaf_ids(self) -> list[int]:
        return [v for v in range(len(self._depth)) if self._suffix[v] != 0]


def build_suffix_tree(text: str | bytes) -> SuffixTree:
    """Suffix tree of *text* plus the virtual terminator.

    Raises ValueError on empty text.  The result always has n+1 leaves
    and every internal node except possibly the root branches at least
    twice (the root always does, because the terminator leaf hangs off
    it).
    """
    t = as_bytes(text)
    n = len(t)
    if n == 0:
        raise ValueError("cannot build a suffix tree of the empty text")
    sa, lcp = sa_and_lcp(t)
    total = n + 1

    depth: list[int] = [0]
    children_list: list[list[int]] = [[]]
    suffix: list[int] = [0]
    root = 0

    def new_leaf(start0: int) -> int:
        vid = len(depth)
        depth.append(total - start0)
        children_list.append([])
        suffix.append(start0 + 1)
        return vid

    def new_internal(d: int) -> int:
        vid = len(depth)
        depth.append(d)
        children_list.append([])
        suffix.append(0)
        return vid

    stack = [root]
    children_list[root].append(new_leaf(int(sa[0])))
    for k in range(1, total):
        h = int(lcp[k])
        carry = None
        while depth[stack[-1]] > h:
            v = stack.pop()
            if carry is not None:
                children_list[v].append(carry)
            carry = v
        top = stack[-1]
        if depth[top] == h:
            if carry is not None:
                children_list[top].append(carry)
            node = top
        else:
            if carry is None:
                carry = children_list[top].pop()
            node = new_internal(h)
            children_list[node].append(carry)
            stack.append(node)
        children_list[node].append(new_leaf(int(sa[k])))
    carry = None
    while depth[stack[-1]] > 0:
        v = stack.pop()
        if carry is not None:
            children_list[v].append(carry)
        carry = v
    if carry is not None:
        children_list[root].append(carry)

    # second pass: parents, edge labels, dict children, leaf index
    size = len(depth)
    parent = [-1] * size
    edge = [(0, 0)] * size
    childmap: list[dict[int, int]] = [dict() for _ in range(size)]
    leftmost = [0] * size
    order: list[int] = []
    walk = [root]
    while walk:
        v = walk.pop()
        order.append(v)
        for c in children_list[v]:
            parent[c] = v
            walk.append(c)
    for v in reversed(order):
        if suffix[v]:
            leftmost[v] = suffix[v] - 1
        else:
            leftmost[v] = leftmost[children_list[v][0]]
    data_last = SENTINEL
    for v in order:
        if v == root:
            continue
        p = parent[v]
        start = leftmost[v] + depth[p]
        edge[v] = (start, leftmost[v] + depth[v])
        key = t[start] if start < n else data_last
        childmap[p][key] = v

    leaf_by_suffix = [0] * (n + 2)
    for v in range(size):
        if suffix[v]:
            leaf_by_suffix[suffix[v]] = v

    return SuffixTree(t, n, root, depth, parent, suffix, childmap, edge, leaf_by_suffix)


class BinarizedTree:
    """Binary rewrite of a suffix tree for pairwise bottom-up merging.

    Flat arrays over binarized node ids: ``left``/``right`` child ids
    (-1 for leaves), ``origin`` (the original node id), ``odepth`` (the
    original node's string depth, used when pairing positions),
    ``leafpos`` (1-based suffix start for leaves of real suffixes, 0
    for the terminator leaf and for internal nodes), and ``synthetic``
    flags.  ``binarized_of[v]`` maps an original node to the gadget
    node that represents it.
    """

    __slots__ = ("tree", "left", "right", "origin", "odepth", "leafpos", "synthetic", "root", "binarized_of")

    def __init__(self, tree, left, right, origin, odepth, leafpos, synthetic, root, binarized_of):
        self.tree = tree
        self.left = left
        self.right = right
        self.origin = origin
        self.odepth = odepth
        self.leafpos = leafpos
        self.synthetic = synthetic
        self.root = root
        self.binarized_of = binarized_of

    def __len__(self) -> int:
        return len(self.left)

    def is_leaf(self, v: int) -> bool:
        return self.left[v] < 0

    @property
    def synthetic_count(self) -> int:
        return sum(self.synthetic)


def binarize(tree: SuffixTree) -> BinarizedTree:
    """Binary gadget rewrite of *tree*.

    A node of degree d > 2 becomes a balanced binary tree with
    ceil(log2 d) levels of synthetic nodes below the (kept) original
    node; degree-2 nodes and leaves are unchanged.  Children are taken
    terminator-first then in byte order, and every gadget node carries
    the original node's string depth.
    """
    left: list[int] = []
    right: list[int] = []
    origin: list[int] = []
    odepth: list[int] = []
    leafpos: list[int] = []
    synthetic: list[bool] = []
    binarized_of = [-1] * len(tree)

    def alloc(l: int, r: int, orig: int, d: int, pos: int, synth: bool) -> int:
        vid = len(left)
        left.append(l)
        right.append(r)
        origin.append(orig)
        odepth.append(d)
        leafpos.append(pos)
        synthetic.append(synth)
        return vid

    def combine(ids: list[int], orig: int, d: int, top: bool) -> int:
        if len(ids) == 1:
            return ids[0]
        mid = (len(ids) + 1) // 2
        l = combine(ids[:mid], orig, d, False)
        r = combine(ids[mid:], orig, d, False)
        return alloc(l, r, orig, d, 0, not top)

    # iterative postorder over the original tree
    stack: list[tuple[int, bool]] = [(tree.root, False)]
    while stack:
        v, expanded = stack.pop()
        if tree.is_leaf(v):
            s = tree.leaf_suffix(v)
            pos = s if s <= tree.n else 0
            binarized_of[v] = alloc(-1, -1, v, tree.string_depth(v), pos, False)
            continue
        kids = [c for _, c in tree.sorted_children(v)]
        if not expanded:
            stack.append((v, True))
            for c in kids:
                stack.append((c, False))
            continue
        ids = [binarized_of[c] for c in kids]
        binarized_of[v] = combine(ids, v, tree.string_depth(v), True)

    return BinarizedTree(
        tree, left, right, origin, odepth, leafpos, synthetic, binarized_of[tree.root], binarized_of
    )


def bottom_up(bt: BinarizedTree, visit: Callable[[int], None]) -> None:
    """Call *visit* once per binarized node, children strictly first.

    Iterative, so trees as deep as the text length (think unary texts)
    cannot overflow the interpreter stack.
    """
    stack: list[int] = [bt.root]
    emit: list[int] = []
    left = bt.left
    right = bt.right
    while stack:
        v = stack.pop()
        emit.append(v)
        if left[v] >= 0:
            stack.append(left[v])
            stack.append(right[v])
    for v in reversed(emit):
        visit(v)
