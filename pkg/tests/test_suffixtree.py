import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from closedstr.core import as_bytes
from closedstr.suffixtree import (
    SENTINEL,
    binarize,
    bottom_up,
    build_suffix_tree,
)

from conftest import randomized_corpus


def lcp_of(a: bytes, b: bytes) -> int:
    k = 0
    while k < len(a) and k < len(b) and a[k] == b[k]:
        k += 1
    return k


def ancestors(tree, v):
    out = []
    while v != -1:
        out.append(v)
        v = tree.parent(v)
    return out


class TestSmallShapes:
    def test_aa_shape(self):
        tree = build_suffix_tree("aa")
        root = tree.root
        kids = tree.sorted_children(root)
        assert [k for k, _ in kids] == [SENTINEL, ord("a")]
        sent_leaf = kids[0][1]
        assert tree.is_leaf(sent_leaf)
        assert tree.leaf_suffix(sent_leaf) == 3
        a_node = kids[1][1]
        assert not tree.is_leaf(a_node)
        assert tree.string_depth(a_node) == 1
        grand = tree.sorted_children(a_node)
        assert sorted(tree.leaf_suffix(c) for _, c in grand) == [1, 2]
        internal = [v for v in tree.internal_ids() if v != root]
        assert internal == [a_node]

    def test_ab_shape(self):
        tree = build_suffix_tree("ab")
        root = tree.root
        kids = tree.sorted_children(root)
        assert [k for k, _ in kids] == [SENTINEL, ord("a"), ord("b")]
        assert all(tree.is_leaf(c) for _, c in kids)
        assert [tree.leaf_suffix(c) for _, c in kids] == [3, 1, 2]
        assert [v for v in tree.internal_ids() if v != root] == []

    def test_single_char(self):
        tree = build_suffix_tree("x")
        assert len(tree.leaf_ids()) == 2

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            build_suffix_tree(b"")


class TestInvariants:
    @pytest.mark.parametrize("seed", range(6))
    def test_structure_on_random_texts(self, seed):
        rng = random.Random(seed)
        sigma = rng.choice([2, 3, 4, 26])
        n = rng.randint(1, 300)
        t = bytes(rng.choices(b"abcdefghijklmnopqrstuvwxyz"[:sigma], k=n))
        tree = build_suffix_tree(t)

        leaves = tree.leaf_ids()
        assert len(leaves) == n + 1
        assert sorted(tree.leaf_suffix(v) for v in leaves) == list(range(1, n + 2))

        for v in tree.internal_ids():
            kids = tree.sorted_children(v)
            if v != tree.root:
                assert len(kids) >= 2
            for key, c in kids:
                assert tree.parent(c) == v
                assert tree.string_depth(c) > tree.string_depth(v)
                start, end = tree.edge(c)
                assert end - start == tree.string_depth(c) - tree.string_depth(v)
                if key == SENTINEL:
                    assert start == n
                else:
                    assert t[start] == key
            # terminator-related key can appear at most once
            keys = [k for k, _ in kids]
            assert len(keys) == len(set(keys))

        # every leaf spells its suffix (terminator omitted)
        for v in leaves:
            s = tree.leaf_suffix(v)
            assert tree.path_label(v) == t[s - 1 :]

        # internal labels never contain the terminator and occur branching
        for v in tree.internal_ids():
            assert len(tree.path_label(v)) == tree.string_depth(v)

    @pytest.mark.parametrize("seed", range(4))
    def test_lca_depth_is_suffix_lcp(self, seed):
        rng = random.Random(100 + seed)
        n = rng.randint(2, 120)
        t = bytes(rng.choices(b"ab", k=n))
        tree = build_suffix_tree(t)
        for _ in range(60):
            i, j = rng.sample(range(1, n + 1), 2)
            anc_i = ancestors(tree, tree.leaf(i))
            anc_j = set(ancestors(tree, tree.leaf(j)))
            lca = next(v for v in anc_i if v in anc_j)
            assert tree.string_depth(lca) == lcp_of(t[i - 1 :], t[j - 1 :])

    def test_deterministic_rebuild(self):
        t = as_bytes("abracadabra" * 3)
        t1 = build_suffix_tree(t)
        t2 = build_suffix_tree(t)
        assert t1._depth == t2._depth
        assert t1._parent == t2._parent
        assert t1._suffix == t2._suffix
        assert t1._children == t2._children

    def test_full_byte_range(self):
        t = bytes([0, 255, 128, 0, 255])
        tree = build_suffix_tree(t)
        assert len(tree.leaf_ids()) == 6
        for v in tree.leaf_ids():
            s = tree.leaf_suffix(v)
            assert tree.path_label(v) == t[s - 1 :]


class TestBinarize:
    def test_degree_two_unchanged(self):
        tree = build_suffix_tree("aa")
        bt = binarize(tree)
        assert bt.synthetic_count == 0
        assert len(bt) == len(tree)

    def test_degree_three_root_gets_one_synthetic(self):
        tree = build_suffix_tree("ab")
        bt = binarize(tree)
        assert bt.synthetic_count == 1

    def test_gadget_height_matches_log_bound(self):
        # root of "abcd" has degree 5: terminator plus four letters
        tree = build_suffix_tree("abcd")
        bt = binarize(tree)
        assert bt.synthetic_count == 3  # d - 2

        def height_within(v, orig):
            if bt.left[v] < 0 or bt.origin[v] != orig:
                return 0
            return 1 + max(
                height_within(bt.left[v], orig), height_within(bt.right[v], orig)
            )

        root_b = bt.binarized_of[tree.root]
        assert height_within(root_b, tree.root) <= math.ceil(math.log2(5))

    @pytest.mark.parametrize("text", ["abaabab", "aabaaaabaaba", "mississippi"])
    def test_leaf_sets_and_depths_preserved(self, text):
        tree = build_suffix_tree(text)
        bt = binarize(tree)

        # every binarized node is a proper binary node or a leaf
        for v in range(len(bt)):
            assert (bt.left[v] < 0) == (bt.right[v] < 0)

        # original internal nodes keep their full leaf set below the gadget
        def bin_leaves(v):
            out, walk = [], [v]
            while walk:
                u = walk.pop()
                if bt.left[u] < 0:
                    out.append(bt.leafpos[u])
                else:
                    walk.extend((bt.left[u], bt.right[u]))
            return sorted(out)

        def orig_leaves(v):
            out, walk = [], [v]
            while walk:
                u = walk.pop()
                if tree.is_leaf(u):
                    s = tree.leaf_suffix(u)
                    out.append(s if s <= tree.n else 0)
                else:
                    walk.extend(c for _, c in tree.sorted_children(u))
            return sorted(out)

        for v in tree.internal_ids():
            assert bin_leaves(bt.binarized_of[v]) == orig_leaves(v)
            assert bt.odepth[bt.binarized_of[v]] == tree.string_depth(v)
            assert not bt.synthetic[bt.binarized_of[v]]

        # synthetic nodes carry their origin's depth
        for v in range(len(bt)):
            if bt.synthetic[v]:
                assert bt.odepth[v] == tree.string_depth(bt.origin[v])

        # internal count of a full binary tree is leaf count - 1
        leaves = sum(1 for v in range(len(bt)) if bt.left[v] < 0)
        assert len(bt) == 2 * leaves - 1


class TestBottomUp:
    def test_postorder_children_first_exactly_once(self):
        tree = build_suffix_tree("abaabab")
        bt = binarize(tree)
        seen = []
        bottom_up(bt, seen.append)
        assert sorted(seen) == list(range(len(bt)))
        pos = {v: k for k, v in enumerate(seen)}
        for v in range(len(bt)):
            if bt.left[v] >= 0:
                assert pos[bt.left[v]] < pos[v]
                assert pos[bt.right[v]] < pos[v]

    def test_deep_tree_no_recursion_limit(self):
        t = b"a" * 3000
        bt = binarize(build_suffix_tree(t))
        count = [0]
        bottom_up(bt, lambda v: count.__setitem__(0, count[0] + 1))
        assert count[0] == len(bt)


@settings(max_examples=60, deadline=None)
@given(st.binary(min_size=1, max_size=60))
def test_distinct_substrings_count(t):
    # Sum of edge lengths of the pure-text part counts distinct nonempty
    # substrings; cross-check against a set-based count.
    tree = build_suffix_tree(t)
    total = 0
    for v in range(len(tree)):
        if v == tree.root:
            continue
        d_parent = tree.string_depth(tree.parent(v))
        if tree.is_leaf(v):
            s = tree.leaf_suffix(v)
            real = len(t) - (s - 1)
            total += max(0, real - d_parent)
        else:
            total += tree.string_depth(v) - d_parent
    brute = len({t[i:j] for i in range(len(t)) for j in range(i + 1, len(t) + 1)})
    assert total == brute
