"""Optional numba-compiled twins of the hot loops.

Every function here mirrors a pure-Python implementation elsewhere in
the package and is differential-tested against it.  When numba is not
importable the module still loads; callers check HAVE_NUMBA and fall
back to the pure code.  Kernels are cached to disk, so compilation is
paid once per environment.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(f):
            return f

        return wrap


def resolve_engine(engine: str, n: int, threshold: int) -> bool:
    """Decide whether the accelerated path should run.

    engine: "auto" picks the kernel for n >= threshold when numba is
    present, "pure" never does, "accel" insists and raises when numba is
    missing.
    """
    if engine == "pure":
        return False
    if engine == "accel":
        if not HAVE_NUMBA:
            raise RuntimeError("accelerated engine requested but numba is unavailable")
        return True
    if engine == "auto":
        return HAVE_NUMBA and n >= threshold
    raise ValueError(f"unknown engine {engine!r}; expected auto, pure or accel")


def text_to_array(t: bytes) -> np.ndarray:
    return np.frombuffer(t, dtype=np.uint8)


@njit(cache=True)
def lcp_kasai(data, sa):
    """Longest-common-prefix array for *sa* over int array *data*.

    lcp[k] is the lcp of the suffixes at sa[k-1] and sa[k]; lcp[0] is 0.
    Runs unjitted (same code) when numba is absent.
    """
    n = data.size
    rank = np.empty(n, np.int64)
    for k in range(n):
        rank[sa[k]] = k
    lcp = np.zeros(n, np.int64)
    h = 0
    for i in range(n):
        r = rank[i]
        if r > 0:
            j = sa[r - 1]
            while i + h < n and j + h < n and data[i + h] == data[j + h]:
                h += 1
            lcp[r] = h
            if h > 0:
                h -= 1
        else:
            h = 0
    return lcp


@njit(cache=True)
def oracle_spans(data):  # pragma: no cover - covered via dispatch tests
    """Spans of maximal closed substrings via one closedness array per suffix.

    data: uint8 array of length n >= 1.  Returns an (m, 2) int64 array of
    1-based inclusive spans sorted by (start, end).
    """
    n = data.size
    b = np.zeros(n + 1, np.int32)
    cur = np.zeros(n + 2, np.uint8)
    prev = np.zeros(n + 2, np.uint8)
    cap = 4096
    out = np.empty((cap, 2), np.int64)
    m = 0
    for i in range(1, n + 1):
        length = n - i + 1
        k = 0
        best = 0
        cur[1] = 1
        for l in range(2, length + 1):
            c = data[i + l - 2]
            while k > 0 and data[i - 1 + k] != c:
                k = b[k]
            if data[i - 1 + k] == c:
                k += 1
            b[l] = k
            if k > best:
                best = k
                cur[l] = 1
            else:
                cur[l] = 0
        for l in range(1, length + 1):
            if cur[l] == 1 and (l == length or cur[l + 1] == 0) and (i == 1 or prev[l + 1] == 0):
                if m == cap:
                    cap *= 2
                    grown = np.empty((cap, 2), np.int64)
                    grown[:m] = out[:m]
                    out = grown
                out[m, 0] = i
                out[m, 1] = i + l - 1
                m += 1
        prev[1 : length + 1] = cur[1 : length + 1]
    return out[:m].copy()


@njit(cache=True)
def _avl_insert(akey, alc, arc, aht, path, root, slot, key):
    """Insert *slot* carrying *key* into the arena AVL rooted at *root*.

    Returns the (possibly new) root.  Keys are assumed distinct: the
    traversal code only ever inserts each text position once.
    """
    akey[slot] = key
    alc[slot] = 0
    arc[slot] = 0
    aht[slot] = 1
    if root == 0:
        return slot
    depth = 0
    cur = root
    while True:
        path[depth] = cur
        depth += 1
        if key < akey[cur]:
            nxt = alc[cur]
            if nxt == 0:
                alc[cur] = slot
                break
        else:
            nxt = arc[cur]
            if nxt == 0:
                arc[cur] = slot
                break
        cur = nxt
    for i in range(depth - 1, -1, -1):
        v = path[i]
        hl = aht[alc[v]]
        hr = aht[arc[v]]
        bal = hl - hr
        if bal > 1 or bal < -1:
            if bal > 1:
                ch = alc[v]
                if aht[alc[ch]] >= aht[arc[ch]]:
                    alc[v] = arc[ch]
                    arc[ch] = v
                    aht[v] = max(aht[alc[v]], aht[arc[v]]) + 1
                    aht[ch] = max(aht[alc[ch]], aht[arc[ch]]) + 1
                    newv = ch
                else:
                    g = arc[ch]
                    arc[ch] = alc[g]
                    alc[g] = ch
                    alc[v] = arc[g]
                    arc[g] = v
                    aht[ch] = max(aht[alc[ch]], aht[arc[ch]]) + 1
                    aht[v] = max(aht[alc[v]], aht[arc[v]]) + 1
                    aht[g] = max(aht[alc[g]], aht[arc[g]]) + 1
                    newv = g
            else:
                ch = arc[v]
                if aht[arc[ch]] >= aht[alc[ch]]:
                    arc[v] = alc[ch]
                    alc[ch] = v
                    aht[v] = max(aht[alc[v]], aht[arc[v]]) + 1
                    aht[ch] = max(aht[alc[ch]], aht[arc[ch]]) + 1
                    newv = ch
                else:
                    g = alc[ch]
                    alc[ch] = arc[g]
                    arc[g] = ch
                    arc[v] = alc[g]
                    alc[g] = v
                    aht[ch] = max(aht[alc[ch]], aht[arc[ch]]) + 1
                    aht[v] = max(aht[alc[v]], aht[arc[v]]) + 1
                    aht[g] = max(aht[alc[g]], aht[arc[g]]) + 1
                    newv = g
            # one rotation restores balance everywhere above
            if i == 0:
                return newv
            par = path[i - 1]
            if alc[par] == v:
                alc[par] = newv
            else:
                arc[par] = newv
            return root
        nh = (hl if hl > hr else hr) + 1
        if aht[v] == nh:
            return root
        aht[v] = nh
    return root


@njit(cache=True)
def _avl_succ(akey, alc, arc, root, x):
    cur = root
    best = 0
    while cur != 0:
        if akey[cur] > x:
            best = akey[cur]
            cur = alc[cur]
        else:
            cur = arc[cur]
    return best


@njit(cache=True)
def _avl_pred(akey, alc, arc, root, x):
    cur = root
    best = 0
    while cur != 0:
        if akey[cur] < x:
            best = akey[cur]
            cur = arc[cur]
        else:
            cur = alc[cur]
    return best


@njit(cache=True)
def _avl_collect(alc, arc, root, stack, buf):
    """Write the slots of the tree at *root* into *buf* in key order."""
    top = 0
    cnt = 0
    node = root
    while top > 0 or node != 0:
        while node != 0:
            stack[top] = node
            top += 1
            node = alc[node]
        top -= 1
        node = stack[top]
        buf[cnt] = node
        cnt += 1
        node = arc[node]
    return cnt


@njit(cache=True)
def fast_spans(left, right, odepth, leafpos, origin, synth, post, cls, n):  # pragma: no cover
    """Span pairing over a binarized suffix tree, compiled twin.

    Bottom-up over *post*: each node keeps one AVL of positions per
    preceding-character class (entries linked in ascending class order).
    At every node of positive original depth the smaller child's
    elements are iterated and their nearest opposite-class neighbours in
    the larger child become candidate pairs, pushed on a stack keyed by
    the originating node.  When a non-synthetic node completes its merge
    its candidates are popped; one survives when its two positions are
    adjacent in the node's complete position collection, emitting the
    span (p, q + depth - 1).  Candidate lifetimes nest along the current
    root path, so the stack discipline is sound.  Returns the unsorted
    span array and the total size of smaller children iterated.
    """
    nb = left.size
    cap = n + 2
    akey = np.zeros(cap, np.int64)
    alc = np.zeros(cap, np.int32)
    arc = np.zeros(cap, np.int32)
    aht = np.zeros(cap, np.int8)
    path = np.zeros(96, np.int32)
    stack = np.zeros(96, np.int32)
    buf = np.empty(cap, np.int32)
    next_slot = 1

    ecls = np.zeros(cap, np.int32)
    eroot = np.zeros(cap, np.int32)
    esize = np.zeros(cap, np.int64)
    enext = np.full(cap, -1, np.int32)
    next_entry = 0

    ehead = np.full(nb, -1, np.int32)
    etot = np.zeros(nb, np.int64)

    scap = 4096
    spans = np.empty((scap, 2), np.int64)
    m = 0
    counter = 0

    ccap = 1024
    cp = np.empty(ccap, np.int64)
    cq = np.empty(ccap, np.int64)
    corg = np.empty(ccap, np.int64)
    cm = 0

    for idx in range(post.size):
        v = post[idx]
        if left[v] < 0:
            p = leafpos[v]
            if p > 0:
                slot = next_slot
                next_slot += 1
                akey[slot] = p
                alc[slot] = 0
                arc[slot] = 0
                aht[slot] = 1
                e = next_entry
                next_entry += 1
                ecls[e] = cls[p]
                eroot[e] = slot
                esize[e] = 1
                enext[e] = -1
                ehead[v] = e
                etot[v] = 1
            continue
        a = left[v]
        b = right[v]
        d = odepth[v]
        if d == 0:
            # nothing pairs at depth 0 and every ancestor is depth 0 too
            continue
        ta = etot[a]
        tb = etot[b]
        if ta <= tb:
            sm = a
            lg = b
        else:
            sm = b
            lg = a
        counter += etot[sm]
        es = ehead[sm]
        while es != -1:
            c = ecls[es]
            top = 0
            node = eroot[es]
            while top > 0 or node != 0:
                while node != 0:
                    stack[top] = node
                    top += 1
                    node = alc[node]
                top -= 1
                node = stack[top]
                e = akey[node]
                bs = 0
                bp = 0
                el = ehead[lg]
                while el != -1:
                    if ecls[el] != c:
                        s = _avl_succ(akey, alc, arc, eroot[el], e)
                        if s != 0 and (bs == 0 or s < bs):
                            bs = s
                        pr = _avl_pred(akey, alc, arc, eroot[el], e)
                        if pr > bp:
                            bp = pr
                    el = enext[el]
                if bp != 0:
                    if cm == ccap:
                        ccap *= 2
                        gp = np.empty(ccap, np.int64)
                        gp[:cm] = cp[:cm]
                        cp = gp
                        gq = np.empty(ccap, np.int64)
                        gq[:cm] = cq[:cm]
                        cq = gq
                        go = np.empty(ccap, np.int64)
                        go[:cm] = corg[:cm]
                        corg = go
                    cp[cm] = bp
                    cq[cm] = e
                    corg[cm] = origin[v]
                    cm += 1
                if bs != 0:
                    if cm == ccap:
                        ccap *= 2
                        gp = np.empty(ccap, np.int64)
                        gp[:cm] = cp[:cm]
                        cp = gp
                        gq = np.empty(ccap, np.int64)
                        gq[:cm] = cq[:cm]
                        cq = gq
                        go = np.empty(ccap, np.int64)
                        go[:cm] = corg[:cm]
                        corg = go
                    cp[cm] = e
                    cq[cm] = bs
                    corg[cm] = origin[v]
                    cm += 1
                node = arc[node]
            es = enext[es]
        # merge the class lists, per class smaller tree into larger
        ea = ehead[sm]
        eb = ehead[lg]
        newhead = -1
        tail = -1
        while ea != -1 or eb != -1:
            if eb == -1 or (ea != -1 and ecls[ea] < ecls[eb]):
                pick = ea
                ea = enext[ea]
            elif ea == -1 or ecls[eb] < ecls[ea]:
                pick = eb
                eb = enext[eb]
            else:
                if esize[ea] <= esize[eb]:
                    src = ea
                    dst = eb
                else:
                    src = eb
                    dst = ea
                cnt = _avl_collect(alc, arc, eroot[src], stack, buf)
                root = eroot[dst]
                for k in range(cnt):
                    slot = buf[k]
                    root = _avl_insert(akey, alc, arc, aht, path, root, slot, akey[slot])
                eroot[dst] = root
                esize[dst] += esize[src]
                pick = dst
                ea = enext[ea]
                eb = enext[eb]
            if tail == -1:
                newhead = pick
            else:
                enext[tail] = pick
            tail = pick
        if tail != -1:
            enext[tail] = -1
        ehead[v] = newhead
        etot[v] = ta + tb
        if synth[v] == 0:
            # the node's position collection is complete: settle its pairs
            o = origin[v]
            while cm > 0 and corg[cm - 1] == o:
                cm -= 1
                p = cp[cm]
                q = cq[cm]
                g = 0
                el = ehead[v]
                while el != -1:
                    s = _avl_succ(akey, alc, arc, eroot[el], p)
                    if s != 0 and (g == 0 or s < g):
                        g = s
                    el = enext[el]
                if g == q:
                    if m == scap:
                        scap *= 2
                        grown = np.empty((scap, 2), np.int64)
                        grown[:m] = spans[:m]
                        spans = grown
                    spans[m, 0] = p
                    spans[m, 1] = q + d - 1
                    m += 1
    return spans[:m].copy(), counter


@njit(cache=True)
def suffix_one_run_total(data):  # pragma: no cover - covered via dispatch tests
    """Total number of 1-runs over the closedness arrays of all suffixes."""
    n = data.size
    b = np.zeros(n + 1, np.int32)
    total = 0
    for i in range(1, n + 1):
        length = n - i + 1
        k = 0
        best = 0
        total += 1  # the length-1 prefix of every suffix opens a run
        prev_bit = 1
        for l in range(2, length + 1):
            c = data[i + l - 2]
            while k > 0 and data[i - 1 + k] != c:
                k = b[k]
            if data[i - 1 + k] == c:
                k += 1
            b[l] = k
            bit = 0
            if k > best:
                best = k
                bit = 1
            if bit == 1 and prev_bit == 0:
                total += 1
            prev_bit = bit
    return total
