"""Integer kernels for the B3 band-word conjugacy search.

Band letters are coded 0..5: ``a12, a23, a13`` then their inverses, so the
inverse of ``x`` is ``(x + 3) % 6``.  A cyclic word of length ``n`` is stored
as the base-6 integer of its lexicographically least rotation, taken over
the three relabelings induced by conjugation with ``delta``.  Words up to
length 24 fit in an int64.
"""
from __future__ import annotations

import numpy as np

from ._jit import njit

MAX_CODE_LENGTH = 24

INVERSE = np.array([3, 4, 5, 0, 1, 2], dtype=np.int64)
# conjugation by delta: a23 -> a12, a13 -> a23, a12 -> a13
TAU = np.array(
    [[0, 1, 2, 3, 4, 5], [2, 0, 1, 5, 3, 4], [1, 2, 0, 4, 5, 3]], dtype=np.int64
)


@njit
def canonical_code(word, n):
    best = -1
    for j in range(3):
        for r in range(n):
            code = 0
            for i in range(n):
                code = code * 6 + TAU[j, word[(r + i) % n]]
            if best < 0 or code < best:
                best = code
    if best < 0:
        best = 0
    return best


@njit
def decode(code, n, out):
    for i in range(n - 1, -1, -1):
        out[i] = code % 6
        code //= 6


@njit
def cyclic_reduce(word):
    n = word.shape[0]
    stack = np.empty(n, dtype=np.int64)
    top = 0
    for i in range(n):
        x = word[i]
        if top > 0 and stack[top - 1] == INVERSE[x]:
            top -= 1
        else:
            stack[top] = x
            top += 1
    lo = 0
    hi = top
    while hi - lo >= 2 and stack[hi - 1] == INVERSE[stack[lo]]:
        lo += 1
        hi -= 1
    return stack[lo:hi].copy()


@njit
def conjugacy_class(word, max_states, rep, nrep):
    """Breadth-first closure of a cyclic band word.

    Moves are cyclic rotation, delta-relabeling, every length-preserving
    two-letter relation in ``rep`` and free cancellation.  A cancellation
    restarts the search one level shorter.  Returns ``(status, length,
    codes)`` where status 0 means the level was exhausted (``codes`` is the
    sorted set of canonical codes found there) and status 1 means the state
    budget ran out (``length`` is then an upper bound).
    """
    w = cyclic_reduce(word)
    n = w.shape[0]
    while True:
        if n < 2:
            out = np.empty(1, dtype=np.int64)
            out[0] = canonical_code(w, n)
            return 0, n, out
        start = canonical_code(w, n)
        seen = set()
        seen.add(start)
        queue = [start]
        head = 0
        cur = np.empty(n, dtype=np.int64)
        nxt = np.empty(n, dtype=np.int64)
        shorter = False
        while head < len(queue):
            decode(queue[head], n, cur)
            head += 1
            for i in range(n):
                j = (i + 1) % n
                x = cur[i]
                y = cur[j]
                if y == INVERSE[x]:
                    red = np.empty(n - 2, dtype=np.int64)
                    for k in range(n - 2):
                        red[k] = cur[(j + 1 + k) % n]
                    w = cyclic_reduce(red)
                    shorter = True
                    break
                for r in range(nrep[x, y]):
                    for k in range(n):
                        nxt[k] = cur[k]
                    nxt[i] = rep[x, y, r, 0]
                    nxt[j] = rep[x, y, r, 1]
                    c = canonical_code(nxt, n)
                    if c not in seen:
                        seen.add(c)
                        queue.append(c)
            if shorter:
                break
            if len(seen) > max_states:
                return 1, n, np.empty(0, dtype=np.int64)
        if shorter:
            n = w.shape[0]
            continue
        out = np.empty(len(seen), dtype=np.int64)
        k = 0
        for c in seen:
            out[k] = c
            k += 1
        out.sort()
        return 0, n, out


@njit
def canonical_reduced_codes(n):
    """All canonical codes of cyclically reduced cyclic words of length n."""
    total = 1
    for _ in range(n):
        total *= 6
    found = []
    cur = np.empty(n, dtype=np.int64)
    for code in range(total):
        decode(code, n, cur)
        ok = True
        for i in range(n):
            if cur[(i + 1) % n] == INVERSE[cur[i]] and n >= 2:
                ok = False
                break
        if ok and canonical_code(cur, n) == code:
            found.append(code)
    out = np.empty(len(found), dtype=np.int64)
    for i in range(len(found)):
        out[i] = found[i]
    return out
