# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled merge kernels over flat int64 code arrays.

Same contract as `_kernels_py`; see that module for the algorithm notes.
The debug count-equality assertions live only in the interpreted twin.
"""

from cpython cimport array

import array

cdef array.array _I64 = array.array("q", [])


def build_pair_diff(x_codes, x_posts, y_codes, y_posts):
    """Codes of x-nodes with no ancestor among the y-nodes; returns (pairs, iterations)."""
    cdef Py_ssize_t m = len(x_posts)
    cdef Py_ssize_t n = len(y_posts)
    cdef array.array out = array.clone(_I64, 2 * m, zero=False)
    cdef Py_ssize_t k = 0, j = 0, w = 0
    cdef long long iters = 0
    if m == 0:
        array.resize(out, 0)
        return out, 0
    cdef const long long[::1] xc = x_codes
    cdef const long long[::1] xp = x_posts
    cdef long long[::1] r = out
    cdef const long long[::1] yc
    cdef const long long[::1] yp
    if n > 0:
        yc = y_codes
        yp = y_posts
        while k < m and j < n:
            iters += 1
            if xp[k] > yp[j]:
                j += 1
            elif xc[2 * k] > yc[2 * j]:
                k += 1
            else:
                r[w] = xc[2 * k]
                r[w + 1] = xc[2 * k + 1]
                w += 2
                k += 1
    while k < m:
        iters += 1
        r[w] = xc[2 * k]
        r[w + 1] = xc[2 * k + 1]
        w += 2
        k += 1
    array.resize(out, w)
    return out, iters


def build_pair_nodeset(x_codes, x_posts, y_codes, y_posts):
    """Codes of x-nodes that do have an ancestor among the y-nodes."""
    cdef Py_ssize_t m = len(x_posts)
    cdef Py_ssize_t n = len(y_posts)
    cdef array.array out = array.clone(_I64, 2 * m, zero=False)
    cdef Py_ssize_t k = 0, j = 0, w = 0
    if m == 0 or n == 0:
        array.resize(out, 0)
        return out
    cdef const long long[::1] xc = x_codes
    cdef const long long[::1] xp = x_posts
    cdef const long long[::1] yc = y_codes
    cdef const long long[::1] yp = y_posts
    cdef long long[::1] r = out
    while k < m and j < n:
        if xp[k] > yp[j]:
            j += 1
        elif xc[2 * k] > yc[2 * j]:
            r[w] = xc[2 * k]
            r[w + 1] = xc[2 * k + 1]
            w += 2
            k += 1
        else:
            k += 1
    array.resize(out, w)
    return out


def pairs_difference(a, b):
    """Entries of `a` whose pre-order does not occur in `b` (both sorted)."""
    cdef Py_ssize_t la = len(a) // 2
    cdef Py_ssize_t lb = len(b) // 2
    if lb == 0:
        return a[:]
    cdef array.array out = array.clone(_I64, 2 * la, zero=False)
    cdef Py_ssize_t i = 0, j = 0, w = 0
    if la == 0:
        array.resize(out, 0)
        return out
    cdef const long long[::1] av = a
    cdef const long long[::1] bv = b
    cdef long long[::1] r = out
    cdef long long ai, bj
    while i < la and j < lb:
        ai = av[2 * i]
        bj = bv[2 * j]
        if ai < bj:
            r[w] = ai
            r[w + 1] = av[2 * i + 1]
            w += 2
            i += 1
        elif ai > bj:
            j += 1
        else:
            i += 1
            j += 1
    while i < la:
        r[w] = av[2 * i]
        r[w + 1] = av[2 * i + 1]
        w += 2
        i += 1
    array.resize(out, w)
    return out


def pairs_intersect(a, b):
    """Entries common to `a` and `b` by pre-order (both sorted)."""
    cdef Py_ssize_t la = len(a) // 2
    cdef Py_ssize_t lb = len(b) // 2
    cdef array.array out = array.clone(_I64, 2 * min(la, lb), zero=False)
    cdef Py_ssize_t i = 0, j = 0, w = 0
    if la == 0 or lb == 0:
        array.resize(out, 0)
        return out
    cdef const long long[::1] av = a
    cdef const long long[::1] bv = b
    cdef long long[::1] r = out
    cdef long long ai, bj
    while i < la and j < lb:
        ai = av[2 * i]
        bj = bv[2 * j]
        if ai < bj:
            i += 1
        elif ai > bj:
            j += 1
        else:
            r[w] = ai
            r[w + 1] = av[2 * i + 1]
            w += 2
            i += 1
            j += 1
    array.resize(out, w)
    return out


def sum_counts(pairs):
    """Total of the count halves of an interleaved (pre, count) array."""
    cdef Py_ssize_t n = len(pairs) // 2
    if n == 0:
        return 0
    cdef const long long[::1] v = pairs
    cdef long long total = 0
    cdef Py_ssize_t i
    for i in range(n):
        total += v[2 * i + 1]
    return total
