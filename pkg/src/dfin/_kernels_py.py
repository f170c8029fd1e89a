"""Pure-Python merge kernels over flat int64 code arrays.

Interpreted twin of the compiled `_kernels` extension: same functions, same
argument layout, same results. All inputs are ``array('q')`` buffers.
Item-level node sets arrive as two aligned arrays, interleaved (pre, count)
pairs plus the matching post-orders; everything at itemset length >= 2 is a
bare interleaved (pre, count) array sorted by pre.

This module is also the debug build: the equal-key branches of the pair
difference and intersection assert that matching pre-orders carry matching
counts (they refer to the same tree node), a check the compiled kernels
omit.
"""

from array import array

_EMPTY = array("q")


def build_pair_diff(x_codes, x_posts, y_codes, y_posts):
    """Codes of x-nodes with no ancestor among the y-nodes.

    Two-pointer merge driven by the sort guarantees of item node sets
    (ascending in both pre and post). Three cases per step: when the x post
    is larger, the y node can never again be an ancestor, so y advances;
    when the y node is an ancestor (y.post larger, y.pre smaller), x is
    dropped; otherwise no later y can be an ancestor either, so x is
    emitted. Everything left of x after y runs out is emitted.

    Returns (pairs, iterations); iterations never exceeds len(x) + len(y).
    """
    out = array("q")
    m = len(x_posts)
    n = len(y_posts)
    k = j = 0
    iters = 0
    while k < m and j < n:
        iters += 1
        if x_posts[k] > y_posts[j]:
            j += 1
        elif x_codes[2 * k] > y_codes[2 * j]:
            k += 1
        else:
            out.append(x_codes[2 * k])
            out.append(x_codes[2 * k + 1])
            k += 1
    while k < m:
        iters += 1
        out.append(x_codes[2 * k])
        out.append(x_codes[2 * k + 1])
        k += 1
    return out, iters


def build_pair_nodeset(x_codes, x_posts, y_codes, y_posts):
    """Codes of x-nodes that do have an ancestor among the y-nodes.

    Same merge as build_pair_diff with the keep/drop test inverted.
    """
    out = array("q")
    m = len(x_posts)
    n = len(y_posts)
    k = j = 0
    while k < m and j < n:
        if x_posts[k] > y_posts[j]:
            j += 1
        elif x_codes[2 * k] > y_codes[2 * j]:
            out.append(x_codes[2 * k])
            out.append(x_codes[2 * k + 1])
            k += 1
        else:
            k += 1
    return out


def pairs_difference(a, b):
    """Entries of `a` whose pre-order does not occur in `b` (both sorted)."""
    la = len(a) // 2
    lb = len(b) // 2
    if lb == 0:
        return a[:]
    out = array("q")
    i = j = 0
    while i < la and j < lb:
        ai = a[2 * i]
        bj = b[2 * j]
        if ai < bj:
            out.append(ai)
            out.append(a[2 * i + 1])
            i += 1
        elif ai > bj:
            j += 1
        else:
            assert a[2 * i + 1] == b[2 * j + 1], "same pre-order, different counts"
            i += 1
            j += 1
    while i < la:
        out.append(a[2 * i])
        out.append(a[2 * i + 1])
        i += 1
    return out


def pairs_intersect(a, b):
    """Entries common to `a` and `b` by pre-order (both sorted)."""
    la = len(a) // 2
    lb = len(b) // 2
    out = array("q")
    i = j = 0
    while i < la and j < lb:
        ai = a[2 * i]
        bj = b[2 * j]
        if ai < bj:
            i += 1
        elif ai > bj:
            j += 1
        else:
            assert a[2 * i + 1] == b[2 * j + 1], "same pre-order, different counts"
            out.append(ai)
            out.append(a[2 * i + 1])
            i += 1
            j += 1
    return out


def sum_counts(pairs):
    """Total of the count halves of an interleaved (pre, count) array."""
    return sum(pairs[1::2])
