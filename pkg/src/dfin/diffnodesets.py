"""Difference representation of itemsets over tree-node codes.

Where a node set lists the codes an itemset keeps, a difference node set
lists the codes it loses relative to its generating prefix: for a pair
(first, second) the first-item nodes with no second-item ancestor, and for
longer itemsets the plain sorted difference of the two generating
difference sets. Supports then come for free from the parent's support
minus the entry counts, which is the whole point: on dense data the
difference sets are far smaller than the node sets they replace.

All operations are pure, reentrant, and allocate fresh flat arrays.
"""

from . import kernels
from .nodesets import CodePairs, ItemNodeset


def build_2itemset_dn(ns_x: ItemNodeset, ns_y: ItemNodeset) -> CodePairs:
    """Difference set of the pair (x, y): x-nodes with no y-ancestor.

    Single linear merge over the two sorted item node sets; x must rank
    below y.
    """
    pairs, _ = kernels.build_pair_diff(ns_x.codes, ns_x.posts, ns_y.codes, ns_y.posts)
    return pairs


def build_2itemset_dn_counted(ns_x: ItemNodeset, ns_y: ItemNodeset) -> tuple[CodePairs, int]:
    """Same merge, also reporting its loop-iteration count.

    The count is bounded by len(ns_x) + len(ns_y); tests hold the kernel to
    that bound.
    """
    return kernels.build_pair_diff(ns_x.codes, ns_x.posts, ns_y.codes, ns_y.posts)


def diff_subtract(dn2: CodePairs, dn1: CodePairs) -> CodePairs:
    """Difference set of a (k)-itemset from its two (k-1)-generators.

    `dn1` belongs to the prefix ending at the next-to-last item, `dn2` to
    the prefix ending at the last item; the result is dn2 minus dn1 keyed by
    pre-order. Equal pre-orders refer to the same tree node, so the merge
    treats pre-order as the sole key.
    """
    return kernels.pairs_difference(dn2, dn1)


def support_from_diff(parent_support: int, dn: CodePairs) -> int:
    """Support of an itemset from its prefix's support and its difference set.

    A negative result is impossible for difference sets built from one tree
    and signals corruption, so it raises instead of returning.
    """
    support = parent_support - kernels.sum_counts(dn)
    if support < 0:
        raise ValueError(
            f"negative support {support}: difference entries exceed parent support"
        )
    return support
