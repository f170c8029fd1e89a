"""Node-set representation of itemsets and its merge algebra.

An itemset's node set is the pre-order-sorted sequence of tree-node codes
covering it. For a single item that is every node registering the item,
kept as full (pre, post, count) triples because the pair builders compare
post-orders; for itemsets of length >= 2 the post-order is dropped and a
bare interleaved (pre, count) array remains.

Carriers are flat ``array('q')`` buffers so the same values flow into either
kernel backend unchanged. All values are immutable by convention once
extracted and every operation here is pure.
"""

from array import array
from dataclasses import dataclass, field
from typing import Iterable

from . import kernels
from .ppc_tree import PPCTree

CodePairs = array


@dataclass(frozen=True)
class ItemNodeset:
    """All tree nodes registering one item: (pre, count) pairs + aligned posts."""

    codes: array = field(default_factory=lambda: array("q"))
    posts: array = field(default_factory=lambda: array("q"))

    @classmethod
    def from_triples(cls, triples: Iterable[tuple[int, int, int]]) -> "ItemNodeset":
        ns = cls()
        for pre, post, count in triples:
            ns.codes.append(pre)
            ns.codes.append(count)
            ns.posts.append(post)
        return ns

    def triples(self) -> list[tuple[int, int, int]]:
        return [
            (self.codes[2 * i], self.posts[i], self.codes[2 * i + 1])
            for i in range(len(self.posts))
        ]

    def __len__(self) -> int:
        return len(self.posts)


def to_pairs(pairs: CodePairs) -> list[tuple[int, int]]:
    """Interleaved (pre, count) array as a list of tuples."""
    return [(pairs[2 * i], pairs[2 * i + 1]) for i in range(len(pairs) // 2)]


def from_pairs(entries: Iterable[tuple[int, int]]) -> CodePairs:
    out = array("q")
    for pre, count in entries:
        out.append(pre)
        out.append(count)
    return out


def extract_item_nodesets(tree: PPCTree) -> dict[str, ItemNodeset]:
    """Collect every non-root node's code under its item, in pre-order.

    Traversal order makes each item's entries ascend in pre-order, and the
    shared-item monotonicity of the tree codes makes them ascend in
    post-order as well.
    """
    out: dict[str, ItemNodeset] = {}
    stack = list(reversed(tree.root.children))
    while stack:
        node = stack.pop()
        ns = out.get(node.item)
        if ns is None:
            ns = ItemNodeset()
            out[node.item] = ns
        ns.codes.append(node.pre)
        ns.codes.append(node.count)
        ns.posts.append(node.post)
        for child in reversed(node.children):
            stack.append(child)
    return out


def nodeset_2itemset(ns1: ItemNodeset, ns2: ItemNodeset) -> CodePairs:
    """Node set of the pair (first, second): first-item nodes that sit below
    some second-item node. The first item must rank below the second."""
    return kernels.build_pair_nodeset(ns1.codes, ns1.posts, ns2.codes, ns2.posts)


def nodeset_intersect(ns_a: CodePairs, ns_b: CodePairs) -> CodePairs:
    """Intersection by pre-order of two reduced node sets from one tree."""
    return kernels.pairs_intersect(ns_a, ns_b)


def nodeset_support(ns) -> int:
    """Sum of entry counts; accepts an ItemNodeset or a reduced pair array."""
    if isinstance(ns, ItemNodeset):
        return kernels.sum_counts(ns.codes)
    return kernels.sum_counts(ns)
