"""Prefix tree over frequency-ordered transactions with node codes.

Each transaction is filtered to its frequent items, sorted most-frequent
first, and inserted into a shared prefix tree. A single traversal then
stamps every node with its pre-order and post-order visit numbers (both
starting at 1, root included, children visited in creation order). The
pair (pre, post) is all later stages need: node A is an ancestor of node B
exactly when A.pre < B.pre and A.post > B.post.

The tree is never mutated after numbering and may be read from any thread.
"""

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .dataset import ItemOrder, TransactionDB, filter_and_sort


class PPCode(NamedTuple):
    """(pre-order, post-order, count) triple identifying one tree node."""

    pre: int
    post: int
    count: int


class PPCNode:
    __slots__ = ("item", "count", "children", "pre", "post")

    def __init__(self, item: str | None, count: int = 0):
        self.item = item
        self.count = count
        self.children: list[PPCNode] = []
        self.pre = 0
        self.post = 0

    def code(self) -> PPCode:
        return PPCode(self.pre, self.post, self.count)

    def __repr__(self):
        return f"PPCNode({self.item!r}, pre={self.pre}, post={self.post}, count={self.count})"


@dataclass(frozen=True)
class PPCTree:
    root: PPCNode
    node_count: int


def construct_ppc_tree(db: TransactionDB, order: ItemOrder) -> PPCTree:
    """Insert every transaction, then number the nodes in one traversal.

    Insertion reuses a child registering the same item (incrementing its
    count) and creates a count-1 child otherwise. Transactions left empty by
    the infrequent-item filter contribute nothing to the tree but still count
    toward the database size. Children are located by linear scan; fan-out is
    bounded by the frequent-item count.
    """
    root = PPCNode(None)
    for transaction in db.transactions:
        node = root
        for tok in filter_and_sort(transaction, order):
            for child in node.children:
                if child.item == tok:
                    child.count += 1
                    node = child
                    break
            else:
                child = PPCNode(tok, 1)
                node.children.append(child)
                node = child

    pre_counter = 1
    post_counter = 0
    root.pre = pre_counter
    stack = [(root, iter(root.children))]
    while stack:
        node, children = stack[-1]
        child = next(children, None)
        if child is None:
            post_counter += 1
            node.post = post_counter
            stack.pop()
        else:
            pre_counter += 1
            child.pre = pre_counter
            stack.append((child, iter(child.children)))
    return PPCTree(root, pre_counter)


def is_ancestor(a, b) -> bool:
    """True iff the node coded `a` is a proper ancestor of the node coded `b`.

    Comparing a code with itself returns False (a node is not its own
    ancestor).
    """
    return a.pre < b.pre and a.post > b.post


def iter_nodes(tree: PPCTree) -> Iterator[PPCNode]:
    """Yield all nodes (root included) in pre-order."""
    stack = [tree.root]
    while stack:
        node = stack.pop()
        yield node
        for child in reversed(node.children):
            stack.append(child)


def dump_tree(tree: PPCTree) -> str:
    """Debug rendering: one pre-order line per node, "indent item pre:post:count"."""
    lines = []
    stack = [(tree.root, 0)]
    while stack:
        node, depth = stack.pop()
        label = node.item if node.item is not None else "null"
        lines.append(f"{'  ' * depth}{label} {node.pre}:{node.post}:{node.count}")
        for child in reversed(node.children):
            stack.append((child, depth + 1))
    return "\n".join(lines) + "\n"
