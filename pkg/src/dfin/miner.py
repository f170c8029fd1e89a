"""Frequent-itemset search over the coded prefix tree.

Two interchangeable itemset representations drive one set-enumeration
search. In ``dfin`` mode (the default) every candidate carries a difference
node set and its support falls out of the parent's support; in ``fin`` mode
candidates carry plain node sets and supports are entry-count sums. Both
modes must produce identical results, and the ``oracle`` mode wraps the
brute-force reference so callers can run all three through one entry point.

The search space is the standard set-enumeration tree: a node's children
extend its itemset by single items ranking strictly above the node's label,
and each child's structure is derived from the node's structure and the
structure of the sibling carrying the new item. Pattern trees are seeded
per frequent pair, grouped by the pair's lower-ranked item.

Pruning uses support equivalence: a candidate item whose extension leaves
the support unchanged never becomes a child. It is remembered instead, and
every itemset in the node's subtree silently also holds with that item
added, so those supersets are emitted directly as subset combinations of
the remembered items along the search path.

A single mine() call is sequential; separate calls over the same database
may run concurrently since all shared inputs are immutable.
"""

import time
from dataclasses import dataclass, field
from itertools import combinations

from .dataset import MiningConfig, TransactionDB, scan_frequent_items
from .diffnodesets import build_2itemset_dn, diff_subtract, support_from_diff
from .nodesets import (
    extract_item_nodesets,
    nodeset_2itemset,
    nodeset_intersect,
    nodeset_support,
)
from .oracle import oracle_mine
from .ppc_tree import construct_ppc_tree

COUNTER_NAMES = (
    "tree_nodes",
    "nodes_visited",
    "candidates_tested",
    "promotions",
    "entries_allocated",
    "itemsets_emitted",
)


@dataclass
class MiningResult:
    """Frequent itemsets keyed by byte-sorted token tuple, plus run metadata."""

    itemsets: dict[tuple[str, ...], int]
    counters: dict[str, int]
    timings: dict[str, float]
    threshold: int
    algo: str
    structure_lens: dict[tuple[str, ...], int] | None = None

    def sorted_itemsets(self) -> list[tuple[tuple[str, ...], int]]:
        """Deterministic output order: itemset length, then token order."""
        return sorted(self.itemsets.items(), key=lambda kv: (len(kv[0]), kv[0]))


@dataclass(slots=True)
class SearchNode:
    """One set-enumeration node: an itemset, its structure, its support."""

    label: str
    itemset: tuple[str, ...]
    structure: object
    support: int
    equivalent_items: tuple[str, ...] = ()
    children: list = field(default_factory=list)


class _MineState:
    __slots__ = ("result", "counters", "threshold", "dfin", "promotion", "lens")

    def __init__(self, threshold, dfin, promotion, collect_lens):
        self.result: dict[tuple[str, ...], int] = {}
        self.counters = dict.fromkeys(COUNTER_NAMES, 0)
        self.threshold = threshold
        self.dfin = dfin
        self.promotion = promotion
        self.lens: dict[tuple[str, ...], int] | None = {} if collect_lens else None

    def emit(self, tokens, support, structure_entries=None):
        key = tuple(sorted(tokens))
        self.result[key] = support
        self.counters["itemsets_emitted"] += 1
        if self.lens is not None and structure_entries is not None:
            self.lens[key] = structure_entries


def expand_promotions(base, base_support, equivalent_path, out):
    """Emit base plus every non-empty subset of the path's equivalent items.

    Support equality with the base is inherited by all such combinations, so
    they all carry base_support. The path items are pairwise distinct and
    never occur in base, which keeps every emitted itemset unique across the
    whole run.
    """
    for size in range(1, len(equivalent_path) + 1):
        for extra in combinations(equivalent_path, size):
            out.emit(base + extra, base_support)


def extend_node(nd, siblings, path_equivalents, state):
    """Grow the enumeration tree under `nd`.

    `siblings` are the later nodes sharing nd's parent; each one contributes
    the second structure of the corresponding child derivation. Candidates
    whose extension keeps nd's support are recorded as equivalent items,
    frequent ones become children, the rest vanish.
    """
    state.counters["nodes_visited"] += 1
    equivalents = []
    for sib in siblings:
        state.counters["candidates_tested"] += 1
        if state.dfin:
            structure = diff_subtract(sib.structure, nd.structure)
            support = support_from_diff(nd.support, structure)
        else:
            structure = nodeset_intersect(nd.structure, sib.structure)
            support = nodeset_support(structure)
        state.counters["entries_allocated"] += len(structure) // 2
        if state.promotion and support == nd.support:
            equivalents.append(sib.label)
            state.counters["promotions"] += 1
        elif support >= state.threshold:
            child = SearchNode(sib.label, nd.itemset + (sib.label,), structure, support)
            state.emit(child.itemset, support, len(structure) // 2)
            nd.children.append(child)
    nd.equivalent_items = tuple(equivalents)
    path_equivalents = path_equivalents + nd.equivalent_items
    if path_equivalents:
        expand_promotions(nd.itemset, nd.support, path_equivalents, state)
    for i, child in enumerate(nd.children):
        extend_node(child, nd.children[i + 1 :], path_equivalents, state)


def mine(
    db: TransactionDB,
    cfg: MiningConfig,
    *,
    promotion: bool = True,
    collect_structure_lens: bool = False,
) -> MiningResult:
    """Find every itemset whose support meets the configured threshold.

    Phases: (1) frequency order plus tree construction, emitting the single
    items; (2) item node-set extraction; (3) the pair sweep and the
    recursive search seeded from the frequent pairs. `promotion=False`
    disables the support-equivalence pruning (same output, more work), and
    `collect_structure_lens=True` records each frequent itemset's structure
    entry count, which the cardinality statistics build on.
    """
    if cfg.algo == "oracle":
        start = time.perf_counter()
        itemsets = oracle_mine(db, cfg)
        elapsed = time.perf_counter() - start
        return MiningResult(
            itemsets=itemsets,
            counters=dict.fromkeys(COUNTER_NAMES, 0),
            timings={"phase1": 0.0, "phase2": 0.0, "phase3": elapsed},
            threshold=cfg.threshold(len(db)),
            algo="oracle",
        )

    dfin = cfg.algo == "dfin"
    threshold = cfg.threshold(len(db))
    state = _MineState(threshold, dfin, promotion, collect_structure_lens)

    start = time.perf_counter()
    order = scan_frequent_items(db, cfg)
    tree = construct_ppc_tree(db, order)
    t_tree = time.perf_counter()
    item_ns = extract_item_nodesets(tree)
    t_extract = time.perf_counter()

    state.counters["tree_nodes"] = tree.node_count
    for tok, support in order.ranked_items:
        state.emit((tok,), support)

    # Pair sweep: for each lower-ranked item x, pair it with every item y
    # above it, walking y upward in rank so the sibling lists that seed the
    # recursion come out already ordered.
    ranked = order.ranked_items
    for ix in range(1, len(ranked)):
        x_tok, x_support = ranked[ix]
        x_ns = item_ns[x_tok]
        pair_nodes = []
        for iy in range(ix - 1, -1, -1):
            y_tok = ranked[iy][0]
            state.counters["candidates_tested"] += 1
            if dfin:
                structure = build_2itemset_dn(x_ns, item_ns[y_tok])
                support = support_from_diff(x_support, structure)
            else:
                structure = nodeset_2itemset(x_ns, item_ns[y_tok])
                support = nodeset_support(structure)
            state.counters["entries_allocated"] += len(structure) // 2
            if support >= threshold:
                node = SearchNode(y_tok, (x_tok, y_tok), structure, support)
                state.emit(node.itemset, support, len(structure) // 2)
                pair_nodes.append(node)
        for i, node in enumerate(pair_nodes):
            extend_node(node, pair_nodes[i + 1 :], (), state)
    t_search = time.perf_counter()

    return MiningResult(
        itemsets=state.result,
        counters=state.counters,
        timings={
            "phase1": t_tree - start,
            "phase2": t_extract - t_tree,
            "phase3": t_search - t_extract,
        },
        threshold=threshold,
        algo=cfg.algo,
        structure_lens=state.lens,
    )
