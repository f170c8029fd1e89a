"""Frequent itemset mining over a pre/post-order coded prefix tree.

The package mines all frequent itemsets from a transaction database. Its
default pipeline represents candidate itemsets as difference sets of tree
node codes, an alternative pipeline uses plain node sets, and a brute-force
oracle provides independent ground truth. Hot merge kernels run compiled
when the extension is available (see `dfin.kernels.BACKEND`).
"""

from .dataset import (
    ALGORITHMS,
    GenConfig,
    ItemOrder,
    MiningConfig,
    Transaction,
    TransactionDB,
    filter_and_sort,
    generate_synthetic,
    load_transactions,
    parse_transactions,
    scan_frequent_items,
    serialize_transactions,
)
from .diffnodesets import (
    build_2itemset_dn,
    build_2itemset_dn_counted,
    diff_subtract,
    support_from_diff,
)
from .kernels import BACKEND
from .miner import MiningResult, SearchNode, mine
from .nodesets import (
    ItemNodeset,
    extract_item_nodesets,
    from_pairs,
    nodeset_2itemset,
    nodeset_intersect,
    nodeset_support,
    to_pairs,
)
from .oracle import oracle_mine, oracle_support
from .ppc_tree import PPCNode, PPCode, PPCTree, construct_ppc_tree, dump_tree, is_ancestor
from .stats import StatsReport, compute_stats

__version__ = "0.1.0"

__all__ = [
    "ALGORITHMS",
    "BACKEND",
    "GenConfig",
    "ItemNodeset",
    "ItemOrder",
    "MiningConfig",
    "MiningResult",
    "PPCNode",
    "PPCTree",
    "PPCode",
    "SearchNode",
    "StatsReport",
    "Transaction",
    "TransactionDB",
    "build_2itemset_dn",
    "build_2itemset_dn_counted",
    "compute_stats",
    "construct_ppc_tree",
    "diff_subtract",
    "dump_tree",
    "extract_item_nodesets",
    "filter_and_sort",
    "from_pairs",
    "generate_synthetic",
    "is_ancestor",
    "load_transactions",
    "mine",
    "nodeset_2itemset",
    "nodeset_intersect",
    "nodeset_support",
    "oracle_mine",
    "oracle_support",
    "parse_transactions",
    "scan_frequent_items",
    "serialize_transactions",
    "support_from_diff",
    "to_pairs",
    "__version__",
]
