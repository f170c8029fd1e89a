"""Shared fixtures and brute-force helpers.

The helpers here are deliberately naive (definitional filters, recursive
structure construction) so they stay independent of the merge kernels they
are used to check.
"""

import random
from pathlib import Path

import pytest

from dfin.dataset import MiningConfig, TransactionDB, parse_transactions, scan_frequent_items
from dfin.diffnodesets import build_2itemset_dn, diff_subtract
from dfin.nodesets import extract_item_nodesets, nodeset_2itemset, nodeset_intersect, to_pairs
from dfin.ppc_tree import construct_ppc_tree, is_ancestor

DATA_DIR = Path(__file__).parent / "data"

EX1_TEXT = (DATA_DIR / "ex1.dat").read_text()

# Frequent-item codes at threshold 4, straight from the worked example tree.
EX1_ITEM_TRIPLES = {
    "e": [(5, 11, 8)],
    "d": [(6, 7, 6)],
    "c": [(2, 3, 2), (7, 6, 1), (10, 10, 2)],
    "b": [(3, 2, 1), (8, 5, 1), (11, 9, 2)],
    "a": [(4, 1, 1), (9, 4, 1), (12, 8, 2)],
}

EX1_EXPECTED = {
    ("a",): 4,
    ("b",): 4,
    ("c",): 5,
    ("d",): 6,
    ("e",): 8,
    ("a", "b"): 4,
    ("a", "c"): 4,
    ("b", "c"): 4,
    ("d", "e"): 6,
    ("a", "b", "c"): 4,
}


@pytest.fixture(scope="session")
def ex1_db():
    return parse_transactions(EX1_TEXT)


@pytest.fixture(scope="session")
def ex1_cfg():
    return MiningConfig(minsup=0.4)


@pytest.fixture(scope="session")
def ex1_order(ex1_db, ex1_cfg):
    return scan_frequent_items(ex1_db, ex1_cfg)


@pytest.fixture(scope="session")
def ex1_tree(ex1_db, ex1_order):
    return construct_ppc_tree(ex1_db, ex1_order)


@pytest.fixture(scope="session")
def ex1_nodesets(ex1_tree):
    return extract_item_nodesets(ex1_tree)


def random_db(rng: random.Random, max_items: int = 12, max_transactions: int = 100) -> TransactionDB:
    """Small random database; density varies per draw so both regimes appear."""
    n_items = rng.randint(1, max_items)
    items = [chr(ord("a") + i) for i in range(n_items)]
    n_trans = rng.randint(0, max_transactions)
    density = rng.uniform(0.1, 0.8)
    transactions = []
    for _ in range(n_trans):
        t = [tok for tok in items if rng.random() < density]
        transactions.append(t)  # may be empty; empty transactions are legal
    return TransactionDB.from_transactions(transactions)


def prec_ascending(tokens, order) -> tuple[str, ...]:
    """Itemset as a tuple sorted by ascending frequency rank position."""
    return tuple(sorted(tokens, key=lambda t: -order.rank[t]))


def brute_pair_diff(ns_x, ns_y):
    """Definitional ancestor filter: x-codes with no y-ancestor."""
    xs = ns_x.triples()
    ys = ns_y.triples()
    from dfin.ppc_tree import PPCode

    out = []
    for x in xs:
        if not any(is_ancestor(PPCode(*y), PPCode(*x)) for y in ys):
            out.append((x[0], x[2]))
    return out


def brute_pair_nodeset(ns_x, ns_y):
    """Definitional ancestor filter: x-codes having some y-ancestor."""
    from dfin.ppc_tree import PPCode

    out = []
    for x in ns_x.triples():
        if any(is_ancestor(PPCode(*y), PPCode(*x)) for y in ns_y.triples()):
            out.append((x[0], x[2]))
    return out


class StructureOracle:
    """Recursive, memoized construction of both structures for any itemset.

    Itemsets are given as token iterables; internally they are normalized to
    ascending-rank-position order so the generating prefixes line up with
    the search's extension order.
    """

    def __init__(self, db, cfg):
        self.order = scan_frequent_items(db, cfg)
        self.tree = construct_ppc_tree(db, self.order)
        self.item_ns = extract_item_nodesets(self.tree)
        self._ns_cache = {}
        self._dn_cache = {}

    def key(self, tokens):
        return prec_ascending(tokens, self.order)

    def nodeset(self, tokens):
        """Reduced (pre, count) pairs of the itemset's node set."""
        key = self.key(tokens)
        if len(key) == 1:
            ns = self.item_ns[key[0]]
            return to_pairs(ns.codes)
        if key not in self._ns_cache:
            if len(key) == 2:
                pairs = nodeset_2itemset(self.item_ns[key[0]], self.item_ns[key[1]])
            else:
                first = self.nodeset_array(key[:-1])
                second = self.nodeset_array(key[:-2] + (key[-1],))
                pairs = nodeset_intersect(first, second)
            self._ns_cache[key] = pairs
        return to_pairs(self._ns_cache[key])

    def nodeset_array(self, key):
        self.nodeset(key)
        return self._ns_cache[key]

    def diffnodeset(self, tokens):
        """Reduced (pre, count) pairs of the itemset's difference set."""
        key = self.key(tokens)
        assert len(key) >= 2
        if key not in self._dn_cache:
            if len(key) == 2:
                pairs = build_2itemset_dn(self.item_ns[key[0]], self.item_ns[key[1]])
            else:
                dn1 = self.diffnodeset_array(key[:-1])
                dn2 = self.diffnodeset_array(key[:-2] + (key[-1],))
                pairs = diff_subtract(dn2, dn1)
            self._dn_cache[key] = pairs
        return to_pairs(self._dn_cache[key])

    def diffnodeset_array(self, key):
        self.diffnodeset(key)
        return self._dn_cache[key]
