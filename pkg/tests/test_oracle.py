import random
from itertools import combinations

import pytest

from conftest import EX1_EXPECTED, random_db
from dfin.dataset import MiningConfig, TransactionDB
from dfin.oracle import MAX_ORACLE_ITEMS, oracle_mine, oracle_support


class TestSupport:
    def test_worked_example(self, ex1_db):
        assert oracle_support(ex1_db, {"c"}) == 5
        assert oracle_support(ex1_db, {"d", "e"}) == 6

    def test_empty_itemset_counts_everything(self, ex1_db):
        assert oracle_support(ex1_db, set()) == 10

    def test_monotone_under_extension(self):
        rng = random.Random(71)
        for _ in range(20):
            db = random_db(rng)
            items = sorted(db.item_universe)
            if len(items) < 2:
                continue
            base = set(rng.sample(items, rng.randint(1, min(3, len(items)))))
            extra = rng.choice(items)
            assert oracle_support(db, base | {extra}) <= oracle_support(db, base)


class TestMine:
    def test_worked_example(self, ex1_db, ex1_cfg):
        assert oracle_mine(ex1_db, ex1_cfg) == EX1_EXPECTED

    def test_empty_db(self):
        db = TransactionDB.from_transactions([])
        assert oracle_mine(db, MiningConfig(minsup_abs=1)) == {}

    def test_power_set_of_one_transaction(self):
        items = ["a", "b", "c", "d"]
        db = TransactionDB.from_transactions([items])
        result = oracle_mine(db, MiningConfig(minsup_abs=1))
        assert len(result) == 2 ** len(items) - 1
        assert all(v == 1 for v in result.values())

    def test_downward_closure(self):
        rng = random.Random(73)
        for _ in range(15):
            db = random_db(rng)
            threshold = rng.randint(1, max(1, len(db) // 2))
            result = oracle_mine(db, MiningConfig(minsup_abs=threshold))
            for itemset in result:
                for size in range(1, len(itemset)):
                    for sub in combinations(itemset, size):
                        assert sub in result

    def test_exhaustive_against_direct_enumeration(self):
        rng = random.Random(79)
        for _ in range(8):
            db = random_db(rng, max_items=12, max_transactions=30)
            threshold = rng.randint(1, max(1, len(db) // 2))
            result = oracle_mine(db, MiningConfig(minsup_abs=threshold))
            frequent_items = [
                t for t in sorted(db.item_universe)
                if oracle_support(db, {t}) >= threshold
            ]
            expected = {}
            for size in range(1, len(frequent_items) + 1):
                for combo in combinations(frequent_items, size):
                    support = oracle_support(db, combo)
                    if support >= threshold:
                        expected[combo] = support
            assert result == expected

    def test_refuses_oversized_lattice(self):
        items = [f"t{i}" for i in range(MAX_ORACLE_ITEMS + 1)]
        db = TransactionDB.from_transactions([items])
        with pytest.raises(ValueError):
            oracle_mine(db, MiningConfig(minsup_abs=1))
