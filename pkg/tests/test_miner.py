import random

from conftest import EX1_EXPECTED, random_db
from dfin.dataset import MiningConfig, TransactionDB
from dfin.miner import mine
from dfin.oracle import oracle_mine


class TestWorkedExample:
    def test_dfin(self, ex1_db, ex1_cfg):
        result = mine(ex1_db, ex1_cfg)
        assert result.itemsets == EX1_EXPECTED
        assert result.threshold == 4

    def test_fin(self, ex1_db):
        result = mine(ex1_db, MiningConfig(minsup=0.4, algo="fin"))
        assert result.itemsets == EX1_EXPECTED

    def test_oracle_mode_wraps_reference(self, ex1_db):
        result = mine(ex1_db, MiningConfig(minsup=0.4, algo="oracle"))
        assert result.itemsets == EX1_EXPECTED
        assert result.algo == "oracle"

    def test_promotion_found_abc(self, ex1_db, ex1_cfg):
        result = mine(ex1_db, ex1_cfg)
        assert result.counters["promotions"] == 1
        assert result.itemsets[("a", "b", "c")] == 4

    def test_sorted_output_order(self, ex1_db, ex1_cfg):
        ordered = [k for k, _ in mine(ex1_db, ex1_cfg).sorted_itemsets()]
        assert ordered == sorted(ordered, key=lambda k: (len(k), k))


class TestEdgeCases:
    def test_empty_db(self):
        db = TransactionDB.from_transactions([])
        assert mine(db, MiningConfig(minsup_abs=1)).itemsets == {}

    def test_threshold_above_db_size(self, ex1_db):
        assert mine(ex1_db, MiningConfig(minsup_abs=11)).itemsets == {}
        assert mine(ex1_db, MiningConfig(minsup=1.0)).itemsets == {}

    def test_single_transaction_pair(self):
        db = TransactionDB.from_transactions([{"a", "b"}])
        result = mine(db, MiningConfig(minsup_abs=1))
        assert result.itemsets == {("a",): 1, ("b",): 1, ("a", "b"): 1}

    def test_no_duplicate_emissions(self, ex1_db, ex1_cfg):
        result = mine(ex1_db, ex1_cfg)
        assert result.counters["itemsets_emitted"] == len(result.itemsets)


class TestEquivalences:
    def test_dfin_fin_oracle_agree(self):
        rng = random.Random(83)
        for _ in range(60):
            db = random_db(rng)
            threshold = rng.randint(1, max(1, len(db) // 2))
            dfin = mine(db, MiningConfig(minsup_abs=threshold, algo="dfin"))
            fin = mine(db, MiningConfig(minsup_abs=threshold, algo="fin"))
            expected = oracle_mine(db, MiningConfig(minsup_abs=threshold))
            assert dfin.itemsets == expected
            assert fin.itemsets == expected
            assert dfin.counters["itemsets_emitted"] == len(dfin.itemsets)
            assert fin.counters["itemsets_emitted"] == len(fin.itemsets)

    def test_promotion_off_same_output_more_nodes(self):
        rng = random.Random(89)
        for _ in range(30):
            db = random_db(rng)
            threshold = rng.randint(1, max(1, len(db) // 2))
            cfg = MiningConfig(minsup_abs=threshold)
            pruned = mine(db, cfg)
            unpruned = mine(db, cfg, promotion=False)
            assert pruned.itemsets == unpruned.itemsets
            assert unpruned.counters["promotions"] == 0
            assert pruned.counters["nodes_visited"] <= unpruned.counters["nodes_visited"]

    def test_threshold_monotonicity(self):
        rng = random.Random(97)
        for _ in range(15):
            db = random_db(rng)
            t1 = rng.randint(1, 5)
            t2 = t1 + rng.randint(1, 5)
            low = mine(db, MiningConfig(minsup_abs=t1)).itemsets
            high = mine(db, MiningConfig(minsup_abs=t2)).itemsets
            assert set(high) <= set(low)
            for k, v in high.items():
                assert low[k] == v


class TestDeepPromotions:
    def test_multiple_equivalents_expand(self):
        # Five transactions all holding {x, p, q}; x alone appears twice more,
        # so p and q are path equivalents of every x-extension.
        rows = [["x", "p", "q"]] * 5 + [["x"], ["x"]]
        db = TransactionDB.from_transactions(rows)
        result = mine(db, MiningConfig(minsup_abs=5))
        assert result.itemsets == {
            ("x",): 7,
            ("p",): 5,
            ("q",): 5,
            ("p", "x"): 5,
            ("q", "x"): 5,
            ("p", "q"): 5,
            ("p", "q", "x"): 5,
        }

    def test_structure_lens_cover_long_itemsets(self, ex1_db, ex1_cfg):
        result = mine(ex1_db, ex1_cfg, promotion=False, collect_structure_lens=True)
        lens = result.structure_lens
        assert set(lens) == {k for k in EX1_EXPECTED if len(k) >= 2}
        assert lens[("a", "b", "c")] == 0

    def test_fin_structure_lens(self, ex1_db):
        cfg = MiningConfig(minsup=0.4, algo="fin")
        result = mine(ex1_db, cfg, promotion=False, collect_structure_lens=True)
        assert result.structure_lens[("a", "b", "c")] == 3
        assert result.structure_lens[("d", "e")] == 1
