"""Cardinality comparison of the two itemset representations.

Runs both structure pipelines (difference sets and plain node sets) over
every frequent itemset of length >= 2 and averages their entry counts. The
reduction ratio, node-set mean over difference-set mean, is what makes the
difference representation pay off on dense data. Pruning is disabled for
the measurement so each frequent itemset materializes exactly one structure
per pipeline.
"""

from dataclasses import dataclass, replace
from typing import NamedTuple

from .dataset import MiningConfig, TransactionDB
from .miner import mine


class LengthBucket(NamedTuple):
    avg_diffnodeset_len: float
    avg_nodeset_len: float
    count: int


@dataclass(frozen=True)
class StatsReport:
    threshold: int
    itemset_count: int
    avg_diffnodeset_len: float
    avg_nodeset_len: float
    reduction_ratio: float | None
    per_length: dict[int, LengthBucket]


def compute_stats(db: TransactionDB, cfg: MiningConfig) -> StatsReport:
    """Average structure sizes over all frequent itemsets of length >= 2.

    The ratio is None when undefined: either no itemset qualifies or every
    difference set is empty (an infinite reduction).
    """
    dn_res = mine(db, replace(cfg, algo="dfin"), promotion=False, collect_structure_lens=True)
    ns_res = mine(db, replace(cfg, algo="fin"), promotion=False, collect_structure_lens=True)
    dn_lens = dn_res.structure_lens or {}
    ns_lens = ns_res.structure_lens or {}
    if set(dn_lens) != set(ns_lens):
        raise RuntimeError("structure pipelines disagree on the frequent itemsets")

    total = len(dn_lens)
    buckets: dict[int, list[list[int]]] = {}
    dn_total = ns_total = 0
    for key, dn_len in dn_lens.items():
        ns_len = ns_lens[key]
        dn_total += dn_len
        ns_total += ns_len
        acc = buckets.setdefault(len(key), [0, 0, 0])
        acc[0] += dn_len
        acc[1] += ns_len
        acc[2] += 1

    avg_dn = dn_total / total if total else 0.0
    avg_ns = ns_total / total if total else 0.0
    ratio = avg_ns / avg_dn if total and avg_dn > 0 else None
    per_length = {
        k: LengthBucket(acc[0] / acc[2], acc[1] / acc[2], acc[2])
        for k, acc in sorted(buckets.items())
    }
    return StatsReport(
        threshold=dn_res.threshold,
        itemset_count=total,
        avg_diffnodeset_len=avg_dn,
        avg_nodeset_len=avg_ns,
        reduction_ratio=ratio,
        per_length=per_length,
    )
