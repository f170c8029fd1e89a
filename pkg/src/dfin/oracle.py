"""Brute-force reference miner.

Level-wise candidate generation with full-scan counting, sharing no code or
data structures with the tree pipelines. Its only job is to be obviously
correct, so every identity and end-to-end test can be checked against it.
Pure functions throughout; guarded to desk scale.
"""

from collections import Counter

from .dataset import MiningConfig, TransactionDB

MAX_ORACLE_ITEMS = 24


def oracle_support(db: TransactionDB, itemset) -> int:
    """Exact containment count of `itemset` over the whole database."""
    wanted = frozenset(itemset)
    return sum(1 for t in db.transactions if wanted <= t)


def oracle_mine(db: TransactionDB, cfg: MiningConfig) -> dict[tuple[str, ...], int]:
    """All frequent itemsets with exact supports, keyed by sorted token tuple.

    Candidates for level k+1 join level-k survivors sharing a (k-1)-prefix
    and are pruned unless every k-subset survived; supports come from a full
    scan per level. Refuses databases with more than MAX_ORACLE_ITEMS
    frequent items to keep the lattice bounded.
    """
    threshold = cfg.threshold(len(db))
    census = Counter(tok for t in db.transactions for tok in t)
    frequent = sorted(tok for tok, n in census.items() if n >= threshold)
    if len(frequent) > MAX_ORACLE_ITEMS:
        raise ValueError(
            f"{len(frequent)} frequent items exceed the oracle's "
            f"{MAX_ORACLE_ITEMS}-item limit"
        )

    result: dict[tuple[str, ...], int] = {}
    level = []
    for tok in frequent:
        result[(tok,)] = census[tok]
        level.append((tok,))

    while level:
        survivors = set(level)
        candidates = []
        for i in range(len(level)):
            for j in range(i + 1, len(level)):
                a, b = level[i], level[j]
                if a[:-1] != b[:-1]:
                    break
                cand = a + (b[-1],)
                if all(
                    cand[:m] + cand[m + 1 :] in survivors for m in range(len(cand))
                ):
                    candidates.append(cand)
        counts = dict.fromkeys(candidates, 0)
        sets = [(cand, frozenset(cand)) for cand in candidates]
        for t in db.transactions:
            for cand, items in sets:
                if items <= t:
                    counts[cand] += 1
        level = sorted(c for c in candidates if counts[c] >= threshold)
        for c in level:
            result[c] = counts[c]
    return result
