"""Transaction databases: parsing, synthesis, and the frequency order.

The input format is plain text, one transaction per line, item tokens
separated by whitespace. Tokens are opaque strings; a transaction is a
duplicate-free set of them. Everything downstream (tree construction, the
mining search) is driven by the support-descending item order computed here.

All types in this module are immutable once built and safe to share across
threads.
"""

import math
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

Transaction = frozenset[str]

ALGORITHMS = ("dfin", "fin", "oracle")


@dataclass(frozen=True)
class TransactionDB:
    transactions: tuple[Transaction, ...]
    item_universe: frozenset[str]

    @classmethod
    def from_transactions(cls, transactions: Iterable[Iterable[str]]) -> "TransactionDB":
        txs = tuple(frozenset(t) for t in transactions)
        universe = frozenset().union(*txs) if txs else frozenset()
        return cls(txs, universe)

    def __len__(self) -> int:
        return len(self.transactions)


@dataclass(frozen=True)
class ItemOrder:
    """Frequent items ranked by support; rank 0 is the most frequent item.

    Ties in support are broken by token byte-descending, so the order is a
    total one and every run of the pipeline sees the same tree.
    """

    ranked_items: tuple[tuple[str, int], ...]
    rank: dict[str, int]


@dataclass(frozen=True)
class MiningConfig:
    """Threshold (relative fraction or absolute count) plus algorithm choice."""

    minsup: float | None = None
    minsup_abs: int | None = None
    algo: str = "dfin"

    def __post_init__(self):
        if (self.minsup is None) == (self.minsup_abs is None):
            raise ValueError("exactly one of minsup and minsup_abs is required")
        if self.minsup is not None and not 0.0 <= self.minsup <= 1.0:
            raise ValueError(f"relative minsup must be in [0, 1], got {self.minsup}")
        if self.minsup_abs is not None and self.minsup_abs < 0:
            raise ValueError(f"absolute minsup must be >= 0, got {self.minsup_abs}")
        if self.algo not in ALGORITHMS:
            raise ValueError(f"algo must be one of {ALGORITHMS}, got {self.algo!r}")

    def threshold(self, db_size: int) -> int:
        """Smallest support count that still qualifies as frequent.

        For a relative threshold this is ceil(minsup * db_size), computed on
        the printed decimal rather than the binary float so that e.g.
        0.07 * 100 lands on 7 and not on ceil(7.000000000000001) = 8.
        """
        if self.minsup_abs is not None:
            return self.minsup_abs
        return math.ceil(Fraction(str(self.minsup)) * db_size)


@dataclass(frozen=True)
class GenConfig:
    num_transactions: int
    num_items: int
    avg_len: float
    num_patterns: int = 5
    seed: int = 0

    def __post_init__(self):
        if self.num_transactions < 0 or self.num_items < 0 or self.num_patterns < 0:
            raise ValueError("counts must be >= 0")
        if self.avg_len < 0:
            raise ValueError("avg_len must be >= 0")
        if self.avg_len > self.num_items:
            raise ValueError(
                f"avg_len {self.avg_len} exceeds the {self.num_items}-item universe"
            )


def parse_transactions(text: str | bytes) -> TransactionDB:
    """Parse whitespace-separated transaction lines.

    Blank lines are ignored, duplicate tokens within a line collapse to one,
    and tokens without a single printable character are dropped.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    transactions = []
    for line in text.splitlines():
        tokens = [t for t in line.split() if any(ch.isprintable() for ch in t)]
        if tokens:
            transactions.append(frozenset(tokens))
    return TransactionDB.from_transactions(transactions)


def load_transactions(path) -> TransactionDB:
    with open(path, "rb") as fh:
        return parse_transactions(fh.read())


def serialize_transactions(db: TransactionDB) -> str:
    """Render a database back to the line format, tokens sorted per line."""
    return "".join(" ".join(sorted(t)) + "\n" for t in db.transactions)


def scan_frequent_items(db: TransactionDB, cfg: MiningConfig) -> ItemOrder:
    """Single pass over the database: census, filter, order.

    Sorting is done in two stable passes so equal-support items end up in
    byte-descending token order.
    """
    threshold = cfg.threshold(len(db))
    census = Counter()
    for t in db.transactions:
        census.update(t)
    survivors = [tok for tok, n in census.items() if n >= threshold]
    survivors.sort(reverse=True)
    survivors.sort(key=census.__getitem__, reverse=True)
    ranked = tuple((tok, census[tok]) for tok in survivors)
    return ItemOrder(ranked, {tok: i for i, (tok, _) in enumerate(ranked)})


def filter_and_sort(transaction: Iterable[str], order: ItemOrder) -> list[str]:
    """Drop infrequent tokens and sort survivors most-frequent-first."""
    rank = order.rank
    return sorted((tok for tok in transaction if tok in rank), key=rank.__getitem__)


def generate_synthetic(cfg: GenConfig) -> TransactionDB:
    """Draw a random database as a mixture of seeded patterns plus noise.

    Deterministic for a fixed config. Transaction lengths follow a rounded
    normal around avg_len (clamped to the universe), so the empirical mean
    length converges to avg_len. Half of the transactions embed one of the
    seeded patterns, which is what makes frequent itemsets of length > 1
    appear at realistic thresholds.
    """
    rng = random.Random(cfg.seed)
    items = [f"i{n}" for n in range(cfg.num_items)]
    min_len = 1 if cfg.avg_len >= 1 else 0
    sigma = math.sqrt(cfg.avg_len) if cfg.avg_len > 0 else 0.0

    patterns = []
    if cfg.num_items > 0:
        for _ in range(cfg.num_patterns):
            size = round(rng.normalvariate(max(2.0, cfg.avg_len / 2), 1.0))
            size = max(1, min(cfg.num_items, size))
            patterns.append(rng.sample(items, size))

    transactions = []
    for _ in range(cfg.num_transactions):
        length = round(rng.normalvariate(cfg.avg_len, sigma))
        length = max(min_len, min(cfg.num_items, length))
        chosen: set[str] = set()
        if patterns and length > 0 and rng.random() < 0.5:
            pattern = rng.choice(patterns)
            if len(pattern) > length:
                pattern = rng.sample(pattern, length)
            chosen.update(pattern)
        while len(chosen) < length:
            chosen.add(items[rng.randrange(cfg.num_items)])
        transactions.append(chosen)
    return TransactionDB.from_transactions(transactions)
