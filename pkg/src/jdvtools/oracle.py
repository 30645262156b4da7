"""Exhaustive ground truth for the maximum number of nonzero JDV entries.

Every labeled graph on n vertices is an edge subset of K_n, encoded as a
bitmask over the C(n, 2) edge slots in lexicographic order.  The scan
walks disjoint bitmask ranges (vectorized per chunk), computes each
graph's distinct edge-degree-pair count, and reduces with (max support,
then minimum bitmask) — an associative reduction, so the result cannot
depend on how the range is partitioned.  Labeled enumeration wastes time
on isomorphic copies but never correctness: the support size is
isomorphism-invariant.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .graph import Graph

DEFAULT_CAP = 7


@dataclass(frozen=True)
class OracleResult:
    n: int
    max_support: int
    witness: Graph
    graphs_scanned: int


def max_support_exhaustive(
    n: int, cap: int = DEFAULT_CAP, chunk_bits: int = 16
) -> OracleResult:
    """Scan all 2^C(n, 2) labeled graphs for the maximum support size.

    The witness is the maximizer with the lowest edge-set bitmask, which
    is independent of chunking.  Refuses n > cap: the scan grows as
    2^C(n, 2) (n = 8 alone would mean 2^28 ~ 2.7e8 graphs).
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if n > cap:
        slots = n * (n - 1) // 2
        raise ValueError(
            f"n = {n} exceeds cap = {cap}: would scan 2^{slots} = {2 ** slots} graphs"
        )
    edge_slots = list(combinations(range(1, n + 1), 2))
    n_slots = len(edge_slots)
    total = 1 << n_slots

    incidence = np.zeros((n_slots, n), dtype=np.int64)
    for e, (u, v) in enumerate(edge_slots):
        incidence[e, u - 1] = 1
        incidence[e, v - 1] = 1
    shifts = np.arange(n_slots, dtype=np.int64)
    endpoint_u = np.array([u - 1 for u, _ in edge_slots])
    endpoint_v = np.array([v - 1 for _, v in edge_slots])
    sentinel = np.int64(1) << 20  # above any packed degree-pair key

    best_support = -1
    best_mask = 0
    chunk = 1 << min(chunk_bits, n_slots)
    for start in range(0, total, chunk):
        masks = np.arange(start, min(start + chunk, total), dtype=np.int64)
        present = ((masks[:, None] >> shifts[None, :]) & 1).astype(bool)
        degrees = present @ incidence
        du = degrees[:, endpoint_u]
        dv = degrees[:, endpoint_v]
        keys = np.minimum(du, dv) * 64 + np.maximum(du, dv)
        keys = np.where(present, keys, sentinel)
        keys.sort(axis=1)
        distinct = (keys[:, 0] != sentinel).astype(np.int64)
        if n_slots > 1:
            fresh = (keys[:, 1:] != keys[:, :-1]) & (keys[:, 1:] != sentinel)
            distinct += fresh.sum(axis=1)
        chunk_best = int(distinct.max())
        if chunk_best > best_support:
            best_support = chunk_best
            best_mask = int(masks[int(np.argmax(distinct))])

    witness_edges = [edge_slots[e] for e in range(n_slots) if (best_mask >> e) & 1]
    return OracleResult(
        n=n,
        max_support=best_support,
        witness=Graph.from_edges(n, witness_edges),
        graphs_scanned=total,
    )
