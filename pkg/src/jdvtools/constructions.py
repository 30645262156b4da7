"""Generators for graphs with many distinct JDV entries.

The half graph on vertices v_1..v_n joins v_i and v_j exactly when
i + j > n (i != j).  Its degree sequence is 1, 2, ..., floor(n/2),
floor(n/2), ..., n-1: every degree a simple graph can show at once,
with only floor(n/2) repeated.  The fraction of JDV positions it makes
nonzero tends to 1/2.

Note on counts: the closed form n^2/4 (even n) and (n^2-1)/4 (odd n)
often quoted for the half graph's nonzero-entry count is only
asymptotically right; direct enumeration gives 3 (not 4) at n = 4 and
7 (not 9) at n = 6, matching n^2/4 - n/2 + 1 for even n.  The limiting
ratio 1/2 is unaffected.  half_graph_support_size therefore counts from
the actual construction instead of trusting a formula.
"""

from __future__ import annotations

from .graph import Graph
from .jdv import jdv_of, support


def half_graph(n: int) -> Graph:
    """Half graph H_n: edges exactly where i + j > n, i != j."""
    if n < 2:
        raise ValueError(f"half graph needs n >= 2, got {n}")
    edges = [
        (i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if i + j > n
    ]
    return Graph.from_edges(n, edges)


def augmented_half_graph(n: int) -> Graph:
    """H_n plus one edge from its degree-1 vertex to a vertex of degree (n-1)/2.

    Defined for odd n >= 7.  The new edge kills the (1, n-1) JDV entry but
    creates entries at (2, (n+1)/2) and ((n+1)/2, (n+1)/2), so the number
    of nonzero entries grows by exactly one.  Of the two degree-(n-1)/2
    vertices the lower-indexed one (v_{(n-1)/2}) is used; the choice is
    symmetric, and fixing it keeps output reproducible.
    """
    if n % 2 == 0 or n < 7:
        raise ValueError(f"augmentation needs odd n >= 7, got {n}")
    base = half_graph(n)
    # v_1 is the unique degree-1 vertex; v_{(n-1)/2} has degree (n-1)/2
    # and is never adjacent to v_1 in H_n since 1 + (n-1)/2 <= n.
    target = (n - 1) // 2
    return Graph.from_edges(n, set(base.edges) | {(1, target)})


def half_graph_support_size(n: int) -> int:
    """Number of nonzero JDV entries of H_n, counted from the construction."""
    return len(support(jdv_of(half_graph(n))))
