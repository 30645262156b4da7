"""Simple undirected labeled graphs and their degree-class profiles.

Vertices are 1-indexed (1..n).  Edges are unordered pairs stored
order-normalized as (u, v) with u < v; construction rejects self-loops
and collapses duplicates.  Graphs are immutable after construction and
safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices 1..n with a normalized edge set."""

    n: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"vertex count must be positive, got {self.n}")
        for u, v in self.edges:
            if not (1 <= u < v <= self.n):
                raise ValueError(f"edge ({u}, {v}) invalid for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from an edge iterable, normalizing orientation.

        Duplicate edges collapse (set semantics); self-loops raise ValueError.
        """
        normalized: set[Edge] = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            normalized.add((u, v) if u < v else (v, u))
        return cls(n, frozenset(normalized))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        """Per-vertex degrees; index 0 is unused padding (vertices are 1-indexed)."""
        deg = [0] * (self.n + 1)
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg


@dataclass(frozen=True)
class DegreeProfile:
    """Degree-class census of a graph.

    class_sizes maps each occurring positive degree i to the number of
    vertices of degree i (absent degrees are not stored); n0 counts
    isolated vertices.  A degree is a "single" if exactly one vertex has
    it and a "multiple" if at least two do; m counts distinct positive
    degrees, so m = |singles| + |multiples|.
    """

    n: int
    class_sizes: dict[int, int]
    n0: int
    m: int
    singles: frozenset[int]
    multiples: frozenset[int]

    @property
    def s(self) -> int:
        """Number of single degrees."""
        return len(self.singles)


def degree_profile(g: Graph) -> DegreeProfile:
    """Count vertices per degree class and partition degrees into singles/multiples."""
    deg = g.degrees()
    class_sizes: dict[int, int] = {}
    n0 = 0
    for v in range(1, g.n + 1):
        d = deg[v]
        if d == 0:
            n0 += 1
        else:
            class_sizes[d] = class_sizes.get(d, 0) + 1
    singles = frozenset(d for d, c in class_sizes.items() if c == 1)
    multiples = frozenset(d for d, c in class_sizes.items() if c >= 2)
    return DegreeProfile(
        n=g.n,
        class_sizes=class_sizes,
        n0=n0,
        m=len(class_sizes),
        singles=singles,
        multiples=multiples,
    )


def parse_edge_list(text: str) -> Graph:
    """Parse the plain-text graph format.

    First meaningful line is a header ``n <integer>``; every following
    line is one edge ``u v`` (1-indexed).  Blank lines and lines starting
    with '#' are ignored.
    """
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 2 or tokens[0] != "n":
                raise ValueError(
                    f"line {lineno}: expected header 'n <integer>', got {line!r}"
                )
            try:
                n = int(tokens[1])
            except ValueError:
                raise ValueError(
                    f"line {lineno}: vertex count {tokens[1]!r} is not an integer"
                ) from None
            continue
        if len(tokens) != 2:
            raise ValueError(f"line {lineno}: expected edge 'u v', got {line!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer vertex in {line!r}") from None
        edges.append((u, v))
    if n is None:
        raise ValueError("missing header line 'n <integer>'")
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    """Serialize a graph in the edge-list format (edges sorted, one per line)."""
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"
