"""Joint degree vectors and their graphicality characterization.

The joint degree vector (JDV) of a graph on n vertices is the sparse
triangular vector indexed by degree pairs (i, k), 1 <= i <= k <= n-1,
whose (i, k) entry counts edges joining a vertex of degree i to a vertex
of degree k.  Conceptually the vector has C(n, 2) positions; only
positive entries are stored.

An integer vector m is realizable as the JDV of some simple graph
("graphical") iff

  (i)   every class size n_i := (sum_{k<=i} m_{ki} + sum_{k>=i} m_{ik}) / i
        is an integer (the diagonal entry m_{ii} contributes twice),
  (ii)  m_{ii} <= C(n_i, 2) for every i, and
  (iii) m_{ik} <= n_i * n_k for every i < k.

As stated, the characterization never compares sum_i n_i with n; the
optional strict vertex budget adds that comparison for "JDV of an
n-vertex graph" semantics.

Degree-0 vertices occupy no JDV position, so the isolated-vertex count
must travel alongside the vector when it matters; the degree-weighted
edge sum computed here equals n minus that count, exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator, Mapping

from .graph import Graph

Position = tuple[int, int]


@dataclass(frozen=True)
class Jdv:
    """Sparse triangular edge-count vector plus its vertex count n."""

    n: int
    entries: dict[Position, int]

    @classmethod
    def from_entries(cls, n: int, entries: Mapping[Position, int]) -> "Jdv":
        """Validating constructor: checks index range, drops zero counts."""
        if n < 1:
            raise ValueError(f"vertex count must be positive, got {n}")
        cleaned: dict[Position, int] = {}
        for (i, k), count in entries.items():
            _check_position(n, i, k)
            if not isinstance(count, int) or count < 0:
                raise ValueError(f"entry ({i}, {k}) has invalid count {count!r}")
            if count > 0:
                cleaned[(i, k)] = count
        return cls(n, cleaned)

    @property
    def total_edges(self) -> int:
        return sum(self.entries.values())


@dataclass(frozen=True)
class SupportSet:
    """Positions of the nonzero JDV entries."""

    pairs: frozenset[Position]

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[Position]:
        return iter(self.pairs)

    def __contains__(self, pos: object) -> bool:
        return pos in self.pairs


class ViolationKind(Enum):
    NON_INTEGER_CLASS = "non_integer_class"
    DIAGONAL_OVERFLOW = "diagonal_overflow"
    OFF_DIAGONAL_OVERFLOW = "off_diagonal_overflow"
    VERTEX_BUDGET_EXCEEDED = "vertex_budget_exceeded"


@dataclass(frozen=True)
class Violation:
    """First failed graphicality condition, with the offending indices."""

    kind: ViolationKind
    i: int | None = None
    k: int | None = None
    detail: str = ""


@dataclass(frozen=True)
class GraphicalityVerdict:
    graphical: bool
    class_sizes: dict[int, int]
    first_violation: Violation | None


def _check_position(n: int, i: int, k: int) -> None:
    if not (1 <= i <= k <= n - 1):
        raise ValueError(f"position ({i}, {k}) outside 1 <= i <= k <= {n - 1}")


def jdv_of(g: Graph) -> Jdv:
    """Compute the JDV: bump the entry at the sorted degree pair of each edge."""
    deg = g.degrees()
    entries: dict[Position, int] = {}
    for u, v in g.edges:
        du, dv = deg[u], deg[v]
        pos = (du, dv) if du <= dv else (dv, du)
        entries[pos] = entries.get(pos, 0) + 1
    return Jdv(g.n, entries)


def support(j: Jdv) -> SupportSet:
    """Positions of positive entries (zero counts are never stored)."""
    return SupportSet(frozenset(j.entries))


def weighted_degree_sum(j: Jdv) -> Fraction:
    """Exact value of sum over entries of (i + k)/(i * k) * count.

    For the JDV of a graph this equals n minus the number of isolated
    vertices, with no rounding: each edge contributes 1/d(u) + 1/d(v),
    and the contributions of a degree-i vertex total exactly 1.
    """
    total = Fraction(0)
    for (i, k), count in j.entries.items():
        total += Fraction(i + k, i * k) * count
    return total


def check_graphical(j: Jdv, strict_vertex_budget: bool = False) -> GraphicalityVerdict:
    """Decide whether a triangular integer vector is a graphical JDV.

    Scans condition (i) over class indices in ascending order, then
    conditions (ii)/(iii) over positions in lexicographic (i, k) order,
    reporting the first violated condition.  With strict_vertex_budget
    the reconstructed classes must also fit the declared vertex count
    (sum_i n_i <= n), which the characterization itself never requires.

    Raises ValueError for malformed input (index out of range, negative
    or non-integer count).
    """
    n = j.n
    row_sums: dict[int, int] = {}
    for (i, k), count in j.entries.items():
        _check_position(n, i, k)
        if not isinstance(count, int) or count < 0:
            raise ValueError(f"entry ({i}, {k}) has invalid count {count!r}")
        # the diagonal entry lands on the same class twice, as required
        row_sums[i] = row_sums.get(i, 0) + count
        row_sums[k] = row_sums.get(k, 0) + count

    class_sizes: dict[int, int] = {}
    violation: Violation | None = None
    for i in sorted(row_sums):
        total = row_sums[i]
        if total % i != 0:
            violation = Violation(
                ViolationKind.NON_INTEGER_CLASS,
                i=i,
                detail=f"class size {total}/{i} is not an integer",
            )
            break
        size = total // i
        if size > 0:
            class_sizes[i] = size

    if violation is None:
        for i, k in sorted(j.entries):
            count = j.entries[i, k]
            if count == 0:
                continue
            if i == k:
                ni = class_sizes.get(i, 0)
                cap = ni * (ni - 1) // 2
                if count > cap:
                    violation = Violation(
                        ViolationKind.DIAGONAL_OVERFLOW,
                        i=i,
                        detail=f"entry ({i}, {i}) = {count} exceeds C({ni}, 2) = {cap}",
                    )
                    break
            else:
                cap = class_sizes.get(i, 0) * class_sizes.get(k, 0)
                if count > cap:
                    violation = Violation(
                        ViolationKind.OFF_DIAGONAL_OVERFLOW,
                        i=i,
                        k=k,
                        detail=f"entry ({i}, {k}) = {count} exceeds n_{i}*n_{k} = {cap}",
                    )
                    break

    if violation is None and strict_vertex_budget:
        used = sum(class_sizes.values())
        if used > n:
            violation = Violation(
                ViolationKind.VERTEX_BUDGET_EXCEEDED,
                detail=f"classes need {used} vertices but n = {n}",
            )

    return GraphicalityVerdict(violation is None, class_sizes, violation)


def jdv_to_json(j: Jdv, extra: Mapping[str, object] | None = None) -> str:
    """Canonical JSON serialization: n plus entries sorted by (i, k)."""
    doc: dict[str, object] = {
        "n": j.n,
        "entries": [
            {"i": i, "k": k, "count": j.entries[i, k]} for i, k in sorted(j.entries)
        ],
    }
    if extra:
        doc.update(extra)
    return json.dumps(doc, indent=2) + "\n"


def jdv_from_json(text: str) -> Jdv:
    """Parse the JSON serialization; unknown top-level fields are ignored."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ValueError("expected a JSON object with fields 'n' and 'entries'")
    if "n" not in doc or "entries" not in doc:
        raise ValueError("missing required field 'n' or 'entries'")
    n = doc["n"]
    if not isinstance(n, int):
        raise ValueError(f"field 'n' must be an integer, got {n!r}")
    entries: dict[Position, int] = {}
    for item in doc["entries"]:
        if not isinstance(item, dict) or not {"i", "k", "count"} <= set(item):
            raise ValueError(f"malformed entry {item!r}")
        i, k, count = item["i"], item["k"], item["count"]
        if not all(isinstance(x, int) for x in (i, k, count)):
            raise ValueError(f"non-integer field in entry {item!r}")
        if (i, k) in entries:
            raise ValueError(f"duplicate entry for position ({i}, {k})")
        entries[(i, k)] = count
    return Jdv.from_entries(n, entries)
