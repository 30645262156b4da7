"""Upper bounds on the number of nonzero JDV entries via relaxation.

Any graph's nonzero JDV positions A satisfy
sum_{(i,k) in A} (i+k)/(i*k) <= n, because each term is at most the
corresponding JDV-weighted term and the weighted total is exactly
n - n0.  Dropping the graph and keeping only that budget constraint
gives the discrete relaxation over the full triangular position set
P_n = {(i, k) : 1 <= i <= k <= n-1}:

    maximize |A|  over  A subseteq P_n
    subject to    sum_{(i,k) in A} (i+k)/(i*k) <= n.

Sorting the C(n, 2) weights ascending and taking the longest prefix
whose sum stays within n solves it exactly: any feasible k-subset
weighs at least as much as the k cheapest positions, so the maximal
feasible prefix has maximum cardinality.  alpha_n is that cardinality
divided by C(n, 2).

The continuous analogue (area maximization over [1, n]^2 with
integral of 1/x at most n, symmetric about y = x) has the closed-form
optimum

    alpha'_n = n^2/(n-1)^2 * ((b0 - 2)^2 - 2) / (b0 * (b0 - 2)),

where b0 ~ 5.68050 is the unique root > 2 of log(b - 1) = b/(b - 2):
the sublevel set A_c of (x+y)/(xy) is feasible iff
(nc - 2) log(nc - 1) <= nc, and c = b0/n sits exactly on that
boundary.  The two optima are linked by

    alpha_n <= (n-1)/n * alpha'_n + 1/n,

obtained by inflating a discrete solution to unit squares (diagonal
squares counted once).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .constructions import half_graph_support_size

#: Asymptotic constant of the independent support-density bound (see
#: second_bound); listed in reports next to the relaxation constants.
SECOND_BOUND_ASYMPTOTE = Fraction(13, 24)

CSV_HEADER = "n,alpha_n,alpha_prime_n,lemma_bound,limit_constant,half_graph_ratio"


@dataclass(frozen=True)
class WeightedPair:
    """Position (i, k) with its exact budget weight (i+k)/(i*k) = 1/i + 1/k."""

    i: int
    k: int
    weight: Fraction


@dataclass(frozen=True)
class RelaxationSolution:
    n: int
    chosen: tuple[WeightedPair, ...]
    weight_sum: Fraction
    cardinality: int
    alpha_n: Fraction


@dataclass(frozen=True)
class ContinuousBound:
    beta0: float
    limit_constant: float
    alpha_prime_n: float
    lemma_bound_n: float


@dataclass(frozen=True)
class BoundReport:
    """All bound values for one n, ready for CSV/figure emission."""

    n: int
    alpha_n: Fraction
    alpha_prime_n: float
    lemma_bound: float
    limit_constant: float
    half_graph_ratio: Fraction
    second_bound_asymptote: Fraction = SECOND_BOUND_ASYMPTOTE


def pair_weights(n: int) -> list[WeightedPair]:
    """All C(n, 2) positions with exact weights, sorted ascending.

    Ties break lexicographically by (i, k) so listings are reproducible;
    tie order never affects the relaxation value since tied positions
    weigh the same.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    pairs = [
        WeightedPair(i, k, Fraction(i + k, i * k))
        for i in range(1, n)
        for k in range(i, n)
    ]
    pairs.sort(key=lambda p: (p.weight, p.i, p.k))
    return pairs


def solve_discrete_relaxation(n: int) -> RelaxationSolution:
    """Exact greedy solution of the discrete relaxation.

    Takes the sorted weight prefix while the exact rational sum stays
    <= n; floating point would misjudge boundary cases like n = 2 where
    the prefix sum hits the budget exactly.
    """
    pairs = pair_weights(n)
    chosen: list[WeightedPair] = []
    weight_sum = Fraction(0)
    for pair in pairs:
        if weight_sum + pair.weight > n:
            break
        weight_sum += pair.weight
        chosen.append(pair)
    cardinality = len(chosen)
    positions = len(pairs)
    return RelaxationSolution(
        n=n,
        chosen=tuple(chosen),
        weight_sum=weight_sum,
        cardinality=cardinality,
        alpha_n=Fraction(cardinality, positions),
    )


def _boundary_residual(beta: float) -> float:
    return math.log(beta - 1.0) - beta / (beta - 2.0)


def solve_beta0(tolerance: float = 1e-12) -> float:
    """Unique root > 2 of log(b - 1) = b/(b - 2), by bisection.

    The residual is -inf as b -> 2+ and positive well before b = 64, and
    the two sides are strictly monotone in opposite directions for
    b > 2, so the bracket (2, 64] is guaranteed and the root unique.
    Bisection needs no derivative and converges unconditionally; the
    returned midpoint sits in a bracket of width <= tolerance.
    """
    if tolerance <= 0:
        raise ValueError(f"tolerance must be positive, got {tolerance}")
    lo, hi = 2.0 + 1e-9, 64.0
    while hi - lo > tolerance:
        mid = 0.5 * (lo + hi)
        if _boundary_residual(mid) < 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def alpha_prime(n: int) -> ContinuousBound:
    """Continuous-relaxation optimum for n vertices, plus the prefix bound.

    alpha'_n carries the finite-n factor n^2/(n-1)^2 on top of the
    asymptotic constant; the link bound (n-1)/n * alpha'_n + 1/n is the
    discrete-side consequence (the lemma_bound CSV column).
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    beta0 = solve_beta0(1e-12)
    limit_constant = ((beta0 - 2.0) ** 2 - 2.0) / (beta0 * (beta0 - 2.0))
    alpha_prime_n = (n * n) / ((n - 1.0) * (n - 1.0)) * limit_constant
    lemma_bound_n = (n - 1.0) / n * alpha_prime_n + 1.0 / n
    return ContinuousBound(
        beta0=beta0,
        limit_constant=limit_constant,
        alpha_prime_n=alpha_prime_n,
        lemma_bound_n=lemma_bound_n,
    )


def continuous_feasibility(n: int, c: float) -> bool:
    """Whether the sublevel set A_c is feasible: (nc - 2) log(nc - 1) <= nc.

    Raises ValueError when nc <= 1 (logarithm undefined).  A_c is empty
    (trivially feasible) exactly when nc < 2; the criterion applies on
    the nonempty side, and c = beta0/n sits on its boundary.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    if c <= 0:
        raise ValueError(f"need c > 0, got {c}")
    nc = n * c
    if nc <= 1.0:
        raise ValueError(f"criterion undefined for n*c = {nc} <= 1")
    return (nc - 2.0) * math.log(nc - 1.0) <= nc


def bound_report(n: int) -> BoundReport:
    """Assemble every bound value for one n."""
    discrete = solve_discrete_relaxation(n)
    cont = alpha_prime(n)
    hg = half_graph_support_size(n)
    positions = n * (n - 1) // 2
    return BoundReport(
        n=n,
        alpha_n=discrete.alpha_n,
        alpha_prime_n=cont.alpha_prime_n,
        lemma_bound=cont.lemma_bound_n,
        limit_constant=cont.limit_constant,
        half_graph_ratio=Fraction(hg, positions),
    )


def format_csv_row(report: BoundReport) -> str:
    """One CSV row, all ratios as 9-place decimals (byte-stable)."""
    return (
        f"{report.n},"
        f"{float(report.alpha_n):.9f},"
        f"{report.alpha_prime_n:.9f},"
        f"{report.lemma_bound:.9f},"
        f"{report.limit_constant:.9f},"
        f"{float(report.half_graph_ratio):.9f}"
    )
