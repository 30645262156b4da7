from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

REQUIRED_COLUMNS = ("n", "alpha_n", "alpha_prime_n", "lemma_bound", "limit_constant")

#: slack for values that went through 9-decimal CSV formatting
ROUNDING_TOLERANCE = 1e-9


class DataIntegrityError(ValueError):
    """A rendered-data consistency check failed; the figure would lie."""


def read_bounds_csv(csv_path: str | Path) -> list[dict[str, float]]:
    """Load and validate the bounds CSV.

    Raises ValueError naming the first missing column, ValueError on an
    empty body, and DataIntegrityError if any alpha_n exceeds the link
    bound at the same n.
    """
    with open(csv_path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        for column in REQUIRED_COLUMNS:
            if column not in header:
                raise ValueError(f"missing column: {column}")
        rows = []
        for raw in reader:
            try:
                rows.append({col: float(raw[col]) for col in REQUIRED_COLUMNS})
            except (TypeError, ValueError):
                raise ValueError(f"non-numeric row: {raw}") from None
    if not rows:
        raise ValueError("CSV has a header but no data rows")
    for row in rows:
        if row["alpha_n"] > row["lemma_bound"] + ROUNDING_TOLERANCE:
            raise DataIntegrityError(
                f"alpha_n = {row['alpha_n']} exceeds the link bound "
                f"{row['lemma_bound']} at n = {row['n']:.0f}"
            )
    rows.sort(key=lambda r: r["n"])
    return rows


def plot(
    csv_path: str | Path,
    out_path: str | Path,
    overlay_figure_variant: bool = False,
):
    """Render the bound figure; returns (figure, resolved output path).

    Series: alpha_n as point markers, alpha'_n and the link bound as
    curves, the limiting constant as a horizontal line; with
    overlay_figure_variant also the c * n/(n-1) curve (the variant with
    a single n/(n-1) factor sometimes plotted instead of alpha'_n).
    Output format follows the file extension; default SVG.
    """
    rows = read_bounds_csv(csv_path)
    ns = [row["n"] for row in rows]
    alpha = [row["alpha_n"] for row in rows]
    alpha_prime = [row["alpha_prime_n"] for row in rows]
    lemma = [row["lemma_bound"] for row in rows]
    limit_constant = rows[-1]["limit_constant"]

    fig, ax = plt.subplots(figsize=(7.2, 4.2))
    ax.plot(ns, alpha, "x", color="black", markersize=4, label=r"$\alpha_n$")
    ax.plot(ns, alpha_prime, color="green", linewidth=1.2, label=r"$\alpha'_n$")
    ax.plot(
        ns,
        lemma,
        color="blue",
        linewidth=1.2,
        label=r"$\frac{n-1}{n}\alpha'_n + \frac{1}{n}$",
    )
    ax.axhline(
        limit_constant,
        color="red",
        linewidth=1.2,
        label=r"$\lim_{n\to\infty}\alpha_n$",
    )
    if overlay_figure_variant:
        variant = [limit_constant * n / (n - 1) for n in ns]
        ax.plot(
            ns,
            variant,
            color="green",
            linestyle="--",
            linewidth=1.0,
            label=r"$c\cdot n/(n-1)$",
        )
    ax.set_xlabel("n")
    ax.set_ylabel("ratio")
    ax.set_ylim(0.55, 0.67)
    ax.set_xlim(min(ns), max(ns))
    ax.legend(loc="upper right")
    fig.tight_layout()

    out = Path(out_path)
    if not out.suffix:
        out = out.with_suffix(".svg")
    fig.savefig(out)
    return fig, out
