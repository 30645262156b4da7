"""Bound-curve figure rendering from a jdvtools bounds CSV.

Consumes the CSV emitted by `jdvtools bounds` (header
n,alpha_n,alpha_prime_n,lemma_bound,limit_constant,half_graph_ratio)
and renders the four bound series: the exact discrete-relaxation ratios
as point markers, the continuous-relaxation curve, the link-bound curve
(n-1)/n * alpha'_n + 1/n, and the limiting constant as a horizontal
line.  Before drawing, the data is re-validated: every alpha_n must lie
on or below the link bound at the same n, so a corrupted or
inconsistent CSV aborts instead of rendering a misleading figure.
"""

from .plot import DataIntegrityError, plot, read_bounds_csv

__all__ = ["DataIntegrityError", "plot", "read_bounds_csv"]

__version__ = "0.1.0"
