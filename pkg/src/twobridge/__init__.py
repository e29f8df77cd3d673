"""Exact enumeration and genus statistics for 2-bridge knots.

Billiard table words over {+,-} are reduced to run form, enumerated as
model words per crossing number, turned into alternating diagrams whose
Seifert circle count comes from a viability count, and aggregated into
exact (fraction-valued) census statistics with a closed-form lower
bound on the average genus.  A planar-diagram oracle cross-checks every
shortcut independently.
"""

__version__ = "0.1.0"

from .census import lower_bound_avg_genus, model_count, run_census
from .diagram import analyze, full_diagram, genus, seifert_circle_count
from .words import RunWord, enumerate_model_words, normalize_to_model, reduce

__all__ = [
    "RunWord",
    "analyze",
    "enumerate_model_words",
    "full_diagram",
    "genus",
    "lower_bound_avg_genus",
    "model_count",
    "normalize_to_model",
    "reduce",
    "run_census",
    "seifert_circle_count",
]
