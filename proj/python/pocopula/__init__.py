"""Lifetimes of series and parallel systems whose components follow the
proportional odds model and are coupled by an Archimedean survival copula.

Models, grids and reports use the same JSON layout as the command-line
scenario files, passed as plain dicts.
"""

from ._core import (
    Generator,
    SchemaError,
    check_log_convexity,
    check_order,
    check_ratio_shape,
    check_superadditive_composition,
    figure_ids,
    generator_names,
    kendall_tau,
    majorizes,
    parallel_cdf,
    parallel_reversed_hazard,
    po_hazard,
    po_survival,
    repro_figure,
    run_scenario,
    run_theorem,
    sample,
    series_hazard,
    series_survival,
    shocked_series_survival,
    theorem_ids,
)

__all__ = [
    "Generator",
    "SchemaError",
    "check_log_convexity",
    "check_order",
    "check_ratio_shape",
    "check_superadditive_composition",
    "figure_ids",
    "generator_names",
    "kendall_tau",
    "majorizes",
    "model",
    "parallel_cdf",
    "parallel_reversed_hazard",
    "po_hazard",
    "po_survival",
    "repro_figure",
    "run_scenario",
    "run_theorem",
    "sample",
    "series_hazard",
    "series_survival",
    "shocked_series_survival",
    "theorem_ids",
]


def model(alphas, generator, params=None, baseline="weibull", baseline_params=None, probs=None):
    """Builds a model dict."""
    m = {
        "baseline": {"family": baseline, "params": baseline_params or {"lambda": 1.0, "k": 1.5}},
        "alphas": list(alphas),
        "generator": {"name": generator, "params": params or {}},
    }
    if probs is not None:
        m["probs"] = list(probs)
    return m
