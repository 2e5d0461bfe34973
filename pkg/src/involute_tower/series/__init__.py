"""Partial sums of the sine and cosine series and the tower closed forms."""

from involute_tower.series.analytic import (
    ClosedFormInvolute,
    PartialSums,
    SeriesTerm,
    closed_form_involute,
    cos_coefficients,
    factorial,
    partial_cos,
    partial_sin,
    remainder_bound,
    segment_length,
    series_term_table,
    sin_coefficients,
    tower_endpoint,
)

__all__ = [
    "ClosedFormInvolute",
    "PartialSums",
    "SeriesTerm",
    "closed_form_involute",
    "cos_coefficients",
    "factorial",
    "partial_cos",
    "partial_sin",
    "remainder_bound",
    "segment_length",
    "series_term_table",
    "sin_coefficients",
    "tower_endpoint",
]
