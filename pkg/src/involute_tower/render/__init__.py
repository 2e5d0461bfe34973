"""Output of figures, samples and reports.

- svg: SvgDocument and ViewBox
- figures: figure builders for every FigureSpec kind
- export: CSV and JSON writers and report builders
"""

from involute_tower.render.export import (
    CSV_COLUMNS,
    curve_report,
    involute_samples,
    polygon_report,
    polygon_samples,
    samples_from_csv,
    samples_to_csv,
    to_json,
    tower_report,
    tower_samples,
    write_output,
)
from involute_tower.render.figures import build_figure, expected_path_count
from involute_tower.render.svg import SvgDocument, ViewBox

__all__ = [
    "CSV_COLUMNS",
    "SvgDocument",
    "ViewBox",
    "build_figure",
    "curve_report",
    "expected_path_count",
    "involute_samples",
    "polygon_report",
    "polygon_samples",
    "samples_from_csv",
    "samples_to_csv",
    "to_json",
    "tower_report",
    "tower_samples",
    "write_output",
]
