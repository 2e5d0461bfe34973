"""Core value types, errors, configuration and models for involute-tower.

Types:
    - Vec2 / Point2: plane vectors and points
    - Interval: closed parameter interval

Errors:
    - InvoluteError and its subclasses

Models:
    - FigureSpec, CheckRecord, VerificationReport
    - InductionStepRecord, InductionReport
    - TowerReport, CurveReport, PolygonReport
"""

from involute_tower.core.errors import (
    ClosedFormError,
    CurveDomainError,
    DegenerateCurveError,
    DepthLimitError,
    InvoluteError,
    NotInClosureError,
    NumericError,
)
from involute_tower.core.models import (
    ArcRecord,
    CheckRecord,
    CurveReport,
    FigureSpec,
    InductionReport,
    InductionStepRecord,
    PolygonReport,
    SampleRecord,
    StrictModel,
    TowerReport,
    VerificationReport,
    ZoomWindow,
)
from involute_tower.core.types import (
    ORIGIN,
    Interval,
    Point2,
    Vec2,
)

__all__ = [
    # Types
    "ORIGIN",
    "Interval",
    "Point2",
    "Vec2",
    # Errors
    "ClosedFormError",
    "CurveDomainError",
    "DegenerateCurveError",
    "DepthLimitError",
    "InvoluteError",
    "NotInClosureError",
    "NumericError",
    # Models
    "ArcRecord",
    "CheckRecord",
    "CurveReport",
    "FigureSpec",
    "InductionReport",
    "InductionStepRecord",
    "PolygonReport",
    "SampleRecord",
    "StrictModel",
    "TowerReport",
    "VerificationReport",
    "ZoomWindow",
]
