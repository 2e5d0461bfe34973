"""CSV and JSON export of towers, involutes and polygon involutes.

JSON is the pydantic ``model_dump(mode="json")`` of a report model, so floats
are written in their shortest round-trip form and identical inputs give
byte-identical output. CSV follows RFC 4180 with CRLF line endings and the
columns level, t, x, y.
"""

from __future__ import annotations

import csv
import io
import json
import math
import sys
from pathlib import Path
from typing import Iterable, Optional, Union

from pydantic import BaseModel

from involute_tower.core.models import (
    ArcRecord,
    CheckRecord,
    CurveReport,
    PolygonReport,
    SampleRecord,
    TowerReport,
)
from involute_tower.curves.involute import InvoluteCurve, InvoluteTower, sample
from involute_tower.curves.polygon import (
    PiecewiseArcCurve,
    RegularPolygon,
    arc_chain_length,
)
from involute_tower.series.analytic import remainder_bound, segment_length, tower_endpoint

CSV_COLUMNS = ("level", "t", "x", "y")


def to_json(model: BaseModel) -> str:
    return json.dumps(model.model_dump(mode="json"), indent=2) + "\n"


def samples_to_csv(records: Iterable[SampleRecord]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\r\n")
    writer.writerow(CSV_COLUMNS)
    for record in records:
        writer.writerow((record.level, repr(record.t), repr(record.x), repr(record.y)))
    return buffer.getvalue()


def samples_from_csv(text: str) -> list[SampleRecord]:
    """Parse CSV written by samples_to_csv."""
    reader = csv.DictReader(io.StringIO(text, newline=""))
    return [
        SampleRecord(
            level=int(row["level"]),
            t=float(row["t"]),
            x=float(row["x"]),
            y=float(row["y"]),
        )
        for row in reader
    ]


def write_output(text: str, out: Optional[Union[str, Path]]) -> None:
    """Write text to a file, or to stdout when out is None or '-'.

    Raises:
        OSError: If the file cannot be written
    """
    if out is None or str(out) == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    Path(out).write_text(text, encoding="utf-8", newline="")


# ============================================================================
# Report builders
# ============================================================================


def tower_checks(tower: InvoluteTower, tol: float) -> list[CheckRecord]:
    """Compare the numerically built tower with the closed forms."""
    checks = []
    for k in range(1, tower.depth + 1):
        numeric = tower.endpoints[k]
        exact = tower_endpoint(k, tower.theta)
        checks.append(
            CheckRecord.compare(
                f"A{k} numeric vs closed form", 0.0, numeric.distance_to(exact), tol
            )
        )
        checks.append(
            CheckRecord.compare(
                f"|A{k - 1}A{k}| numeric",
                segment_length(k, tower.theta),
                tower.segment_lengths[k - 1],
                tol,
            )
        )
    return checks


def tower_report(tower: InvoluteTower, tol: float) -> TowerReport:
    """Report with closed-form endpoints and lengths plus numeric cross-checks."""
    theta, depth = tower.theta, tower.depth
    return TowerReport(
        theta=theta,
        depth=depth,
        endpoints=[tower_endpoint(k, theta).as_tuple() for k in range(depth + 1)],
        segment_lengths=[segment_length(k, theta) for k in range(1, depth + 1)],
        remainder_bounds=[remainder_bound(k, theta) for k in range(depth + 1)],
        checks=tower_checks(tower, tol),
    )


def tower_samples(tower: InvoluteTower, n: int) -> list[SampleRecord]:
    return [
        SampleRecord(level=k, t=t, x=p.x, y=p.y)
        for k, curve in enumerate(tower.curves)
        for t, p in sample(curve, n)
    ]


def involute_samples(curve: InvoluteCurve, n: int) -> list[SampleRecord]:
    """Base curve as level 0 and its involute as level 1."""
    return [
        SampleRecord(level=level, t=t, x=p.x, y=p.y)
        for level, target in enumerate((curve.base, curve))
        for t, p in sample(target, n)
    ]


def curve_report(curve: InvoluteCurve, n: int) -> CurveReport:
    records = involute_samples(curve, n)
    return CurveReport(
        curve=curve.base.name,
        domain=(curve.domain.a, curve.domain.b),
        base=[r for r in records if r.level == 0],
        involute=[r for r in records if r.level == 1],
    )


def polygon_report(
    poly: RegularPolygon, chain: PiecewiseArcCurve, turns: int
) -> PolygonReport:
    return PolygonReport(
        n=poly.n,
        side=poly.side,
        turns=turns,
        vertices=[v.as_tuple() for v in poly.vertices],
        arcs=[
            ArcRecord(
                center=arc.center.as_tuple(),
                radius=arc.radius,
                start_angle=arc.start_angle,
                end_angle=arc.end_angle,
            )
            for arc in chain.arcs
        ],
        junctions=[p.as_tuple() for p in chain.junctions],
        chain_length=arc_chain_length(chain),
    )


def polygon_samples(chain: PiecewiseArcCurve, per_arc: int) -> list[SampleRecord]:
    """Arc k (1-based) as level k; t is the swept angle from the arc's start."""
    records = []
    for i, arc in enumerate(chain.arcs):
        for j in range(per_arc):
            u = abs(arc.sweep) * j / (per_arc - 1)
            angle = arc.start_angle + math.copysign(u, arc.sweep)
            p = arc.point_at(angle)
            records.append(SampleRecord(level=i + 1, t=u, x=p.x, y=p.y))
    return records
