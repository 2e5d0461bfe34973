"""Exact trig-polynomial algebra for the involute tower.

- poly: RationalPoly, polynomials with Fraction coefficients
- trig: TrigPolyExpr, TrigPolyCurve and the exact involute operator
- induction: closed-form verification, transcripts, partial-sum identities
"""

from involute_tower.symbolic.induction import (
    involute_transcript,
    partial_sum_identities,
    verify_induction,
)
from involute_tower.symbolic.poly import RationalPoly
from involute_tower.symbolic.trig import (
    TrigPolyCurve,
    TrigPolyExpr,
    arc_length_monomial,
    differentiate,
    monomial_speed,
    symbolic_involute,
)

__all__ = [
    "RationalPoly",
    "TrigPolyCurve",
    "TrigPolyExpr",
    "arc_length_monomial",
    "differentiate",
    "involute_transcript",
    "monomial_speed",
    "partial_sum_identities",
    "symbolic_involute",
    "verify_induction",
]
