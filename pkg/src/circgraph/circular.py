"""Recognition of circular graphs and machine checks of their structural laws.

A bipartite graph on points U and circles W is circular when every unordered
triple of points has exactly one common circle and every circle has degree at
least three. The checks here verify, on a concrete instance, the facts that
follow from those two axioms: the bound on common neighbors of circle pairs,
point degrees, the distance profile, and the diameter/radius values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Any, Optional

from .graphs import (
    BipartiteGraph,
    all_pairs_distances,
    common_neighbors,
    metric_summary,
    UNREACHABLE,
)


class Verdict(str, Enum):
    NOT_CIRCULAR = "NotCircular"
    TRIVIAL_CIRCULAR = "TrivialCircular"
    NON_TRIVIAL_CIRCULAR = "NonTrivialCircular"


class ViolationKind(str, Enum):
    TRIPLE_UNCOVERED = "TripleUncovered"
    TRIPLE_OVERCOVERED = "TripleOvercovered"
    CIRCLE_DEGREE_TOO_SMALL = "CircleDegreeTooSmall"
    PART_ERROR = "PartError"


class CheckStatus(str, Enum):
    PASS = "Pass"
    FAIL = "Fail"
    NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class Violation:
    """Replayable counterexample: re-evaluating `vertices` reproduces `detail`."""

    kind: ViolationKind
    vertices: tuple[str, ...]
    detail: Optional[int] = None


@dataclass(frozen=True)
class CircularClassification:
    verdict: Verdict
    witness: Optional[Violation]
    triple_axiom_vacuous: bool
    note: Optional[str] = None

    @property
    def is_circular(self) -> bool:
        return self.verdict is not Verdict.NOT_CIRCULAR


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one structural check with its measured evidence.

    A Fail always carries a replayable counterexample; NotApplicable carries
    the gating reason inside evidence.
    """

    check: str
    status: CheckStatus
    evidence: dict[str, Any] = field(default_factory=dict)
    counterexample: Optional[tuple[str, ...]] = None


SINGLE_POINT_NOTE = (
    "part U has a single point: nominally the trivial case, "
    "but no circle can reach degree 3; classified not circular"
)
EMPTY_PARTS_NOTE = "no circles and at most two points: nothing models a circular space"


def classify(g: BipartiteGraph) -> CircularClassification:
    """Decide NotCircular / TrivialCircular / NonTrivialCircular.

    Circle degrees are checked first, then point triples in lexicographic
    order; the first violation found becomes the witness. A trivial verdict
    is the star with its center among the circles and at least three leaves.
    """
    points = sorted(g.part_u)
    vacuous = len(points) < 3
    note = SINGLE_POINT_NOTE if len(g.part_u) == 1 and g.part_w else None
    for w in sorted(g.part_w):
        d = g.degree(w)
        if d < 3:
            return CircularClassification(
                Verdict.NOT_CIRCULAR,
                Violation(ViolationKind.CIRCLE_DEGREE_TOO_SMALL, (w,), d),
                vacuous,
                note,
            )
    for t in combinations(points, 3):
        c = len(common_neighbors(g, t))
        if c != 1:
            kind = (
                ViolationKind.TRIPLE_UNCOVERED
                if c == 0
                else ViolationKind.TRIPLE_OVERCOVERED
            )
            return CircularClassification(
                Verdict.NOT_CIRCULAR, Violation(kind, t, c), vacuous, note
            )
    if len(g.part_w) >= 2:
        return CircularClassification(Verdict.NON_TRIVIAL_CIRCULAR, None, vacuous, note)
    if len(g.part_w) == 1 and len(g.part_u) >= 3:
        return CircularClassification(Verdict.TRIVIAL_CIRCULAR, None, vacuous, note)
    return CircularClassification(
        Verdict.NOT_CIRCULAR,
        Violation(ViolationKind.PART_ERROR, ()),
        vacuous,
        EMPTY_PARTS_NOTE,
    )


def _not_applicable(check: str, classification: CircularClassification) -> CheckReport:
    return CheckReport(
        check,
        CheckStatus.NOT_APPLICABLE,
        {"reason": f"requires a circular graph; classification is {classification.verdict.value}"},
    )


def verify_w_pair_bound(
    g: BipartiteGraph, classification: CircularClassification | None = None
) -> CheckReport:
    """Check cn(w1, w2) <= 2 over every unordered pair of circles."""
    cls = classification or classify(g)
    if not cls.is_circular:
        return _not_applicable("w_pair_bound", cls)
    max_cn = 0
    max_pair: tuple[str, str] | None = None
    count = 0
    for w1, w2 in combinations(sorted(g.part_w), 2):
        count += 1
        c = len(common_neighbors(g, (w1, w2)))
        if c > max_cn:
            max_cn = c
            max_pair = (w1, w2)
    evidence: dict[str, Any] = {"max_cn": max_cn, "pair_count": count}
    if max_pair is not None:
        evidence["max_pair"] = max_pair
    if max_cn <= 2:
        return CheckReport("w_pair_bound", CheckStatus.PASS, evidence)
    return CheckReport("w_pair_bound", CheckStatus.FAIL, evidence, max_pair)


def verify_point_degrees(
    g: BipartiteGraph, classification: CircularClassification | None = None
) -> CheckReport:
    """Check that every point of a non-trivial circular graph has degree >= 3."""
    cls = classification or classify(g)
    if cls.verdict is not Verdict.NON_TRIVIAL_CIRCULAR:
        return CheckReport(
            "point_degrees",
            CheckStatus.NOT_APPLICABLE,
            {"reason": f"requires a non-trivial circular graph; classification is {cls.verdict.value}"},
        )
    min_degree, argmin = min((g.degree(u), u) for u in sorted(g.part_u))
    evidence = {"min_degree": min_degree, "vertex": argmin}
    if min_degree >= 3:
        return CheckReport("point_degrees", CheckStatus.PASS, evidence)
    return CheckReport("point_degrees", CheckStatus.FAIL, evidence, (argmin,))


_ALLOWED_UU = frozenset({2})
_ALLOWED_WW = frozenset({2, 4})
_ALLOWED_UW = frozenset({1, 3})


def verify_distance_profile(
    g: BipartiteGraph, classification: CircularClassification | None = None
) -> CheckReport:
    """Check the distance trichotomy on a non-trivial circular graph.

    Point pairs must sit at distance 2, circle pairs at 2 or 4, and mixed
    pairs at 1 or 3.
    """
    cls = classification or classify(g)
    if cls.verdict is not Verdict.NON_TRIVIAL_CIRCULAR:
        return CheckReport(
            "distance_profile",
            CheckStatus.NOT_APPLICABLE,
            {"reason": f"requires a non-trivial circular graph; classification is {cls.verdict.value}"},
        )
    dist = all_pairs_distances(g)
    points = sorted(g.part_u)
    circles = sorted(g.part_w)

    def observed(pairs):
        return {dist[a].get(b, UNREACHABLE) for a, b in pairs}

    uu = observed(combinations(points, 2))
    ww = observed(combinations(circles, 2))
    uw = observed((u, w) for u in points for w in circles)
    evidence = {
        "u_pair_distances": sorted(uu),
        "w_pair_distances": sorted(ww),
        "u_w_distances": sorted(uw),
    }
    counterexample = None
    for pairs, allowed in (
        (combinations(points, 2), _ALLOWED_UU),
        (combinations(circles, 2), _ALLOWED_WW),
        (((u, w) for u in points for w in circles), _ALLOWED_UW),
    ):
        for a, b in pairs:
            d = dist[a].get(b, UNREACHABLE)
            if d not in allowed:
                counterexample = (a, b)
                break
        if counterexample:
            break
    if counterexample is None:
        return CheckReport("distance_profile", CheckStatus.PASS, evidence)
    return CheckReport("distance_profile", CheckStatus.FAIL, evidence, counterexample)


def verify_metric_bounds(
    g: BipartiteGraph, classification: CircularClassification | None = None
) -> CheckReport:
    """Check diameter and radius: (2, 1) for trivial, (3..4, 3) for non-trivial."""
    cls = classification or classify(g)
    if not cls.is_circular:
        return _not_applicable("metric_bounds", cls)
    summary = metric_summary(g)
    trivial = cls.verdict is Verdict.TRIVIAL_CIRCULAR
    evidence = {
        "diameter": summary.diameter,
        "radius": summary.radius,
        "connected": summary.connected,
        "case": "trivial" if trivial else "non-trivial",
    }
    if trivial:
        ok = summary.diameter == 2 and summary.radius == 1
    else:
        ok = (
            isinstance(summary.diameter, int)
            and 3 <= summary.diameter <= 4
            and summary.radius == 3
        )
    if ok:
        return CheckReport("metric_bounds", CheckStatus.PASS, evidence)
    return CheckReport("metric_bounds", CheckStatus.FAIL, evidence)


def check_linear_axioms(g: BipartiteGraph) -> CheckReport:
    """Check the linear-graph conditions on any bipartite graph.

    Every pair of distinct points must have exactly one common circle and
    every vertex must have degree at least 2. The counterexample names the
    first failing pair, then the first failing vertex.
    """
    points = sorted(g.part_u)
    pair_count = 0
    for p, q in combinations(points, 2):
        pair_count += 1
        c = len(common_neighbors(g, (p, q)))
        if c != 1:
            return CheckReport(
                "linear_axioms",
                CheckStatus.FAIL,
                {"pair_cn": c, "pair_count": pair_count},
                (p, q),
            )
    labels = sorted(g.vertex_labels)
    min_degree = min((g.degree(v) for v in labels), default=0)
    evidence = {"pair_count": pair_count, "min_degree": min_degree}
    for v in labels:
        if g.degree(v) < 2:
            return CheckReport(
                "linear_axioms",
                CheckStatus.FAIL,
                {**evidence, "vertex_degree": g.degree(v)},
                (v,),
            )
    return CheckReport("linear_axioms", CheckStatus.PASS, evidence)


def run_all_checks(
    g: BipartiteGraph, classification: CircularClassification | None = None
) -> tuple[CheckReport, ...]:
    """The full circular-graph check suite in a fixed, report-stable order."""
    cls = classification or classify(g)
    return (
        verify_w_pair_bound(g, cls),
        verify_point_degrees(g, cls),
        verify_distance_profile(g, cls),
        verify_metric_bounds(g, cls),
    )
