"""
Pydantic models for every machine-readable result capnet prints.

Densities are exact rationals and are rendered as strings ("3/2", "2").
Each report carries the settings that shaped it (threshold, comparison
mode, weight policy, exactness) so a reader can audit the semantics.
"""
from fractions import Fraction
from typing import Dict, List, Literal, Optional

from pydantic import BaseModel

from .dense_subgraphs import CoreDecomposition, DenseCover, core_shells
from .density import MeasureExpr
from .graph import CongestedCore, Graph, LoadedGraph
from .measure_parser import format_measure
from .oracle import OracleReport
from .routing import DensityIndexResult, RouteOutcome


def fraction_text(value: Optional[Fraction]) -> Optional[str]:
    return None if value is None else str(Fraction(value))


def comparison_text(strict: bool) -> str:
    return "load > threshold" if strict else "load >= threshold"


def sorted_components(g: Graph, components) -> List[List[str]]:
    """Label lists, each sorted, ordered by smallest label."""
    labelled = [g.labels_of(c) for c in components]
    return sorted(labelled, key=lambda labels: (labels[0], labels))


class EdgeRecord(BaseModel):
    u: str
    v: str
    load: float


class CoreReport(BaseModel):
    threshold: float
    comparison: str
    nodes: List[str]
    edges: List[EdgeRecord]

    @classmethod
    def build(cls, core: CongestedCore) -> "CoreReport":
        g = core.core
        return cls(
            threshold=core.threshold,
            comparison=comparison_text(core.strict),
            nodes=g.labels_of(g.nodes()),
            edges=[EdgeRecord(u=g.labels[u], v=g.labels[v], load=load)
                   for (u, v), load in zip(g.edges, core.loads)],
        )


class KCoreReport(BaseModel):
    scope: Literal["congested_core", "whole_graph"]
    threshold: Optional[float]
    core_numbers: Dict[str, int]
    degeneracy: int
    k: Optional[int] = None
    nodes: Optional[List[str]] = None
    shells: Optional[List[List[str]]] = None

    @classmethod
    def build(cls, g: Graph, decomposition: CoreDecomposition, scope: str,
              threshold: Optional[float], k: Optional[int] = None) -> "KCoreReport":
        report = cls(
            scope=scope,
            threshold=threshold,
            core_numbers=dict(sorted(decomposition.by_label(g).items())),
            degeneracy=decomposition.degeneracy,
            k=k,
        )
        if k is not None:
            report.nodes = g.labels_of(decomposition.k_core(k))
        else:
            report.shells = [g.labels_of(shell) for shell in core_shells(g)] if g.node_count else []
        return report


class CoverReport(BaseModel):
    measure: str
    rho0: str
    exact: bool
    exactness: str
    components: List[List[str]]
    cover: List[str]
    scope: Literal["congested_core", "whole_graph"] = "congested_core"
    threshold: Optional[float] = None
    comparison: Optional[str] = None

    @classmethod
    def build(cls, g: Graph, cover: DenseCover, scope: str = "congested_core",
              threshold: Optional[float] = None, strict: Optional[bool] = None) -> "CoverReport":
        return cls(
            measure=format_measure(cover.measure),
            rho0=fraction_text(cover.rho0),
            exact=cover.exact,
            exactness=cover.exactness.value,
            components=sorted_components(g, cover.components),
            cover=g.labels_of(cover.cover),
            scope=scope,
            threshold=threshold,
            comparison=None if strict is None else comparison_text(strict),
        )


class DensestReport(BaseModel):
    scope: Literal["congested_core", "whole_graph"]
    threshold: Optional[float]
    nodes: List[str]
    density: str
    edges_within: int


class RouteReport(BaseModel):
    status: Literal["found", "no_path"]
    reason: Optional[str]
    certified: bool
    path: Optional[List[str]]
    weight: Optional[float]
    rho0_used: Optional[str]
    cover_size: int
    measure: Optional[str]
    threshold: float
    comparison: str
    weight_policy: str
    scope: str
    exactness: Optional[str]
    cover: List[str] = []

    @classmethod
    def build(cls, g: LoadedGraph, outcome: RouteOutcome, *, rho0: Optional[Fraction],
              cover_size: int, measure: Optional[MeasureExpr], threshold: float, strict: bool,
              weight_policy: str, scope: str, exactness: Optional[str]) -> "RouteReport":
        labels = g.graph.labels
        return cls(
            status="found" if outcome.found else "no_path",
            reason=None if outcome.found else outcome.reason.value,
            certified=outcome.certified,
            path=[labels[v] for v in outcome.path.nodes] if outcome.found else None,
            weight=float(outcome.path.weight) if outcome.found else None,
            rho0_used=fraction_text(rho0),
            cover_size=cover_size,
            measure=None if measure is None else format_measure(measure),
            threshold=threshold,
            comparison=comparison_text(strict),
            weight_policy=weight_policy,
            scope=scope,
            exactness=exactness,
        )


class IndexReport(BaseModel):
    path: List[str]
    density_index: str
    grid: List[str]
    measure: str
    threshold: float
    comparison: str

    @classmethod
    def build(cls, g: LoadedGraph, nodes, result: DensityIndexResult, measure: MeasureExpr,
              threshold: float, strict: bool) -> "IndexReport":
        return cls(
            path=[g.graph.labels[v] for v in nodes],
            density_index=fraction_text(result.value),
            grid=[fraction_text(x) for x in result.grid],
            measure=format_measure(measure),
            threshold=threshold,
            comparison=comparison_text(strict),
        )


class QualifyingRecord(BaseModel):
    nodes: List[str]
    density: str


class DiscrepancyRecord(BaseModel):
    node: str
    direction: str


class RouteCheckRecord(BaseModel):
    source: str
    target: str
    fast_status: str
    oracle_status: str
    fast_path: Optional[List[str]]
    oracle_path: Optional[List[str]]
    agree: bool
    avoids_qualifying: bool


class OracleCheckReport(BaseModel):
    instance: str
    measure: str
    rho0: str
    threshold: float
    comparison: str
    exactness: str
    qualifying: List[QualifyingRecord]
    exact_cover: List[str]
    cover: List[str]
    discrepancies: List[DiscrepancyRecord]
    sound: bool
    complete: bool
    gap: int
    route: Optional[RouteCheckRecord] = None

    @classmethod
    def build(cls, g: Graph, cover: DenseCover, report: OracleReport, threshold: float,
              strict: bool) -> "OracleCheckReport":
        missing = any(d == "missing_from_cover" for _, d in report.discrepancies)
        return cls(
            instance=report.instance,
            measure=format_measure(cover.measure),
            rho0=fraction_text(cover.rho0),
            threshold=threshold,
            comparison=comparison_text(strict),
            exactness=cover.exactness.value,
            qualifying=[QualifyingRecord(nodes=g.labels_of(q.nodes), density=fraction_text(q.density))
                        for q in report.qualifying],
            exact_cover=g.labels_of(report.exact_cover),
            cover=g.labels_of(cover.cover),
            discrepancies=[DiscrepancyRecord(node=g.labels[v], direction=d) for v, d in report.discrepancies],
            sound=not missing,
            complete=not report.discrepancies,
            gap=report.gap,
        )

    @property
    def passed(self) -> bool:
        """Sound always; complete too when the cover claims exactness."""
        ok = self.sound and (self.exactness != "exact" or self.complete)
        if self.route is not None:
            ok = ok and self.route.agree and self.route.avoids_qualifying
        return ok


class QueryRecordModel(BaseModel):
    index: int
    source: str
    target: str
    local_path: Optional[List[str]]
    local_weight: Optional[float]
    local_hops: Optional[int]
    local_index: Optional[str]
    local_hits_cover: Optional[bool]
    global_status: str
    global_reason: Optional[str]
    global_path: Optional[List[str]]
    global_hops: Optional[int]
    global_index: Optional[str]
    global_avoids_cover: Optional[bool]
    certified: bool
    hop_stretch: Optional[float]


class ComparisonAggregates(BaseModel):
    queries: int
    local_cover_hit_fraction: Optional[float]
    mean_hop_stretch: Optional[float]
    no_path_fraction: Optional[float]
    hop_stretches: List[float]


class ComparisonReportModel(BaseModel):
    scenario: dict
    measure: str
    rho0: str
    threshold: float
    weight_policy: str
    node_count: int
    edge_count: int
    core_size: int
    cover_size: int
    exactness: str
    records: List[QueryRecordModel]
    aggregates: ComparisonAggregates
