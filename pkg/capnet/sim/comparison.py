"""
Local versus global congestion avoidance on one scenario.

The local policy is a minimum-weight path with link loads as weights. The
global policy removes the dense cover of the congested core and routes
around it.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..core.config_models import ScenarioConfig
from ..core.density import MeasureExpr, parse_density
from ..core.graph import LoadedGraph
from ..core.measure_parser import format_measure, parse_measure
from ..core.report_writer import QueryCsvWriter
from ..core.reports import ComparisonAggregates, ComparisonReportModel, QueryRecordModel, fraction_text
from ..core.routing import (
    AvoidancePlan, DensityIndexer, WeightPolicy, dijkstra, edge_weights, plan_avoidance, route_avoiding,
)
from .scenario import generate_scenario, sample_queries


@dataclass(frozen=True)
class ComparisonReport:
    scenario: ScenarioConfig
    measure: MeasureExpr
    rho0: Fraction
    graph: LoadedGraph
    plan: AvoidancePlan
    records: Tuple[QueryRecordModel, ...]

    @property
    def local_cover_hit_fraction(self) -> Optional[float]:
        hits = [r.local_hits_cover for r in self.records if r.local_path is not None]
        return float(np.mean(hits)) if hits else None

    @property
    def hop_stretches(self) -> List[float]:
        return [r.hop_stretch for r in self.records if r.hop_stretch is not None]

    @property
    def mean_hop_stretch(self) -> Optional[float]:
        stretches = self.hop_stretches
        return float(np.mean(stretches)) if stretches else None

    @property
    def no_path_fraction(self) -> Optional[float]:
        if not self.records:
            return None
        return float(np.mean([r.global_status == "no_path" for r in self.records]))

    @property
    def violations(self) -> List[int]:
        """Queries whose global path touched the cover; always empty unless routing is broken."""
        return [r.index for r in self.records if r.global_avoids_cover is False]

    def to_model(self) -> ComparisonReportModel:
        return ComparisonReportModel(
            scenario=self.scenario.model_dump(mode="json"),
            measure=format_measure(self.measure),
            rho0=fraction_text(self.rho0),
            threshold=self.scenario.threshold,
            weight_policy=self.scenario.weight_policy,
            node_count=self.graph.graph.node_count,
            edge_count=self.graph.graph.edge_count,
            core_size=self.plan.core.core.node_count,
            cover_size=len(self.plan.removed),
            exactness=self.plan.cover.exactness.value,
            records=list(self.records),
            aggregates=ComparisonAggregates(
                queries=len(self.records),
                local_cover_hit_fraction=self.local_cover_hit_fraction,
                mean_hop_stretch=self.mean_hop_stretch,
                no_path_fraction=self.no_path_fraction,
                hop_stretches=self.hop_stretches,
            ),
        )


def compare_policies(g: LoadedGraph, cfg: ScenarioConfig,
                     queries: Optional[Sequence[Tuple[int, int]]] = None) -> ComparisonReport:
    """
    Route every query under both policies.

    Queries default to the scenario's `pairs` when it names any, otherwise to a
    seeded sample.
    """
    m = parse_measure(cfg.measure)
    rho0 = parse_density(cfg.rho0)
    plan = plan_avoidance(g, cfg.threshold, m, rho0)
    indexer = DensityIndexer(g, cfg.threshold, m)
    local_weights = edge_weights(g, WeightPolicy.LOAD)
    if queries is None and cfg.pairs:
        queries = [(g.graph.index_of(s), g.graph.index_of(t)) for s, t in cfg.pairs]
    elif queries is None:
        queries = sample_queries(g, cfg.queries, cfg.seed)

    labels = g.graph.labels
    records = []
    for i, (s, t) in enumerate(queries):
        local = dijkstra(g.graph, local_weights, s, t)
        routed = route_avoiding(g, plan, s, t, weights=WeightPolicy(cfg.weight_policy))

        local_path = local.path if local.found else None
        global_path = routed.path if routed.found else None
        stretch = None
        if local_path is not None and global_path is not None:
            stretch = global_path.hops / local_path.hops
        records.append(QueryRecordModel(
            index=i,
            source=labels[s],
            target=labels[t],
            local_path=[labels[v] for v in local_path.nodes] if local_path else None,
            local_weight=float(local_path.weight) if local_path else None,
            local_hops=local_path.hops if local_path else None,
            local_index=fraction_text(indexer.index(local_path).value) if local_path else None,
            local_hits_cover=bool(set(local_path.nodes) & plan.removed) if local_path else None,
            global_status="found" if routed.found else "no_path",
            global_reason=None if routed.found else routed.reason.value,
            global_path=[labels[v] for v in global_path.nodes] if global_path else None,
            global_hops=global_path.hops if global_path else None,
            global_index=fraction_text(indexer.index(global_path).value) if global_path else None,
            global_avoids_cover=not (set(global_path.nodes) & plan.removed) if global_path else None,
            certified=routed.certified,
            hop_stretch=stretch,
        ))
    return ComparisonReport(scenario=cfg, measure=m, rho0=rho0, graph=g, plan=plan, records=tuple(records))


class PolicyComparison:
    """Runs one scenario end to end: generate, compare, log, optionally write CSV."""

    def __init__(self, cfg: ScenarioConfig, logger, csv_path: Optional[str] = None):
        self.cfg = cfg
        self.logger = logger
        self.csv_path = csv_path

    def run(self, g: Optional[LoadedGraph] = None) -> ComparisonReport:
        cfg = self.cfg
        if g is None:
            self.logger.info(f"[PolicyComparison] Generating {cfg.topology} scenario "
                             f"(nodes={cfg.nodes}, edge_param={cfg.edge_param}, seed={cfg.seed})")
            g = generate_scenario(cfg)
        self.logger.debug(f"[PolicyComparison] {g.graph.node_count} nodes, {g.graph.edge_count} edges")

        report = compare_policies(g, cfg)
        self.logger.info(f"[PolicyComparison] Core has {report.plan.core.core.node_count} nodes, "
                         f"cover {len(report.plan.removed)} ({report.plan.cover.exactness.value})")
        for index in report.violations:
            self.logger.error(f"[PolicyComparison] Query {index}: global path touches the dense cover")

        if self.csv_path:
            writer = QueryCsvWriter(path=self.csv_path, logger=self.logger)
            try:
                writer.write_all(report.to_model().records)
            finally:
                writer.close()

        self.logger.log_summary({
            "Command": "simulate",
            "Status": "ok" if not report.violations else "violations",
            "Queries": len(report.records),
            "Local cover hits": report.local_cover_hit_fraction,
            "Mean hop stretch": report.mean_hop_stretch,
            "No-path fraction": report.no_path_fraction,
        })
        return report
