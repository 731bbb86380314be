"""
CongestionRouter: one loaded network plus the active settings, answering
every query the CLI exposes and logging what it does.
"""
import math
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .config_models import Settings
from .dense_subgraphs import Exactness, core_decomposition, dense_cover, densest_edge_density_subgraph
from .density import MeasureExpr
from .graph import Graph, LoadedGraph, congested_core
from .graph_io import to_dot
from .oracle import brute_force_cap, check_cover, enumerate_dense
from .reports import (
    CoreReport, CoverReport, DensestReport, IndexReport, KCoreReport, OracleCheckReport, RouteCheckRecord,
    RouteReport, fraction_text,
)
from .routing import (
    DensityIndexer, RouteOutcome, RouteScope, WeightPolicy, cap_rho0, dijkstra, edge_weights,
    path_from_nodes, plan_avoidance, route_avoiding,
)

CONGESTED_CORE = "congested_core"
WHOLE_GRAPH = "whole_graph"


class CongestionRouter:
    """Dense-subgraph analysis and congestion-avoiding routing over one network."""

    def __init__(self, g: LoadedGraph, settings: Settings, logger):
        self.g = g
        self.settings = settings
        self.logger = logger
        self.threshold = settings.congestion.threshold
        self.strict = settings.congestion.strict
        self.core = congested_core(g, self.threshold, self.strict)
        self.logger.info(
            f"[CongestionRouter] Network: {g.graph.node_count} nodes, {g.graph.edge_count} links; "
            f"congested core: {self.core.core.node_count} nodes, {self.core.core.edge_count} links "
            f"(threshold {self.threshold})"
        )

    def _host(self, whole_graph: bool) -> Tuple[LoadedGraph, str]:
        if whole_graph:
            return self.g, WHOLE_GRAPH
        return self.core.as_loaded(), CONGESTED_CORE

    def node(self, label: str) -> int:
        return self.g.graph.index_of(label)

    # --- Analysis ---

    def core_report(self) -> CoreReport:
        return CoreReport.build(self.core)

    def kcore(self, k: Optional[int] = None, whole_graph: bool = False) -> KCoreReport:
        host, scope = self._host(whole_graph)
        if k is not None and k < 0:
            raise ValueError(f"k must be >= 0, got {k}")
        decomposition = core_decomposition(host.graph)
        self.logger.debug(f"[CongestionRouter] Degeneracy of {scope}: {decomposition.degeneracy}")
        return KCoreReport.build(host.graph, decomposition, scope,
                                 None if whole_graph else self.threshold, k)

    def cover(self, m: MeasureExpr, rho0: Fraction, whole_graph: bool = False) -> CoverReport:
        host, scope = self._host(whole_graph)
        cover = dense_cover(host.graph, m, rho0)
        self.logger.info(f"[CongestionRouter] Cover at rho0={rho0}: {len(cover.components)} component(s), "
                         f"{len(cover.cover)} node(s), {cover.exactness.value}")
        return CoverReport.build(host.graph, cover, scope,
                                 None if whole_graph else self.threshold,
                                 None if whole_graph else self.strict)

    def densest(self, whole_graph: bool = False) -> DensestReport:
        host, scope = self._host(whole_graph)
        g = host.graph
        if g.edge_count == 0:
            self.logger.warning(f"[CongestionRouter] {scope} has no links; nothing is dense")
            nodes, density, within = frozenset(), Fraction(0), 0
        else:
            nodes = densest_edge_density_subgraph(g)
            within = sum(1 for u, v in g.edges if u in nodes and v in nodes)
            density = Fraction(within, len(nodes))
        return DensestReport(
            scope=scope,
            threshold=None if whole_graph else self.threshold,
            nodes=g.labels_of(nodes),
            density=fraction_text(density),
            edges_within=within,
        )

    # --- Routing ---

    def _route_report(self, outcome: RouteOutcome, *, rho0, removed, measure, weights, scope,
                      exactness) -> RouteReport:
        report = RouteReport.build(
            self.g, outcome,
            rho0=rho0, cover_size=len(removed), measure=measure, threshold=self.threshold,
            strict=self.strict, weight_policy=WeightPolicy(weights).value, scope=RouteScope(scope).value,
            exactness=exactness,
        )
        report.cover = self.g.graph.labels_of(removed)
        if outcome.found:
            self.logger.info(f"[CongestionRouter] Path found: {' -> '.join(report.path)} "
                             f"(weight {report.weight})")
        else:
            verdict = "certified" if outcome.certified else "not certified"
            self.logger.info(f"[CongestionRouter] No path ({outcome.reason.value}, {verdict})")
        return report

    def route(self, m: MeasureExpr, rho0: Fraction, source: str, target: str,
              weights: WeightPolicy, scope: RouteScope) -> RouteReport:
        s, t = self.node(source), self.node(target)
        plan = plan_avoidance(self.g, self.threshold, m, rho0, self.strict)
        self.logger.debug(f"[CongestionRouter] Avoiding {len(plan.removed)} node(s) at rho0={rho0}")
        outcome = route_avoiding(self.g, plan, s, t, weights, scope)
        return self._route_report(outcome, rho0=rho0, removed=plan.removed, measure=m,
                                  weights=weights, scope=scope, exactness=plan.cover.exactness.value)

    def cap(self, m: MeasureExpr, source: str, target: str,
            weights: WeightPolicy, scope: RouteScope) -> RouteReport:
        s, t = self.node(source), self.node(target)
        rho_star = cap_rho0(self.g, self.threshold, m, self.strict)
        if rho_star is None:
            self.logger.info("[CongestionRouter] Congested core is empty; plain shortest path")
            outcome = dijkstra(self.g.graph, edge_weights(self.g, weights), s, t)
            return self._route_report(outcome, rho0=None, removed=frozenset(), measure=m,
                                      weights=weights, scope=scope, exactness=None)
        self.logger.info(f"[CongestionRouter] Maximum density in the core: {rho_star}")
        return self.route(m, rho_star, source, target, weights, scope)

    def index(self, m: MeasureExpr, path: Sequence[str]) -> IndexReport:
        nodes = [self.node(label) for label in path]
        p = path_from_nodes(self.g, nodes)
        result = DensityIndexer(self.g, self.threshold, m, self.strict).index(p)
        self.logger.info(f"[CongestionRouter] Density index: {result.value} over {len(result.grid)} thresholds")
        return IndexReport.build(self.g, nodes, result, m, self.threshold, self.strict)

    # --- Oracle ---

    def oracle_check(self, m: MeasureExpr, rho0: Fraction, whole_graph: bool = False,
                     source: Optional[str] = None, target: Optional[str] = None,
                     weights: WeightPolicy = WeightPolicy.UNIT) -> OracleCheckReport:
        host, _ = self._host(whole_graph)
        limits = self.settings.oracle
        cover = dense_cover(host.graph, m, rho0)
        report = OracleCheckReport.build(
            host.graph, cover, check_cover(host.graph, cover, limits.max_subset_nodes),
            self.threshold, self.strict,
        )
        if source is not None and target is not None:
            report.route = self._check_route(m, rho0, source, target, weights)
        level = "info" if report.passed else "error"
        self.logger.log(f"[CongestionRouter] Oracle check: sound={report.sound} complete={report.complete} "
                        f"gap={report.gap}", level)
        return report

    def _check_route(self, m: MeasureExpr, rho0: Fraction, source: str, target: str,
                     weights: WeightPolicy) -> RouteCheckRecord:
        s, t = self.node(source), self.node(target)
        limits = self.settings.oracle
        oracle = brute_force_cap(self.g, self.threshold, m, rho0, s, t, weights,
                                 limits.max_path_nodes, self.strict)
        plan = plan_avoidance(self.g, self.threshold, m, rho0, self.strict)
        fast = route_avoiding(self.g, plan, s, t, weights)
        forbidden = self.core.to_original(
            enumerate_dense(self.core.core, m, rho0, limits.max_subset_nodes).exact_cover
        )

        avoids = not fast.found or not (set(fast.path.nodes) & forbidden)
        if plan.cover.exactness is Exactness.EXACT:
            agree = fast.found == oracle.found and (
                not fast.found or math.isclose(fast.path.weight, oracle.path.weight)
            )
        else:
            # only soundness is claimed: a fast path must be one the oracle accepts
            agree = not fast.found or oracle.found
        labels = self.g.graph.labels
        return RouteCheckRecord(
            source=source,
            target=target,
            fast_status="found" if fast.found else "no_path",
            oracle_status="found" if oracle.found else "no_path",
            fast_path=[labels[v] for v in fast.path.nodes] if fast.found else None,
            oracle_path=[labels[v] for v in oracle.path.nodes] if oracle.found else None,
            agree=agree,
            avoids_qualifying=avoids,
        )

    # --- DOT rendering ---

    def _dot(self, host: LoadedGraph, shaded_labels=(), path_labels=(), name="capnet") -> str:
        g: Graph = host.graph
        return to_dot(
            g, loads=host.loads, threshold=self.threshold, strict=self.strict,
            shaded=[g.index_of(label) for label in shaded_labels],
            path=[g.index_of(label) for label in path_labels],
            name=name,
        )

    def core_dot(self, report: Optional[CoreReport] = None) -> str:
        return self._dot(self.core.as_loaded(), name="congested_core")

    def cover_dot(self, report: CoverReport) -> str:
        host, _ = self._host(report.scope == WHOLE_GRAPH)
        return self._dot(host, shaded_labels=report.cover, name="dense_cover")

    def route_dot(self, report: RouteReport) -> str:
        return self._dot(self.g, shaded_labels=report.cover, path_labels=report.path or (), name="route")
