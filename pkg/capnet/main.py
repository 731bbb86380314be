"""
capnet command line: congested cores, dense covers and congestion-avoiding routes.

Usage:
    capnet core   --input net.edges --threshold 0.7
    capnet cover  --input net.edges --measure "max(mindeg,conn)" --rho0 2
    capnet cap    --input net.edges --measure mindeg --from a --to z
    capnet index  --input net.edges --measure mindeg --path a,b,c
    capnet simulate --topology barbell --nodes 4 --edge-param 2 --seed 7
    capnet oracle-check --input small.edges --measure conn --rho0 2

Machine output goes to stdout, log lines to stderr.
Exit status: 0 result found, 1 no path / empty result / failed check,
2 usage error, 3 input error.
"""

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

import yaml
from pydantic import ValidationError

from capnet.core.config_models import ScenarioConfig, Settings
from capnet.core.density import MeasureKind, leaves, parse_density
from capnet.core.errors import INPUT_ERROR, USAGE_ERROR, CapnetError, CliqueSizeError, ConfigError
from capnet.core.graph_io import FORMATS, detect_format, read_graph, serialize_edge_list, serialize_json
from capnet.core.logger import RunLogger
from capnet.core.measure_parser import parse_measure
from capnet.core.report_writer import QueryCsvWriter
from capnet.core.router import CongestionRouter
from capnet.core.routing import RouteScope, WeightPolicy
from capnet.sim import PolicyComparison, generate_scenario
from capnet.strategies import list_available_strategies

OK = 0
EMPTY_RESULT = 1

DOT_COMMANDS = ("core", "cover", "route", "cap")
DEFAULT_CONFIG = Path(__file__).parent / "config" / "capnet.yaml"


class _UsageError(Exception):
    pass


def load_config(config_path: Optional[str] = None) -> Settings:
    """Load and validate configuration."""
    config_file = Path(config_path) if config_path else DEFAULT_CONFIG
    try:
        with open(config_file, 'r') as f:
            config_data = yaml.safe_load(f) or {}
        return Settings(**config_data)
    except FileNotFoundError:
        raise ConfigError(f"configuration file not found at {config_file}") from None
    except yaml.YAMLError as e:
        raise ConfigError(f"cannot parse configuration file {config_file}: {e}") from None
    except (ValidationError, TypeError) as e:
        raise ConfigError(f"invalid configuration file {config_file}:\n{e}") from None


def load_scenario(path: str, base: ScenarioConfig, overrides: dict) -> ScenarioConfig:
    """Scenario file (JSON or YAML) over the configured defaults, then flag overrides."""
    try:
        with open(path, 'r') as f:
            data = yaml.safe_load(f) or {}
    except OSError as e:
        raise ConfigError(f"cannot read scenario {path}: {e.strerror}") from None
    except yaml.YAMLError as e:
        raise ConfigError(f"cannot parse scenario {path}: {e}") from None
    if not isinstance(data, dict):
        raise ConfigError(f"scenario {path} must be a mapping")
    return build_scenario(base, {**data, **overrides})


def build_scenario(base: ScenarioConfig, overrides: dict) -> ScenarioConfig:
    try:
        return ScenarioConfig(**{**base.model_dump(), **overrides})
    except ValidationError as e:
        raise ConfigError(f"invalid scenario:\n{e}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', help="settings file (default: capnet/config/capnet.yaml)")
    common.add_argument('--input', '-i', help="graph file, '-' for stdin (default; simulate generates one instead)")
    common.add_argument('--format', choices=FORMATS, help="graph format (default: by file extension)")
    common.add_argument('--threshold', type=float, help="link congestion threshold")
    common.add_argument('--output', '-o', choices=("json", "dot", "csv"), default="json")
    common.add_argument('--verbose', '-v', action='store_true', help="debug logging")
    common.add_argument('--quiet', '-q', action='store_true', help="errors only")

    measure = argparse.ArgumentParser(add_help=False)
    measure.add_argument('--measure', '-m', default="mindeg",
                         help="density measure, e.g. mindeg, conn, edge, min(edge,mindeg)")

    rho0 = argparse.ArgumentParser(add_help=False)
    rho0.add_argument('--rho0', required=True, help="density threshold, e.g. 2, 1.5 or 3/2")

    whole = argparse.ArgumentParser(add_help=False)
    whole.add_argument('--whole-graph', action='store_true',
                       help="analyse the whole network instead of its congested core")

    endpoints = argparse.ArgumentParser(add_help=False)
    endpoints.add_argument('--from', dest='source', required=True, help="source node label")
    endpoints.add_argument('--to', dest='target', required=True, help="target node label")
    endpoints.add_argument('--weights', choices=[w.value for w in WeightPolicy])
    endpoints.add_argument('--scope', choices=[s.value for s in RouteScope])

    parser = argparse.ArgumentParser(prog="capnet", description="Global congestion avoidance routing")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser('core', parents=[common], help="emit the congested core")
    p = sub.add_parser('kcore', parents=[common, whole], help="core decomposition, or one k-core")
    p.add_argument('--k', type=int, help="report this k-core only")
    sub.add_parser('cover', parents=[common, measure, rho0, whole], help="dense cover at rho0")
    sub.add_parser('densest', parents=[common, whole], help="maximal densest (edge density) subgraph")
    sub.add_parser('route', parents=[common, measure, rho0, endpoints],
                   help="path avoiding every subgraph with density >= rho0")
    sub.add_parser('cap', parents=[common, measure, endpoints],
                   help="congestion-avoiding path: avoid the densest subgraphs")
    p = sub.add_parser('index', parents=[common, measure], help="density index of a path")
    p.add_argument('--path', required=True, help="comma-separated node labels, e.g. a,b,c")

    p = sub.add_parser('simulate', parents=[common], help="local vs global routing on a synthetic scenario")
    source = p.add_mutually_exclusive_group()
    source.add_argument('--scenario', help="ScenarioConfig file (JSON or YAML)")
    source.add_argument('--topology', choices=list_available_strategies()["topology"])
    p.add_argument('--nodes', type=int)
    p.add_argument('--edge-param', type=float)
    p.add_argument('--load-model', choices=list_available_strategies()["load_model"])
    p.add_argument('--measure', '-m')
    p.add_argument('--rho0')
    p.add_argument('--queries', type=int)
    p.add_argument('--seed', type=int)
    p.add_argument('--weights', choices=[w.value for w in WeightPolicy])
    p.add_argument('--csv', help="also write per-query rows to this CSV file")
    p.add_argument('--pairs', help="fixed queries instead of sampled ones, e.g. s:t,a2:t")
    p.add_argument('--save-graph', help="write the network as an edge list, or JSON for a .json path")

    p = sub.add_parser('oracle-check', parents=[common, measure, rho0, whole],
                       help="compare the dense cover (and optionally a route) with brute force")
    p.add_argument('--from', dest='source', help="also check routing from this node")
    p.add_argument('--to', dest='target', help="... to this node")
    p.add_argument('--weights', choices=[w.value for w in WeightPolicy])
    return parser


def _measure(text: str, settings: Settings):
    m = parse_measure(text)
    limit = settings.density.max_clique_k
    for leaf in leaves(m):
        if leaf.kind is MeasureKind.K_CLIQUE and leaf.k > limit:
            raise CliqueSizeError(f"kclique:{leaf.k} exceeds the configured limit of {limit}")
    return m


def _emit(out, report):
    out.write(report.model_dump_json(indent=2) + "\n")


def _write(out, report, render=None):
    """JSON by default; `render` turns the report into DOT instead."""
    if render is None:
        _emit(out, report)
    else:
        out.write(render(report))


def _pairs(text: str):
    pairs = []
    for item in text.split(","):
        source, sep, target = item.strip().partition(":")
        if not sep or not source or not target:
            raise _UsageError(f"--pairs expects source:target items, got '{item.strip()}'")
        pairs.append((source, target))
    return pairs


def _simulate(args, settings: Settings, logger: RunLogger, out) -> int:
    flags = {
        "topology": args.topology,
        "nodes": args.nodes,
        "edge_param": args.edge_param,
        "load_model": args.load_model,
        "measure": args.measure,
        "rho0": args.rho0,
        "queries": args.queries,
        "seed": args.seed,
        "weight_policy": args.weights,
        "threshold": args.threshold,
    }
    overrides = {k: v for k, v in flags.items() if v is not None}
    if args.pairs:
        overrides["pairs"] = _pairs(args.pairs)
    if args.scenario:
        cfg = load_scenario(args.scenario, settings.simulation, overrides)
    else:
        cfg = build_scenario(settings.simulation, overrides)
    _measure(cfg.measure, settings)
    parse_density(cfg.rho0)

    if args.input is not None:
        g = read_graph(args.input, args.format)
        logger.info(f"[main] Comparing policies on {args.input} instead of a generated {cfg.topology}")
    else:
        g = generate_scenario(cfg)
    if args.save_graph:
        serialize = serialize_json if detect_format(args.save_graph) == "json" else serialize_edge_list
        Path(args.save_graph).write_text(serialize(g), encoding="utf-8")
        logger.info(f"[main] Scenario network written to {args.save_graph}")

    report = PolicyComparison(cfg, logger, csv_path=args.csv).run(g)
    model = report.to_model()
    if args.output == "csv":
        QueryCsvWriter(stream=out).write_all(model.records)
    else:
        _emit(out, model)
    return OK if not report.violations else EMPTY_RESULT


def _dispatch(args, settings: Settings, logger: RunLogger, out) -> int:
    if args.command == "simulate":
        return _simulate(args, settings, logger, out)

    g = read_graph(args.input, args.format)
    router = CongestionRouter(g, settings, logger)
    dot = args.output == "dot"
    weights = WeightPolicy(getattr(args, "weights", None) or settings.routing.weight_policy)
    scope = RouteScope(getattr(args, "scope", None) or settings.routing.scope)

    if args.command == "core":
        report = router.core_report()
        _write(out, report, router.core_dot if dot else None)
        return OK if report.nodes else EMPTY_RESULT

    if args.command == "kcore":
        report = router.kcore(args.k, args.whole_graph)
        _emit(out, report)
        found = report.nodes if args.k is not None else report.core_numbers
        return OK if found else EMPTY_RESULT

    if args.command == "cover":
        report = router.cover(_measure(args.measure, settings), parse_density(args.rho0), args.whole_graph)
        _write(out, report, router.cover_dot if dot else None)
        return OK if report.cover else EMPTY_RESULT

    if args.command == "densest":
        report = router.densest(args.whole_graph)
        _emit(out, report)
        return OK if report.nodes else EMPTY_RESULT

    if args.command in ("route", "cap"):
        m = _measure(args.measure, settings)
        if args.command == "route":
            report = router.route(m, parse_density(args.rho0), args.source, args.target, weights, scope)
        else:
            report = router.cap(m, args.source, args.target, weights, scope)
        _write(out, report, router.route_dot if dot else None)
        return OK if report.status == "found" else EMPTY_RESULT

    if args.command == "index":
        path = [label.strip() for label in args.path.split(",") if label.strip()]
        _emit(out, router.index(_measure(args.measure, settings), path))
        return OK

    # oracle-check
    if (args.source is None) != (args.target is None):
        raise _UsageError("oracle-check needs both --from and --to, or neither")
    report = router.oracle_check(_measure(args.measure, settings), parse_density(args.rho0),
                                 args.whole_graph, args.source, args.target, weights)
    _emit(out, report)
    return OK if report.passed else EMPTY_RESULT


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    """Run one capnet command; returns the exit status."""
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return USAGE_ERROR if e.code else OK

    if args.output == "dot" and args.command not in DOT_COMMANDS:
        err.write(f"capnet: error: --output dot is not available for '{args.command}'\n")
        return USAGE_ERROR
    if args.output == "csv" and args.command != "simulate":
        err.write("capnet: error: --output csv is only available for 'simulate'\n")
        return USAGE_ERROR

    try:
        settings = load_config(args.config)
    except ConfigError as e:
        err.write(f"capnet: error: {e}\n")
        return e.exit_status
    if args.threshold is not None:
        settings.congestion = settings.congestion.model_copy(update={"threshold": args.threshold})

    log_cfg = settings.logging
    level = "debug" if args.verbose else "error" if args.quiet else log_cfg.level
    logger = RunLogger(level=level, log_dir=log_cfg.log_dir, max_logs=log_cfg.max_logs,
                       to_file=log_cfg.to_file, stream=err)
    if logger.get_log_path() is not None:
        logger.info(f"[main] Run log: {logger.get_log_path()}")

    try:
        status = _dispatch(args, settings, logger, out)
    except _UsageError as e:
        err.write(f"capnet: error: {e}\n")
        return USAGE_ERROR
    except CapnetError as e:
        logger.error(f"[main] {e}")
        return e.exit_status
    except ValueError as e:
        logger.error(f"[main] {e}")
        return INPUT_ERROR
    logger.debug(f"[main] '{args.command}' finished with status {status}")
    return status


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
