"""
Test that the capnet architecture is sound and components are importable.
This module verifies that:
- The main configuration file (capnet.yaml) is valid.
- Invalid settings are rejected by the pydantic models.
- All strategy factories can create their respective generators.
- The run logger writes, rotates and indexes its log files.
- The CongestionRouter answers queries with the injected logger.
"""
import io
import sys
import tempfile
from pathlib import Path

import yaml
from pydantic import ValidationError

# --- Add repository root to path ---
# This allows 'capnet' to be imported when the file is run directly
FILE = Path(__file__).resolve()
ROOT = FILE.parent.parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))
# ------------------------------------

try:
    from capnet.core.config_models import OracleConfig, ScenarioConfig, Settings
    from capnet.core.density import MIN_DEGREE
    from capnet.core.logger import RunLogger
    from capnet.core.router import CongestionRouter
    from capnet.core.routing import RouteScope, WeightPolicy
    from capnet.strategies import get_load_model, get_topology, list_available_strategies
    from capnet.strategies.loads.hotspot import HotspotLoadModel
    from capnet.strategies.loads.uniform import UniformLoadModel
    from capnet.strategies.topology.barbell import BarbellTopology
    from capnet.strategies.topology.grid import GridTopology
    from capnet.strategies.topology.preferential import PreferentialTopology
    from capnet.strategies.topology.random_uniform import RandomUniformTopology
    from capnet.testing import BARBELL_ROUTING, load_testdata

except ImportError as e:
    print(f"FATAL: Failed to import necessary modules: {e}")
    print("Please ensure the dependencies in requirements.txt are installed")
    print(f"Sys path: {sys.path}")
    sys.exit(1)


def test_config_loading():
    """Verify the main config/capnet.yaml is valid"""
    print("Testing: Main config file validation...")
    config_path = FILE.parent / "config" / "capnet.yaml"
    if not config_path.exists():
        raise FileNotFoundError(f"Config file not found at {config_path}")

    with open(config_path, 'r') as f:
        config_data = yaml.safe_load(f)

    # This will raise a ValidationError if anything is wrong
    settings = Settings(**config_data)

    assert settings.congestion.threshold == 0.7
    assert settings.congestion.strict is True
    assert settings.routing.weight_policy == 'unit'
    assert settings.oracle.max_subset_nodes == 15
    assert settings.simulation.topology == 'barbell'
    assert Settings() == Settings(**{})
    print("✓ Main config file loaded and validated successfully")


def test_invalid_settings_are_rejected():
    """Verify the models refuse values outside their ranges"""
    print("Testing: Settings validation...")
    for bad in ({"congestion": {"threshold": -0.1}},
                {"routing": {"weight_policy": "latency"}},
                {"density": {"max_clique_k": 1}}):
        try:
            Settings(**bad)
        except ValidationError:
            continue
        raise AssertionError(f"accepted invalid settings: {bad}")

    for bad in ({"max_subset_nodes": 16}, {"max_path_nodes": 13}):
        try:
            OracleConfig(**bad)
        except ValidationError:
            continue
        raise AssertionError(f"accepted invalid oracle limits: {bad}")

    try:
        ScenarioConfig(low_band=(0.5, 0.1))
    except ValidationError:
        pass
    else:
        raise AssertionError("accepted a reversed load band")
    print("✓ Invalid settings are rejected")


def test_strategy_factories():
    """Verify all strategy factories can create their strategies"""
    print("Testing: Strategy factory instantiation...")

    # 1. Create config objects
    barbell_cfg = ScenarioConfig(topology="barbell", nodes=5, edge_param=1)
    grid_cfg = ScenarioConfig(topology="grid", nodes=12, edge_param=4)
    pa_cfg = ScenarioConfig(topology="preferential_attachment", nodes=20, edge_param=3)
    gnp_cfg = ScenarioConfig(topology="random_uniform", nodes=10, edge_param=0.3)
    uniform_cfg = ScenarioConfig(load_model="uniform", uniform_range=(0.2, 0.4))

    # 2. Test factories
    t_barbell = get_topology('barbell', barbell_cfg)
    t_grid = get_topology('grid', grid_cfg)
    t_pa = get_topology('preferential_attachment', pa_cfg)
    t_gnp = get_topology('random_uniform', gnp_cfg)
    l_hotspot = get_load_model('hotspot', ScenarioConfig())
    l_uniform = get_load_model('uniform', uniform_cfg)

    # 3. Assert types
    assert isinstance(t_barbell, BarbellTopology)
    assert isinstance(t_grid, GridTopology)
    assert isinstance(t_pa, PreferentialTopology)
    assert isinstance(t_gnp, RandomUniformTopology)
    assert isinstance(l_hotspot, HotspotLoadModel)
    assert isinstance(l_uniform, UniformLoadModel)

    # 4. Assert config values were passed
    assert t_barbell.block == 5 and t_barbell.path_length == 1
    assert (t_grid.rows, t_grid.columns) == (3, 4)
    assert t_pa.attachments == 3
    assert l_hotspot.high_band == (0.8, 0.95)
    assert (l_uniform.low, l_uniform.high) == (0.2, 0.4)

    available = list_available_strategies()
    assert set(available["topology"]) == {"random_uniform", "preferential_attachment", "grid", "barbell"}
    assert set(available["load_model"]) == {"uniform", "hotspot"}
    print("✓ All strategy factories work correctly")


def test_run_logger_rotation():
    """Verify log files are numbered, capped at max_logs and indexed"""
    print("Testing: Run logger files...")
    with tempfile.TemporaryDirectory() as tmp:
        loggers = [RunLogger(level="debug", log_dir=tmp, max_logs=2, to_file=True, stream=io.StringIO())
                   for _ in range(3)]
        remaining = sorted(p.name for p in Path(tmp).glob("capnet_run_*.log"))
        assert len(remaining) == 2
        assert remaining[-1].startswith("capnet_run_0003_")

        last = loggers[-1]
        last.log_summary({"Command": "cover", "Status": "ok"})
        assert "Command: cover" in last.get_log_path().read_text()
        index = (Path(tmp) / "capnet_run_index.txt").read_text()
        assert "Command: cover | Status: ok" in index

    quiet = io.StringIO()
    RunLogger(level="error", stream=quiet).info("hidden")
    assert quiet.getvalue() == ""
    print("✓ Run logger works correctly")


def test_router_uses_injected_logger():
    """Verify the router logs through the logger it was given"""
    print("Testing: CongestionRouter wiring...")
    stream = io.StringIO()
    router = CongestionRouter(load_testdata(BARBELL_ROUTING), Settings(), RunLogger(stream=stream))
    report = router.route(MIN_DEGREE, 3, "s", "t", WeightPolicy.UNIT, RouteScope.FULL)
    assert report.path == ["s", "d1", "d2", "t"]
    assert "[CongestionRouter]" in stream.getvalue()
    assert "congested core: 8 nodes, 13 links" in stream.getvalue()
    print("✓ CongestionRouter works correctly")


def run_sync_test(test_func):
    """Simple helper to run a single test"""
    try:
        test_func()
        return True
    except AssertionError as e:
        print(f"✗ {test_func.__name__} failed: {e}")
    except Exception as e:
        print(f"✗ {test_func.__name__} error: {e}")
    return False


def run_all_tests():
    """Run all architecture validation tests"""
    print("\n" + "="*50)
    print("capnet Architecture Validation Tests")
    print("="*50 + "\n")

    tests = [
        test_config_loading,
        test_invalid_settings_are_rejected,
        test_strategy_factories,
        test_run_logger_rotation,
        test_router_uses_injected_logger,
    ]

    passed = 0
    failed = 0

    for test in tests:
        if run_sync_test(test):
            passed += 1
        else:
            failed += 1
        print()  # Newline for readability

    print("="*50)
    print(f"Results: {passed} passed, {failed} failed")
    print("="*50)

    if failed == 0:
        print("\n✅ All tests passed! Architecture is sound.\n")
    else:
        print(f"\n❌ {failed} test(s) failed. Please fix before proceeding.\n")

    return failed == 0


if __name__ == "__main__":
    success = run_all_tests()
    sys.exit(0 if success else 1)
