import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from layered_rtm.geometry import Acquisition, MediumConfig, SamplingGrid, preset_scene  # noqa: E402
from layered_rtm.layered_green import GreenEvaluator  # noqa: E402

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def medium():
    return MediumConfig(10.0, 5.0)


@pytest.fixture(scope="session")
def evaluator(medium):
    return GreenEvaluator(medium)


@pytest.fixture(scope="session")
def desk_acquisition():
    return Acquisition(20.0, 128, 128)


@pytest.fixture(scope="session")
def desk_grid():
    return SamplingGrid()


@pytest.fixture(scope="session")
def desk_tables(evaluator, desk_grid, desk_acquisition):
    import time

    from layered_rtm.rtm import GreenTables

    t0 = time.perf_counter()
    tables = GreenTables.build(evaluator, desk_grid.points, desk_acquisition)
    return tables, time.perf_counter() - t0


class DeskRuns:
    """Lazily generated desk-scale datasets shared across test modules."""

    def __init__(self, evaluator, acquisition):
        self.evaluator = evaluator
        self.acquisition = acquisition
        self._cache = {}

    def get(self, name):
        import time

        from layered_rtm.forward import generate_dataset

        if name not in self._cache:
            scene = preset_scene(name)
            t0 = time.perf_counter()
            data = generate_dataset(scene, self.acquisition, green=self.evaluator)
            self._cache[name] = (scene, data, time.perf_counter() - t0)
        return self._cache[name]


@pytest.fixture(scope="session")
def desk_runs(evaluator, desk_acquisition):
    return DeskRuns(evaluator, desk_acquisition)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
