import sys
from pathlib import Path

import pytest

from wosnet import kernels

DATA = Path(__file__).parent / "data"
sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def two_records_path():
    return DATA / "two_records.txt"


@pytest.fixture(params=sorted(kernels.BACKENDS))
def backend(request, monkeypatch):
    """Run a test once per available kernel backend."""
    impl = kernels.BACKENDS[request.param]
    monkeypatch.setattr(kernels, "cooccurrence", impl.cooccurrence)
    monkeypatch.setattr(kernels, "component_roots", impl.component_roots)
    return request.param


_ACCEPTANCE: dict[str, list] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(name): exit criterion, reported in the summary")


def pytest_runtest_logreport(report):
    marker = dict(report.user_properties).get("acceptance")
    if marker is None:
        return
    entry = _ACCEPTANCE.setdefault(report.nodeid, [marker, "PASS", 0.0])
    entry[2] += report.duration
    if report.failed:
        entry[1] = "FAIL"


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("acceptance")
        if m is not None:
            item.user_properties.append(("acceptance", m.args[0]))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, status, secs in _ACCEPTANCE.values():
        terminalreporter.write_line(f"{status}  {name}  ({secs:.1f}s)")
