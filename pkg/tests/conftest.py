import pytest

from satotwist.classify import scan
from satotwist.jacobian import CurveSextic

_SCANS: dict = {}
_LOG_KEY = pytest.StashKey[list]()


def scan_records(coeffs, d, bound, seed=0):
    """Per-prime records of a scan; shared across test modules within a session."""
    key = (tuple(coeffs), d, bound, seed)
    if key not in _SCANS:
        _SCANS[key] = list(scan(CurveSextic.from_coeffs(coeffs, d), d, bound, seed, workers=1))
    return _SCANS[key]


@pytest.fixture(scope="session")
def scans():
    return scan_records


@pytest.fixture(scope="session")
def acceptance_log(pytestconfig):
    return pytestconfig.stash.setdefault(_LOG_KEY, [])


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_LOG_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
