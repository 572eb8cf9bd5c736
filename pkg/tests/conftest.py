"""pytest configuration: expensive-test selection and a single worker thread by default."""

import os

import pytest


def pytest_addoption(parser):
    """Add custom command line options for pytest."""
    parser.addoption(
        "--run-expensive", action="store_true", default=False, help="run expensive solver tests"
    )
    parser.addoption(
        "--run-only-expensive",
        action="store_true",
        default=False,
        help="run only expensive solver tests",
    )


def pytest_configure(config):
    """Register the expensive marker and pin the worker threads unless set by the caller."""
    config.addinivalue_line("markers", "expensive: full-resolution solver runs")
    os.environ.setdefault("NSH_THREADS", "1")


def pytest_collection_modifyitems(config, items):
    """Skip expensive tests unless asked for, or everything else with --run-only-expensive."""
    if config.getoption("--run-only-expensive"):
        marker = pytest.mark.skip(reason="only running expensive tests")
        skipped = [item for item in items if "expensive" not in item.keywords]
    elif not config.getoption("--run-expensive"):
        marker = pytest.mark.skip(reason="need --run-expensive option to run")
        skipped = [item for item in items if "expensive" in item.keywords]
    else:
        skipped = []
    for item in skipped:
        item.add_marker(marker)
