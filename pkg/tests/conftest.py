import os

import pytest


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False,
                     help="run 16^8-scale enumerations (several minutes each)")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow") or os.environ.get("Z4U_SLOW") == "1":
        return
    skip = pytest.mark.skip(reason="16^8-scale; enable with --runslow or Z4U_SLOW=1")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)
