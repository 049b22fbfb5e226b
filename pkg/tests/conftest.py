import pytest

from builders import load


def pytest_addoption(parser):
    parser.addoption("--exhaustive", action="store_true", default=False,
        help="Run the full enumeration grids instead of seeded samples.")

def pytest_collection_modifyitems(config, items):
    if config.getoption("--exhaustive"):
        return

    skip = pytest.mark.skip(reason="full grid; run with --exhaustive")
    for item in items:
        if "exhaustive" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session")
def eight_cycle_d1():
    return load("eight_cycle_d1.graph")

@pytest.fixture(scope="session")
def shared_edge():
    return load("shared_edge.graph")

@pytest.fixture(scope="session")
def three_cycles_d1():
    return load("three_cycles_d1.graph")

@pytest.fixture(scope="session")
def three_cycles_d2():
    return load("three_cycles_d2.graph")
