import pytest

from gaussrank import MonodromyDatum, build_basis, parse_branch_points


def pytest_addoption(parser):
    parser.addoption(
        "--run-slow",
        action="store_true",
        default=False,
        help="run the long survey rows (genus 13..30)",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-slow"):
        return
    skip = pytest.mark.skip(reason="needs --run-slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


_BASIS_CACHE = {}


@pytest.fixture(scope="session")
def cached_basis():
    """Memoized cover-plus-basis builder shared across test modules."""

    def build(m, a, precision, points=None):
        key = (m, tuple(a), precision, points)
        if key not in _BASIS_CACHE:
            parsed = parse_branch_points(points) if points else None
            _BASIS_CACHE[key] = build_basis(
                MonodromyDatum(m, tuple(a)), parsed, precision
            )
        return _BASIS_CACHE[key]

    return build
