"""Shared test fixtures for cilab tests."""

import sys
import os
import pytest

# Add src to path for testing without install
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")


@pytest.fixture(autouse=True)
def reset_cilab(monkeypatch):
    """Reset cilab state before each test."""
    from cilab import _core, _emit

    for name in ("CILAB_MAX_ORDER", "CILAB_PROPAGATE_MAX", "CILAB_CANONICAL_MAX",
                 "CILAB_RANDOM_MAX", "CILAB_DEBUG", "WORKERS"):
        monkeypatch.delenv(name, raising=False)
    _core.reset()

    # Enable for tests
    _core._enabled = True
    _core._level = _core.LEVEL_DEBUG

    # Reset sequence and span context
    _emit._sequence = 0
    _emit._span_stack.clear()

    # Reset JSONL file
    _emit._jsonl_file = None

    # Reset handler so it binds to the captured stderr
    _emit._handler_installed = False
    _emit._logger.handlers.clear()

    yield

    # Cleanup
    _core.reset()


@pytest.fixture
def z2():
    from cilab import table_from_rows
    return table_from_rows([[0, 1], [1, 0]])


@pytest.fixture
def z3():
    from cilab import table_from_rows
    return table_from_rows([[0, 1, 2], [1, 2, 0], [2, 0, 1]])


@pytest.fixture
def trivial():
    from cilab import table_from_rows
    return table_from_rows([[0]])


@pytest.fixture
def constant2():
    from cilab import table_from_rows
    return table_from_rows([[0, 0], [0, 0]])


@pytest.fixture
def y_minus_x():
    """x·y = y − x (mod 3): a quasigroup that is neither left nor right CI."""
    from cilab import table_from_rows
    return table_from_rows([[0, 1, 2], [2, 0, 1], [1, 2, 0]])


@pytest.fixture
def data_dir():
    return DATA_DIR
