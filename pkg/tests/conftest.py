import time

import pytest

from vpf import so5


@pytest.fixture(scope="session")
def table_build():
    """The full chamber table, built once per session, with its wall time."""
    start = time.monotonic()
    table = so5.build_chamber_table()
    return table, time.monotonic() - start


@pytest.fixture(scope="session")
def table(table_build):
    return table_build[0]
