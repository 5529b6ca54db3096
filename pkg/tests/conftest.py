import sys
from pathlib import Path

import pytest

from tetraclausen.mpcore import PrecisionCtx

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture(scope="session")
def ctx50():
    return PrecisionCtx(50)


@pytest.fixture(scope="session")
def ctx60():
    return PrecisionCtx(60)


@pytest.fixture(scope="session")
def ctx100():
    return PrecisionCtx(100)
