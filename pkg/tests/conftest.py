import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    from ydom import _kernels

    _kernels.warm_up()
