import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from bentfn.gf2m import FieldContext

ALT_POLY_7 = 0x89  # x^7 + x^3 + 1


@pytest.fixture(scope="session")
def ctx3():
    return FieldContext(3)


@pytest.fixture(scope="session")
def ctx5():
    return FieldContext(5)


@pytest.fixture(scope="session")
def ctx7():
    return FieldContext(7)


@pytest.fixture(scope="session")
def ctx7_alt():
    return FieldContext(7, ALT_POLY_7)


@pytest.fixture(scope="session")
def ctx11():
    return FieldContext(11)
