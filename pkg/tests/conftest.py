import random

import pytest

from kpuzzle.config import OracleSettings
from kpuzzle.young import BoxContext


@pytest.fixture
def gr14() -> BoxContext:
    return BoxContext(1, 4)


@pytest.fixture
def gr24() -> BoxContext:
    return BoxContext(2, 4)


@pytest.fixture
def gr25() -> BoxContext:
    return BoxContext(2, 5)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240229)


@pytest.fixture
def oracle_settings() -> OracleSettings:
    return OracleSettings(seed=11, max_value=53, trials=6, max_retries=8)
