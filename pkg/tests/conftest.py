import pytest

from cli.expression import parse_bipoly_lines, parse_state
from core.affine import Level
from tests.helpers import V1_TEXT, read_data


@pytest.fixture(scope="session")
def level_neg_half() -> Level:
    return Level.of("-1/2")


@pytest.fixture(scope="session")
def level_half() -> Level:
    return Level.of("1/2")


@pytest.fixture(scope="session")
def v1(level_neg_half):
    return parse_state(V1_TEXT, level_neg_half)


@pytest.fixture(scope="session")
def p0_half_displayed():
    return parse_bipoly_lines(read_data("p0_level_half.txt"))
