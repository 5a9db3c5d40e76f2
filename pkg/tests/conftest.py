"""Shared fixtures: small fields and the five-qubit golden code."""

import pytest

from eaqecc import GF, LinearCode


def vec(text: str) -> list[int]:
    """Parse '10010|01100' into a flat list of integer codes."""
    a, b = text.split("|")
    return [int(ch) for ch in a] + [int(ch) for ch in b]


# Basis of the [[5,1,3;0]]_2 five-qubit stabilizer code.
FIVE_QUBIT_ROWS = [
    vec("10010|01100"),
    vec("01001|00110"),
    vec("10100|00011"),
    vec("01010|10001"),
]

# Basis of its symplectic dual.
FIVE_QUBIT_DUAL_ROWS = FIVE_QUBIT_ROWS + [
    vec("00001|10010"),
    vec("00000|11111"),
]

# Puncturing at position 3 (columns 3 and 8) spans these four vectors.
FIVE_QUBIT_PUNCTURED_ROWS = [
    vec("1010|0100"),
    vec("0101|0010"),
    vec("1000|0011"),
    vec("0110|1001"),
]

# Shortening the dual at position 3 spans these four vectors.
FIVE_QUBIT_SHORTENED_DUAL_ROWS = [
    vec("1010|1011"),
    vec("0101|1101"),
    vec("0110|1001"),
    vec("0001|1010"),
]


@pytest.fixture(scope="session")
def gf2():
    return GF(2)


@pytest.fixture(scope="session")
def gf3():
    return GF(3)


@pytest.fixture(scope="session")
def gf4():
    return GF(4)


@pytest.fixture(scope="session")
def gf5():
    return GF(5)


@pytest.fixture(scope="session")
def small_fields(gf2, gf3, gf4, gf5):
    return [gf2, gf3, gf4, gf5]


@pytest.fixture()
def five_qubit(gf2):
    return LinearCode(gf2, 5, FIVE_QUBIT_ROWS)
