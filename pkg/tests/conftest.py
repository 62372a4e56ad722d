from __future__ import annotations

import pytest

from quatcodes import DoubleErrorCode, Modulus, Quaternion, SingleErrorCode
from quatcodes.textio import parse_quaternion, parse_word


@pytest.fixture(scope="session")
def mod3():
    return Modulus(Quaternion(1, 1, 1, 0))


@pytest.fixture(scope="session")
def mod7():
    return Modulus(Quaternion(2, 1, 1, 1))


@pytest.fixture(scope="session")
def mod13():
    return Modulus(Quaternion(1, 2, 2, 2))


@pytest.fixture(scope="session")
def code7(mod7):
    return SingleErrorCode(mod7, mod7.reduce(Quaternion(1, -1, -1, -1)))


@pytest.fixture(scope="session")
def code13(mod13):
    return DoubleErrorCode(mod13, mod13.reduce(Quaternion(2)))


def res(modulus, literal):
    """Residue from a quaternion literal."""
    return modulus.reduce(parse_quaternion(literal))


def word(modulus, literal):
    """Word of residues from a parenthesized literal."""
    return tuple(modulus.reduce(q) for q in parse_word(literal))
