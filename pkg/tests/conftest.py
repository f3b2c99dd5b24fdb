"""Shared fixtures for the test suite."""

import numpy as np
import pytest

from src.geometry.spaces import Space


@pytest.fixture
def euclidean():
    return Space.euclidean(1)


@pytest.fixture
def prequantized():
    return Space.prequantized(1)


@pytest.fixture
def base():
    return Space.symplectic_base(1)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
