# Standard Library
import os
import random

# Third Party
import pytest


@pytest.fixture(autouse=True)
def env_setup(monkeypatch):
    monkeypatch.setenv("DEBUG_MODE", "0")
    monkeypatch.setenv("K3_VERIFIER_LOG_FILE", "k3_verifier_test.log")
    monkeypatch.setenv("K3_PROPERTY_CASES", "30")
    monkeypatch.setenv("K3_RANDOM_SEED", "20240229")
    monkeypatch.setenv("K3_J30_CHAIN_EXACT", "1")


@pytest.fixture
def rng():
    return random.Random(int(os.environ["K3_RANDOM_SEED"]))


@pytest.fixture
def property_cases():
    return int(os.environ["K3_PROPERTY_CASES"])
