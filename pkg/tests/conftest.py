import pytest

from gmdkit import suites


@pytest.fixture(scope="session")
def ring_cases():
    return {case.name: case for case in suites.ring_suite()}


@pytest.fixture(scope="session")
def ex1_profile(ring_cases):
    return ring_cases["f2-onedim-three-primes"].build()


@pytest.fixture(scope="session")
def ex2_profile(ring_cases):
    return ring_cases["f3-plane-with-two-lines"].build()


@pytest.fixture(scope="session")
def complex_cases():
    return {case.name: case for case in suites.complex_suite()}
