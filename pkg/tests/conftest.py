import pytest

from gea import corpus


@pytest.fixture(scope="session")
def excd():
    return corpus.load("excd")


@pytest.fixture(scope="session")
def excd_ext():
    return corpus.load("excd_ext")


@pytest.fixture(scope="session")
def diamond():
    return corpus.load("diamond")


@pytest.fixture(scope="session")
def chain_c3():
    return corpus.load("chain_c3")


@pytest.fixture(scope="session")
def cube8():
    return corpus.load("cube8")


@pytest.fixture(scope="session")
def no_states():
    return corpus.load("no_states")


@pytest.fixture(scope="session")
def singleton():
    return corpus.load("singleton")


@pytest.fixture(scope="session")
def valid_corpus():
    return {name: corpus.load(name) for name in corpus.VALID}
