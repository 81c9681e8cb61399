import pytest

from mdsconv import GF, build_code, find_element_of_order
from mdsconv.distance import StateGraph


@pytest.fixture(scope='session')
def gf4():
    return GF(4)


@pytest.fixture(scope='session')
def alpha4(gf4):
    # x with x^2 = x + 1, the primitive element of the default GF(4)
    return gf4([0, 1])


@pytest.fixture(scope='session')
def code_ex1(gf4, alpha4):
    return build_code(gf4, 3, 1, alpha4)


@pytest.fixture(scope='session')
def code_ex3(gf4, alpha4):
    return build_code(gf4, 3, 2, alpha4)


@pytest.fixture(scope='session')
def code_ex4():
    F = GF(8)
    return build_code(F, 3, 2, find_element_of_order(F, 7))


class GraphCache:
    """State graphs shared across a test session, keyed by (q, n, delta, alpha code)."""

    def __init__(self):
        self._graphs = {}

    def get(self, code):
        key = (code.q, code.field.modulus, code.n, code.delta, code.alpha.code)
        g = self._graphs.get(key)
        if g is None:
            g = StateGraph(code)
            self._graphs[key] = g
        return g

    def drop(self, code):
        self._graphs.pop((code.q, code.field.modulus, code.n, code.delta, code.alpha.code), None)


@pytest.fixture(scope='session')
def graphs():
    return GraphCache()
