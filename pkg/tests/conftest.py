import pytest

from qdgg.fibonacci import fib_graphs
from qdgg.permutations import perm_graphs
from qdgg.reflection import build_by_reflection
from qdgg.tableaux import tab_graphs
from qdgg.trees import tree_graphs


@pytest.fixture(scope="session")
def fib1_h8():
    return fib_graphs(1, 8)


@pytest.fixture(scope="session")
def fib2_h7():
    return fib_graphs(2, 7)


@pytest.fixture(scope="session")
def fib3_h7():
    return fib_graphs(3, 7)


@pytest.fixture(scope="session")
def perm_h7():
    return perm_graphs(7)


@pytest.fixture(scope="session")
def tab_h7():
    return tab_graphs(7)


@pytest.fixture(scope="session")
def tree_h8():
    return tree_graphs(8)


@pytest.fixture(scope="session")
def refl1_h9():
    return build_by_reflection(1, 9)


@pytest.fixture(scope="session")
def refl2_h9():
    return build_by_reflection(2, 9)
