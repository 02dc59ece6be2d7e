import random

import pytest

from ualgebra.core import Algebra, Carrier, Operation
from ualgebra.gallery import build_boolean_example, build_powerset_semilattice
from ualgebra.representation import Frame


@pytest.fixture(scope="session")
def semilattice2():
    return build_powerset_semilattice(("x", "y"))


@pytest.fixture(scope="session")
def semilattice3():
    return build_powerset_semilattice(("x", "y", "z"))


@pytest.fixture(scope="session")
def boolean():
    return build_boolean_example()


@pytest.fixture(scope="session")
def trivial():
    carrier = Carrier(("e",))
    alg = Algebra("trivial", carrier,
                  (Operation("star", ("l", "r"), table={("e", "e"): "e"}),))
    return alg, Frame((), {})


def random_algebra(rng: random.Random, max_size: int = 4):
    """A random tabulated algebra with a binary and a unary operation,
    sometimes a nullary one, plus a random frame."""
    n = rng.randint(2, max_size)
    elements = tuple(f"a{i}" for i in range(n))
    carrier = Carrier(elements)
    binary = Operation("f", ("l", "r"), table={
        (a, b): rng.choice(elements) for a in elements for b in elements
    })
    unary = Operation("u", ("a",), table={(a,): rng.choice(elements) for a in elements})
    ops = [binary, unary]
    if rng.random() < 0.5:
        ops.append(Operation("c", (), table={(): rng.choice(elements)}))
    alg = Algebra("random", carrier, tuple(ops))
    k = rng.randint(1, 2)
    labels = tuple(f"x{i}" for i in range(k))
    frame = Frame(labels, {x: rng.choice(elements) for x in labels})
    return alg, frame
