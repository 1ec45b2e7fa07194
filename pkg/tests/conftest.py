import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from fapres.corpus import (  # noqa: E402
    build_bounce,
    build_even_succ,
    build_identity,
    build_max,
    build_nat_succ,
    build_plus_two,
    unary_corpus,
)

REPO = Path(__file__).resolve().parent.parent


@pytest.fixture(scope="session")
def nat_succ():
    return build_nat_succ()


@pytest.fixture(scope="session")
def plus_two():
    return build_plus_two()


@pytest.fixture(scope="session")
def identity():
    return build_identity()


@pytest.fixture(scope="session")
def max_alg():
    return build_max()


@pytest.fixture(scope="session")
def bounce():
    return build_bounce()


@pytest.fixture(scope="session")
def even_succ():
    return build_even_succ()


@pytest.fixture(scope="session")
def corpus():
    return unary_corpus()


@pytest.fixture(scope="session")
def example_x():
    from fapres.corpus import build_example_X

    return build_example_X()


@pytest.fixture(scope="session")
def example_x_prime():
    from fapres.corpus import build_example_X_prime

    return build_example_X_prime()
