import random

import pytest

from stratachain import SimplicialComplex, builtin_complex
from stratachain.corpus import BUILTIN_NAMES, pinched_sphere


@pytest.fixture(scope="session")
def corpus():
    complexes = {name: builtin_complex(name) for name in BUILTIN_NAMES}
    complexes["pinched_sphere"] = pinched_sphere()
    return complexes


def random_complex(rng: random.Random, max_facets: int = 12) -> SimplicialComplex:
    """Random complex of dimension <= 2 with at most max_facets maximal cells."""
    n = rng.randint(3, 10)
    facets = set()
    for _ in range(rng.randint(1, max_facets)):
        k = rng.choice((0, 1, 2, 2))
        facets.add(tuple(sorted(rng.sample(range(n), k + 1))))
    return SimplicialComplex(sorted(facets))


def random_relabeling(rng: random.Random, K: SimplicialComplex) -> dict:
    vs = sorted(K.vertices())
    targets = rng.sample(range(3 * len(vs) + 5), len(vs))
    return dict(zip(vs, targets))
