import math
import random

import pytest

from facetflag.complexes import (
    facets_to_poset,
    gen_complete_complex,
    gen_cross_polytope_solid,
    gen_cubical_grid,
    gen_hypercube_solid,
    gen_random_pure,
    gen_simplex,
)

THREE_FACETS = [{1, 2, 3, 4}, {1, 2, 4, 6}, {1, 2, 5, 6}]


def random_corpus(count=200):
    """Seeded random pure simplicial complexes with n <= 8, k <= 4, m <= 15."""
    out = []
    for seed in range(count):
        rng = random.Random(seed)
        k = rng.randint(1, 4)
        n = rng.randint(k, 8)
        m = rng.randint(1, min(15, math.comb(n, k)))
        facets = gen_random_pure(n, k, m, seed)
        out.append((f"random[{seed}:n={n},k={k},m={m}]", facets_to_poset(facets)))
    return out


def canonical_corpus(max_elements=300):
    """Every canonical generator instance with at most ``max_elements`` elements."""
    items = [("three_facets", facets_to_poset(THREE_FACETS))]
    for n in range(1, 9):
        for k in range(1, n + 1):
            items.append((f"complete({n},{k})", facets_to_poset(gen_complete_complex(n, k))))
    for k in range(1, 7):
        items.append((f"simplex({k})", facets_to_poset(gen_simplex(k))))
    for d in range(1, 6):
        items.append((f"cross({d})", gen_cross_polytope_solid(d)))
        items.append((f"cube({d})", gen_hypercube_solid(d)))
    for shape in [(2,), (3,), (2, 1), (2, 2), (3, 1), (3, 3), (2, 1, 1), (3, 1, 1), (2, 2, 1), (2, 2, 2), (2, 1, 1, 1)]:
        items.append((f"grid{shape}", gen_cubical_grid(shape)))
    return [(name, p) for name, p in items if len(p) <= max_elements]


@pytest.fixture(scope="session")
def three_facets():
    return facets_to_poset(THREE_FACETS)


@pytest.fixture(scope="session")
def complete53():
    return facets_to_poset(gen_complete_complex(5, 3))


@pytest.fixture(scope="session")
def octahedron():
    return gen_cross_polytope_solid(3)


@pytest.fixture(scope="session")
def cube3():
    return gen_hypercube_solid(3)


def random_graph_degrees(n, p, seed):
    """Degree sequence of a G(n, p) random graph."""
    rng = random.Random(seed)
    deg = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                deg[i] += 1
                deg[j] += 1
    return deg


# acceptance reporting: one line per criterion in the terminal summary

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    number, title = marker.args
    ok = call.excinfo is None
    prev = _CRITERIA.get(number, (title, True))
    _CRITERIA[number] = (title, prev[1] and ok)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, ok = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}")
