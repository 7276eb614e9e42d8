import random

import pytest

from chromacount.graphs import Graph


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    import itertools

    edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)
