import random

import pytest

from forcing_lab.graphs import build_graph


def random_graph(order: int, p: float, rng: random.Random):
    edges = [
        (u, v)
        for u in range(order)
        for v in range(u + 1, order)
        if rng.random() < p
    ]
    return build_graph(order, edges)


@pytest.fixture
def rng():
    return random.Random(0x5EED)
