import json
import random
from pathlib import Path

import pytest

from dominion.graph import Graph, build

FIXTURES = Path(__file__).parent / "fixtures"

SEED = 0


def seeded_random_graphs(count, n_max=8, probs=(0.2, 0.5, 0.8), seed=SEED):
    """Deterministic random graph corpus shared by several suites."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, n_max)
        p = rng.choice(probs)
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < p
        ]
        out.append(build(n, edges))
    return out


@pytest.fixture(scope="session")
def corpus200():
    return seeded_random_graphs(200)


@pytest.fixture(scope="session")
def corpus_no_isolated(corpus200):
    return [g for g in corpus200 if g.n == 0 or g.min_degree() >= 1]


def all_labeled_graphs(n_max=4):
    from itertools import combinations

    out = []
    for n in range(1, n_max + 1):
        pairs = list(combinations(range(n), 2))
        for bits in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
            out.append(build(n, edges))
    return out


@pytest.fixture(scope="session")
def small_graph_classes():
    """All labeled graphs on <= 4 vertices plus one representative per
    isomorphism class for n = 5 and 6 (committed fixture)."""
    with open(FIXTURES / "small_graphs.json") as fh:
        data = json.load(fh)
    out = all_labeled_graphs(4)
    for n in ("5", "6"):
        for edges in data[n]:
            out.append(build(int(n), [tuple(e) for e in edges]))
    return out


@pytest.fixture(scope="session")
def bound_table_fixture():
    with open(FIXTURES / "bound_table.json") as fh:
        return json.load(fh)
