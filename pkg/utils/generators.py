"""Seeded random edge-colored graph models."""
import random
from itertools import combinations
from typing import List, Optional, Tuple

from config.config import DENSE_PALETTE_FACTOR, EDGE_PROBABILITIES, GENERATOR_MODELS
from core.errors import InputError
from core.graph import EdgeColoredGraph


def random_edges(n: int, p: float, rng: random.Random) -> List[Tuple[int, int]]:
    """Erdős–Rényi G(n, p) edge list in lexicographic order."""
    return [(i, j) for i, j in combinations(range(n), 2) if rng.random() < p]


def uniform_graph(n: int, rng: random.Random, p: Optional[float] = None) -> EdgeColoredGraph:
    """G(n, p) with colors drawn uniformly from a palette of size 2, m/2 or m."""
    p = rng.choice(EDGE_PROBABILITIES) if p is None else p
    edges = random_edges(n, p, rng)
    m = len(edges)
    palette = max(1, rng.choice([2, m // 2, m]))
    return EdgeColoredGraph(n, ((u, v, rng.randrange(palette)) for u, v in edges))


def rainbow_graph(n: int, rng: random.Random, p: Optional[float] = None) -> EdgeColoredGraph:
    p = rng.choice(EDGE_PROBABILITIES) if p is None else p
    return EdgeColoredGraph(n, ((u, v, i) for i, (u, v) in enumerate(random_edges(n, p, rng))))


def monochromatic_graph(n: int, rng: random.Random, p: Optional[float] = None) -> EdgeColoredGraph:
    p = rng.choice(EDGE_PROBABILITIES) if p is None else p
    return EdgeColoredGraph(n, ((u, v, 0) for u, v in random_edges(n, p, rng)))


def round_robin_coloring(n: int) -> List[Tuple[int, int, int]]:
    """
    Proper edge coloring of K_n by the circle method: n-1 colors for even n,
    n colors for odd n (a phantom vertex sits out each round).
    """
    size = n if n % 2 == 0 else n + 1
    triples = []
    for r in range(size - 1):
        pairs = [(size - 1, r)]
        pairs.extend(((r + i) % (size - 1), (r - i) % (size - 1)) for i in range(1, size // 2))
        triples.extend((u, v, r) for u, v in pairs if u < n and v < n)
    return triples


def proper_complete_graph(n: int, rng: Optional[random.Random] = None) -> EdgeColoredGraph:
    """K_n properly colored; vertex ids and color ids are shuffled when rng is given."""
    triples = round_robin_coloring(n)
    if rng is None:
        return EdgeColoredGraph(n, triples)
    perm = list(range(n))
    rng.shuffle(perm)
    palette = sorted({c for _, _, c in triples})
    relabel = palette[:]
    rng.shuffle(relabel)
    recolor = dict(zip(palette, relabel))
    return EdgeColoredGraph(n, ((perm[u], perm[v], recolor[c]) for u, v, c in triples))


def dense_graph(n: int, rng: random.Random) -> EdgeColoredGraph:
    """K_n with colors drawn uniformly from a palette of DENSE_PALETTE_FACTOR * n colors."""
    palette = DENSE_PALETTE_FACTOR * n
    return EdgeColoredGraph(n, ((u, v, rng.randrange(palette)) for u, v in combinations(range(n), 2)))


def generate(model: str, n: int, rng: random.Random, p: Optional[float] = None) -> EdgeColoredGraph:
    """
    Draw one graph from a named model.

    Args:
        model (str): One of GENERATOR_MODELS.
        n (int): Order.
        rng (random.Random): Source of all randomness.
        p (float): Edge probability for the G(n, p) based models.
    """
    if n < 1:
        raise InputError(f"order must be positive, got {n}")
    if model == "uniform":
        return uniform_graph(n, rng, p)
    if model == "rainbow":
        return rainbow_graph(n, rng, p)
    if model == "monochromatic":
        return monochromatic_graph(n, rng, p)
    if model == "proper-complete":
        return proper_complete_graph(n, rng)
    if model == "dense":
        return dense_graph(n, rng)
    raise InputError(f"unknown model {model!r}; expected one of {', '.join(GENERATOR_MODELS)}")
