"""Seeded random nets for property checks."""

from __future__ import annotations

import random
import string
from dataclasses import dataclass

from .diagram import NEG, POS, Arrow, Diagram, build_diagram


@dataclass(frozen=True)
class NetShape:
    max_nodes: int = 8
    max_arrows: int = 14
    edge_prob: float = 0.4
    neg_prob: float = 0.3
    min_nodes: int = 2


def random_diagram(rng: random.Random, shape: NetShape = NetShape()) -> Diagram:
    """Erdős–Rényi arrows over a random topological order.

    One arrow at most per node pair, so hard contradictions cannot arise.
    Surplus arrows beyond ``max_arrows`` are dropped at random.
    """
    count = rng.randint(shape.min_nodes, shape.max_nodes)
    names = list(string.ascii_lowercase[:count])
    order = names[:]
    rng.shuffle(order)
    pairs = [
        (order[i], order[j])
        for i in range(count)
        for j in range(i + 1, count)
        if rng.random() < shape.edge_prob
    ]
    if len(pairs) > shape.max_arrows:
        pairs = sorted(rng.sample(pairs, shape.max_arrows))
    arrows = [Arrow(s, t, NEG if rng.random() < shape.neg_prob else POS) for s, t in pairs]
    return build_diagram(arrows, nodes=names)


def population(count: int, seed: int, shape: NetShape = NetShape()) -> list[Diagram]:
    rng = random.Random(seed)
    return [random_diagram(rng, shape) for _ in range(count)]
