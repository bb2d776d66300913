"""Random triplets and statement sets for tests and benchmarks."""

from __future__ import annotations

import random

from .core import Flavor, Relation, Triplet, Universe
from .engine import MixedRepresentation


def random_triplet(rng: random.Random, n: int, flavor: Flavor = Flavor.ORDINARY) -> Triplet:
    """A uniformly labelled triplet: each variable goes to A, B, C or nowhere."""
    while True:
        a = b = c = 0
        for i in range(n):
            slot = rng.randrange(4)
            if slot == 0:
                a |= 1 << i
            elif slot == 1:
                b |= 1 << i
            elif slot == 2:
                c |= 1 << i
        if a and b:
            return Triplet(a, b, c, flavor).canonical()


def random_relation(rng: random.Random, universe: Universe, size: int,
                    flavor: Flavor = Flavor.ORDINARY) -> Relation:
    return Relation(universe, (random_triplet(rng, universe.n, flavor) for _ in range(size)))


def random_instance(rng: random.Random, n_choices=(3, 4, 5), max_statements: int = 4,
                    max_stable: int = 2) -> MixedRepresentation:
    """1..max_statements statements over n variables, up to ``max_stable`` of them stable."""
    n = rng.choice(n_choices)
    universe = Universe.of_size(n)
    count = rng.randint(1, max_statements)
    stable_count = rng.randint(0, min(max_stable, count))
    statements = [random_triplet(rng, n) for _ in range(count)]
    return MixedRepresentation.build(universe, statements[:stable_count], statements[stable_count:])


def instances(seed: int, count: int, **kwargs) -> list[MixedRepresentation]:
    rng = random.Random(seed)
    return [random_instance(rng, **kwargs) for _ in range(count)]
