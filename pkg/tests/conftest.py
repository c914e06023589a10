from __future__ import annotations

import random
from fractions import Fraction

from momentcert.lattice import primitive_part
from momentcert.polytope import Polytope, polytope

OFFSET_CHOICES = [Fraction(k, 2) for k in range(1, 7)]


def random_polytope(rng: random.Random, n: int, d: int, even: bool | None = None) -> Polytope:
    """A valid random facet system with the origin interior.

    Normals are random primitive vectors with entries in [-3, 3]; offsets are
    small positive rationals, re-drawn until no (normal, offset) pair repeats.
    even=True/False forces the parity of the facet count.
    """
    d = max(d, n)
    if even is True and d % 2:
        d += 1
    if even is False and d % 2 == 0:
        d += 1
    facets: list[tuple[tuple[int, ...], Fraction]] = []
    seen = set()
    while len(facets) < d:
        vec = tuple(rng.randint(-3, 3) for _ in range(n))
        if all(x == 0 for x in vec):
            continue
        normal = primitive_part(vec)
        offset = rng.choice(OFFSET_CHOICES)
        if (normal, offset) in seen:
            continue
        seen.add((normal, offset))
        facets.append((normal, offset))
    return polytope(n, facets)
