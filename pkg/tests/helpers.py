import numpy as np

from symstars import Star, StarSet, normalize


def random_state(rng, d):
    c = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    return normalize(c)


def random_star(rng):
    v = rng.standard_normal(2) + 1j * rng.standard_normal(2)
    return Star(v[0], v[1])


def random_star_set(rng, n):
    return StarSet.from_stars([random_star(rng) for _ in range(n)])
