"""Shared samplers and oracles for the test suite."""

import math
import random

from hypercomplex import SphericalForm, to_cartesian

TAU = 2.0 * math.pi


def random_form(rng: random.Random, dim: int, max_modulus: float = 3.0,
                lat_bound: float = 1.2) -> SphericalForm:
    """Canonical-range value with latitudes bounded away from +-pi/2 so all
    partial moduli stay comfortably nonzero."""
    args = [rng.uniform(0.0, TAU)] + [
        rng.uniform(-lat_bound, lat_bound) for _ in range(dim - 2)
    ]
    return SphericalForm(rng.uniform(0.2, max_modulus), tuple(args))


def random_vec(rng: random.Random, dim: int, **kw):
    return to_cartesian(random_form(rng, dim, **kw))


def classical_escape(cx: float, cy: float, n_max: int) -> int:
    """Independent complex-plane escape map: z -> z^2 + c, strict radius-2
    test on the squared modulus, n_max = member."""
    x = y = 0.0
    for n in range(1, n_max + 1):
        x, y = x * x - y * y + cx, 2.0 * x * y + cy
        if x * x + y * y > 4.0:
            return n
    return n_max


def max_gap(seq_a, seq_b) -> float:
    return max(abs(x - y) for x, y in zip(seq_a, seq_b))


def angle_gap(a: float, b: float) -> float:
    return abs(math.remainder(a - b, TAU))
