"""Random structures for property tests, the oracle check and the CLI."""

from __future__ import annotations

import random
from fractions import Fraction

from .errors import ConstructionError
from .integrability import build_from_theta
from .roots import RootSystem, theta_closure, weyl_group
from .structures import BTransform, Complex, InvariantGCS, NonComplex, b_transform
from .weyl_action import act

POOL_BOUND = 50


def random_rational(rng: random.Random, bound: int = POOL_BOUND, nonzero: bool = False) -> Fraction:
    while True:
        q = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if q or not nonzero:
            return q


def random_positive(rng: random.Random, bound: int = POOL_BOUND) -> Fraction:
    return Fraction(rng.randint(1, bound), rng.randint(1, bound))


def random_block(rng: random.Random, kind: str | None = None, bound: int = POOL_BOUND):
    kind = kind or rng.choice(("C+", "C-", "NC"))
    if kind == "C+":
        return Complex(1)
    if kind == "C-":
        return Complex(-1)
    return NonComplex(random_rational(rng, bound), random_rational(rng, bound, nonzero=True))


def random_structure(rs: RootSystem, rng: random.Random, bound: int = POOL_BOUND) -> InvariantGCS:
    """Uniform random type per root, entries from the rational pool."""
    return InvariantGCS(rs, tuple(random_block(rng, bound=bound) for _ in rs.positive_roots))


def additive_b(rs: RootSystem, rng: random.Random, bound: int = POOL_BOUND) -> BTransform:
    """B coefficients extended linearly from random simple-root values."""
    simple = [random_rational(rng, bound) for _ in range(rs.rank)]
    return BTransform(tuple(sum((n * s for n, s in zip(r, simple)), Fraction(0)) for r in rs.positive_roots))


def random_integrable(rs: RootSystem, rng: random.Random, bound: int = POOL_BOUND) -> InvariantGCS:
    """Standard cell member, moved by a random Weyl element and an additive B."""
    theta = [r for r in rs.simple_roots if rng.random() < 0.5]
    x = {t: random_positive(rng, bound) for t in theta}
    b = {t: random_rational(rng, bound) for t in theta}
    j = build_from_theta(rs, theta, x, b)
    w = rng.choice(weyl_group(rs))
    return b_transform(act(w, j), additive_b(rs, rng, bound))


def perturb(j: InvariantGCS, rng: random.Random, bound: int = POOL_BOUND) -> InvariantGCS:
    """Change one block: usually nudges a parameter, sometimes swaps the type."""
    k = rng.randrange(j.algebra.d)
    old = j.blocks[k]
    if isinstance(old, NonComplex) and rng.random() < 0.7:
        if rng.random() < 0.5:
            new = NonComplex(old.a + random_rational(rng, bound, nonzero=True), old.x)
        else:
            x = old.x + random_rational(rng, bound, nonzero=True)
            new = NonComplex(old.a, x if x else old.x * 2)
    else:
        new = random_block(rng, bound=bound)
    blocks = list(j.blocks)
    blocks[k] = new
    return InvariantGCS(j.algebra, tuple(blocks))


def mixed_sample(rs: RootSystem, rng: random.Random, bound: int = POOL_BOUND) -> InvariantGCS:
    """One third uniform, one third integrable, one third a perturbed integrable structure."""
    r = rng.random()
    if r < 1 / 3:
        return random_structure(rs, rng, bound)
    j = random_integrable(rs, rng, bound)
    return j if r < 2 / 3 else perturb(j, rng, bound)
