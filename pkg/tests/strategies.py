"""Hypothesis strategies built on the seeded random-instance generator."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from ringlat.harness import Profile, random_algebra, random_instance, random_subalgebra

SMALL = Profile((2, 3), 4)


@st.composite
def algebras(draw, profile: Profile = SMALL):
    seed = draw(st.integers(0, 10**9))
    return random_algebra(random.Random(seed), profile)[0]


@st.composite
def extensions(draw, profile: Profile = SMALL):
    """``(R, S)`` with ``R`` a proper subalgebra of the algebra ``S``."""
    seed = draw(st.integers(0, 10**9))
    inst = random_instance(seed, 0, profile)
    return inst.R, inst.S


@st.composite
def algebra_with_subalgebra(draw, profile: Profile = SMALL):
    seed = draw(st.integers(0, 10**9))
    rng = random.Random(seed)
    S = random_algebra(rng, profile)[0]
    return random_subalgebra(rng, S)[0], S


def elements_of(S, rng: random.Random, n: int):
    F = S.field
    return [tuple(F.from_int(rng.randrange(F.p)) for _ in range(S.dim)) for _ in range(n)]
