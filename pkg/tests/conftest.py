"""Shared generators for randomized construction specs."""

from __future__ import annotations

import random

import pytest

import ccckit as ck
from ccckit.qary import is_permutation_mod


def rand_table(rng: random.Random, q: int) -> tuple:
    return tuple(rng.randrange(q) for _ in range(q))


def rand_perm_table(rng: random.Random, q: int, p: int) -> tuple:
    """Length-q table whose values mod p permute {0..p-1} on inputs {0..p-1}."""
    sigma = rng.sample(range(p), p)
    return tuple(sigma[u % p] + p * rng.randrange(q // p) for u in range(q))


def rand_nonperm_table(rng: random.Random, q: int, p: int) -> tuple:
    while True:
        t = rand_table(rng, q)
        if not is_permutation_mod(t, p):
            return t


def rand_theorem1_spec(rng: random.Random, q: int, m: int, identity_pi: bool = False):
    pi = tuple(range(m)) if identity_pi else tuple(rng.sample(range(m), m))
    h = [rand_perm_table(rng, q, q) for _ in range(m - 1)]
    hp = [rand_perm_table(rng, q, q) for _ in range(m - 1)]
    g = [rand_table(rng, q) for _ in range(m)]
    return ck.theorem1_spec(q, m, h, hp, g, pi)


def rand_theorem2_spec(rng: random.Random, p1, p2, m1, m2, lam=None, identity_pi=False):
    q = p1 * p2
    if identity_pi:
        pi = tuple(range(m1))
        pip = tuple(range(m1, m1 + m2))
    else:
        pi = tuple(rng.sample(range(m1), m1))
        pip = tuple(m1 + i for i in rng.sample(range(m2), m2))
    return ck.theorem2_spec(
        p1, p2, m1, m2, pi=pi, pip=pip,
        f=[rand_perm_table(rng, q, p1) for _ in range(m1 - 1)],
        fp=[rand_perm_table(rng, q, p1) for _ in range(m1 - 1)],
        h=[rand_perm_table(rng, q, p2) for _ in range(m2 - 1)],
        hp=[rand_perm_table(rng, q, p2) for _ in range(m2 - 1)],
        g=[rand_table(rng, q) for _ in range(m1)],
        gp=[rand_table(rng, q) for _ in range(m2)],
        f0=rand_table(rng, q),
        h0=rand_table(rng, q),
        lam=rng.randrange(q) if lam is None else lam,
    )


def rand_root_sequence(rng: random.Random, q: int, L: int, holes: bool = False) -> ck.RootSequence:
    ents = []
    for _ in range(L):
        if holes and rng.random() < 0.3:
            ents.append(None)
        else:
            ents.append(rng.randrange(q))
    return ck.RootSequence(q, tuple(ents))


@pytest.fixture
def rng():
    return random.Random(0xC0DE)
