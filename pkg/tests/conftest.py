"""Shared fixtures and the independent brute-force oracles.

Oracles here must stay independent of the code paths they check:
w2 by direct congruence search, Bernoulli numbers by the binomial
recurrence, H^1 from the all-elements cocycle complex, cyclic H^1 from
ker(norm)/im(sigma - 1).
"""

import random
from fractions import Fraction
from math import comb, gcd

import pytest

from torusbt import intmat
from torusbt import lattices as lat
from torusbt.exact import FinAbGroup
from torusbt.groups import group_from_generators, subgroup_classes


# ---------------------------------------------------------------- groups

@pytest.fixture(scope="session")
def c2():
    return group_from_generators([[1, 0]], name="C2")


@pytest.fixture(scope="session")
def s3():
    return group_from_generators([[1, 2, 0], [1, 0, 2]], name="S3")


@pytest.fixture(scope="session")
def v4():
    return group_from_generators([[1, 0, 3, 2], [2, 3, 0, 1]], name="V4")


def quaternion_generators():
    """Q8 acting on itself: elements 1,-1,i,-i,j,-j,k,-k as 0..7."""
    mul = {}
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]

    def sign_of(s):
        return -1 if s.startswith("-") else 1

    def base_of(s):
        return s.lstrip("-")

    base_mul = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("j", "1"): (1, "j"), ("k", "1"): (1, "k"),
        ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
        ("i", "j"): (1, "k"), ("j", "i"): (-1, "k"),
        ("j", "k"): (1, "i"), ("k", "j"): (-1, "i"),
        ("k", "i"): (1, "j"), ("i", "k"): (-1, "j"),
    }

    def mult(a, b):
        sa, sb = sign_of(a), sign_of(b)
        s, c = base_mul[(base_of(a), base_of(b))]
        s *= sa * sb
        return ("-" if s < 0 else "") + c

    perms = []
    for g in ("i", "j"):
        perms.append([names.index(mult(g, x)) for x in names])
    return perms


# ---------------------------------------------------------------- lattices

def sign_lattice_v4(v4, s1, s2):
    """Rank-1 lattice over V4 with generator signs s1, s2."""
    return lat.from_generator_matrices(
        v4, 1, [intmat.from_rows([[s1]]), intmat.from_rows([[s2]])])


def catalog_pool(c2, s3, v4):
    """Named indecomposable building blocks per group, for random sums."""
    s3_cls = subgroup_classes(s3)
    v4_cls = subgroup_classes(v4)
    std = lat.from_generator_matrices(s3, 2, [
        intmat.from_rows([[0, -1], [1, -1]]),
        intmat.from_rows([[-1, 1], [0, 1]])])
    return {
        "c2": [lat.trivial_lattice(c2), lat.sign_lattice(c2),
               lat.permutation_lattice(c2, (0,))],
        "s3": [lat.trivial_lattice(s3), std,
               lat.permutation_lattice(s3, s3_cls[1]),
               lat.permutation_lattice(s3, s3_cls[2])],
        "v4": [lat.trivial_lattice(v4),
               sign_lattice_v4(v4, -1, 1), sign_lattice_v4(v4, 1, -1),
               sign_lattice_v4(v4, -1, -1),
               lat.permutation_lattice(v4, v4_cls[1]),
               lat.dual(lat.norm_one_lattice(v4))],
    }


def random_unimodular(n: int, rng: random.Random, shears: int = 6) -> intmat.IntMatrix:
    """Product of random elementary shears and signed permutations."""
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(shears):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        q = rng.choice([-2, -1, 1, 2])
        for k in range(n):
            m[i][k] += q * m[j][k]
    perm = list(range(n))
    rng.shuffle(perm)
    m = [m[p] for p in perm]
    for i in range(n):
        if rng.random() < 0.5:
            m[i] = [-x for x in m[i]]
    return intmat.from_rows(m)


def random_lattice(group_pool, rng: random.Random, max_rank: int = 5):
    """Random direct sum of pool lattices, conjugated by a random basis change."""
    pool = list(group_pool)
    parts = []
    rank = 0
    while True:
        cand = rng.choice(pool)
        if rank + cand.rank > max_rank:
            break
        parts.append(cand)
        rank += cand.rank
        if rank == max_rank or rng.random() < 0.3:
            break
    if not parts:
        parts = [pool[0]]
    x = parts[0]
    for p in parts[1:]:
        x = lat.direct_sum(x, p)
    u = random_unimodular(x.rank, rng)
    return lat.conjugate_lattice(x, u)


# ---------------------------------------------------------------- oracles

def oracle_w2(modulus: int, allowed_units, search_cap: int = 2000) -> int:
    """Largest N <= cap with a^2 = 1 (mod N) for every unit a of N*modulus
    whose residue mod modulus lies in allowed_units. Brute force."""
    allowed = {u % modulus for u in allowed_units} if modulus > 1 else None
    best = 1
    for n in range(1, search_cap + 1):
        m = n * modulus
        ok = True
        for a in range(1, m + 1):
            if gcd(a, m) != 1:
                continue
            if allowed is not None and a % modulus not in allowed:
                continue
            if (a * a - 1) % n != 0:
                ok = False
                break
        if ok:
            best = max(best, n)
    return best


def oracle_bernoulli_numbers(n: int) -> list[Fraction]:
    """B_0..B_n from sum_k C(m+1, k) B_k = 0 (B1 = -1/2 convention)."""
    bs = [Fraction(1)]
    for m in range(1, n + 1):
        s = sum(Fraction(comb(m + 1, k)) * bs[k] for k in range(m))
        bs.append(-s / (m + 1))
    return bs


def oracle_h1_cyclic(x, sigma: int) -> FinAbGroup:
    """H^1(<sigma>, X) = ker(N)/im(sigma - 1) by a direct kernel/quotient."""
    g = x.group
    order = g.element_order(sigma)
    n = intmat.zeros(x.rank, x.rank)
    a = g.identity
    for _ in range(order):
        n = n + x.action[a]
        a = g.op(a, sigma)
    ker = intmat.kernel_basis(n)
    ident = intmat.identity(x.rank)
    return intmat.lattice_quotient(ker, x.action[sigma] - ident)


def oracle_h1_bar(x, elements) -> FinAbGroup:
    """H^1 from the full cocycle complex: unknowns c(h) for every h in H,
    constraints c(gh) = c(g) + g.c(h) for all pairs. Slow, for small H."""
    g = x.group
    elems = list(elements)
    pos = {h: i for i, h in enumerate(elems)}
    n = x.rank
    k = len(elems)
    rows = []
    for a in elems:
        for b in elems:
            ab = g.op(a, b)
            for i in range(n):
                row = [0] * (n * k)
                row[pos[ab] * n + i] += 1
                row[pos[a] * n + i] -= 1
                for j in range(n):
                    row[pos[b] * n + j] -= x.action[a].data[i][j]
                rows.append(row)
    constraints = intmat.from_rows(rows, n * k) if rows else intmat.zeros(0, n * k)
    cocycles = intmat.kernel_basis(constraints)
    ident = intmat.identity(n)
    cobound = intmat.vstack([x.action[h] - ident for h in elems])
    return intmat.lattice_quotient(cocycles, cobound)


def fin_ab(*factors, free=0) -> FinAbGroup:
    return FinAbGroup(tuple(factors), free)
