import random
from fractions import Fraction

import pytest

from conftest import catalog_pool, random_lattice
from torusbt import intmat
from torusbt import lattices as lat
from torusbt.errors import NoSolution
from torusbt.exact import lcm
from torusbt.groups import conjugacy_classes, subgroup_classes
from torusbt.induction import (ClassFunction, artin_induction, character_of,
                               ono_decomposition, permutation_character_table)


def reconstruct(g, dec, classes=None):
    classes = subgroup_classes(g) if classes is None else classes
    cols = permutation_character_table(g, classes)
    n = len(conjugacy_classes(g))
    return tuple(sum(dec.coefficients.get(j, 0) * cols[j][i]
                     for j in range(len(cols))) for i in range(n))


def test_coset_lattice_decomposes_to_itself(s3):
    cls = subgroup_classes(s3)
    for c in cls:
        x = lat.permutation_lattice(s3, c)
        dec = artin_induction(character_of(x))
        assert dec.m == 1
        assert dec.coefficients == {c.class_id: 1}


def test_sign_lattice_c2(c2):
    dec = artin_induction(character_of(lat.sign_lattice(c2)))
    assert dec.m == 1
    assert dec.coefficients == {0: 1, 1: -1}     # chi- = chi_reg - chi_triv


def test_standard_s3_lattice(s3):
    std = lat.from_generator_matrices(s3, 2, [
        intmat.from_rows([[0, -1], [1, -1]]),
        intmat.from_rows([[-1, 1], [0, 1]])])
    chi = character_of(std)
    assert chi.values == (2, 0, -1)
    dec = artin_induction(chi)
    assert dec.m == 1
    assert reconstruct(s3, dec) == (2, 0, -1)
    assert dec.coefficients == {1: 1, 3: -1}     # chi_{Z[S3/C2]} - chi_triv


def test_identity_verified_on_random_sums(c2, s3, v4):
    rng = random.Random(23)
    pool = catalog_pool(c2, s3, v4)
    for key, g in (("c2", c2), ("s3", s3), ("v4", v4)):
        for _ in range(6):
            x = random_lattice(pool[key], rng, max_rank=5)
            chi = character_of(x)
            dec = artin_induction(chi)
            got = reconstruct(g, dec)
            assert got == tuple(dec.m * v for v in chi.values)


def test_merged_solution_of_direct_sum(s3):
    std = lat.from_generator_matrices(s3, 2, [
        intmat.from_rows([[0, -1], [1, -1]]),
        intmat.from_rows([[-1, 1], [0, 1]])])
    y = lat.permutation_lattice(s3, subgroup_classes(s3)[2])
    da, db = artin_induction(character_of(std)), artin_induction(character_of(y))
    m = lcm(da.m, db.m)
    merged = {}
    for dec, scale in ((da, m // da.m), (db, m // db.m)):
        for cid, a in dec.coefficients.items():
            merged[cid] = merged.get(cid, 0) + scale * a
    s = lat.direct_sum(std, y)
    chi = character_of(s)
    got = reconstruct(s3, artin_induction(chi))
    # merged coefficients satisfy the identity with m = lcm of parts
    cols = permutation_character_table(s3)
    lhs = tuple(m * v for v in chi.values)
    rhs = tuple(sum(merged.get(j, 0) * cols[j][i] for j in range(len(cols)))
                for i in range(len(lhs)))
    assert lhs == rhs
    assert got == tuple(artin_induction(chi).m * v for v in chi.values)


def test_non_character_rejected(c2):
    with pytest.raises(NoSolution):
        artin_induction(ClassFunction(c2, (Fraction(1, 2), Fraction(0))))
    # class function outside the permutation-character span: over C3 the
    # span forces equal values on the two nontrivial classes
    from torusbt.groups import cyclic_group
    c3 = cyclic_group(3)
    with pytest.raises(NoSolution):
        artin_induction(ClassFunction(c3, (Fraction(0), Fraction(1), Fraction(-1))))


def test_determinism(s3):
    std = lat.from_generator_matrices(s3, 2, [
        intmat.from_rows([[0, -1], [1, -1]]),
        intmat.from_rows([[-1, 1], [0, 1]])])
    d1 = artin_induction(character_of(std))
    d2 = artin_induction(character_of(std))
    assert d1 == d2


def test_ono_decomposition_examples(c2):
    m, p, q, _ = ono_decomposition(lat.trivial_lattice(c2))
    assert (m, p, q) == (1, {}, {1: 1})
    m, p, q, _ = ono_decomposition(lat.sign_lattice(c2))
    assert (m, p, q) == (1, {1: 1}, {0: 1})      # T + Gm ~ Res Gm
    m, p, q, _ = ono_decomposition(lat.permutation_lattice(c2, (0,)))
    assert (m, p, q) == (1, {}, {0: 1})


def test_ono_identity_on_catalog(c2, s3, v4):
    pool = catalog_pool(c2, s3, v4)
    for key, g in (("c2", c2), ("s3", s3), ("v4", v4)):
        classes = subgroup_classes(g)
        cols = permutation_character_table(g, classes)
        for x in pool[key]:
            m, p_spec, q_spec, _ = ono_decomposition(x, classes)
            chi = character_of(x).values
            nclasses = len(chi)
            for i in range(nclasses):
                lhs = m * chi[i] + sum(mult * cols[j][i]
                                       for j, mult in p_spec.items())
                rhs = sum(mult * cols[j][i] for j, mult in q_spec.items())
                assert lhs == rhs
