
import pytest

from conftest import oracle_w2
from torusbt import intmat
from torusbt import lattices as lat
from torusbt.errors import (BadReduction, NotHomomorphism, NotSurjective,
                            StabilizationBoundExceeded)
from torusbt.groups import cyclic_group, subgroup_classes
from torusbt.realization import (global_coinvariants_order, local_point_count,
                                 realization_from_images, validate_realization,
                                 w2_of_subfield, w_group_order)


@pytest.fixture(scope="module")
def r5(c2):
    return realization_from_images(c2, 5, {2: 1})


@pytest.fixture(scope="module")
def r8(c2):
    return realization_from_images(c2, 8, {7: 0, 5: 1})


@pytest.fixture(scope="module")
def r40(v4):
    return realization_from_images(v4, 40, {31: 0, 21: 1, 17: 2})


@pytest.fixture(scope="module")
def r1():
    g1 = cyclic_group(1)
    return realization_from_images(g1, 1, {})


def test_realization_f5_totally_real(c2, r5):
    assert validate_realization(r5, c2) == {"ok": True, "totally_real": True}
    # pi(-1) = pi(4) = sigma^2 = e
    assert r5.pi(4) == c2.identity
    assert r5.pi(2) == 1


def test_realization_f8_totally_real(c2, r8):
    assert r8.totally_real
    assert r8.pi(7) == c2.identity and r8.pi(5) == 1


def test_realization_not_totally_real_flag():
    c4 = cyclic_group(4)
    r = realization_from_images(c4, 5, {2: 1})
    assert not r.totally_real           # pi(-1) = g^2 != e
    assert r.pi(4) == 2


def test_realization_not_surjective(c2):
    with pytest.raises(NotSurjective):
        realization_from_images(c2, 5, {2: 0})


def test_realization_inconsistent_images(c2):
    # 2 has order 4 mod 5; sending it to sigma and 4 to sigma conflicts
    with pytest.raises(NotHomomorphism):
        realization_from_images(c2, 5, {2: 1, 4: 1})


def test_realization_incomplete_generators():
    c2xc2 = cyclic_group(2)
    with pytest.raises(NotHomomorphism):
        # {1,7} is a proper subgroup of (Z/8)*: cannot extend
        realization_from_images(c2xc2, 8, {7: 1})


def test_w_group_gm(r1):
    res = w_group_order(lat.trivial_lattice(r1.group), r1)
    assert res.total == 24
    assert res.breakdown()[2]["part"] == 8 and res.breakdown()[3]["part"] == 3
    assert res.total == oracle_w2(1, [1])


def test_w_group_res5(c2, r5):
    res = w_group_order(lat.permutation_lattice(c2, (0,)), r5)
    assert res.total == 120
    assert res.breakdown()[2]["part"] == 8
    assert res.breakdown()[3]["part"] == 3
    assert res.breakdown()[5]["part"] == 5
    # oracle: largest N with a^2 = 1 mod N over units with a = +-1 mod 5
    assert res.total == oracle_w2(5, [1, 4], search_cap=300)


def test_w_group_normone5(c2, r5):
    res = w_group_order(lat.sign_lattice(c2), r5)
    assert res.total == 10
    assert res.breakdown()[2]["part"] == 2 and res.breakdown()[5]["part"] == 5


def test_w_group_res2_oracle(c2, r8):
    res = w_group_order(lat.permutation_lattice(c2, (0,)), r8)
    assert res.total == 48
    assert res.total == oracle_w2(8, [1, 7], search_cap=200)


def test_w2_of_subfields_match_oracle(c2, r5, r8, r1):
    cls2 = subgroup_classes(c2)
    assert w2_of_subfield(cls2[0], r5) == oracle_w2(5, [1, 4], 300) == 120
    assert w2_of_subfield(cls2[1], r5) == oracle_w2(5, [1, 2, 3, 4], 100) == 24
    assert w2_of_subfield(cls2[0], r8) == oracle_w2(8, [1, 7], 200) == 48
    g1 = subgroup_classes(r1.group)[0]
    assert w2_of_subfield(g1, r1) == 24


def test_w_group_multiplicative(c2, r5):
    x = lat.sign_lattice(c2)
    y = lat.permutation_lattice(c2, (0,))
    wx = w_group_order(x, r5)
    wy = w_group_order(y, r5)
    wxy = w_group_order(lat.direct_sum(x, y), r5)
    for p, part, _ in wxy.parts:
        px = dict((q, v) for q, v, _ in wx.parts).get(p, 1)
        py = dict((q, v) for q, v, _ in wy.parts).get(p, 1)
        assert part == px * py


def test_w_group_shapiro_f40(v4, r40):
    """w of every coset lattice equals w2 of the fixed field computed with
    restricted Frobenii: all five subgroup classes of V4."""
    for cls in subgroup_classes(v4):
        lhs = w_group_order(lat.permutation_lattice(v4, cls), r40).total
        rhs = w2_of_subfield(cls, r40)
        assert lhs == rhs, cls


def test_w_group_debug_mode_runs(c2, r5):
    res = w_group_order(lat.sign_lattice(c2), r5, debug=True)
    assert res.total == 10


def test_stabilization_bound_error(c2, r5):
    with pytest.raises(StabilizationBoundExceeded):
        w_group_order(lat.trivial_lattice(c2), r5, cap=2)


def test_global_coinvariants_examples(c2, r5, r1):
    assert global_coinvariants_order(lat.trivial_lattice(r1.group), r1) == 2
    assert global_coinvariants_order(lat.permutation_lattice(c2, (0,)), r5) == 2
    assert global_coinvariants_order(lat.zero_lattice(c2), r5) == 1


def test_w_group_rank0(c2, r5):
    assert w_group_order(lat.zero_lattice(c2), r5).total == 1


def test_local_point_counts(c2, r5, r1):
    assert local_point_count(lat.trivial_lattice(r1.group), r1, 7) == 6
    assert local_point_count(lat.sign_lattice(c2), r5, 7) == 8
    assert local_point_count(lat.permutation_lattice(c2, (0,)), r5, 3) == 8


def test_local_point_count_bad_reduction(c2, r5):
    with pytest.raises(BadReduction):
        local_point_count(lat.sign_lattice(c2), r5, 5)
    with pytest.raises(BadReduction):
        local_point_count(lat.sign_lattice(c2), r5, 6)


def test_local_count_charpoly_consistency(c2, v4, r5, r40):
    """|det(ell rho - 1)| equals |charpoly of rho^{-1} at ell| and is
    multiplicative over direct sums."""
    cases = [(c2, r5), (v4, r40)]
    for g, r in cases:
        lats = [lat.trivial_lattice(g), lat.permutation_lattice(g, (g.identity,))]
        if g.order == 2:
            lats.append(lat.sign_lattice(g))
        else:
            lats.append(lat.dual(lat.norm_one_lattice(g)))
        for x in lats:
            for ell in (3, 7, 11, 13):
                if r.modulus % ell == 0:
                    continue
                n1 = local_point_count(x, r, ell)
                frob = x.action[r.pi(ell)]
                frob_inv = x.action[g.inv(r.pi(ell))]
                n2 = abs(intmat.det(ell * intmat.identity(x.rank) - frob_inv))
                assert n1 == n2
                if g.element_order(r.pi(ell)) <= 2:
                    assert local_point_count(lat.dual(x), r, ell) == n1
        for ell in (3, 7):
            if r.modulus % ell == 0:
                continue
            a, b = lats[0], lats[2]
            assert local_point_count(lat.direct_sum(a, b), r, ell) == \
                local_point_count(a, r, ell) * local_point_count(b, r, ell)


def test_local_counts_permutation_orbit_oracle(v4, r40):
    """For coset lattices #T(F_ell) = prod over Frobenius orbits on cosets
    of (ell^{orbit size} - 1): independent of the determinant route."""
    from torusbt.groups import left_cosets
    for cls in subgroup_classes(v4):
        x = lat.permutation_lattice(v4, cls)
        for ell in (3, 7, 11):
            frob = r40.pi(ell)
            cosets = left_cosets(v4, cls.elements)
            seen = set()
            expected = 1
            for c in cosets:
                if c in seen:
                    continue
                orbit = set()
                cur = c
                while cur not in orbit:
                    orbit.add(cur)
                    cur = tuple(sorted(v4.op(frob, a) for a in cur))
                seen |= orbit
                expected *= ell ** len(orbit) - 1
            assert local_point_count(x, r40, ell) == expected


def test_candidate_prime_completeness_debug(c2, v4, r5, r40):
    """Debug mode asserts the three smallest primes outside the candidate
    set contribute trivially; run it on catalog W computations."""
    w_group_order(lat.permutation_lattice(c2, (0,)), r5, debug=True)
    w_group_order(lat.sign_lattice(c2), r5, debug=True)
    w_group_order(lat.dual(lat.norm_one_lattice(v4)), r40, debug=True)
