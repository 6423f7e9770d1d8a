"""Group cohomology of finite groups acting on lattices.

H^1 is computed from cocycles on a generating set of the subgroup,
constrained by the relators of its Cayley graph (one relator per
non-tree edge of a BFS spanning tree). This keeps every matrix at size
(#generators x rank) instead of (|H| x rank).

The same module hosts the flasque/invertible classification, the
constructive flasque resolution 0 -> Q -> P -> X -> 0 with P a direct
sum of coset lattices Z[G/H], and the order-2 decomposition used for
the real place.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import intmat
from .exact import FinAbGroup
from .errors import InconsistentRank, ShapeMismatch
from .groups import (FiniteGroup, SubgroupClass, generating_set, is_metacyclic,
                     left_cosets, subgroup_classes, subgroup_elements)
from .intmat import IntMatrix
from .lattices import (GLattice, direct_sum_list, invariant_basis,
                       norm_element_matrix, permutation_lattice, validate,
                       zero_lattice)


def _cayley_relators(g: FiniteGroup, elems: tuple[int, ...], gens: list[int]):
    """Relator words of <gens> from a BFS spanning tree of the Cayley graph.

    Words are lists of (generator position, +-1); every relator
    multiplies out to the identity in the subgroup.
    """
    word = {g.identity: []}
    frontier = [g.identity]
    relators = []
    while frontier:
        new = []
        for h in frontier:
            for si, s in enumerate(gens):
                t = g.op(h, s)
                if t not in word:
                    word[t] = word[h] + [(si, 1)]
                    new.append(t)
                else:
                    # word(h) * s * word(t)^{-1} == e
                    inv = [(sj, -e) for (sj, e) in reversed(word[t])]
                    relators.append(word[h] + [(si, 1)] + inv)
        frontier = new
    assert len(word) == len(elems), "generators do not generate the subgroup"
    return relators


def _cocycle_constraints(x: GLattice, gens: list[int], relators) -> IntMatrix:
    """Stack the linear conditions on (c(s))_s imposed by each relator.

    A 1-cocycle satisfies c(uv) = c(u) + u.c(v), so evaluating c along a
    relator word and equating to zero is linear in the generator values;
    inverse letters contribute -rho(prefix * s^{-1}) c(s).
    """
    g = x.group
    n = x.rank
    blocks = []
    for rel in relators:
        coeff = [intmat.zeros(n, n) for _ in gens]
        prefix = g.identity
        for (si, e) in rel:
            s = gens[si]
            if e == 1:
                coeff[si] = coeff[si] + x.action[prefix]
                prefix = g.op(prefix, s)
            else:
                prefix = g.op(prefix, g.inv(s))
                coeff[si] = coeff[si] - x.action[prefix]
        blocks.append(intmat.hstack(coeff))
    if not blocks:
        return intmat.zeros(0, n * len(gens))
    return intmat.vstack(blocks)


def h1(h, x: GLattice) -> FinAbGroup:
    """H^1(H, X) as cocycles-on-generators modulo coboundaries.

    Always a finite group for a lattice module; the free rank is
    asserted to vanish.
    """
    elems = subgroup_elements(h)
    gens = generating_set(x.group, elems)
    if not gens:
        return FinAbGroup()
    relators = _cayley_relators(x.group, elems, gens)
    constraints = _cocycle_constraints(x, gens, relators)
    cocycles = intmat.kernel_basis(constraints)           # columns in Z^{n|S|}
    ident = intmat.identity(x.rank)
    cobound = intmat.vstack([x.action[s] - ident for s in gens])
    out = intmat.lattice_quotient(cocycles, cobound)
    assert out.free_rank == 0, "H^1 of a lattice must be finite"
    return out


def tate_h0(h, x: GLattice) -> FinAbGroup:
    """Tate H^0(H, X) = X^H / N_H X."""
    fixed = invariant_basis(x, h)
    norm = norm_element_matrix(x, h)
    out = intmat.lattice_quotient(fixed, norm)
    assert out.free_rank == 0, "Tate H^0 of a lattice must be finite"
    return out


def is_flasque(x: GLattice, classes: list[SubgroupClass] | None = None):
    """True iff H^1(H, X) = 0 for every subgroup class; else the witnesses."""
    classes = subgroup_classes(x.group) if classes is None else classes
    witnesses = []
    for cls in classes:
        grp = h1(cls, x)
        if not grp.is_trivial:
            witnesses.append((cls, grp))
    return (not witnesses), witnesses


@dataclass(frozen=True)
class FlasqueResolution:
    """0 -> Q -> P -> X -> 0 with P = (+) Z[G/H_i] and Q flasque."""
    p_spec: tuple[int, ...]               # class id per summand
    p_generators: tuple[tuple[int, ...], ...]  # chosen H-fixed vector per summand
    p_lattice: GLattice
    surjection: IntMatrix                 # rank(X) x rank(P)
    q_lattice: GLattice
    inclusion: IntMatrix                  # rank(P) x rank(Q), kernel basis

    def to_json(self) -> dict:
        return {
            "p_spec": list(self.p_spec),
            "p_generators": [list(v) for v in self.p_generators],
            "p_rank": self.p_lattice.rank,
            "surjection": self.surjection.tolist(),
            "q_rank": self.q_lattice.rank,
            "inclusion": self.inclusion.tolist(),
        }


def _class_lookup(g: FiniteGroup, classes, elements: tuple[int, ...]) -> tuple[int, int]:
    """(class id, conjugator u) with u * rep * u^{-1} = the given subgroup."""
    target = set(elements)
    for cls in classes:
        if cls.order != len(target):
            continue
        for u in range(g.order):
            if {g.conjugate(u, a) for a in cls.elements} == target:
                return cls.class_id, u
    raise ShapeMismatch("subgroup not matched to any class")


def _summand_image_columns(x: GLattice, kelems: tuple[int, ...],
                           cls: SubgroupClass, v: tuple[int, ...]):
    """Images of the K-invariants of the summand (Z[G/H], v) inside X^K.

    The K-invariants of Z[G/H] are spanned by K-orbit sums of cosets;
    each orbit maps to the sum of rho(min coset rep) v.
    """
    g = x.group
    cosets = left_cosets(g, cls.elements)
    orbit_of = {}
    for c in cosets:
        if c in orbit_of:
            continue
        orbit = set()
        stack = [c]
        while stack:
            cc = stack.pop()
            if cc in orbit:
                continue
            orbit.add(cc)
            for k in kelems:
                img = tuple(sorted(g.op(k, a) for a in cc))
                if img not in orbit:
                    stack.append(img)
        for cc in orbit:
            orbit_of[cc] = frozenset(orbit)
    cols = []
    for orbit in sorted({o for o in orbit_of.values()}, key=lambda o: min(o)):
        vec = [0] * x.rank
        for c in orbit:
            w = x.action[min(c)].apply(tuple(v))
            vec = [a + b for a, b in zip(vec, w)]
        cols.append(tuple(vec))
    return cols


def _stabilizer(x: GLattice, v: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted(a for a in range(x.group.order)
                        if x.action[a].apply(v) == tuple(v)))


def flasque_resolution(x: GLattice,
                       classes: list[SubgroupClass] | None = None) -> FlasqueResolution:
    """Constructive flasque resolution 0 -> Q -> P -> X -> 0.

    For every subgroup class H (ascending canonical order) each HNF
    generator v of X^H that is not yet hit by the H-invariants of the
    accumulated map gets its own coset-lattice summand. The summand uses
    the full stabilizer of v (a subgroup containing H), which keeps
    rank(P) small and still feeds v into P^H -> X^H, so that map is onto
    for every H; that in turn forces H^1(H, Q) = 0 for the kernel Q. On
    a literal permutation lattice this reproduces P = X, Q = 0.
    """
    g = x.group
    classes = subgroup_classes(g) if classes is None else classes

    summands: list[tuple[int, tuple[int, ...]]] = []
    for cls in classes if x.rank else []:
        kelems = cls.elements
        have = []
        for cid, v in summands:
            have.extend(_summand_image_columns(x, kelems, classes[cid], v))
        basis = invariant_basis(x, cls)
        for j in range(basis.cols):
            v = basis.col(j)
            mat = intmat.from_columns(have, x.rank)
            if intmat.solve_exact(mat, intmat.from_columns([v], x.rank)) is None:
                cid, u = _class_lookup(g, classes, _stabilizer(x, v))
                w = x.action[g.inv(u)].apply(v)
                summands.append((cid, w))
                have.extend(_summand_image_columns(x, kelems, classes[cid], w))

    p_parts = [permutation_lattice(g, classes[cid]) for cid, _ in summands]
    p_lat = direct_sum_list(p_parts) if p_parts else zero_lattice(g)
    surj_cols = []
    for cid, v in summands:
        for coset in left_cosets(g, classes[cid].elements):
            surj_cols.append(x.action[min(coset)].apply(tuple(v)))
    surjection = intmat.from_columns(surj_cols, x.rank)

    inclusion = intmat.kernel_basis(surjection)
    q_rank = inclusion.cols
    q_mats = []
    for a in range(g.order):
        moved = p_lat.action[a] @ inclusion
        sol = intmat.solve_exact(inclusion, moved)
        assert sol is not None, "kernel not preserved by the action"
        q_mats.append(sol)
    q_lat = GLattice(g, q_rank, tuple(q_mats))
    validate(q_lat)

    res = FlasqueResolution(
        p_spec=tuple(cid for cid, _ in summands),
        p_generators=tuple(tuple(v) for _, v in summands),
        p_lattice=p_lat, surjection=surjection,
        q_lattice=q_lat, inclusion=inclusion)

    # Postconditions: exactness over Z, equivariance, and flasqueness of Q.
    assert intmat.cokernel_structure(surjection).is_trivial, "surjection not onto"
    assert p_lat.rank == q_rank + x.rank, "rank additivity broken"
    assert (surjection @ inclusion).is_zero(), "composite not zero"
    for a in range(g.order):
        assert surjection @ p_lat.action[a] == x.action[a] @ surjection, \
            "surjection not equivariant"
    ok, wit = is_flasque(q_lat, classes)
    assert ok, f"kernel is not flasque: {wit}"
    return res


@dataclass(frozen=True)
class InvertibilityCertificate:
    """Witness that Q (+) complement is a permutation lattice."""
    complement: GLattice | None           # None means rank 0
    iso: IntMatrix                        # (Q + complement) -> target, unimodular
    target_spec: tuple[int, ...]          # class ids of the target (+) Z[G/H]

    def to_json(self) -> dict:
        return {
            "complement_rank": 0 if self.complement is None else self.complement.rank,
            "complement_action": None if self.complement is None else
                {str(a): m.tolist() for a, m in enumerate(self.complement.action)},
            "iso": self.iso.tolist(),
            "target_spec": list(self.target_spec),
        }


def verify_invertibility(q: GLattice, cert: InvertibilityCertificate,
                         classes: list[SubgroupClass] | None = None) -> bool:
    """Soundness check: iso is unimodular and intertwines Q (+) I' with the target."""
    g = q.group
    classes = subgroup_classes(g) if classes is None else classes
    parts = [q]
    if cert.complement is not None and cert.complement.rank > 0:
        if cert.complement.group != g:
            raise ShapeMismatch("complement over a different group")
        parts.append(cert.complement)
    source = direct_sum_list(parts)
    targets = [permutation_lattice(g, classes[cid]) for cid in cert.target_spec]
    target = direct_sum_list(targets) if targets else zero_lattice(g)
    if cert.iso.rows != target.rank or cert.iso.cols != source.rank:
        raise ShapeMismatch(
            f"iso is {cert.iso.rows}x{cert.iso.cols}, need {target.rank}x{source.rank}")
    if target.rank != source.rank:
        return False
    if not intmat.is_unimodular(cert.iso):
        return False
    return all(cert.iso @ source.action[a] == target.action[a] @ cert.iso
               for a in range(g.order))


def _hom_basis(source: GLattice, target: GLattice) -> list[IntMatrix]:
    """Z-basis of Hom_G(source, target) = {M : M rho_s(g) = rho_t(g) M}."""
    g = source.group
    s, t = source.rank, target.rank
    if s == 0 or t == 0:
        return []
    gens = list(g.generators) or []
    rows = []
    for a in gens:
        ms, mt = source.action[a], target.action[a]
        for i in range(t):
            for j in range(s):
                row = [0] * (t * s)
                for k in range(s):
                    row[i * s + k] += ms.data[k][j]
                for k in range(t):
                    row[k * s + j] -= mt.data[i][k]
                rows.append(row)
    mat = intmat.from_rows(rows, t * s) if rows else intmat.zeros(0, t * s)
    basis = intmat.kernel_basis(mat)
    out = []
    for jc in range(basis.cols):
        flat = basis.col(jc)
        out.append(intmat.from_rows(
            [list(flat[i * s:(i + 1) * s]) for i in range(t)], s))
    return out


def _multisets_with_rank(classes, total: int):
    """Multisets of class ids whose coset ranks [G:H] sum to total."""
    idx_rank = [(cls.class_id, cls.index) for cls in classes]

    def rec(pos: int, remaining: int):
        if remaining == 0:
            yield ()
            return
        if pos >= len(idx_rank):
            return
        cid, r = idx_rank[pos]
        max_count = remaining // r
        for count in range(max_count, -1, -1):
            for rest in rec(pos + 1, remaining - count * r):
                yield (cid,) * count + rest
    return list(rec(0, total))


def _cohomology_profile(x: GLattice, classes) -> tuple:
    return tuple((tate_h0(cls, x), h1(cls, x)) for cls in classes)


def search_invertibility_certificate(
        q: GLattice, classes: list[SubgroupClass] | None = None,
        rank_bound: int = 4, coeff_bound: int = 2,
        combo_budget: int = 60000,
        pair_budget: int = 200) -> InvertibilityCertificate | None:
    """Bounded search for a stably-permutation witness of Q.

    Complements are themselves drawn from permutation lattices (which is
    what the in-scope examples need); candidate isos are small integer
    combinations of a Hom_G basis. Candidate pairs are pruned by the
    cheap necessary conditions first (equal characters, equal Tate-H^0
    and H^1 profiles on every subgroup class). Sound but incomplete:
    None just means 'not found within budget'.
    """
    from .lattices import lattice_character
    g = q.group
    classes = subgroup_classes(g) if classes is None else classes
    if q.rank == 0:
        cert = InvertibilityCertificate(None, intmat.zeros(0, 0), ())
        return cert if verify_invertibility(q, cert, classes) else None

    chi_q = lattice_character(q)
    perm = {cls.class_id: permutation_lattice(g, cls) for cls in classes}
    chi_perm = {cid: lattice_character(p) for cid, p in perm.items()}

    def spec_char(spec):
        return tuple(sum(chi_perm[cid][i] for cid in spec) for i in range(len(chi_q)))

    pairs_examined = 0
    for target_rank in range(q.rank, q.rank + rank_bound + 1):
        for target_spec in _multisets_with_rank(classes, target_rank):
            chi_t = spec_char(target_spec)
            for comp_spec in _multisets_with_rank(classes, target_rank - q.rank):
                chi_s = tuple(a + b for a, b in zip(chi_q, spec_char(comp_spec)))
                if chi_s != chi_t:
                    continue
                pairs_examined += 1
                if pairs_examined > pair_budget:
                    return None
                comp_parts = [perm[cid] for cid in comp_spec]
                complement = direct_sum_list(comp_parts) if comp_parts else None
                source = direct_sum_list([q] + comp_parts)
                targets = [perm[cid] for cid in target_spec]
                target = direct_sum_list(targets) if targets else zero_lattice(g)
                if _cohomology_profile(source, classes) != \
                        _cohomology_profile(target, classes):
                    continue
                basis = _hom_basis(source, target)
                d = len(basis)
                if d == 0 or (2 * coeff_bound + 1) ** d > combo_budget:
                    continue
                for coeffs in itertools.product(
                        range(-coeff_bound, coeff_bound + 1), repeat=d):
                    if all(c == 0 for c in coeffs):
                        continue
                    m = intmat.zeros(target.rank, source.rank)
                    for c, b in zip(coeffs, basis):
                        if c:
                            m = m + c * b
                    if intmat.is_unimodular(m):
                        cert = InvertibilityCertificate(complement, m, tuple(target_spec))
                        if verify_invertibility(q, cert, classes):
                            return cert
    return None


def check_motivic_interpretation(x: GLattice,
                                 cert: InvertibilityCertificate | None = None,
                                 classes: list[SubgroupClass] | None = None):
    """Sufficient-condition check: 'YesMetaCyclic', 'YesInvertibleCertificate',
    or 'Unknown' (never a 'no'; only sufficient conditions are known).

    Returns (verdict, certificate or None, resolution or None).
    """
    if is_metacyclic(x.group):
        return "YesMetaCyclic", None, None
    classes = subgroup_classes(x.group) if classes is None else classes
    res = flasque_resolution(x, classes)
    if cert is not None and verify_invertibility(res.q_lattice, cert, classes):
        return "YesInvertibleCertificate", cert, res
    found = search_invertibility_certificate(res.q_lattice, classes)
    if found is not None:
        return "YesInvertibleCertificate", found, res
    return "Unknown", None, res


def real_decomposition(x: GLattice, conj: int):
    """Multiplicities (a, b, c) of Z, Z^-, Z[C2] under the involution conj.

    a = dim_F2 Tate-H^0, b = dim_F2 H^1 of the two-element group {e, conj}
    acting through the lattice; c fills up the rank. Also returns the
    real-place torsion (Z/2)^a.
    """
    g = x.group
    if g.op(conj, conj) != g.identity:
        raise ShapeMismatch("conj must square to the identity")
    sigma = x.action[conj]
    ident = intmat.identity(x.rank)
    fixed = intmat.kernel_basis(sigma - ident)
    h0 = intmat.lattice_quotient(fixed, sigma + ident)
    anti = intmat.kernel_basis(sigma + ident)
    h1c = intmat.lattice_quotient(anti, sigma - ident)
    for grp in (h0, h1c):
        assert grp.free_rank == 0 and all(d == 2 for d in grp.invariant_factors), \
            f"non-elementary 2-group {grp} from an involution"
    a = len(h0.invariant_factors)
    b = len(h1c.invariant_factors)
    if (x.rank - a - b) % 2 != 0 or x.rank - a - b < 0:
        raise InconsistentRank(f"rank {x.rank} with (a,b) = {(a, b)}")
    c = (x.rank - a - b) // 2
    torsion = FinAbGroup((2,) * a) if a else FinAbGroup()
    return a, b, c, torsion
