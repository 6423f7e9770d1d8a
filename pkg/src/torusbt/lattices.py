"""G-lattices: free Z-modules with a unimodular action of a finite group.

The action is stored for every group element (groups here are tiny), as
a dict element-index -> IntMatrix acting on column vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import intmat
from .intmat import IntMatrix
from .errors import GroupMismatch, NotHomomorphism, NotUnimodular
from .groups import (FiniteGroup, conjugacy_classes, left_cosets,
                     subgroup_as_group, subgroup_elements)


@dataclass(frozen=True)
class GLattice:
    group: FiniteGroup
    rank: int
    action: tuple[IntMatrix, ...]      # one matrix per element index

    def act(self, g: int) -> IntMatrix:
        return self.action[g]

    def __repr__(self) -> str:
        return f"GLattice(rank={self.rank} over {self.group.name})"


def validate(x: GLattice) -> None:
    """Check unimodularity, the homomorphism property on all pairs, and identity."""
    g = x.group
    if len(x.action) != g.order:
        raise NotHomomorphism("action table size != group order")
    for a, m in enumerate(x.action):
        if (m.rows, m.cols) != (x.rank, x.rank):
            raise NotUnimodular(f"action({a}) has wrong shape")
        if intmat.det(m) not in (1, -1):
            raise NotUnimodular(f"action({a}) has determinant {intmat.det(m)}")
    if not x.action[g.identity].is_identity():
        raise NotHomomorphism("action(identity) is not the identity matrix")
    for a in range(g.order):
        for b in range(g.order):
            if x.action[a] @ x.action[b] != x.action[g.op(a, b)]:
                raise NotHomomorphism(f"action({a})action({b}) != action({a}*{b})")


def from_generator_matrices(group: FiniteGroup, rank: int,
                            gen_mats: dict[int, IntMatrix] | list[IntMatrix],
                            check: bool = True) -> GLattice:
    """Expand matrices given on group.generators to the whole group by BFS."""
    if isinstance(gen_mats, (list, tuple)):
        if len(gen_mats) != len(group.generators):
            raise NotHomomorphism("need one matrix per group generator")
        gen_mats = dict(zip(group.generators, gen_mats))
    known: dict[int, IntMatrix] = {group.identity: intmat.identity(rank)}
    frontier = [group.identity]
    while frontier:
        new = []
        for a in frontier:
            for s, ms in gen_mats.items():
                b = group.op(s, a)
                mb = ms @ known[a]
                if b not in known:
                    known[b] = mb
                    new.append(b)
                elif known[b] != mb:
                    raise NotHomomorphism(f"inconsistent action at element {b}")
        frontier = new
    if len(known) != group.order:
        raise NotHomomorphism("generator matrices do not reach the whole group "
                              "(generators do not generate G?)")
    lat = GLattice(group, rank, tuple(known[a] for a in range(group.order)))
    if check:
        validate(lat)
    return lat


def trivial_lattice(group: FiniteGroup, rank: int = 1) -> GLattice:
    ident = intmat.identity(rank)
    return GLattice(group, rank, tuple(ident for _ in range(group.order)))


def zero_lattice(group: FiniteGroup) -> GLattice:
    return trivial_lattice(group, 0)


def permutation_lattice(group: FiniteGroup, h) -> GLattice:
    """Z[G/H] with G permuting the left cosets of H; rank = [G:H]."""
    elements = subgroup_elements(h)
    cosets = left_cosets(group, elements)
    pos = {c: i for i, c in enumerate(cosets)}
    n = len(cosets)
    mats = []
    for g in range(group.order):
        cols = []
        for c in cosets:
            img = tuple(sorted(group.op(g, a) for a in c))
            col = [0] * n
            col[pos[img]] = 1
            cols.append(tuple(col))
        mats.append(intmat.from_columns(cols, n))
    return GLattice(group, n, tuple(mats))


def regular_lattice(group: FiniteGroup) -> GLattice:
    return permutation_lattice(group, (group.identity,))


def sign_lattice(group: FiniteGroup, signs: dict[int, int] | None = None) -> GLattice:
    """Rank-1 lattice with action +-1; signs maps each element to its sign.

    With signs omitted this needs |G| <= 2: the nonidentity element acts
    by -1.
    """
    if signs is None:
        if group.order > 2:
            raise NotHomomorphism("default sign lattice needs |G| <= 2")
        signs = {a: (1 if a == group.identity else -1) for a in range(group.order)}
    mats = tuple(intmat.from_rows([[signs[a]]]) for a in range(group.order))
    lat = GLattice(group, 1, mats)
    validate(lat)
    return lat


def direct_sum(x: GLattice, y: GLattice) -> GLattice:
    if x.group is not y.group and x.group != y.group:
        raise GroupMismatch("direct_sum over different groups")
    mats = tuple(intmat.block_diag([x.action[a], y.action[a]])
                 for a in range(x.group.order))
    return GLattice(x.group, x.rank + y.rank, mats)


def direct_sum_list(lats: list[GLattice]) -> GLattice:
    if not lats:
        raise ValueError("empty direct sum needs an explicit group")
    out = lats[0]
    for l in lats[1:]:
        out = direct_sum(out, l)
    return out


def dual(x: GLattice) -> GLattice:
    """Dual lattice: g acts by transpose(action(g^{-1}))."""
    g = x.group
    mats = tuple(x.action[g.inv(a)].transpose() for a in range(g.order))
    return GLattice(g, x.rank, mats)


def conjugate_lattice(x: GLattice, u: IntMatrix) -> GLattice:
    """Base change by a unimodular u: action -> u^{-1} action u (same lattice, new basis)."""
    uinv = intmat.solve_exact(u, intmat.identity(u.rows))
    if uinv is None:
        raise NotUnimodular("base change matrix is not invertible over Z")
    mats = tuple(uinv @ m @ u for m in x.action)
    return GLattice(x.group, x.rank, mats)


def restrict(x: GLattice, h) -> tuple[GLattice, list[int]]:
    """The same module over the subgroup H, as a lattice over H's own group.

    Returns (lattice over H, embedding of H's indices into G's).
    """
    sub, embed = subgroup_as_group(x.group, h)
    mats = tuple(x.action[embed[a]] for a in range(sub.order))
    return GLattice(sub, x.rank, mats), embed


def is_permutation_lattice(x: GLattice) -> bool:
    """True iff every action matrix is literally a permutation matrix."""
    return all(m.is_permutation() for m in x.action)


def permutation_orbit_stabilizers(x: GLattice) -> list[tuple[int, tuple[int, ...]]]:
    """For a literal permutation lattice: (base index, stabilizer) per basis
    orbit, so X = (+) Z[G/stab] with the base as distinguished coset."""
    assert is_permutation_lattice(x)
    g = x.group
    remaining = set(range(x.rank))
    out = []
    while remaining:
        b = min(remaining)
        orbit = {b}
        for a in range(g.order):
            col = x.action[a].col(b)
            orbit.add(col.index(1))
        remaining -= orbit
        stab = tuple(sorted(a for a in range(g.order)
                            if x.action[a].col(b).index(1) == b))
        out.append((b, stab))
    return out


def invariant_basis(x: GLattice, h) -> IntMatrix:
    """HNF basis (columns) of the fixed sublattice X^H."""
    from .groups import generating_set
    elems = subgroup_elements(h)
    gens = generating_set(x.group, elems)
    if not gens:
        return intmat.identity(x.rank)
    stacked = intmat.vstack([x.action[s] - intmat.identity(x.rank) for s in gens])
    return intmat.kernel_basis(stacked)


def coinvariants(x: GLattice, h):
    """X_H = X / span{(g-1)X : g in H} as a FinAbGroup."""
    from .groups import generating_set
    elems = subgroup_elements(h)
    gens = generating_set(x.group, elems)
    if not gens:
        return intmat.cokernel_structure(intmat.zeros(x.rank, 0))
    stacked = intmat.hstack([x.action[s] - intmat.identity(x.rank) for s in gens])
    return intmat.cokernel_structure(stacked)


def invariants_and_coinvariants(x: GLattice, h):
    return invariant_basis(x, h), coinvariants(x, h)


def norm_element_matrix(x: GLattice, h) -> IntMatrix:
    """N_H = sum of action(a) over a in H."""
    elems = subgroup_elements(h)
    out = intmat.zeros(x.rank, x.rank)
    for a in elems:
        out = out + x.action[a]
    return out


def lattice_character(x: GLattice, classes=None) -> tuple[Fraction, ...]:
    """Trace of the action on each conjugacy class (checked constant on classes)."""
    classes = conjugacy_classes(x.group) if classes is None else classes
    values = []
    for cls in classes:
        traces = {sum(x.action[a].data[i][i] for i in range(x.rank)) for a in cls}
        if len(traces) != 1:
            raise NotHomomorphism(f"trace not constant on class {cls}")
        values.append(Fraction(traces.pop()))
    return tuple(values)


def norm_one_lattice(group: FiniteGroup) -> GLattice:
    """Cocharacter lattice of the norm-one torus ker[Res Gm -> Gm]:
    the augmentation sublattice of Z[G], basis [g]-[e] for g != e."""
    nonid = [a for a in range(group.order) if a != group.identity]
    pos = {a: i for i, a in enumerate(nonid)}
    n = len(nonid)

    def basis_vec(a: int) -> list[int]:
        # [a] - [e] in coordinates; [e] contributes nothing, identity -> 0
        v = [0] * n
        if a != group.identity:
            v[pos[a]] = 1
        return v

    mats = []
    for g in range(group.order):
        cols = []
        for a in nonid:
            # g.([a]-[e]) = [ga]-[g] = ([ga]-[e]) - ([g]-[e])
            v = basis_vec(group.op(g, a))
            w = basis_vec(g)
            cols.append(tuple(vi - wi for vi, wi in zip(v, w)))
        mats.append(intmat.from_columns(cols, n))
    lat = GLattice(group, n, tuple(mats))
    validate(lat)
    return lat
