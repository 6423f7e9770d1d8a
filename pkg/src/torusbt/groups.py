"""Finite groups as multiplication tables, with subgroup machinery.

Groups here are tiny (Galois groups of real abelian fields, |G| <= 48),
so everything is table-driven: elements are indices 0..n-1, closure and
conjugacy are brute force, and subgroups are enumerated by repeatedly
extending known subgroups by cyclic ones.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import GroupTooLarge, NonPermutation, NotHomomorphism

SUBGROUP_ENUM_BOUND = 48


@dataclass(frozen=True)
class FiniteGroup:
    order: int
    mul: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]
    # Indices of a distinguished generating set (may be empty for the
    # trivial group); manifests attach one lattice matrix per entry.
    generators: tuple[int, ...] = ()
    name: str = "G"
    # Optional labels (e.g. permutation tuples) for diagnostics.
    labels: tuple = field(default=None, compare=False, hash=False)

    def op(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def conjugate(self, g: int, x: int) -> int:
        return self.op(self.op(g, x), self.inv(g))

    def element_order(self, a: int) -> int:
        n, x = 1, a
        while x != self.identity:
            x = self.op(x, a)
            n += 1
        return n

    def power(self, a: int, k: int) -> int:
        k %= self.element_order(a)
        x = self.identity
        for _ in range(k):
            x = self.op(x, a)
        return x

    def is_abelian(self) -> bool:
        return all(self.mul[a][b] == self.mul[b][a]
                   for a in range(self.order) for b in range(self.order))

    def validate(self) -> None:
        """Full table scan: identity, inverses, associativity."""
        n = self.order
        e = self.identity
        for a in range(n):
            if self.mul[e][a] != a or self.mul[a][e] != a:
                raise NotHomomorphism(f"identity fails at {a}")
            if self.mul[a][self.inverse[a]] != e:
                raise NotHomomorphism(f"inverse fails at {a}")
        for a in range(n):
            for b in range(n):
                ab = self.mul[a][b]
                for c in range(n):
                    if self.mul[ab][c] != self.mul[a][self.mul[b][c]]:
                        raise NotHomomorphism(f"associativity fails at {(a, b, c)}")

    def __repr__(self) -> str:
        return f"{self.name}(order={self.order})"


@dataclass(frozen=True)
class SubgroupClass:
    """One conjugacy class of subgroups, identified by a canonical representative."""
    class_id: int
    elements: tuple[int, ...]     # sorted representative
    order: int
    index: int
    normalizer_size: int
    n_conjugates: int

    def __str__(self) -> str:
        return f"H{self.class_id}(order={self.order}, index={self.index})"


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    # (p o q)(x) = p(q(x))
    return tuple(p[q[x]] for x in range(len(p)))


def group_from_table(table, name: str = "G", generators=None, labels=None) -> FiniteGroup:
    n = len(table)
    mul = tuple(tuple(int(x) for x in row) for row in table)
    for row in mul:
        if len(row) != n or any(not (0 <= x < n) for x in row):
            raise NotHomomorphism("malformed multiplication table")
    identity = None
    for e in range(n):
        if all(mul[e][a] == a and mul[a][e] == a for a in range(n)):
            identity = e
            break
    if identity is None:
        raise NotHomomorphism("table has no identity")
    inverse = []
    for a in range(n):
        inv = [b for b in range(n) if mul[a][b] == identity and mul[b][a] == identity]
        if len(inv) != 1:
            raise NotHomomorphism(f"element {a} lacks a unique inverse")
        inverse.append(inv[0])
    if generators is None:
        generators = tuple(a for a in range(n) if a != identity)
    g = FiniteGroup(n, mul, identity, tuple(inverse), tuple(generators), name,
                    tuple(labels) if labels is not None else None)
    g.validate()
    return g


def group_from_generators(perms: list, name: str = "G") -> FiniteGroup:
    """Close a list of permutations (images form) under composition.

    Each permutation is a sequence p with p[i] = image of point i. The
    empty list yields the trivial group.
    """
    gens = []
    npoints = None
    for p in perms:
        p = tuple(int(x) for x in p)
        if npoints is None:
            npoints = len(p)
        if len(p) != npoints or sorted(p) != list(range(npoints)):
            raise NonPermutation(f"{p} is not a permutation of 0..{ (npoints or 1) - 1}")
        gens.append(p)
    if npoints is None:
        npoints = 1
    ident = tuple(range(npoints))
    elems = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for q in frontier:
            for p in gens:
                r = _compose(p, q)
                if r not in elems:
                    elems.add(r)
                    new.append(r)
        frontier = new
    ordered = sorted(elems)
    index = {p: i for i, p in enumerate(ordered)}
    mul = [[index[_compose(a, b)] for b in ordered] for a in ordered]
    gen_indices = tuple(index[p] for p in gens)
    return group_from_table(mul, name=name, generators=gen_indices, labels=ordered)


def conjugacy_classes(g: FiniteGroup) -> list[list[int]]:
    """Partition of element indices into conjugacy classes, identity class first."""
    seen = [False] * g.order
    classes = []
    for a in range(g.order):
        if seen[a]:
            continue
        orbit = sorted({g.conjugate(x, a) for x in range(g.order)})
        for b in orbit:
            seen[b] = True
        classes.append(orbit)
    classes.sort(key=lambda c: (c[0] != g.identity, c[0]))
    return classes


def class_of_element(g: FiniteGroup, a: int, classes=None) -> int:
    classes = conjugacy_classes(g) if classes is None else classes
    for i, c in enumerate(classes):
        if a in c:
            return i
    raise ValueError(f"element {a} not in any class")


def _closure(g: FiniteGroup, seed) -> frozenset:
    elems = set(seed) | {g.identity}
    frontier = list(elems)
    while frontier:
        new = []
        for a in frontier:
            for b in list(elems):
                for c in (g.op(a, b), g.op(b, a)):
                    if c not in elems:
                        elems.add(c)
                        new.append(c)
        frontier = new
    return frozenset(elems)


def all_subgroups(g: FiniteGroup, bound: int = SUBGROUP_ENUM_BOUND) -> list[tuple[int, ...]]:
    """Every subgroup as a sorted element tuple (not just up to conjugacy)."""
    if g.order > bound:
        raise GroupTooLarge(f"|G| = {g.order} exceeds the enumeration bound {bound}")
    cyclics = {frozenset(_closure(g, [a])) for a in range(g.order)}
    found = {frozenset([g.identity])} | cyclics
    frontier = set(found)
    # Extend by cyclic subgroups until nothing new appears.
    while frontier:
        new = set()
        for h in frontier:
            for c in cyclics:
                if c <= h:
                    continue
                j = frozenset(_closure(g, h | c))
                if j not in found:
                    found.add(j)
                    new.add(j)
        frontier = new
    return sorted((tuple(sorted(h)) for h in found), key=lambda t: (len(t), t))


def subgroup_classes(g: FiniteGroup, bound: int = SUBGROUP_ENUM_BOUND) -> list[SubgroupClass]:
    """Subgroups up to conjugacy in a canonical order (by order, then elements)."""
    subs = all_subgroups(g, bound)
    remaining = set(subs)
    classes = []
    for h in subs:                      # already canonically sorted
        if h not in remaining:
            continue
        hset = set(h)
        conjugates = {tuple(sorted(g.conjugate(x, a) for a in h)) for x in range(g.order)}
        normalizer = sum(1 for x in range(g.order)
                         if {g.conjugate(x, a) for a in h} == hset)
        for c in conjugates:
            remaining.discard(c)
        classes.append((h, normalizer, len(conjugates)))
    out = []
    for i, (h, normalizer, n_conj) in enumerate(classes):
        out.append(SubgroupClass(
            class_id=i, elements=h, order=len(h),
            index=g.order // len(h), normalizer_size=normalizer,
            n_conjugates=n_conj))
    return out


def subgroup_elements(h) -> tuple[int, ...]:
    """Accept a SubgroupClass or a raw element tuple."""
    if isinstance(h, SubgroupClass):
        return h.elements
    return tuple(sorted(set(h)))


def generating_set(g: FiniteGroup, elements: tuple[int, ...]) -> list[int]:
    """Small deterministic generating set of the subgroup with these elements."""
    target = set(elements)
    gens: list[int] = []
    span = {g.identity}
    for a in elements:
        if a in span:
            continue
        gens.append(a)
        span = set(_closure(g, gens))
        if span == target:
            break
    return gens


def subgroup_as_group(g: FiniteGroup, h) -> tuple[FiniteGroup, list[int]]:
    """The subgroup as its own FiniteGroup plus the embedding index list."""
    elems = list(subgroup_elements(h))
    pos = {a: i for i, a in enumerate(elems)}
    mul = [[pos[g.op(a, b)] for b in elems] for a in elems]
    gens = [pos[a] for a in generating_set(g, tuple(elems))]
    sub = group_from_table(mul, name=f"{g.name}|sub", generators=gens)
    return sub, elems


def sylow_orders(n: int) -> dict[int, int]:
    out = {}
    m, p = n, 2
    while p * p <= m:
        if m % p == 0:
            q = 1
            while m % p == 0:
                m //= p
                q *= p
            out[p] = q
        p += 1
    if m > 1:
        out[m] = m
    return out


def is_metacyclic(g: FiniteGroup) -> bool:
    """True iff every Sylow subgroup is cyclic.

    A Sylow p-subgroup is cyclic exactly when the group contains an
    element of order p^{v_p(|G|)}, so a pass over element orders decides
    it without enumerating subgroups.
    """
    orders = {g.element_order(a) for a in range(g.order)}
    return all(any(o % q == 0 for o in orders) for q in sylow_orders(g.order).values())


def left_cosets(g: FiniteGroup, elements: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Left cosets x*H as sorted tuples, ordered by their minimal element."""
    hset = list(elements)
    seen = set()
    cosets = []
    for x in range(g.order):
        c = tuple(sorted(g.op(x, a) for a in hset))
        if c not in seen:
            seen.add(c)
            cosets.append(c)
    cosets.sort(key=lambda c: c[0])
    return cosets


def cyclic_group(n: int) -> FiniteGroup:
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return group_from_table(table, name=f"C{n}", generators=(() if n == 1 else (1,)))
