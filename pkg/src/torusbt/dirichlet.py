"""Dirichlet characters and exact L-values at s = -1.

Character values are tracked as exponents of a root of unity of the
character's order, so all arithmetic outside the final Bernoulli sums
is integer. L(chi, -1) = -B_{2,chi}/2 with
B_{2,chi} = f * sum_{a=1}^{f} chi(a) B_2(a/f), B_2(t) = t^2 - t + 1/6,
evaluated for the primitive character inducing chi.

Dedekind zeta values of the abelian fixed fields and the Artin L-value
of a lattice are assembled from these, with conjugate characters
grouped into Galois orbits whose products are certified rational
before anything is multiplied together.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .cyclotomic import CyclotomicNumber
from .errors import (MultiplicityNotInteger, NonAbelianRealization, NotRational,
                     NotTotallyReal)
from .exact import lcm
from .units import UnitGroupStructure, unit_group, units_mod


@dataclass(frozen=True)
class DirichletCharacter:
    """Character mod f, stored as exponents on the canonical generators.

    exponents[i] = k_i means chi(g_i) = zeta_{n_i}^{k_i} where n_i is the
    order of the i-th canonical generator of (Z/f)*.
    """
    modulus: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "_units", unit_group(self.modulus))
        if len(self.exponents) != len(self._units.generators):
            raise ValueError("one exponent per canonical generator required")

    @property
    def units(self) -> UnitGroupStructure:
        return self._units

    @property
    def order(self) -> int:
        m = 1
        for k, n in zip(self.exponents, self._units.orders):
            m = lcm(m, n // gcd(n, k))
        return m

    def value_exponent(self, a: int) -> int | None:
        """e with chi(a) = zeta_order^e, or None when gcd(a, f) > 1."""
        a %= self.modulus
        if self.modulus > 1 and gcd(a, self.modulus) != 1:
            return None
        m = self.order
        dl = self._units.dlog(a if self.modulus > 1 else 1)
        e = 0
        for x, k, n in zip(dl, self.exponents, self._units.orders):
            # chi(g_i) = zeta_{n}^{k} = zeta_m^{km/n}; n | km by the order formula
            e += x * ((k * m) // n)
        return e % m

    def value(self, a: int) -> CyclotomicNumber:
        e = self.value_exponent(a)
        if e is None:
            return CyclotomicNumber.rational(0, self.order)
        return CyclotomicNumber.zeta_power(self.order, e)

    def is_trivial(self) -> bool:
        return all(k % n == 0 for k, n in zip(self.exponents, self._units.orders))

    def is_even(self) -> bool:
        return self.value_exponent(-1 % self.modulus if self.modulus > 1 else 1) == 0

    def power(self, k: int) -> "DirichletCharacter":
        return DirichletCharacter(self.modulus, tuple(
            (e * k) % n for e, n in zip(self.exponents, self._units.orders)))

    def __str__(self) -> str:
        return f"chi_mod{self.modulus}{self.exponents}"


def characters_mod(f: int) -> list[DirichletCharacter]:
    """All phi(f) characters mod f in lexicographic exponent order."""
    u = unit_group(f)
    out = []

    def rec(prefix: tuple[int, ...], pos: int):
        if pos == len(u.orders):
            out.append(DirichletCharacter(f, prefix))
            return
        for k in range(u.orders[pos]):
            rec(prefix + (k,), pos + 1)
    rec((), 0)
    return out


def conductor_primitive(chi: DirichletCharacter) -> tuple[int, DirichletCharacter]:
    """Minimal f' | f through which chi factors, and the inducing primitive character."""
    f = chi.modulus
    divisors = sorted(d for d in range(1, f + 1) if f % d == 0)
    cond = f
    for d in divisors:
        if all(chi.value_exponent(a) == 0
               for a in range(1, f + 1)
               if a % d == 1 % d and (f == 1 or gcd(a, f) == 1)):
            cond = d
            break
    if cond == f:
        return f, chi
    m = chi.order
    sub = unit_group(cond)
    exps = []
    for g, n in zip(sub.generators, sub.orders):
        a = g
        while f > 1 and gcd(a, f) != 1:
            a += cond
        e = chi.value_exponent(a)
        assert e is not None and (e * n) % m == 0, "primitivization failed"
        exps.append((e * n // m) % n)
    prim = DirichletCharacter(cond, tuple(exps))
    assert prim.order == m, "conductor reduction changed the order"
    return cond, prim


def bernoulli2_chi(chi: DirichletCharacter) -> CyclotomicNumber:
    """Generalized Bernoulli number B_{2,chi} for a primitive character."""
    f = chi.modulus
    m = chi.order
    sums: dict[int, Fraction] = {}
    for a in range(1, f + 1):
        e = chi.value_exponent(a)
        if e is None:
            continue
        t = Fraction(a, f)
        b2 = t * t - t + Fraction(1, 6)
        sums[e] = sums.get(e, Fraction(0)) + b2
    return CyclotomicNumber.from_exponent_sums(m, sums) * f


def L_minus_one(chi: DirichletCharacter) -> CyclotomicNumber:
    """L(chi, -1) = -B_{2,chi}/2 for a primitive character."""
    return bernoulli2_chi(chi) * Fraction(-1, 2)


def galois_orbits(chars: list[DirichletCharacter]) -> list[list[DirichletCharacter]]:
    """Partition into orbits under chi -> chi^k, k coprime to the order."""
    seen: set[tuple[int, ...]] = set()
    orbits = []
    for chi in chars:
        if chi.exponents in seen:
            continue
        m = chi.order
        orbit = []
        for k in units_mod(m):
            conj = chi.power(k)
            if conj.exponents not in seen:
                seen.add(conj.exponents)
                orbit.append(conj)
        orbits.append(orbit)
    return orbits


def _orbit_L_product(orbit: list[DirichletCharacter]) -> Fraction:
    """Rational product of L(chi*, -1) over one Galois orbit."""
    m = orbit[0].order
    prod = CyclotomicNumber.rational(1, m)
    for chi in orbit:
        _, prim = conductor_primitive(chi)
        val = L_minus_one(prim)
        if val.order != m:
            val = CyclotomicNumber.from_exponent_sums(
                m, {k * (m // val.order): c for k, c in enumerate(val.coeffs)})
        prod = prod * val
    if not prod.is_rational():
        raise NotRational(f"orbit product of conjugate L-values not rational: {prod}")
    return prod.to_rational()


def characters_trivial_on(f: int, kernel_units: set[int]) -> list[DirichletCharacter]:
    """Characters mod f that kill the given unit subgroup."""
    return [chi for chi in characters_mod(f)
            if all(chi.value_exponent(u) == 0 for u in kernel_units)]


def zeta_minus_one(h, realization) -> Fraction:
    """zeta_M(-1) for the fixed field M of the subgroup H <= G = Gal(L/Q).

    The product runs over all characters of G trivial on H, i.e. the
    characters mod f trivial on the unit preimage of H; each one is
    primitivized before evaluation so every Euler factor is right.
    """
    from .groups import subgroup_elements
    helems = set(subgroup_elements(h))
    preimage = {u for u in units_mod(realization.modulus)
                if realization.pi(u) in helems}
    chars = characters_trivial_on(realization.modulus, preimage)
    total = Fraction(1)
    for orbit in galois_orbits(chars):
        total *= _orbit_L_product(orbit)
    return total


def character_multiplicities(x, realization) -> list[tuple[DirichletCharacter, int]]:
    """Multiplicity of each character of G inside the lattice representation.

    m_chi = (1/|G|) sum_g conj(chi)(g) tr rho(g), computed exactly in
    Q(zeta_{ord chi}) and certified to be a nonnegative integer.
    """
    g = x.group
    if not g.is_abelian():
        raise NonAbelianRealization("character multiplicities need an abelian group")
    f = realization.modulus
    kernel = {u for u in units_mod(f) if realization.pi(u) == g.identity}
    chars = characters_trivial_on(f, kernel)
    # One unit representative per group element.
    reps: dict[int, int] = {}
    for u in units_mod(f):
        reps.setdefault(realization.pi(u), u)
    if len(reps) != g.order:
        raise NonAbelianRealization("realization does not cover the group")
    traces = {a: sum(x.action[a].data[i][i] for i in range(x.rank))
              for a in range(g.order)}
    out = []
    for chi in chars:
        m = chi.order
        sums: dict[int, Fraction] = {}
        for a in range(g.order):
            e = chi.value_exponent(reps[a])
            sums[(-e) % m] = sums.get((-e) % m, Fraction(0)) + traces[a]
        total = CyclotomicNumber.from_exponent_sums(m, sums) / g.order
        if not total.is_rational():
            raise MultiplicityNotInteger(f"multiplicity of {chi} not rational")
        mult = total.to_rational()
        if mult.denominator != 1 or mult < 0:
            raise MultiplicityNotInteger(f"multiplicity {mult} of {chi}")
        out.append((chi, int(mult)))
    return out


def artin_L_minus_one(x, realization, with_table: bool = False):
    """L(X, -1) (with sign) for a lattice split through an abelian,
    totally real realization; the product of L(chi*,-1)^{m_chi} grouped
    by Galois orbit. Raises if a hypothesis fails; never returns 0.
    """
    if not realization.totally_real:
        raise NotTotallyReal("Artin L-value at -1 needs pi(-1) = identity")
    mults = character_multiplicities(x, realization)
    assert sum(m for _, m in mults) == x.rank, "multiplicities must add to the rank"
    by_exp = {chi.exponents: m for chi, m in mults}
    total = Fraction(1)
    table = []
    for orbit in galois_orbits([chi for chi, _ in mults]):
        ms = {by_exp[chi.exponents] for chi in orbit}
        assert len(ms) == 1, "conjugate characters must have equal multiplicity"
        mult = ms.pop()
        if with_table:
            for chi in orbit:
                cond, prim = conductor_primitive(chi)
                table.append({"conductor": cond, "order": chi.order,
                              "multiplicity": mult,
                              "value": _value_json(L_minus_one(prim))})
        if mult == 0:
            continue
        total *= _orbit_L_product(orbit) ** mult
    assert total != 0, "L-value vanished despite a totally real splitting"
    return (total, table) if with_table else total


def _value_json(v: CyclotomicNumber):
    if v.is_rational():
        return str(v.to_rational())
    return {"order": v.order, "coeffs": [str(c) for c in v.coeffs]}
