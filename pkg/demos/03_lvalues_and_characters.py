"""Dirichlet characters, generalized Bernoulli numbers, and L(chi, -1).

L(chi, -1) = -B_{2,chi}/2 with B_{2,chi} = f sum_a chi(a) B_2(a/f).
Dedekind zeta values of real abelian fields are products of these over
the characters of the field, primitivized so every Euler factor is
right; Galois-conjugate characters are multiplied first so each factor
of the product is certified rational.
"""

from torusbt import (L_minus_one, bernoulli2_chi, characters_mod,
                     conductor_primitive, cyclic_group, fixture,
                     realization_from_images, subgroup_classes, zeta_minus_one)

print("characters mod 5:")
for chi in characters_mod(5):
    cond, prim = conductor_primitive(chi)
    print(f"  exponents {chi.exponents}: order {chi.order}, conductor {cond}, "
          f"B2 = {bernoulli2_chi(prim)}, L(-1) = {L_minus_one(prim)}")
print()

print("characters mod 8 (the even conductor-8 one belongs to Q(sqrt2)):")
for chi in characters_mod(8):
    cond, prim = conductor_primitive(chi)
    parity = "even" if chi.is_even() else "odd "
    print(f"  exponents {chi.exponents}: {parity}, conductor {cond}, "
          f"L(-1) = {L_minus_one(prim)}")
print()

r5 = fixture("res_sqrt5").realization
c2 = fixture("res_sqrt5").group
cls = subgroup_classes(c2)
print("zeta_Q(-1)        =", zeta_minus_one(cls[1], r5))
print("zeta_Q(sqrt5)(-1) =", zeta_minus_one(cls[0], r5))
print("zeta_Q(sqrt2)(-1) =",
      zeta_minus_one(subgroup_classes(c2)[0], fixture("res_sqrt2").realization))
print()

# A cyclic quartic field: Q(zeta_16)^+, where honest quartic characters
# appear and conjugate pairs must multiply to a rational number.
c4 = cyclic_group(4)
r16 = realization_from_images(c4, 16, {15: 0, 3: 1})
z = zeta_minus_one(subgroup_classes(c4)[0], r16)
print("zeta of the real quartic field Q(zeta_16)^+ at -1:", z)
