"""Flasque resolutions and motivic-interpretation certificates.

Every lattice X has a resolution 0 -> Q -> P -> X -> 0 with P a direct
sum of coset lattices Z[G/H] and Q flasque (H^1(H, Q) = 0 for all H).
When the splitting group is meta-cyclic, or when Q is certified
invertible, the torus admits a motivic interpretation. The verdict is
never "no": only sufficient conditions are known.
"""

from torusbt import (check_motivic_interpretation, dual, fixture,
                     flasque_resolution, h1, is_flasque, is_metacyclic,
                     norm_one_lattice, sign_lattice, subgroup_classes)

# --- the sign lattice over C2: the smallest non-flasque example -------
c2 = fixture("normone_5").group
zm = sign_lattice(c2)
ok, witnesses = is_flasque(zm)
print("sign lattice flasque?", ok)
for cls, grp in witnesses:
    print(f"  witness: H^1(subgroup of order {cls.order}, X) = {grp}")

res = flasque_resolution(zm)
print("resolution: P = Z[C2] (rank", res.p_lattice.rank, "), Q rank", res.q_lattice.rank)
print("  inclusion of Q (norm vector):", res.inclusion.tolist())
print("  Q is the trivial lattice:", all(m.is_identity() for m in res.q_lattice.action))
print()

# --- the dual norm-one torus over the biquadratic field ----------------
v4f = fixture("dual_normone_v4")
j = v4f.lattice
print("dual norm-one lattice over C2 x C2 (rank 3):")
print("  meta-cyclic splitting?", is_metacyclic(j.group))
for cls in subgroup_classes(j.group):
    print(f"  H^1(order-{cls.order} subgroup, X) = {h1(cls, j)}")
verdict, cert, res = check_motivic_interpretation(j)
print("verdict:", verdict)
print("  resolution kernel rank:", res.q_lattice.rank)
print("  certificate:", cert.to_json())
print()

# --- the norm-one torus itself: the search comes back empty ------------
n1 = norm_one_lattice(j.group)
verdict, cert, res = check_motivic_interpretation(n1)
print("norm-one lattice over C2 x C2: verdict", verdict)
print("  (its flasque kernel, rank", res.q_lattice.rank,
      ", is the classical non-invertible example; the bounded")
print("   search is sound, so absence of a certificate is not a 'no')")
