"""The structural consistency suite around the prediction.

  * induction identities m*chi_X + chi_P = chi_Q turn the L-value into a
    product of Dedekind zeta values of subfields (checked by exact
    rational m-th roots);
  * character-equal (isogenous) lattices predict the same odd part;
  * Weil restriction through any subgroup matches the classical
    two-factor prediction for the fixed field;
  * order-2 decompositions reproduce the real-place torsion table.
"""

from torusbt import (artin_L_minus_one, direct_sum, fixture,
                     isogeny_invariance_check, ono_decomposition, ono_l_value,
                     permutation_lattice, real_decomposition, shapiro_suite,
                     sign_lattice, trivial_lattice)

res5 = fixture("res_sqrt5")
c2 = res5.group

# --- induction identity and the m-th-root cross-check -----------------
zm = sign_lattice(c2)
m, p_spec, q_spec, dec = ono_decomposition(zm)
print("sign lattice identity: m =", m, " P spec", p_spec, " Q spec", q_spec)
print("  (T + G_m ~ Res G_m at the character level)")
root, ident, warn = ono_l_value(zm, res5.realization)
print("  induction route |L| =", root, " direct route |L| =",
      abs(artin_L_minus_one(zm, res5.realization)))
print()

# --- isogeny invariance up to a power of two ---------------------------
x1 = direct_sum(zm, trivial_lattice(c2))
out = isogeny_invariance_check(x1, res5.lattice, res5.realization)
print("Z^- + Z versus Z[C2] over conductor 5:")
print(f"  predictions {out['predicted_1']} vs {out['predicted_2']}, "
      f"ratio {out['ratio']} = 2^{out['two_power_exponent']}, "
      f"odd parts equal: {out['odd_parts_equal']}")
print()

# --- Weil restriction / Shapiro across every subgroup ------------------
for name in ("res_sqrt5", "res_sqrt2", "dual_normone_v4"):
    f = fixture(name)
    suite = shapiro_suite(f.realization)
    print(f"shapiro suite on {name}: pass = {suite['pass']}")
    for row in suite["instances"]:
        print(f"  subgroup {row['subgroup_id']}: lattice route {row['via_lattice']}"
              f" = classical {row['classical']}"
              f" (zeta {row['zeta_fixed_field']}, w2 {row['w2_fixed_field']})")
print()

# --- the real place -----------------------------------------------------
print("real-place decompositions (a, b, c) and torsion:")
for label, x in (("Z", trivial_lattice(c2)), ("Z^-", zm),
                 ("Z[C2]", permutation_lattice(c2, (c2.identity,)))):
    a, b, c, tor = real_decomposition(x, 1)
    print(f"  {label:6} -> ({a}, {b}, {c}), K^T(R) torsion = {tor}")
