"""
Twisted derivations
===================

D_gamma(x) = e_gamma x - (-1)^deg(x) s_gamma(x) e_gamma satisfies a
sign-twisted Leibniz rule and preserves the quadratic ideal, so it can be
used to generate new relations from old ones.
"""

from weylcalc import algebra, build_root_system, normal_form, twisted_derivation
from weylcalc.connections import cyclic_by_derivations, cyclic_element

a3 = build_root_system("A", 3)
h = algebra(a3, "quad")
labels = [r.label for r in a3.refl]

# Start from (12)^2 = 0 and apply D_(23) then D_(34).
routed = cyclic_by_derivations(a3, [1, 2, 3, 4])
direct = cyclic_element(a3, [1, 2, 3, 4])
print("derived:", routed.pretty(labels))
print("matches the cyclic relation up to sign:", routed == -direct)
print("vanishes in the quadratic algebra:", normal_form(h, routed).is_zero())

gamma = a3.reflection_by_label("(12)")
for rel in h.relations[:3]:
    print(rel.pretty(labels), "->", normal_form(h, twisted_derivation(a3, gamma, rel)).pretty(labels))
