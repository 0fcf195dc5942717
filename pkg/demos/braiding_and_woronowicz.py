"""
Braiding, antisymmetrizers and the Woronowicz algebra
=====================================================

Psi(e_a e_b) = e_{aba^-1} e_a permutes degree-2 monomials.  The Woronowicz
algebra divides by the kernels of all antisymmetrizers A_d; we compare its
dimensions with the quadratic and quartic algebras.
"""

from weylcalc import NCPoly, algebra, antisymmetrize, build_root_system, psi_i
from weylcalc.calculus import psi_cycles, woronowicz_dims

a3 = build_root_system("A", 3)
labels = [r.label for r in a3.refl]
x = NCPoly.word((0, 3))  # e_(12) e_(23)
print(x.pretty(labels), "->", psi_i(a3, x, 1).pretty(labels))

# Orbits of Psi on degree-2 monomials; each orbit sum is a quadratic relation.
for cyc in psi_cycles(a3)[:6]:
    print("  orbit:", " -> ".join(labels[a] + labels[b] for a, b in cyc))

# A_2 = id - Psi, so the square of a generator is killed.
print("A_2(e_(12)^2) =", antisymmetrize(a3, NCPoly.word((0, 0))).pretty(labels))

b2 = build_root_system("B", 2)
print("B2 woronowicz (brute force):", woronowicz_dims(b2, 5))
print("B2 woronowicz (on quar standard monomials):",
      woronowicz_dims(b2, 8, via=algebra(b2, "quar")))
