"""
Hilbert series of the quadratic and quartic algebras
=====================================================

Build the quadratic algebra of B2 from the kernel of (id - Psi), add the
two quartic relations, and compare both with the anticommutative quotient.
"""

from weylcalc import algebra, build_root_system, hilbert_dims

b2 = build_root_system("B", 2)
print("generators:", [r.label for r in b2.refl])

# The quadratic algebra is infinite; its dimensions grow by 4 per degree.
print("quad     ", hilbert_dims(algebra(b2, "quad"), 8))

# The quartic relations make it finite, with total dimension 64.
quar = hilbert_dims(algebra(b2, "quar"), 10)
print("quar     ", quar, "total", sum(quar))

# Forcing every pair of generators to anticommute leaves very little.
print("anticomm ", hilbert_dims(algebra(b2, "anticomm"), 5))

# The same engine handles the other families.
for t, r in (("A", 2), ("A", 3), ("D", 3), ("G2", None)):
    rs = build_root_system(t, r)
    print(f"{rs.name:4s} quad", hilbert_dims(algebra(rs, "quad"), 6))
