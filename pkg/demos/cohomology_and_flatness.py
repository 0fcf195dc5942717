"""
Closed 1-forms and flat connections
===================================

The differential is d x = theta x - (-1)^k x theta with theta the sum of
all generators.  Closed 1-forms are constant on conjugacy classes of
reflections, so H^1 has one dimension per root length.
"""

from weylcalc import algebra, build_root_system, curvature, h1
from weylcalc.connections import g2_etas, theta_family

for t, r in (("A", 3), ("B", 2), ("G2", None)):
    rs = build_root_system(t, r)
    res = h1(rs)
    labels = [x.label for x in rs.refl]
    print(rs.name, "dim H^1 =", res.dimension, [b.pretty(labels) for b in res.basis])

# -theta_i is flat in every classical family.
for t, r in (("A", 3), ("B", 3), ("D", 3)):
    rs = build_root_system(t, r)
    h = algebra(rs, "quad")
    print(rs.name, "F(-theta_i) = 0:", all(curvature(h, -th).is_zero() for th in theta_family(rs)))

g2 = build_root_system("G2")
h = algebra(g2, "quad")
eta1, eta2 = g2_etas()
print("G2 F(eta1), F(eta2):", curvature(h, eta1).is_zero(), curvature(h, eta2).is_zero())
