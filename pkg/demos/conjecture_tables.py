"""
Dimension comparisons
=====================

Woronowicz vs quadratic (A2), Woronowicz vs quartic (B2, B3) and the theta
subalgebra vs its conjectured presentation (A3, D3).  Agreement is a
finding, not an assertion.
"""

from weylcalc import build_root_system, check_conjecture

# B3 in degree 6 applies A_6 (720 terms) to 4786 standard monomials, which
# is above the default cap, so that case raises it.
cases = [("2.1", ("A", 2), 4, None), ("2.2", ("B", 2), 6, None), ("2.2", ("B", 3), 6, 2**22),
         ("5.1", ("A", 3), 6, None), ("5.1", ("D", 3), 6, None)]
for which, (t, r), d, cap in cases:
    kw = {"cap": cap} if cap else {}
    rep = check_conjecture(which, build_root_system(t, r), d, **kw)
    print(f"conjecture {which} on {t}{r}: {rep.left_label} {rep.left}")
    print(f"{'':21s}{rep.right_label} {rep.right}  agree={rep.agree}")
    for note in rep.notes:
        print("   ", note)
