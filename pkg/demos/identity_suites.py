"""
Relations among the theta connections
=====================================

Each named suite builds the elements that should vanish and reduces them
to normal form.  A witness is printed for any instance that survives.
"""

from weylcalc.connections import run_suite

for suite in ("lemma5.1", "lemma5.5", "thm5.1", "prop5.1", "conj5.1b"):
    for rep in run_suite(suite):
        print(f"{rep.status:4s} {suite:9s} {rep.name} {rep.params}")
        if rep.witness:
            print("     witness:", rep.witness[:120])

# The B3 failure above is specific to the quartic algebra: the same product
# is killed by A_6, so it does vanish in the Woronowicz algebra.
