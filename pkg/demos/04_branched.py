"""Branched-cover Betti numbers from the two-variable polynomial.

Specializes the bundled two-variable polynomial along x -> t^k, y -> t and
counts roots shared with the all-ones polynomial of each level n.  Away
from k = 1 and k = n - 1 the count vanishes at prime levels, so the
corresponding branched covers carry no rational homology.
Run with:  python demos/04_branched.py
"""

from math import gcd

from foxhom import branched_betti, datasets, mutation_invariance_check, nu_poly, substitute_monomial
from foxhom.laurent import LaurentPoly

delta = datasets.load_poly("delta_L")
print(f"two-variable polynomial: {delta}")
print()

# The specialization factors exactly through all-ones polynomials.
t = LaurentPoly.variable(("t",), "t")
k = 4
spec = substitute_monomial(delta, {"x": (1, (k,)), "y": (1, (1,))}, ("t",))
product = ((t - 1) ** 5 * nu_poly(k - 1) * nu_poly(k) * nu_poly(k + 1)).shift((-(3 * k - 1),))
print(f"k = {k} specialization: {spec.normal_form()}")
print(f"factored form agrees exactly: {spec == product}")
print()

print("shared-root counts (first Betti numbers of the branched covers):")
for n in (5, 7, 11, 13):
    cells = []
    for k in range(1, n):
        if gcd(k, n) != 1:
            continue
        count = branched_betti(delta, k, n)
        cells.append(f"k={k}:{int(count)}{'*' if count.all_roots else ''}")
    print(f"  n={n:>2}  " + "  ".join(cells))
print("  (* marks the identically-zero specialization at k = 1)")
print()

# The diagonal specialization is blind to mutation; a double of a tangle
# has vanishing polynomial, and indeed both diagonals are zero.
zero = LaurentPoly.zero(("x", "y"))
print(f"diagonal agrees with the zero polynomial: {mutation_invariance_check(delta, zero)}")
