"""
Bounds on the number of sporadic elements
=========================================

Lattice-point counts under a simplex give upper bounds on n(S) and on
n(S, alpha), the number of elements not exceeding alpha.
"""

from nsgroebner import bounds, semigroup

# Points under x1/2 + x2/2 <= 1, and with all coordinates positive.
print(bounds.count_q([2, 2]), bounds.count_p([2, 2]))
print("weak estimate sides for (6,6,6):", bounds.gly_weak_sides([6, 6, 6]))

for gens in [(5, 6, 11), (6, 9, 20), (7, 11, 34, 37)]:
    rep = bounds.bound_report(gens)
    print(gens, "f =", rep.frobenius, "n(S) =", rep.n_true_without_zero, "bound =", rep.gly_bound)

S = (5, 7)
for alpha in (20, 35, 50):
    print(f"n(S,{alpha}) = {semigroup.n_of_alpha(S, alpha)} <= {bounds.prism_pyramid(S, alpha)}")

# The one-line corollary undercounts here: n = 7 but it gives 6.
print(semigroup.n_of_alpha((2, 3), 7), bounds.simple_corollary_bound((2, 3), 7), bounds.prism_box_bound((2, 3), 7))

for chk in bounds.check_published_tables():
    if chk.status != "match":
        print(chk.printed.generators, chk.status)
