"""
Invariants of a numerical semigroup
===================================

Frobenius number, genus, sporadic elements and the Wilf inequality,
all read off a reachability table.
"""

from nsgroebner import semigroup

# The McNugget semigroup: which box counts can be bought with 6, 9 and 20?
S = semigroup.normalize([6, 9, 20])
inv = semigroup.invariants(S)
print(S, "f =", inv.frobenius, "genus =", inv.genus)
print("gaps:", list(inv.gaps))
print("sporadic elements:", list(inv.sporadic))

# Redundant generators are tolerated; the minimal system is recovered.
print(semigroup.minimal_generators([5, 7, 12, 35]))

# Wilf: c(S) <= e(S) * n(S), with n(S) counting 0.
w = semigroup.wilf_check(S)
print(f"Wilf {w.conductor} <= {w.e}*{w.n_with_zero}: {w.holds}")

# Representations of 327 as 5a + 7b.
print("d(327) =", semigroup.denumerant((5, 7), 327))
