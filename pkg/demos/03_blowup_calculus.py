"""Blow-up calculus on the Picard lattice of an iterated blow-up of P^2.

Curves are tracked as integer classes over the basis (H, e_1, ..., e_N)
with the form diag(1, -1, ..., -1); a blow-up center names the curves
through it, and validity is checked at the lattice level.
"""

from ratblow import CenterSpec, projective_plane

s = projective_plane()
print("P^2:", "e, sigma, b2, K^2 =", s.invariants())

# Two lines and a conic; Bezout numbers fall out of the lattice form.
s = s.add_plane_curve("l1", 1).add_plane_curve("l2", 1)
s = s.add_plane_curve("conic", 2)
print("l1 . l2 =", s.pair("l1", "l2"), "  l1 . conic =", s.pair("l1", "conic"))

# Blowing up the intersection of the two lines separates them.
s = s.blow_up(CenterSpec("e1", on=("l1", "l2")))
print("after blowing up l1*l2: l1.l2 =", s.pair("l1", "l2"),
      " l1^2 =", s.self_int("l1"), " l1.e1 =", s.pair("l1", "e1"))

# Tangency is modeled by consecutive centers listing the same curves: the
# conic and l1 meet twice, so they can follow each other one level up.
s = s.blow_up(CenterSpec("e2", on=("l1", "conic")))
s = s.blow_up(CenterSpec("e3", on=("e2", "l1", "conic")))
print("after a tangency tower: l1.conic =", s.pair("l1", "conic"))

# A nodal cubic carries one node; blowing it up costs 4 in self-intersection
# and one unit of arithmetic genus.
s = s.add_class_curve("cubic", [3, -1, 0, 0], node_budget=1)
print("cubic genus before:", s.genus_a("cubic"))
s = s.blow_up(CenterSpec("e4", node_of="cubic"))
print("cubic after its node is blown up: self =", s.self_int("cubic"),
      " genus =", s.genus_a("cubic"),
      " meets e4 in", s.pair("cubic", "e4"), "points")

# Numerical invariants track the count of blow-ups.
e, sigma, b2, k2 = s.invariants()
print("invariants: e=%d sigma=%d b2=%d K^2=%d  (2e+3sigma=%d)"
      % (e, sigma, b2, k2, 2 * e + 3 * sigma))
