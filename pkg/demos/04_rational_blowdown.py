"""A classical rational blow-down, end to end.

Blow up the ten nodes of a rational sextic: the proper transform becomes a
(-4)-sphere, the simplest Wahl chain [4].  Replacing its neighborhood by
the rational homology ball B_{2,1} yields a closed 4-manifold with
K^2 = 0 and first homology Z/2, because the sextic pairs evenly with every
class of the blown-up plane.
"""

from ratblow import (BlowdownConfig, CenterSpec, ChainSpec,
                     blowdown_invariants, boundary_lens, h1, h1_presentation,
                     projective_plane, validate_chain)

s = projective_plane().add_plane_curve("sextic", 6)
print("a degree-6 rational curve has", s.curve("sextic").node_budget, "nodes")

for i in range(10):
    s = s.blow_up(CenterSpec("n%d" % i, node_of="sextic"))
print("after blowing up all ten nodes: sextic^2 =", s.self_int("sextic"),
      " genus =", s.genus_a("sextic"))

chain = ChainSpec("c", ("sextic",))
print("chain recognized as Wahl", validate_chain(s, chain))
print("boundary lens:", boundary_lens(s, chain).plumbing)

inv = blowdown_invariants(s, (chain,))
print("blow-down invariants: e=%d sigma=%d b2=%d b2+=%d K^2=%d chi_h=%d"
      % (inv.e, inv.sigma, inv.b2, inv.b2_plus, inv.k2, inv.chi_h))

cfg = BlowdownConfig(s, (chain,), ())
pres = h1_presentation(cfg)
print("meridian presentation: %d relations on %d generator(s)"
      % (pres.relations.rows, pres.relations.cols))
print("H1 of the blow-down:", h1(cfg))

# Contrast: a (-4)-line through five points pairs oddly with the basis, so
# the same surgery there kills the homology entirely.
t = projective_plane().add_plane_curve("line", 1)
for i in range(5):
    t = t.blow_up(CenterSpec("p%d" % i, on=("line",)))
line_chain = ChainSpec("c", ("line",))
validate_chain(t, line_chain)
print("same surgery on a (-4)-line:", h1(BlowdownConfig(t, (line_chain,), ())))
