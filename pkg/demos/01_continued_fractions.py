"""Hirzebruch-Jung continued fractions and Wahl chains.

A string [b1, ..., bk] with every bi >= 2 encodes both the continued
fraction p/q = b1 - 1/(b2 - ...) and a linear chain of rational curves of
self-intersections -b1, ..., -bk.  This demo walks through the arithmetic
the rest of the package is built on.
"""

from ratblow import (dual_chain, hj_expand, hj_value, lens_boundary,
                     meridian_coefficients, recognize_wahl, wahl_chain,
                     wahl_extensions)

# Expanding a fraction and evaluating back are mutually inverse.
print("36/5 expands to", hj_expand(36, 5))
print("[8,2,2,2,2] evaluates to", hj_value([8, 2, 2, 2, 2]))
print()

# Wahl chains are the strings of n^2/(na-1); their plumbings bound the
# rational homology balls that make rational blow-downs possible.
print("the (6,1) Wahl chain:", wahl_chain(6, 1))
print("the (110,67) Wahl chain:", wahl_chain(110, 67))
print("recognized back:", recognize_wahl([2, 3, 5, 7, 2, 2, 3, 2, 2, 3, 3]))
print("[2,2] is not a Wahl chain:", recognize_wahl([2, 2]))
print()

# Every Wahl chain arises from [4] by two elementary moves.
chain = [4]
print("growing from [4]:")
for step in range(4):
    left, right = wahl_extensions(chain)
    chain = right
    print("  ", chain, "->", recognize_wahl(chain))
print()

# Meridians of the chain curves generate the first homology Z/p of the
# boundary lens space; the coefficients follow a three-term recursion.
m = meridian_coefficients([8, 2, 2, 2, 2])
print("meridian coefficients of [8,2,2,2,2]:", m.coefficients)
print("boundary group order:", m.order)

lb = lens_boundary([8, 2, 2, 2, 2])
print("plumbing boundary:", lb.plumbing)
print("seen from the complement:", lb.complement,
      "~ L%s" % (lb.complement.normalized(),))
print("orientation-reversed string:", dual_chain([8, 2, 2, 2, 2]))
