"""
The twisted cubic by liaison
============================

Two quadrics through the twisted cubic C meet in C and a line L.  On
F = A U + B W the class of C is the member of the pencil spanned by the
classes of C u L and of L which I(C)_N annihilates.
"""

from hodgelocus import (ideal_codim, linked_class_rep, nl_codim, twisted_cubic_ideal,
                        twisted_cubic_link)

cubic = twisted_cubic_ideal()
print("codim I(C)_{d-4}:", {d: ideal_codim(cubic, d - 4) for d in range(5, 9)})

for d in (5, 6):
    link, ring = twisted_cubic_link(d, seed=0)
    rep = linked_class_rep(link, ring)
    print(f"d={d}: tangent codimension {nl_codim(rep)}, expected 3d-11 = {3 * d - 11}")
    # the curve's own ideal lies in every tangent piece
    print("   I(C)_k inside T_{1,k}:",
          all(rep.t1(k).contains(cubic.piece(k)) for k in range(ring.N + 1)))
