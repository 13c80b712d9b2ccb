"""Convert eigenvalue-twist coordinates to ideal-triangulation shears.

For the one-holed torus: compute the edge parameters of the layered
triangulation, check the gluing equations, and rebuild the holonomy
matrices directly from the shears.
"""

import numpy as np

from pantsrep import builder, shearbend, surface
from pantsrep.coordinates import EdgeParams

e1, e2, t1 = -2.0 + 0.5j, -1.5 - 0.3j, 1.2 + 0.4j

a, b, c, z1, z2 = shearbend.one_holed_to_shear(e1, e2, t1)
print("tetrahedron parameters: z1 = %s, z2 = %s" % (np.round(z1, 6), np.round(z2, 6)))
print("edge parameters: a = %s, b = %s, c = %s"
      % (np.round(a, 6), np.round(b, 6), np.round(c, 6)))

print("\ngluing equation residuals:")
for row in shearbend.one_holed_gluing_rows(e1):
    print("  %-55s %.2e" % (row["note"], abs(shearbend.evaluate_gluing(row, [z1, z2]))))

ma_inv, mb = shearbend.shear_rep_one_holed(a, b, c)
surf = surface.one_holed_torus()
rep = builder.build(surf, EdgeParams({1: e1, 2: e2}, {1: t1}))

print("\nsquared traces, shear matrices vs. direct construction:")
tra2 = complex(np.trace(ma_inv.m)) ** 2
trb2 = complex(np.trace(mb.m)) ** 2
print("  interior curve: %s vs %s" % (np.round(tra2, 8), np.round((e1 + 1 / e1) ** 2, 8)))
print("  handle curve:   %s vs %s"
      % (np.round(trb2, 8), np.round(complex(rep.image("b1").trace()) ** 2, 8)))

p1, p2, p3 = shearbend.pants_shear_params(e1, e2, e2)
print("\npants shear parameters: %s" % (np.round([p1, p2, p3], 6),))
print("recovered squared eigenvalues: %s"
      % (np.round(shearbend.eigenvalues_from_shear(p1, p2, p3), 6),))
