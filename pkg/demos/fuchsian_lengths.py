"""Hyperbolic structures: certificates, Fenchel-Nielsen coordinates, lengths.

Picks a point on the real locus (e_i < -1, t_i > 0), certifies
discreteness of each pants group, converts to Fenchel-Nielsen length/twist
coordinates and back, and compares the length of the curve produced by an
elementary move with the direct length formula.
"""

import math

from pantsrep import builder, coordinates, fuchsian, surface
from pantsrep.coordinates import EdgeParams
from pantsrep.moves import Move, apply_move

surf = surface.four_holed_sphere()
params = EdgeParams(
    eigen={1: -2.0, 2: -1.6, 3: -2.4, 4: -3.0, 5: -1.9},
    twist={1: 1.7},
)
assert fuchsian.in_teich_domain(params)

print("discreteness certificate at each vertex (fixed-point chains):")
graph = surf.graph
for vid in graph.trivalent_vertices():
    es = [params.eigen[eid] for eid, _ in graph.vertices[vid].incident]
    cert = fuchsian.pants_discreteness_certificate(*es)
    print("  vertex %d: passed=%s  chain=%s" % (vid, cert.passed,
                                                [round(x, 4) for x in cert.chain]))

fn = fuchsian.to_fenchel_nielsen(params, surf)
print("\nlengths (2 log(-e)) and twists (log t^FN):")
for eid in sorted(fn.lengths):
    tau = fn.fn_twists.get(eid)
    print("  edge %d: l = %.6f%s" % (eid, fn.lengths[eid],
                                     "" if tau is None else ", tau = %.6f" % tau))

back = fuchsian.from_fenchel_nielsen(fn, surf)
err = max(abs(back.eigen[k] - params.eigen[k]) for k in params.eigen)
print("round-trip error: %.2e" % err)

# length of the transverse curve, two ways
lp = coordinates.local_picture(surf, params, 1)
ls = [2 * math.log(-complex(x).real) for x in lp.es]
direct = fuchsian.okai_length(ls, fn.fn_twists[1])
s1, p1 = apply_move(surf, params, Move("elem", 1))
p1n, _ = fuchsian.normalize_domain(p1, s1)
via_move = 2 * math.log(-p1n.eigen[1].real)
print("\nlength of the curve after the elementary move:")
print("  length formula: %.10f" % direct)
print("  move + eigenvalue: %.10f" % via_move)

rep = builder.build(surf, params)
print("\nobstruction signs (all +1 means the lift lands in PSL(2,R)):",
      fuchsian.psl2r_obstruction(rep) or "(no handles)")
