"""Change the marking and watch the coordinates transform.

Runs the finite sign actions and all five move types on the four-holed
sphere, checking after each step that the squared traces of the boundary
curves are unchanged: the moves change the bookkeeping, not the
representation.
"""

import numpy as np

from pantsrep import builder, surface, symmetry
from pantsrep.coordinates import EdgeParams
from pantsrep.moves import Move, apply_move

surf = surface.four_holed_sphere()
params = EdgeParams(
    eigen={1: -2.0 + 0.3j, 2: -1.8, 3: 2.2 - 0.4j, 4: -2.5, 5: 3.0 + 0.2j},
    twist={1: 1.25 - 0.5j},
)


def boundary_traces(surf, params):
    rep = builder.build(surf, params)
    return np.array(
        [complex(rep.image("d%d" % i).trace()) ** 2 for i in range(1, 5)]
    )


base = boundary_traces(surf, params)
print("squared boundary traces:", np.round(base, 6))

steps = [
    ("eigenvalue flip on edge 1", lambda s, p: (s, symmetry.flip_eigenvalue(p, s, 1))),
    ("sign action (first basis element)",
     lambda s, p: (s, symmetry.act_epsilon(p, symmetry.epsilon_basis(s)[0], surface=s))),
    ("reverse edge 1", lambda s, p: apply_move(s, p, Move("reverse", 1))),
    ("right Dehn twist along edge 1", lambda s, p: apply_move(s, p, Move("twist-r", 1))),
    ("vertex move at vertex 0", lambda s, p: apply_move(s, p, Move("vertex", 0))),
    ("elementary move on edge 1", lambda s, p: apply_move(s, p, Move("elem", 1))),
]

s, p = surf, params
for label, step in steps:
    s, p = step(s, p)
    now = boundary_traces(s, p)
    drift = np.abs(np.sort_complex(now) - np.sort_complex(base)).max()
    print("%-38s boundary spectrum drift %.2e" % (label, drift))
    print("    twist of edge 1 is now", np.round(complex(p.twist[1]), 6))
