"""From eigenvalue-twist parameters to explicit matrix generators.

The construction walks the maximal tree of the fat graph, propagating a
base triple of fixed points from the root vertex, applies the pants
representation at each trivalent vertex, and closes up each complement
edge with a Moebius map carrying the tree-side triple to its translate
across the edge.  The resulting generator images satisfy the surface-group
relations exactly up to rounding.
"""

import cmath
from collections import namedtuple

import numpy as np

from .projective import (
    DegenerateInputError,
    INF,
    MoebiusMap,
    as_point,
    fixed_points_with_eigs,
    sl_normalize,
    three_point_map,
)
from .pants import make_pants_data, pants_rep
from .surface import presentation as make_presentation, maximal_tree, inverse_word
from .coordinates import (
    EdgeParams,
    best_twist_from_fixed_points,
    in_domain,
    local_picture,
    propagate_backward,
    propagate_forward,
)

DEFAULT_BASE = (as_point(0), as_point(1), INF)


class SurfaceRepresentation:
    """Matrix images of the surface-group generators plus build data.

    images maps generator names to MoebiusMaps with determinant 1;
    points maps each trivalent vertex to its slot-ordered fixed-point
    triple; beta_signs records the SL sign chosen for each stable letter.
    """

    def __init__(self, surface, tree, params, pres, images, points, base,
                 lift_mode="SL", beta_signs=None):
        self.surface = surface
        self.tree = set(tree)
        self.params = params
        self.presentation = pres
        self.images = dict(images)
        self.points = points
        self.base = base
        self.lift_mode = lift_mode
        self.beta_signs = dict(beta_signs or {i: 1 for i in range(1, surface.genus + 1)})

    def evaluate(self, word):
        out = MoebiusMap.identity()
        for name, exp in word:
            m = self.images[name]
            out = out @ (m if exp == 1 else m.inverse())
        return out

    def image(self, name):
        return self.images[name]


def _adjusted_eigen(graph, params, vid):
    """Slot-ordered eigenvalue triple at a trivalent vertex.

    An edge contributes its parameter at its tail and the inverse at its
    head.
    """
    out = []
    for eid, end in graph.vertices[vid].incident:
        e = params.eigen[eid]
        out.append(e if end == "tail" else 1 / e)
    return tuple(out)


def _assign_points(surface, params, tree, base):
    """Fixed-point triples at every trivalent vertex, spread from the root."""
    graph = surface.graph
    root = min(graph.trivalent_vertices())
    points = {root: list(base)}
    tree_interior = [eid for eid in sorted(tree) if not graph.is_boundary(eid)]
    pending = set(tree_interior)
    while pending:
        progressed = False
        for eid in sorted(pending):
            lp = local_picture(surface, params, eid)
            (v, sv), (w, sw) = lp.tail_slots, lp.head_slots
            if v in points and w not in points:
                x1 = points[v][sv]
                x2, x3 = points[v][(sv + 1) % 3], points[v][(sv + 2) % 3]
                x4, x5 = propagate_forward(lp.es, lp.t1, x1, x2, x3)
                triple = [None, None, None]
                triple[sw], triple[(sw + 1) % 3], triple[(sw + 2) % 3] = x1, x4, x5
                points[w] = triple
            elif w in points and v not in points:
                x1 = points[w][sw]
                x4, x5 = points[w][(sw + 1) % 3], points[w][(sw + 2) % 3]
                x2, x3 = propagate_backward(lp.es, lp.t1, x1, x4, x5)
                triple = [None, None, None]
                triple[sv], triple[(sv + 1) % 3], triple[(sv + 2) % 3] = x1, x2, x3
                points[v] = triple
            elif v in points and w in points:
                pass  # loop edge: both endpoints are the same vertex
            else:
                continue
            pending.discard(eid)
            progressed = True
            break
        if not progressed:
            raise ValueError("tree does not reach every trivalent vertex")
    return points


def _to_sl(m):
    return sl_normalize(m)


def build(surface, params, tree=None, base=None, lift_mode="SL"):
    """Construct the representation determined by the parameters.

    base is the fixed-point triple placed at the root vertex, slot order
    counterclockwise from slot 0; differing bases give conjugate results.
    """
    graph = surface.graph
    if tree is None:
        tree = surface.tree if surface.tree is not None else maximal_tree(surface)
    tree = set(tree)
    if not in_domain(params, surface):
        raise DegenerateInputError("parameters outside the admissible domain")
    if base is None:
        base = DEFAULT_BASE
    base = tuple(as_point(p) for p in base)
    if (base[0].same_as(base[1]) or base[1].same_as(base[2])
            or base[0].same_as(base[2])):
        raise ValueError("base triple must be three distinct points")

    pres = make_presentation(surface, tree)
    points = _assign_points(surface, params, tree, base)

    mats = {}
    for vid in graph.trivalent_vertices():
        es = _adjusted_eigen(graph, params, vid)
        data = make_pants_data(es, points[vid])
        mats[vid] = pants_rep(data)

    g = surface.genus
    images = {}
    for i, eid in enumerate(pres.u_edges, start=1):
        v, sv = graph.slot_of[(eid, "tail")]
        w, sw = graph.slot_of[(eid, "head")]
        images["a%d" % i] = mats[v][sv]
        images["a%d" % (g + i)] = mats[w][sw]
    for j, eid in enumerate(graph.boundary_edges(), start=1):
        for end in ("tail", "head"):
            vid, slot = graph.slot_of[(eid, end)]
            if graph.vertices[vid].kind == "tri":
                images["d%d" % j] = mats[vid][slot]
    beta_signs = {}
    for i, eid in enumerate(pres.u_edges, start=1):
        lp = local_picture(surface, params, eid)
        (v, sv), (w, sw) = lp.tail_slots, lp.head_slots
        x1 = points[v][sv]
        x2, x3 = points[v][(sv + 1) % 3], points[v][(sv + 2) % 3]
        x4, x5 = propagate_forward(lp.es, lp.t1, x1, x2, x3)
        src = (points[w][sw], points[w][(sw + 1) % 3], points[w][(sw + 2) % 3])
        bmap = _to_sl(three_point_map(src, (x1, x4, x5)))
        images["b%d" % i] = bmap
        beta_signs[i] = 1
    return SurfaceRepresentation(
        surface, tree, params, pres, images, points, base,
        lift_mode=lift_mode, beta_signs=beta_signs,
    )


def _residual(m, lift_mode):
    a = m.m
    i = np.eye(2)
    if lift_mode == "SL":
        return float(min(np.abs(a - i).max(), np.abs(a + i).max()))
    s = a / cmath.sqrt(a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0])
    return float(min(np.abs(s - i).max(), np.abs(s + i).max()))


def verify_relations(rep, tol=None):
    """Residual (distance of each relation product to +-identity) per relation."""
    out = {}
    out["relator"] = _residual(rep.evaluate(rep.presentation.one_relator()), rep.lift_mode)
    out["walk"] = _residual(rep.evaluate(rep.presentation.relation), rep.lift_mode)
    for i, (lhs, rhs) in enumerate(rep.presentation.hnn, start=1):
        m = rep.evaluate(lhs) @ rep.evaluate(rhs).inverse()
        out["hnn%d" % i] = _residual(m, rep.lift_mode)
    return out


def _vertex_matrices(rep, vid):
    """The three pants matrices at a vertex, from the generator words."""
    return [rep.evaluate(rep.presentation.vertex_words[(vid, s)]) for s in range(3)]


def recover_coordinates(rep, eigen_choice=None, tol=1e-9):
    """Invert build: eigenvalue and twist parameters from the matrices.

    eigen_choice maps an edge id to +-1 and selects which of the two
    eigenvalue branches of the curve image is reported (default: the
    dominant branch returned by fixed_points_with_eigs).  Requires every
    curve image to be non-parabolic and every vertex restriction to be
    irreducible.
    """
    surface, graph = rep.surface, rep.surface.graph
    eigen_choice = eigen_choice or {}
    slot_fixed = {}
    slot_eigen = {}
    for vid in graph.trivalent_vertices():
        ms = _vertex_matrices(rep, vid)
        for s, pair in enumerate(zip(ms, ms[1:] + ms[:1])):
            comm = pair[0] @ pair[1] @ pair[0].inverse() @ pair[1].inverse()
            if abs(comm.trace() - 2) <= tol:
                raise DegenerateInputError(
                    "reducible restriction at vertex %r" % (vid,), factor="tr[m,m']-2"
                )
        for s, m in enumerate(ms):
            x, e, y = fixed_points_with_eigs(m, tol=tol)
            slot_fixed[(vid, s)] = (x, y)
            slot_eigen[(vid, s)] = e

    eigen = {}
    branch_points = {}
    for eid in sorted(graph.edges):
        ends = [
            (end, graph.slot_of[(eid, end)])
            for end in ("tail", "head")
            if graph.vertices[graph.end_vertex(eid, end)].kind == "tri"
        ]
        end, (vid, s) = ends[0]
        choice = eigen_choice.get(eid, 1)
        e = slot_eigen[(vid, s)]
        x, y = slot_fixed[(vid, s)]
        if choice == -1:
            e, x, y = 1 / e, y, x
        # the slot carries the parameter at a tail, its inverse at a head
        eigen[eid] = e if end == "tail" else 1 / e
        branch_points[(vid, s)] = x
        for end2, (vid2, s2) in ends[1:]:
            e2 = slot_eigen[(vid2, s2)]
            x2, y2 = slot_fixed[(vid2, s2)]
            want = eigen[eid] if end2 == "tail" else 1 / eigen[eid]
            if abs(e2 - want) > abs(1 / e2 - want):
                e2, x2, y2 = 1 / e2, y2, x2
            branch_points[(vid2, s2)] = x2

    # fill in branch points at slots not yet visited (none remain in the
    # loops above, but be explicit for clarity)
    for key, (x, y) in slot_fixed.items():
        branch_points.setdefault(key, x)

    g = surface.genus
    u_index = {eid: i for i, eid in enumerate(rep.presentation.u_edges, start=1)}
    twist = {}
    for eid in graph.interior_edges():
        v, sv = graph.slot_of[(eid, "tail")]
        w, sw = graph.slot_of[(eid, "head")]
        x1 = branch_points[(v, sv)]
        x2 = branch_points[(v, (sv + 1) % 3)]
        x3 = branch_points[(v, (sv + 2) % 3)]
        x4 = branch_points[(w, (sw + 1) % 3)]
        x5 = branch_points[(w, (sw + 2) % 3)]
        if eid in u_index:
            # the head-side points live on the far lift: push them across
            bmap = rep.images["b%d" % u_index[eid]]
            x4, x5 = bmap.apply(x4), bmap.apply(x5)

        def adj(slot):
            e2id, end2 = graph.slot(*slot)
            return eigen[e2id] if end2 == "tail" else 1 / eigen[e2id]

        es = (
            eigen[eid],
            adj((v, (sv + 1) % 3)),
            adj((v, (sv + 2) % 3)),
            adj((w, (sw + 1) % 3)),
            adj((w, (sw + 2) % 3)),
        )
        twist[eid] = best_twist_from_fixed_points(
            es, {1: x1, 2: x2, 3: x3, 4: x4, 5: x5}
        )
    return EdgeParams(eigen, twist)


def stiefel_whitney(rep):
    """Sign of the evaluated relator for a closed surface: +1 iff liftable."""
    if rep.surface.boundary != 0:
        raise ValueError("second Stiefel-Whitney class needs a closed surface")
    m = rep.evaluate(rep.presentation.one_relator()).m
    i = np.eye(2)
    return 1 if np.abs(m - i).max() < np.abs(m + i).max() else -1


def act_beta_signs(rep, signs):
    """Multiply each stable-letter image by the given sign (H^1(G;Z/2) action)."""
    if rep.lift_mode != "SL":
        raise ValueError("the sign action is trivial in PSL mode")
    images = dict(rep.images)
    beta_signs = dict(rep.beta_signs)
    for i, s in signs.items():
        if s == -1:
            images["b%d" % i] = -images["b%d" % i]
        beta_signs[i] = beta_signs.get(i, 1) * s
    return SurfaceRepresentation(
        rep.surface, rep.tree, rep.params, rep.presentation, images,
        rep.points, rep.base, lift_mode=rep.lift_mode, beta_signs=beta_signs,
    )
