"""The five moves on pants decompositions with dual graphs.

Type I reverses an edge orientation, II is a Dehn twist along a pants
curve, III half-twists the three edges at a vertex, IV relabels by a graph
automorphism, V is the elementary move replacing the cut curve of a
four-holed sphere or one-holed torus.  Each move comes with the exact
transformation of the eigenvalue-twist parameters.
"""

from collections import namedtuple

from .projective import DegenerateInputError, sqrt_principal
from .surface import Edge, FatGraph, PantsSurface, Vertex
from .coordinates import (
    EdgeParams,
    four_holed_traces,
    local_picture,
    one_holed_traces,
    twist_from_traces_four_holed,
)

Move = namedtuple("Move", ["kind", "target", "branch", "data"])
Move.__new__.__defaults__ = (None, None)


def reverse_edge_formula(es, t1):
    """(e1, t1) after reversing the edge carrying them."""
    e1, e2, e3, e4, e5 = (complex(e) for e in es)
    t1 = complex(t1)
    coeff = (e1 * e2 - e3) * (e1 * e5 - e4) / ((e1 * e3 - e2) * (e1 * e4 - e5))
    return 1 / e1, coeff / t1


def dehn_twist_formula(e, t, direction="right"):
    e, t = complex(e), complex(t)
    if direction == "right":
        return e, e * e * t
    if direction == "left":
        return e, t / (e * e)
    raise ValueError("direction must be 'right' or 'left'")


def half_twist_formula(e1, e2, e3, t1):
    """Twist after a right half twist at the (e1; e2, e3) vertex."""
    e1, e2, e3 = complex(e1), complex(e2), complex(e3)
    return -e1 * (e1 * e3 - e2) / (e1 * e2 - e3) * complex(t1)


def new_eigenvalue(tr, branch=None, tol=1e-9):
    """Root of x^2 - tr x + 1, default (tr - sqrt(tr^2 - 4))/2."""
    tr = complex(tr)
    disc = tr * tr - 4
    if abs(disc) <= tol * max(1.0, abs(tr) ** 2):
        raise DegenerateInputError(
            "new pants curve is parabolic: tr = %r" % (tr,), factor="tr^2 - 4"
        )
    if branch is not None:
        e = complex(branch)
        if abs(e * e - tr * e + 1) > 1e-6 * max(1.0, abs(tr)) * max(1.0, abs(e) ** 2):
            raise ValueError("branch is not a root of x^2 - tr x + 1")
        return e
    return (tr - sqrt_principal(disc)) / 2


def elementary_four_holed(es, t1, t_other=None, branch=None):
    """Type V on a four-holed sphere: new (e1', t1', {position: factor}).

    es = (e1..e5) orientation-adjusted around the old interior edge, t1 its
    twist.  Returns the new eigenvalue, the new interior twist, and the
    multiplicative factor applied to the twist of each neighbor position
    (2..5) when that neighbor is itself an interior edge of a larger
    surface.  t_other optionally maps position -> old twist, in which case
    the transformed values are returned too.
    """
    e1, e2, e3, e4, e5 = (complex(e) for e in es)
    t1 = complex(t1)
    tr34, tr24, tr35 = four_holed_traces(es, t1)
    e1p = new_eigenvalue(tr34, branch)

    f13_2, f12_3 = e1 * e3 - e2, e1 * e2 - e3
    f14_5, f15_4 = e1 * e4 - e5, e1 * e5 - e4
    num = (e4 * e1p - e3) * (
        e3 * e5 * (-f13_2 * t1 + e1 * f12_3) * e1p + e1 * f13_2 * t1 - f12_3
    )
    den = (e3 * e1p - e4) * (
        (e1 * f13_2 * t1 - f12_3) * e1p + e3 * e5 * (-f13_2 * t1 + e1 * f12_3)
    )
    if den == 0:
        raise DegenerateInputError("vanishing denominator in the new twist")
    t1p = num / den

    # consistency with the trace-based expression: the new local picture is
    # (e1'; e5, e2 | e3, e4) with curve pairs swapped accordingly
    t1p_alt = twist_from_traces_four_holed((e1p, e5, e2, e3, e4), tr35, tr24)
    if abs(t1p - t1p_alt) > 1e-6 * max(1.0, abs(t1p)):
        raise DegenerateInputError("twist formulas disagree; parameters near a degeneracy")

    factors = {
        2: (f12_3 * f13_2 * (t1 + 1))
        / ((e2 * e3 - e1) * f13_2 * t1 + (1 - e1 * e2 * e3) * f12_3)
        * (e2 * e1p - e5)
        / (e2 * e5 - e1p),
        3: (e2 * e3 - e1)
        * (f13_2 * f14_5 * t1 + f12_3 * f15_4)
        / (f13_2 * ((e2 * e3 - e1) * f14_5 * t1 + (1 - e1 * e2 * e3) * f15_4)),
        4: (f13_2 * f14_5 * t1 + f12_3 * f15_4)
        / (f13_2 * (e4 * e5 - e1) * t1 + f12_3 * (1 - e1 * e4 * e5))
        * (e3 * e1p - e4)
        / (1 - e3 * e4 * e1p),
        5: f15_4
        * (e1 * e4 * e5 - 1)
        * (t1 + 1)
        / ((e1 - e4 * e5) * f14_5 * t1 + (e1 * e4 * e5 - 1) * f15_4),
    }
    out_twists = None
    if t_other is not None:
        out_twists = {pos: factors[pos] * complex(t) for pos, t in t_other.items()}
    return e1p, t1p, factors, out_twists


def elementary_one_holed(e1, e2, t1, branch=None):
    """Type V on a one-holed torus: new (e1', t1', boundary twist factor)."""
    e1, e2, t1 = complex(e1), complex(e2), complex(t1)
    trb, _ = one_holed_traces(e1, e2, t1)
    e1p = new_eigenvalue(trb)
    if branch is not None:
        e1p = new_eigenvalue(trb, branch)
    if abs(e1p * e1p - e2) < 1e-12 * max(1.0, abs(e2)):
        raise DegenerateInputError("e1'^2 = e2 degeneracy", factor="e1'^2 - e2")
    root = sqrt_principal(-e2 * t1)
    trab_inv = -((e1 * e1 - e2) * t1 + e1 * e1 * (1 - e1 * e1 * e2)) / (
        e1 * (e1 * e1 - 1) * root
    )
    t1p = -e2 / (e1p * e1p - e2) ** 2 * ((e1 + 1 / e1) - e1p * trab_inv) ** 2
    t2_factor = (
        e2 * (e2 - e1 * e1) * (root * e1p + t1)
        / ((1 - e1 * e1 * e2) * root * e1p + (e2 - e1 * e1) * e2 * t1)
    )
    return e1p, t1p, t2_factor


def vertex_move(surface, params, vertex):
    """Type III: half twists on the three edges at one trivalent vertex."""
    return apply_move(surface, params, Move("vertex", vertex))


def _reverse_edge_in_graph(graph, edge):
    e = graph.edges[edge]
    new_edges = dict(graph.edges)
    new_edges[edge] = Edge(edge, e.head, e.tail)
    flip = {"tail": "head", "head": "tail"}
    new_vertices = {}
    for vid, rec in graph.vertices.items():
        inc = tuple(
            (eid, flip[end] if eid == edge else end) for eid, end in rec.incident
        )
        new_vertices[vid] = Vertex(vid, rec.kind, inc)
    return FatGraph(list(new_vertices.values()), list(new_edges.values()))


def apply_move(surface, params, move):
    """Apply one move, returning (new surface, new params)."""
    graph = surface.graph
    kind = move.kind
    if kind == "reverse":
        edge = move.target
        eigen = dict(params.eigen)
        twist = dict(params.twist)
        if graph.is_boundary(edge):
            # reversing plus inverting keeps every adjusted local value
            eigen[edge] = 1 / eigen[edge]
        else:
            lp = local_picture(surface, params, edge)
            eigen[edge], twist[edge] = reverse_edge_formula(lp.es, lp.t1)
        new_graph = _reverse_edge_in_graph(graph, edge)
        return (
            PantsSurface(surface.genus, surface.boundary, new_graph, tree=surface.tree),
            EdgeParams(eigen, twist),
        )
    if kind in ("twist-r", "twist-l"):
        edge = move.target
        if graph.is_boundary(edge):
            raise ValueError("Dehn twists act along interior pants curves")
        twist = dict(params.twist)
        _, twist[edge] = dehn_twist_formula(
            params.eigen[edge], twist[edge], "right" if kind == "twist-r" else "left"
        )
        return surface, EdgeParams(dict(params.eigen), twist)
    if kind == "vertex":
        vid = move.target
        if surface.graph.vertices[vid].kind != "tri":
            raise ValueError("vertex move needs a trivalent vertex")
        twist = dict(params.twist)

        def adj(slot_index):
            e2id, end2 = graph.slot(vid, slot_index)
            e = params.eigen[e2id]
            return e if end2 == "tail" else 1 / e

        for s in range(3):
            eid, end = graph.slot(vid, s)
            if graph.is_boundary(eid):
                continue
            factor = half_twist_formula(adj(s), adj(s + 1), adj(s + 2), 1)
            twist[eid] = factor * twist[eid]
        # the half twists reverse the counterclockwise order at the vertex
        inc = graph.vertices[vid].incident
        new_vertices = dict(graph.vertices)
        new_vertices[vid] = Vertex(vid, "tri", (inc[0], inc[2], inc[1]))
        new_graph = FatGraph(list(new_vertices.values()), list(graph.edges.values()))
        return (
            PantsSurface(surface.genus, surface.boundary, new_graph, tree=surface.tree),
            EdgeParams(dict(params.eigen), twist),
        )
    if kind == "auto":
        vperm = move.data.get("vertices", {})
        eperm = move.data.get("edges", {})
        new_vertices = [
            Vertex(
                vperm.get(v.id, v.id),
                v.kind,
                tuple((eperm.get(eid, eid), end) for eid, end in v.incident),
            )
            for v in graph.vertices.values()
        ]
        new_edges = [
            Edge(eperm.get(e.id, e.id), vperm.get(e.tail, e.tail), vperm.get(e.head, e.head))
            for e in graph.edges.values()
        ]
        tree = (
            {eperm.get(eid, eid) for eid in surface.tree}
            if surface.tree is not None
            else None
        )
        eigen = {eperm.get(k, k): v for k, v in params.eigen.items()}
        twist = {eperm.get(k, k): v for k, v in params.twist.items()}
        return (
            PantsSurface(surface.genus, surface.boundary, FatGraph(new_vertices, new_edges), tree=tree),
            EdgeParams(eigen, twist),
        )
    if kind == "elem":
        return _elementary_move(surface, params, move.target, move.branch)
    raise ValueError("unknown move kind %r" % (kind,))


def _elementary_move(surface, params, edge, branch):
    graph = surface.graph
    if graph.is_boundary(edge):
        raise ValueError("elementary move needs an interior edge")
    e = graph.edges[edge]
    if e.tail == e.head:
        # one-holed torus picture
        lp = local_picture(surface, params, edge)
        boundary_eid = None
        e2 = None
        for slot, value in zip(lp.neighbor_slots, lp.es[1:]):
            if slot[0] != edge:
                boundary_eid, e2 = slot[0], value
                break
        e1p, t1p, t2_factor = elementary_one_holed(
            params.eigen[edge], e2, params.twist[edge], branch
        )
        eigen = dict(params.eigen)
        twist = dict(params.twist)
        eigen[edge] = e1p
        twist[edge] = t1p
        if boundary_eid in twist:
            twist[boundary_eid] = t2_factor * twist[boundary_eid]
        return surface, EdgeParams(eigen, twist)

    lp = local_picture(surface, params, edge)
    neighbor_eids = [eid for eid, _ in lp.neighbor_slots]
    if len(set(neighbor_eids)) != 4 or edge in neighbor_eids:
        raise ValueError(
            "elementary move implemented for embedded four-holed pictures; "
            "self-glued configurations reduce to the one-holed case via moves"
        )
    t_other = {
        pos: params.twist[eid]
        for pos, eid in zip((2, 3, 4, 5), neighbor_eids)
        if eid in params.twist
    }
    e1p, t1p, _factors, new_other = elementary_four_holed(lp.es, lp.t1, t_other, branch)
    eigen = dict(params.eigen)
    twist = dict(params.twist)
    eigen[edge] = e1p
    twist[edge] = t1p
    for pos, eid in zip((2, 3, 4, 5), neighbor_eids):
        if eid in twist:
            twist[eid] = new_other[pos]

    # regroup the cuffs: tail keeps (old position-5, position-2) neighbors,
    # head keeps (position-3, position-4), matching the relabeled picture
    (v, sv), (w, sw) = lp.tail_slots, lp.head_slots
    g2, g3, g4, g5 = lp.neighbor_slots
    new_vertices = dict(graph.vertices)
    new_vertices[v] = Vertex(v, "tri", ((edge, "tail"), g5, g2))
    new_vertices[w] = Vertex(w, "tri", ((edge, "head"), g3, g4))
    new_edges = {}
    for eid2, rec in graph.edges.items():
        tail, head = rec.tail, rec.head
        if eid2 != edge:
            for slot, old_v, new_v in ((g3, v, w), (g5, w, v)):
                if eid2 == slot[0]:
                    if slot[1] == "tail" and tail == old_v:
                        tail = new_v
                    elif slot[1] == "head" and head == old_v:
                        head = new_v
        new_edges[eid2] = Edge(eid2, tail, head)
    new_graph = FatGraph(list(new_vertices.values()), list(new_edges.values()))
    new_surface = PantsSurface(surface.genus, surface.boundary, new_graph, tree=surface.tree)
    return new_surface, EdgeParams(eigen, twist)
