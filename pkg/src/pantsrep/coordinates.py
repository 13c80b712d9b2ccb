"""Eigenvalue-twist coordinates: domain, propagation, gluing, twist extraction.

An EdgeParams assigns an eigenvalue parameter to every edge of the fat graph
and a twist parameter to every interior edge.  The propagation formulas
transport fixed points across an interior edge of the (universal cover of
the) graph: with the edge oriented from the vertex carrying (x1, x2, x3) to
the vertex carrying (x1, x4, x5), both triples counterclockwise starting at
the shared edge, the forward equations give (x4, x5) and the backward ones
(x2, x3).  All eigenvalues entering these formulas must already be
orientation-adjusted (invert e for an edge pointing into its vertex); the
builder owns that adjustment.
"""

import json
from collections import namedtuple

from .projective import (
    DegenerateInputError,
    as_point,
    cross_ratio,
    mobius_with_axis,
    sqrt_principal,
)
from .pants import is_admissible_triple

EdgeParams = namedtuple("EdgeParams", ["eigen", "twist"])


def make_params(eigen, twist):
    return EdgeParams(
        {int(k): complex(v) for k, v in eigen.items()},
        {int(k): complex(v) for k, v in twist.items()},
    )


def in_domain(params, surface, tol=1e-9):
    """Membership in E(S,C) x (C*)^k.

    Every eigenvalue avoids {0, +-1}, every vertex triple satisfies
    e_i^{+-1} e_j^{+-1} e_k^{+-1} != 1 (equivalently the admissibility
    inequalities, which are inversion-symmetric), and twists are nonzero.
    """
    graph = surface.graph
    if set(params.eigen) != set(graph.edges):
        raise KeyError("eigenvalue keys do not match the edge set")
    if set(params.twist) != set(graph.interior_edges()):
        raise KeyError("twist keys do not match the interior edge set")
    for e in params.eigen.values():
        if abs(e) < tol or abs(e - 1) < tol or abs(e + 1) < tol:
            return False
    for t in params.twist.values():
        if abs(t) < tol:
            return False
    for vid in graph.trivalent_vertices():
        es = [params.eigen[eid] for eid, _ in surface.graph.vertices[vid].incident]
        if not is_admissible_triple(*es, tol=tol):
            return False
    return True


def _ratio_point(a, b, c, x1, x2, x3):
    """The point (A x1 (x2-x3) + B x2 (x3-x1) + C x3 (x1-x2)) / (same with x_i -> 1).

    Evaluated on homogeneous pairs, so any of the x_i may be infinity.
    """
    x1, x2, x3 = as_point(x1), as_point(x2), as_point(x3)

    def d(p, q):
        return p.num * q.den - q.num * p.den

    w1, w2, w3 = a * d(x2, x3), b * d(x3, x1), c * d(x1, x2)
    num = w1 * x1.num + w2 * x2.num + w3 * x3.num
    den = w1 * x1.den + w2 * x2.den + w3 * x3.den
    if num == 0 and den == 0:
        raise DegenerateInputError("propagation formula degenerates")
    from .projective import ProjectivePoint

    return ProjectivePoint(num, den)


def _check_factor(value, label, scale=1.0, tol=1e-9):
    if abs(value) <= tol * scale:
        raise DegenerateInputError("vanishing factor %s" % label, factor=label)
    return value


def propagate_forward(es, t1, x1, x2, x3):
    """Fixed points (x4, x5) across the edge, from (x1, x2, x3)."""
    e1, e2, e3, e4, e5 = (complex(e) for e in es)
    t1 = complex(t1)
    f15_4 = e1 * e5 - e4
    a4 = e1 * (-(e1 * e3 - e2) * (e1 * e4 - e5) * t1 + e3 * f15_4)
    b4 = e1 * e1 * e2 * f15_4
    c4 = e2 * f15_4
    _check_factor(f15_4, "e1 e5 - e4", scale=abs(e1 * e5) + abs(e4))
    x4 = _ratio_point(a4, b4, c4, x1, x2, x3)
    a5 = (e1 * e3 - e2) * t1 + e1 * e3
    b5 = e1 * e1 * e2
    c5 = e2
    x5 = _ratio_point(a5, b5, c5, x1, x2, x3)
    return x4, x5


def propagate_backward(es, t1, x1, x4, x5):
    """Fixed points (x2, x3) on the near side, from (x1, x4, x5)."""
    e1, e2, e3, e4, e5 = (complex(e) for e in es)
    s = 1 / complex(t1)
    a2 = (e1 * e5 - e4) * s + e1 * e5
    x2 = _ratio_point(a2, e1 * e1 * e4, e4, x1, x5, x4)
    f13_2 = e1 * e3 - e2
    _check_factor(f13_2, "e1 e3 - e2", scale=abs(e1 * e3) + abs(e2))
    a3 = e1 * (-(e1 * e5 - e4) * (e1 * e2 - e3) * s + e5 * f13_2)
    b3 = e1 * e1 * e4 * f13_2
    c3 = e4 * f13_2
    x3 = _ratio_point(a3, b3, c3, x1, x5, x4)
    return x2, x3


def gluing_map(t1, x1, y1):
    """M(sqrt(-t1); x1, y1), the map carrying x2 to x5 across the edge."""
    t1 = complex(t1)
    if t1 == 0:
        raise DegenerateInputError("twist parameter must be nonzero")
    return mobius_with_axis(sqrt_principal(-t1), x1, y1)


def twist_from_fixed_points(variant, es, xs):
    """Recover t1 from four of the five fixed points.

    xs maps the index i (1..5) to the fixed point x_i; the variants use
    {x1,x2,x3,x5}, {x1,x2,x3,x4}, {x1,x2,x4,x5}, {x1,x3,x4,x5} respectively.
    """
    e1, e2, e3, e4, e5 = (complex(e) for e in es)
    x = {k: as_point(v) for k, v in xs.items() if v is not None}
    if variant == 1:
        den = _check_factor(e2 - e1 * e3, "e2 - e1 e3")
        return -1 + e2 * (1 - e1 * e1) / den * cross_ratio(x[5], x[3], x[1], x[2])
    if variant == 2:
        den = _check_factor(e2 - e1 * e3, "e2 - e1 e3")
        den2 = _check_factor(e1 * e4 - e5, "e1 e4 - e5")
        inner = -1 + e2 * (1 - e1 * e1) / den * cross_ratio(x[4], x[3], x[1], x[2])
        return -(e1 * e5 - e4) / (e1 * den2) * inner
    if variant == 3:
        den = _check_factor(e4 - e1 * e5, "e4 - e1 e5")
        inv = -1 + e4 * (1 - e1 * e1) / den * cross_ratio(x[2], x[4], x[1], x[5])
        _check_factor(inv, "1/t1")
        return 1 / inv
    if variant == 4:
        den = _check_factor(e4 - e1 * e5, "e4 - e1 e5")
        den2 = _check_factor(e1 * e2 - e3, "e1 e2 - e3")
        inner = -1 + e4 * (1 - e1 * e1) / den * cross_ratio(x[3], x[4], x[1], x[5])
        inv = -(e1 * e3 - e2) / (e1 * den2) * inner
        _check_factor(inv, "1/t1")
        return 1 / inv
    raise ValueError("variant must be 1, 2, 3 or 4")


def best_twist_from_fixed_points(es, xs):
    """The variant whose cross ratio is best conditioned, then its value.

    The four formulas agree exactly; this picks the one whose four points
    are most spread out (largest minimal pairwise determinant).
    """
    needed = {1: (5, 3, 1, 2), 2: (4, 3, 1, 2), 3: (2, 4, 1, 5), 4: (3, 4, 1, 5)}
    best, score = None, -1.0
    for variant, idx in needed.items():
        try:
            pts = [as_point(xs[i]) for i in idx]
        except KeyError:
            continue
        m = min(
            abs(p.num * q.den - q.num * p.den)
            / (max(abs(p.num), abs(p.den)) * max(abs(q.num), abs(q.den)))
            for i, p in enumerate(pts)
            for q in pts[i + 1 :]
        )
        if m > score:
            best, score = variant, m
    if best is None:
        raise DegenerateInputError("no variant has all four points available")
    return twist_from_fixed_points(best, es, xs)


def _chi(e):
    return e + 1 / e


def four_holed_traces(es, t1):
    """(tr(g3 g4), tr(g2 g4), tr(g3 g5)) of the four-holed sphere closed forms."""
    e1, e2, e3, e4, e5 = (complex(e) for e in es)
    t1 = complex(t1)
    _check_factor(e1 - 1 / e1, "e1 - 1/e1")
    p = (e2 * e3 - e1) * (e1 * e3 - e2) / (e1 * e2 * e3) * (e4 * e5 - e1) * (e1 * e4 - e5) / (e1 * e4 * e5)
    q = (1 - e1 * e2 * e3) * (e1 * e2 - e3) / (e1 * e2 * e3) * (1 - e1 * e4 * e5) * (e1 * e5 - e4) / (e1 * e4 * e5)
    s1 = _chi(e3) * _chi(e5) + _chi(e2) * _chi(e4)
    s2 = _chi(e2) * _chi(e5) + _chi(e3) * _chi(e4)
    s3 = _chi(e2) * _chi(e4) + _chi(e3) * _chi(e5)
    d = (e1 - 1 / e1) ** 2
    tr34 = (-p * t1 - q / t1 + _chi(e1) * s1 - 2 * s2) / d
    tr24 = (p * e1 * t1 + q / (e1 * t1) + _chi(e1) * s2 - 2 * s3) / d
    tr35 = (p * t1 / e1 + q * e1 / t1 + _chi(e1) * s2 - 2 * s3) / d
    return tr34, tr24, tr35


def twist_from_traces_four_holed(es, tr24, tr35):
    """t1 from tr(rho(g2 g4)) and tr(rho(g3 g5))."""
    e1, e2, e3, e4, e5 = (complex(e) for e in es)
    _check_factor(_chi(e1), "e1 + 1/e1")
    _check_factor((e2 * e3 - e1) * (e1 * e3 - e2), "(e2 e3 - e1)(e1 e3 - e2)")
    _check_factor((e4 * e5 - e1) * (e1 * e4 - e5), "(e4 e5 - e1)(e1 e4 - e5)")
    s2 = _chi(e2) * _chi(e5) + _chi(e3) * _chi(e4)
    s3 = _chi(e2) * _chi(e4) + _chi(e3) * _chi(e5)
    lead = (
        1
        / _chi(e1)
        * (e1 * e2 * e3)
        / ((e2 * e3 - e1) * (e1 * e3 - e2))
        * (e1 * e4 * e5)
        / ((e4 * e5 - e1) * (e1 * e4 - e5))
    )
    return lead * (
        (e1 - 1 / e1) * (e1 * tr24 - tr35 / e1) - _chi(e1) * s2 + 2 * s3
    )


def one_holed_traces(e1, e2, t1):
    """(tr(rho(beta_1)), tr(rho(alpha_1 beta_1))) for the one-holed torus.

    The sign depends on the branch of sqrt(-e2 t1); squared traces are
    branch-free.
    """
    e1, e2, t1 = complex(e1), complex(e2), complex(t1)
    root = sqrt_principal(-e2 * t1)
    den = (e1 * e1 - 1) * root
    trb = -((e1 * e1 - e2) * t1 + 1 - e1 * e1 * e2) / den
    trab = -((e1 * e1 - e2) * e1 * e1 * t1 + 1 - e1 * e1 * e2) / (den * e1)
    return trb, trab


def twist_from_traces_one_holed(e1, e2, trb, trab):
    """t1 = -e2/(e1^2 - e2)^2 (tr(beta_1) - e1 tr(alpha_1 beta_1))^2."""
    e1, e2 = complex(e1), complex(e2)
    den = _check_factor(e1 * e1 - e2, "e1^2 - e2")
    return -e2 / den ** 2 * (complex(trb) - e1 * complex(trab)) ** 2


# ---------------------------------------------------------------------------
# JSON encoding


def params_to_json(params):
    return {
        "eigen": {str(k): [v.real, v.imag] for k, v in sorted(params.eigen.items())},
        "twist": {str(k): [v.real, v.imag] for k, v in sorted(params.twist.items())},
    }


def params_from_json(doc):
    return EdgeParams(
        {int(k): complex(v[0], v[1]) for k, v in doc["eigen"].items()},
        {int(k): complex(v[0], v[1]) for k, v in doc["twist"].items()},
    )


def load_params(path):
    with open(path) as fh:
        return params_from_json(json.load(fh))


def save_params(params, path):
    with open(path, "w") as fh:
        json.dump(params_to_json(params), fh, indent=1, sort_keys=True)
        fh.write("\n")


# ---------------------------------------------------------------------------
# local picture of an interior edge

LocalPicture = namedtuple(
    "LocalPicture", ["edge", "es", "t1", "tail_slots", "head_slots", "neighbor_slots"]
)


def local_picture(surface, params, edge):
    """Orientation-adjusted (e1..e5) around an interior edge.

    e2, e3 sit counterclockwise after the edge at its tail vertex, e4, e5
    counterclockwise after it at its head vertex; self-gluings (loops, or a
    neighbor edge occurring twice) enter once per incidence, which is the
    covering trick of the one-holed torus picture.
    """
    graph = surface.graph
    if graph.is_boundary(edge):
        raise ValueError("edge %r is a boundary edge" % (edge,))
    v, sv = graph.slot_of[(edge, "tail")]
    w, sw = graph.slot_of[(edge, "head")]

    def adjusted(slot):
        eid, end = slot
        e = params.eigen[eid]
        return e if end == "tail" else 1 / e

    g2, g3 = graph.slot(v, sv + 1), graph.slot(v, sv + 2)
    g4, g5 = graph.slot(w, sw + 1), graph.slot(w, sw + 2)
    es = (
        params.eigen[edge],
        adjusted(g2),
        adjusted(g3),
        adjusted(g4),
        adjusted(g5),
    )
    return LocalPicture(
        edge,
        es,
        params.twist[edge],
        (v, sv),
        (w, sw),
        (g2, g3, g4, g5),
    )
