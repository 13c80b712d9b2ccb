"""Pants decompositions as oriented fat graphs, and surface-group presentations.

A pants decomposition of S_{g,b} together with a dual graph is encoded as a
fat graph: trivalent vertices carry a counterclockwise cyclic order of
incidences, boundary components carry univalent vertices, and every edge is
oriented (tail -> head).  Cutting along the decomposition curves dual to a
complement of a maximal tree leaves a planar piece S_0 whose fundamental
group relation is read off by walking the boundary of the fattened tree.
"""

import json
from collections import namedtuple

Edge = namedtuple("Edge", ["id", "tail", "head"])
Vertex = namedtuple("Vertex", ["id", "kind", "incident"])  # incident: ((edge_id, end), ...)


class FatGraph:
    """Oriented trivalent/univalent graph with cyclic order at vertices."""

    def __init__(self, vertices, edges):
        self.vertices = {v.id: v for v in vertices}
        self.edges = {e.id: e for e in edges}
        # slot lookup: (edge id, end) -> (vertex id, slot index)
        self.slot_of = {}
        for v in vertices:
            for i, (eid, end) in enumerate(v.incident):
                self.slot_of[(eid, end)] = (v.id, i)

    def is_boundary(self, eid):
        e = self.edges[eid]
        return (
            self.vertices[e.tail].kind == "uni"
            or self.vertices[e.head].kind == "uni"
        )

    def interior_edges(self):
        return sorted(eid for eid in self.edges if not self.is_boundary(eid))

    def boundary_edges(self):
        return sorted(eid for eid in self.edges if self.is_boundary(eid))

    def trivalent_vertices(self):
        return sorted(v for v, rec in self.vertices.items() if rec.kind == "tri")

    def univalent_vertices(self):
        return sorted(v for v, rec in self.vertices.items() if rec.kind == "uni")

    def slot(self, vid, i):
        """The (edge id, end) incidence at slot i of vertex vid."""
        inc = self.vertices[vid].incident
        return inc[i % len(inc)]

    def other_vertex(self, eid, vid):
        e = self.edges[eid]
        if e.tail == vid and e.head == vid:
            raise ValueError("edge %r is a loop at %r" % (eid, vid))
        return e.head if e.tail == vid else e.tail

    def end_vertex(self, eid, end):
        e = self.edges[eid]
        return e.tail if end == "tail" else e.head


class PantsSurface:
    """A surface S_{g,b} presented by a pants decomposition fat graph."""

    def __init__(self, genus, boundary, graph, tree=None):
        self.genus = genus
        self.boundary = boundary
        self.graph = graph
        self.tree = set(tree) if tree is not None else None

    def euler_characteristic(self):
        return 2 - 2 * self.genus - self.boundary


def validate(surface):
    """Return a list of human-readable invariant violations (empty = valid)."""
    g, b, graph = surface.genus, surface.boundary, surface.graph
    problems = []
    if 2 - 2 * g - b >= 0:
        problems.append("euler characteristic 2-2g-b=%d is not negative" % (2 - 2 * g - b))
    tri = graph.trivalent_vertices()
    uni = graph.univalent_vertices()
    if len(tri) != 2 * g - 2 + b:
        problems.append(
            "trivalent vertex count %d != 2g-2+b = %d" % (len(tri), 2 * g - 2 + b)
        )
    if len(uni) != b:
        problems.append("univalent vertex count %d != b = %d" % (len(uni), b))
    if len(graph.edges) != 3 * g - 3 + 2 * b:
        problems.append("edge count %d != 3g-3+2b = %d" % (len(graph.edges), 3 * g - 3 + 2 * b))
    # vertex incidence structure
    degree = {v: 0 for v in graph.vertices}
    for e in graph.edges.values():
        for v in (e.tail, e.head):
            if v not in graph.vertices:
                problems.append("edge %r touches unknown vertex %r" % (e.id, v))
            else:
                degree[v] += 1
    for v, rec in graph.vertices.items():
        want = 3 if rec.kind == "tri" else 1
        if len(rec.incident) != want:
            problems.append(
                "vertex %r has %d incidences, expected %d" % (v, len(rec.incident), want)
            )
        if degree.get(v) != want:
            problems.append("vertex %r has degree %d, expected %d" % (v, degree.get(v), want))
        for eid, end in rec.incident:
            if eid not in graph.edges:
                problems.append("vertex %r lists unknown edge %r" % (v, eid))
            elif graph.end_vertex(eid, end) != v:
                problems.append(
                    "vertex %r lists (%r, %r) but that end is elsewhere" % (v, eid, end)
                )
    for e in graph.edges.values():
        kinds = {graph.vertices[e.tail].kind, graph.vertices[e.head].kind}
        if graph.vertices[e.tail].kind == "uni" and graph.vertices[e.head].kind == "uni":
            problems.append("edge %r joins two univalent vertices" % (e.id,))
        if "uni" not in kinds and e.tail == e.head and graph.vertices[e.tail].kind != "tri":
            problems.append("loop edge %r at non-trivalent vertex" % (e.id,))
    if not problems and not _connected(graph):
        problems.append("graph is not connected")
    return problems


def _connected(graph):
    verts = list(graph.vertices)
    if not verts:
        return False
    seen = {verts[0]}
    stack = [verts[0]]
    while stack:
        v = stack.pop()
        for e in graph.edges.values():
            if v in (e.tail, e.head):
                w = e.head if e.tail == v else e.tail
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return len(seen) == len(graph.vertices)


def maximal_tree(surface, seed=None):
    """A spanning tree of the fat graph, as a set of edge ids.

    Breadth-first from the lowest vertex id, preferring lower edge ids;
    a seed list of edge ids is preferred ahead of everything else.
    """
    graph = surface.graph
    pref = {eid: i for i, eid in enumerate(seed or [])}

    def rank(eid):
        return (pref.get(eid, len(pref)), eid)

    start = min(graph.vertices)
    seen = {start}
    tree = set()
    frontier = [start]
    while frontier:
        candidates = []
        for eid in sorted(graph.edges, key=rank):
            e = graph.edges[eid]
            if (e.tail in seen) != (e.head in seen):
                candidates.append(eid)
        if not candidates:
            break
        eid = candidates[0]
        e = graph.edges[eid]
        new = e.head if e.tail in seen else e.tail
        seen.add(new)
        tree.add(eid)
        frontier.append(new)
    if len(seen) != len(graph.vertices):
        raise ValueError("graph is disconnected; no spanning tree")
    complement = [eid for eid in graph.interior_edges() if eid not in tree]
    if len(complement) != surface.genus:
        raise ValueError(
            "tree complement has %d interior edges, expected genus %d"
            % (len(complement), surface.genus)
        )
    return tree


class Presentation:
    """Generators and relations of pi_1(S) from a fat graph and tree.

    Generators 'a1'..'a2g' are the loops around the two sides of the cut
    curves u_1..u_g (complement edges in id order: 'ai' for the tail side,
    'a(g+i)' for the head side), 'b1'..'bg' the HNN stable letters, and
    'd1'..'db' the boundary loops (boundary edges in id order).  Words are
    tuples of (name, +-1).
    """

    def __init__(self, genus, boundary, alpha, beta, delta, relation, hnn, vertex_words, u_edges):
        self.genus = genus
        self.boundary = boundary
        self.alpha = alpha
        self.beta = beta
        self.delta = delta
        self.relation = relation          # word in alphas and deltas
        self.hnn = hnn                    # list of (lhs word, rhs word) pairs
        self.vertex_words = vertex_words  # (vertex id, slot) -> word
        self.u_edges = u_edges            # complement edge ids, in order

    def generators(self):
        return list(self.alpha) + list(self.beta) + list(self.delta)

    def one_relator(self):
        """The S_0 relation with a_(g+i) rewritten through the HNN relations."""
        g = self.genus
        sub = {}
        for i in range(1, g + 1):
            # a_(g+i) = b_i^-1 a_i^-1 b_i
            bi, ai = "b%d" % i, "a%d" % i
            sub["a%d" % (g + i)] = ((bi, -1), (ai, -1), (bi, 1))
        word = []
        for name, exp in self.relation:
            if name in sub:
                piece = sub[name] if exp == 1 else inverse_word(sub[name])
                word.extend(piece)
            else:
                word.append((name, exp))
        return tuple(word)


def inverse_word(word):
    return tuple((name, -exp) for name, exp in reversed(word))


def presentation(surface, tree):
    """Derive the presentation by walking the fattened-tree boundary.

    The walk starts at the lowest trivalent vertex id, departs through
    slot 0, and after arriving at a vertex through slot s departs through
    slot s+1.  Each complement-edge stub or univalent vertex encountered
    emits a generator; the emitted sequence is the S_0 relation.
    """
    graph = surface.graph
    g, b = surface.genus, surface.boundary
    tree = set(tree)
    u_edges = [eid for eid in graph.interior_edges() if eid not in tree]
    if len(u_edges) != g:
        raise ValueError("not a maximal tree: %d complement edges for genus %d" % (len(u_edges), g))
    boundary_edges = graph.boundary_edges()
    alpha = ["a%d" % i for i in range(1, 2 * g + 1)]
    beta = ["b%d" % i for i in range(1, g + 1)]
    delta = ["d%d" % j for j in range(1, b + 1)]
    stub_gen = {}
    for i, eid in enumerate(u_edges, start=1):
        stub_gen[(eid, "tail")] = "a%d" % i
        stub_gen[(eid, "head")] = "a%d" % (g + i)
    delta_gen = {eid: "d%d" % j for j, eid in enumerate(boundary_edges, start=1)}

    vertex_words = {}

    def excursion(vid, s):
        """Generators emitted while departing vertex vid through slot s."""
        key = (vid, s)
        if key in vertex_words:
            return vertex_words[key]
        eid, end = graph.slot(vid, s)
        if eid not in tree:
            word = ((stub_gen[(eid, end)], 1),)
        else:
            other_end = "head" if end == "tail" else "tail"
            wid = graph.end_vertex(eid, other_end)
            if graph.vertices[wid].kind == "uni":
                word = ((delta_gen[eid], 1),)
            else:
                sw = graph.slot_of[(eid, other_end)][1]
                parts = []
                for k in (1, 2):
                    parts.extend(excursion(wid, (sw + k) % 3))
                word = tuple(parts)
        vertex_words[key] = word
        return word

    root = min(graph.trivalent_vertices())
    relation = []
    for s in range(3):
        relation.extend(excursion(root, s))
    relation = tuple(relation)
    # fill in the slots facing back toward the root: m_s = (m_{s+1} m_{s+2})^-1
    for vid in graph.trivalent_vertices():
        for s in range(3):
            if (vid, s) not in vertex_words:
                w = excursion(vid, (s + 1) % 3) + excursion(vid, (s + 2) % 3)
                vertex_words[(vid, s)] = inverse_word(w)

    hnn = []
    for i in range(1, g + 1):
        ai, agi, bi = "a%d" % i, "a%d" % (g + i), "b%d" % i
        hnn.append((((agi, -1),), ((bi, -1), (ai, 1), (bi, 1))))
    return Presentation(g, b, alpha, beta, delta, relation, hnn, vertex_words, u_edges)


# ---------------------------------------------------------------------------
# JSON encoding


def to_json(surface):
    graph = surface.graph
    doc = {
        "genus": surface.genus,
        "boundary": surface.boundary,
        "vertices": [
            {"id": v.id, "kind": v.kind, "incident": [[e, end] for e, end in v.incident]}
            for v in sorted(graph.vertices.values(), key=lambda v: v.id)
        ],
        "edges": [
            {"id": e.id, "tail": e.tail, "head": e.head}
            for e in sorted(graph.edges.values(), key=lambda e: e.id)
        ],
    }
    if surface.tree is not None:
        doc["tree"] = sorted(surface.tree)
    return doc


def from_json(doc):
    vertices = [
        Vertex(v["id"], v["kind"], tuple((e, end) for e, end in v["incident"]))
        for v in doc["vertices"]
    ]
    edges = [Edge(e["id"], e["tail"], e["head"]) for e in doc["edges"]]
    return PantsSurface(
        doc["genus"], doc["boundary"], FatGraph(vertices, edges), tree=doc.get("tree")
    )


def load(path):
    with open(path) as fh:
        return from_json(json.load(fh))


def save(surface, path):
    with open(path, "w") as fh:
        json.dump(to_json(surface), fh, indent=1, sort_keys=True)
        fh.write("\n")


# ---------------------------------------------------------------------------
# The three standard decompositions used throughout the tests and examples.


def four_holed_sphere():
    """S_{0,4}: two pants glued along one curve; edges 1..5, interior edge 1."""
    vertices = [
        Vertex(0, "tri", ((1, "tail"), (2, "tail"), (3, "tail"))),
        Vertex(1, "tri", ((1, "head"), (4, "tail"), (5, "tail"))),
        Vertex(2, "uni", ((2, "head"),)),
        Vertex(3, "uni", ((3, "head"),)),
        Vertex(4, "uni", ((4, "head"),)),
        Vertex(5, "uni", ((5, "head"),)),
    ]
    edges = [Edge(1, 0, 1), Edge(2, 0, 2), Edge(3, 0, 3), Edge(4, 1, 4), Edge(5, 1, 5)]
    return PantsSurface(0, 4, FatGraph(vertices, edges), tree=[1, 2, 3, 4, 5])


def one_holed_torus():
    """S_{1,1}: one pants with two cuffs glued; loop edge 1, boundary edge 2."""
    vertices = [
        Vertex(0, "tri", ((1, "tail"), (2, "tail"), (1, "head"))),
        Vertex(1, "uni", ((2, "head"),)),
    ]
    edges = [Edge(1, 0, 0), Edge(2, 0, 1)]
    return PantsSurface(1, 1, FatGraph(vertices, edges), tree=[2])


def genus_two():
    """Closed genus-2: two pants glued along all three cuffs (theta graph)."""
    vertices = [
        Vertex(0, "tri", ((3, "tail"), (1, "tail"), (2, "tail"))),
        Vertex(1, "tri", ((3, "head"), (2, "head"), (1, "head"))),
    ]
    edges = [Edge(1, 0, 1), Edge(2, 0, 1), Edge(3, 0, 1)]
    return PantsSurface(2, 0, FatGraph(vertices, edges), tree=[3])
