"""Normal surface coordinates and the solution space of the matching
equations.

A tetrahedron carries 7 disc types: 3 quadrilaterals and 4 triangles.
Quadrilateral slot m separates a pair of opposite edges; triangle slot k
cuts off vertex k. Vectors over the 7t disc types are indexed with all
quadrilaterals first (3 per tetrahedron, slot order) and then all
triangles (4 per tetrahedron, slot order).

The solution space C is the kernel of the matching equations: one
equation per normal arc class of each glued face pair. It always admits
the basis made of one tetrahedral solution per tetrahedron and one edge
solution per edge class.
"""

from fractions import Fraction

from .errors import CrossCheckError
from .linalg import dot, fr, matvec, rank, solve
from .triangulation import EDGE_INDEX, EDGE_VERTICES, FACE_VERTICES

# Quadrilateral slot m separates the two vertex pairs QUAD_PAIRS[m] and
# is disjoint from ("faces") the two edges spanned by those pairs.
QUAD_PAIRS = (((0, 1), (2, 3)), ((0, 3), (1, 2)), ((0, 2), (1, 3)))

# Edge slot -> the quadrilateral slot disjoint from that edge.
QUAD_AT_EDGE = (0, 2, 1, 1, 2, 0)

# Corners of quadrilateral m lie on the four edges it does not face.
QUAD_CORNER_EDGES = ((1, 2, 3, 4), (0, 1, 4, 5), (0, 2, 3, 5))

# Corners of triangle k lie on the three edges at vertex k.
TRI_CORNER_EDGES = ((0, 1, 2), (0, 3, 4), (1, 3, 5), (2, 4, 5))


def quad_separating(a, b):
    """The quadrilateral slot separating vertices a, b from the rest."""
    return QUAD_AT_EDGE[EDGE_INDEX[(min(a, b), max(a, b))]]


class DiscTypeIndex:
    """Flat indexing of the 7t disc types of a t tetrahedron complex."""

    def __init__(self, size):
        self.size = size

    @property
    def total(self):
        return 7 * self.size

    def quad(self, tet, slot):
        assert 0 <= slot < 3
        return 3 * tet + slot

    def tri(self, tet, slot):
        assert 0 <= slot < 4
        return 3 * self.size + 4 * tet + slot

    def decode(self, idx):
        """(kind, tet, slot) for a flat index, kind in {'quad', 'tri'}."""
        if not (0 <= idx < 7 * self.size):
            raise IndexError("disc type index %r out of range" % (idx,))
        if idx < 3 * self.size:
            return ("quad", idx // 3, idx % 3)
        idx -= 3 * self.size
        return ("tri", idx // 4, idx % 4)


def matching_matrix(tri):
    """The matching equations, three rows per glued face pair.

    For the arc class near corner a of a glued face, the triangle at a
    plus the quadrilateral separating {a, face} must agree on both sides
    of the gluing. Rows follow the gluing list, corners ascending; signs
    are + on the source side and - on the destination side, so a row can
    collapse when a face is glued to the same tetrahedron.
    """
    ix = DiscTypeIndex(tri.size)
    rows = []
    for g in tri.gluings:
        mp = g.vertex_map
        for a in FACE_VERTICES[g.src_face]:
            b = mp[a]
            row = [Fraction(0)] * ix.total
            row[ix.tri(g.src_tet, a)] += 1
            row[ix.quad(g.src_tet, quad_separating(a, g.src_face))] += 1
            row[ix.tri(g.dst_tet, b)] -= 1
            row[ix.quad(g.dst_tet, quad_separating(b, g.dst_face))] -= 1
            rows.append(row)
    return rows


def tet_solution(tri, tet):
    """The tetrahedral solution: -1 on the 3 quadrilaterals of the
    tetrahedron, +1 on its 4 triangles."""
    ix = DiscTypeIndex(tri.size)
    s = [Fraction(0)] * ix.total
    for m in range(3):
        s[ix.quad(tet, m)] = Fraction(-1)
    for k in range(4):
        s[ix.tri(tet, k)] = Fraction(1)
    return s


def edge_solution(tri, edge):
    """The edge solution: for each embedding of the edge, +1 on the two
    triangles meeting it and -1 on the quadrilateral facing it."""
    ix = DiscTypeIndex(tri.size)
    e = tri.edges[edge] if isinstance(edge, int) else edge
    s = [Fraction(0)] * ix.total
    for tet, slot in e.embeddings:
        s[ix.quad(tet, QUAD_AT_EDGE[slot])] -= 1
        u, v = EDGE_VERTICES[slot]
        s[ix.tri(tet, u)] += 1
        s[ix.tri(tet, v)] += 1
    return s


class WZCoefficients:
    """Coefficients (w, z) of a solution over the tetrahedral and edge
    solutions: s = sum w[i] W_tet[i] + sum z[j] W_edge[j]."""

    def __init__(self, w, z):
        self.w = tuple(fr(x) for x in w)
        self.z = tuple(fr(x) for x in z)

    def __eq__(self, other):
        return (isinstance(other, WZCoefficients)
                and self.w == other.w and self.z == other.z)

    def __repr__(self):
        return "WZCoefficients(w=%s, z=%s)" % (list(self.w), list(self.z))


class SolutionBasis:
    """The verified tetrahedral and edge solution basis of the kernel."""

    def __init__(self, tri):
        self.tri = tri
        self.tet_solutions = [tet_solution(tri, i) for i in range(tri.size)]
        self.edge_solutions = [edge_solution(tri, j)
                               for j in range(len(tri.edges))]
        self.matching = matching_matrix(tri)
        vectors = self.tet_solutions + self.edge_solutions
        for k, v in enumerate(vectors):
            if self.matching and not all(x == 0 for x in matvec(self.matching, v)):
                raise CrossCheckError(
                    "basis vector %d violates the matching equations" % k)
        expected = tri.size + len(tri.edges)
        kernel_dim = 7 * tri.size - rank(self.matching)
        if rank(vectors) != expected or kernel_dim != expected:
            raise CrossCheckError(
                "basis rank %d, kernel dimension %d, expected %d"
                % (rank(vectors), kernel_dim, expected))
        self.dimension = expected
        # columns of the expansion map, for coefficient extraction
        self._columns = [list(col) for col in zip(*vectors)]

    def __repr__(self):
        return "SolutionBasis(t=%d, edges=%d, dim=%d)" % (
            self.tri.size, len(self.tri.edges), self.dimension)


def verify_basis(tri):
    """Construct the basis and verify kernel membership, independence and
    span. Failure raises CrossCheckError."""
    return SolutionBasis(tri)


def expand(basis, coeffs):
    """The solution vector named by (w, z) coefficients."""
    if isinstance(coeffs, WZCoefficients):
        w, z = coeffs.w, coeffs.z
    else:
        w, z = coeffs
    w = [fr(x) for x in w]
    z = [fr(x) for x in z]
    assert len(w) == basis.tri.size and len(z) == len(basis.tri.edges)
    out = [Fraction(0)] * (7 * basis.tri.size)
    for wi, vecv in zip(w, basis.tet_solutions):
        if wi:
            for r, x in enumerate(vecv):
                out[r] += wi * x
    for zj, vecv in zip(z, basis.edge_solutions):
        if zj:
            for r, x in enumerate(vecv):
                out[r] += zj * x
    return out


def coefficients(basis, s):
    """The unique (w, z) with s = sum w W_tet + sum z W_edge.

    Rejects vectors outside the solution space, reporting the index of
    the first matching equation with a nonzero residual.
    """
    s = [fr(x) for x in s]
    if len(s) != 7 * basis.tri.size:
        raise ValueError("expected %d coordinates, got %d"
                         % (7 * basis.tri.size, len(s)))
    for r, row in enumerate(basis.matching):
        res = dot(row, s)
        if res != 0:
            raise ValueError(
                "vector is outside the solution space: matching equation %d "
                "has residual %s" % (r, res))
    x, cert = solve(basis._columns, s)
    assert cert is None, "kernel vector not spanned by the verified basis"
    t = basis.tri.size
    return WZCoefficients(x[:t], x[t:])


def boundary_arc_count(tri, kind, tet, slot):
    """Number of normal arcs of the disc type lying in unglued faces.

    A quadrilateral has one arc in each of the four faces of its
    tetrahedron; triangle k has one arc in each face other than face k.
    """
    if kind == "quad":
        faces = range(4)
    else:
        faces = (f for f in range(4) if f != slot)
    return sum(1 for f in faces if tri.face_gluing(tet, f) is None)


def chi_star_disc(tri, kind, tet, slot):
    """Generalised Euler characteristic weight of one disc type.

    A triangle counts -(1 + b)/2 plus 1/degree over its three corner
    edges; a quadrilateral counts -(2 + b)/2 plus 1/degree over its four
    corner edges, where b is the boundary arc count.
    """
    b = boundary_arc_count(tri, kind, tet, slot)
    if kind == "quad":
        base = -Fraction(2 + b, 2)
        corner_edges = QUAD_CORNER_EDGES[slot]
    else:
        base = -Fraction(1 + b, 2)
        corner_edges = TRI_CORNER_EDGES[slot]
    total = base
    for es in corner_edges:
        cls = tri.edges[tri.edge_class_of[(tet, es)]]
        total += Fraction(1, cls.degree)
    return total


def chi_star(tri, s):
    """Generalised Euler characteristic of a disc type vector.

    Linear in s; on the vector of an embedded or immersed normal surface
    it equals the Euler characteristic of the surface.

    >>> from anglekit.triangulation import build
    >>> chi_star(build(1, []), tet_solution(build(1, []), 0))
    Fraction(1, 1)
    """
    ix = DiscTypeIndex(tri.size)
    s = [fr(x) for x in s]
    if len(s) != ix.total:
        raise ValueError("expected %d coordinates, got %d" % (ix.total, len(s)))
    total = Fraction(0)
    for i, x in enumerate(s):
        if x:
            kind, tet, slot = ix.decode(i)
            total += x * chi_star_disc(tri, kind, tet, slot)
    return total


def vertex_link_vector(tri, v):
    """The normal surface made of one triangle per corner of the vertex
    class: the boundary of a small neighbourhood of the vertex."""
    if not isinstance(v, int):
        v = v.index
    ix = DiscTypeIndex(tri.size)
    s = [Fraction(0)] * ix.total
    for (tet, c) in tri.vertices[v].corners:
        s[ix.tri(tet, c)] += 1
    return s
