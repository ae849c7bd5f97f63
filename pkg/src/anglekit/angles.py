"""Angle structures on quadrilateral types, decided two independent ways.

Angles live in units of pi, so a tetrahedron's three quad angles sum
to 1 and the angles around an edge sum to 2. The generalised kind allows
any rational values, semi requires them nonnegative, strict positive.

decide() runs an exact LP and, where the classification theorems apply,
the vertex-solution criterion, and insists the two verdicts agree.
"""

from fractions import Fraction

from .errors import CrossCheckError
from .linalg import fr, matvec, rank, solve
from .lp import solve_lp
from .normal import (QUAD_AT_EDGE, WZCoefficients, chi_star, expand,
                     verify_basis)
from .polytope import enumerate_vertices


def angle_matrix(tri):
    """The equation system A x = b of generalised angle structures.

    One column per quad type. First t rows: the three quads of each
    tetrahedron sum to 1. Then n rows: the quads facing each edge class,
    counted once per embedding, sum to 2.

    >>> a, b = angle_matrix(__import__("anglekit").build(1, []))
    >>> len(a), len(a[0]), b[0], b[1]
    (7, 3, Fraction(1, 1), Fraction(2, 1))
    """
    t = tri.size
    rows = []
    rhs = []
    for i in range(t):
        row = [Fraction(0)] * (3 * t)
        for m in range(3):
            row[3 * i + m] = Fraction(1)
        rows.append(row)
        rhs.append(Fraction(1))
    for e in tri.edges:
        row = [Fraction(0)] * (3 * t)
        for tet, slot in e.embeddings:
            row[3 * tet + QUAD_AT_EDGE[slot]] += 1
        rows.append(row)
        rhs.append(Fraction(2))
    return rows, rhs


class AngleAssignment:
    """A solution of the angle equations, one value per quad type."""

    def __init__(self, tri, values):
        values = [fr(x) for x in values]
        if len(values) != 3 * tri.size:
            raise ValueError("expected %d quad values, got %d"
                             % (3 * tri.size, len(values)))
        a, b = angle_matrix(tri)
        res = [x - y for x, y in zip(matvec(a, values), b)]
        if any(r != 0 for r in res):
            bad = next(i for i, r in enumerate(res) if r != 0)
            kind = ("tetrahedron %d" % bad if bad < tri.size
                    else "edge %s" % tri.edges[bad - tri.size].label)
            raise ValueError("angle equations fail at %s row" % kind)
        self.tri = tri
        self.values = tuple(values)
        self.is_semi = all(x >= 0 for x in values)
        self.is_strict = all(x > 0 for x in values)
        self.is_taut = self.is_semi and all(x in (0, 1) for x in values)

    def quad(self, tet, slot):
        return self.values[3 * tet + slot]

    def __repr__(self):
        return "AngleAssignment(%s)" % ([str(x) for x in self.values],)


class FarkasWitness:
    """An infeasibility certificate mapped into normal coordinates.

    The dual vector is read as coefficients (w, z) on the tetrahedral
    and edge solutions. The combination has quad coordinates equal to
    minus the dual pairing with the angle-matrix columns, hence
    nonnegative; its generalised Euler characteristic violates the
    classification condition named by violated_kind.
    """

    def __init__(self, tri, wz, normal_vector, chi_value, violated_kind):
        self.tri = tri
        self.wz = wz
        self.normal_vector = tuple(normal_vector)
        self.chi_value = chi_value
        self.violated_kind = violated_kind

    def quad_part(self):
        return self.normal_vector[:3 * self.tri.size]

    def __repr__(self):
        return "FarkasWitness(%s, chi*=%s)" % (self.violated_kind,
                                               self.chi_value)


def farkas_to_normal(basis, dual, violated_kind):
    """Package an LP dual vector as a FarkasWitness.

    dual has one entry per row of the angle matrix: w over tetrahedra
    then z over edge classes. Checks, exactly:
      - the combination's quad coordinates are -(A^T dual), all >= 0;
      - chi* of the combination is sum(w) + sum over edges of
        (2 - on_boundary) * z;
      - on closed complexes, the sign condition of violated_kind.
    Rejects duals failing any of these, naming the component.
    """
    tri = basis.tri
    t = tri.size
    n = len(tri.edges)
    if len(dual) != t + n:
        raise ValueError("expected %d dual entries, got %d"
                         % (t + n, len(dual)))
    dual = [fr(x) for x in dual]
    if all(x == 0 for x in dual):
        raise ValueError("zero dual vector certifies nothing")
    wz = WZCoefficients(dual[:t], dual[t:])
    vec = expand(basis, wz)
    a, _ = angle_matrix(tri)
    pairing = [-sum(row[q] * y for row, y in zip(a, dual))
               for q in range(3 * t)]
    assert list(vec[:3 * t]) == pairing
    if violated_kind == "generalised":
        if any(x != 0 for x in vec[:3 * t]):
            raise ValueError("generalised certificate has a nonzero quad")
    else:
        bad = next((q for q in range(3 * t) if vec[q] < 0), None)
        if bad is not None:
            raise ValueError("quad coordinate %d is negative" % bad)
    chi = chi_star(tri, vec)
    per_edge = [2 - (1 if e.on_boundary else 0) for e in tri.edges]
    assert chi == sum(wz.w) + sum(c * z for c, z in zip(per_edge, wz.z))
    if tri.is_closed:
        if violated_kind == "generalised" and chi == 0:
            raise ValueError("chi* vanishes; no generalised obstruction")
        if violated_kind == "semi" and chi <= 0:
            raise ValueError("chi* not positive; no semi obstruction")
        if violated_kind == "strict":
            if chi < 0:
                raise ValueError("chi* negative; no strict obstruction")
            if all(x == 0 for x in vec[:3 * t]):
                raise ValueError("strict obstruction needs a positive quad")
    return FarkasWitness(tri, wz, vec, chi, violated_kind)


class RouteRecord:
    """Verdicts of the LP route and the criterion route side by side."""

    def __init__(self, lp, criterion, skipped_reason=None):
        self.lp = lp
        self.criterion = criterion
        self.skipped_reason = skipped_reason

    @property
    def criterion_ran(self):
        return self.criterion is not None

    def __repr__(self):
        if self.criterion is None:
            return "RouteRecord(lp=%s, criterion skipped: %s)" % (
                self.lp, self.skipped_reason)
        return "RouteRecord(lp=%s, criterion=%s)" % (self.lp, self.criterion)


class Decision:
    def __init__(self, kind, feasible, witness, certificate, dimension,
                 agreement):
        self.kind = kind
        self.feasible = feasible
        self.witness = witness
        self.certificate = certificate
        self.dimension = dimension
        self.agreement = agreement

    def __repr__(self):
        return "Decision(%s: %s, dim=%s)" % (
            self.kind, "feasible" if self.feasible else "infeasible",
            self.dimension)


def _lp_generalised(tri, a, b):
    x, y = solve(a, b)
    if x is not None:
        return True, x, None
    return False, None, y


def _lp_semi(tri, a, b):
    res = solve_lp(a, b, [Fraction(0)] * len(a[0]))
    if res.status == "optimal":
        return True, res.x, None
    assert res.status == "infeasible"
    return False, None, res.y


def _lp_strict(tri, a, b):
    # x = u + eps * ones with u >= 0: maximising eps over
    # A u + eps (A 1) = b, eps + slack = 1 finds the largest uniform
    # margin; strict solutions exist exactly when it is positive
    m = len(a)
    cols = len(a[0])
    c = [sum(row) for row in a]
    wide = [list(row) + [c[i], Fraction(0)] for i, row in enumerate(a)]
    wide.append([Fraction(0)] * cols + [Fraction(1), Fraction(1)])
    rhs = list(b) + [Fraction(1)]
    cost = [Fraction(0)] * cols + [Fraction(1), Fraction(0)]
    res = solve_lp(wide, rhs, cost)
    if res.status == "infeasible":
        # the widened system is solvable whenever a semi solution
        # exists, so this dual is a semi obstruction
        return False, None, res.y[:m], "semi"
    assert res.status == "optimal"
    eps = res.x[cols]
    if eps > 0:
        x = [u + eps for u in res.x[:cols]]
        return True, x, None, None
    y = [-v for v in res.y[:m]]
    return False, None, y, "strict"


def _semi_dimension(tri, a, b):
    # drop coordinates pinned to zero on the whole polytope, then the
    # affine hull is cut out by the equations plus those pins
    cols = len(a[0])
    pinned = []
    for q in range(cols):
        cost = [Fraction(0)] * cols
        cost[q] = Fraction(1)
        res = solve_lp(a, b, cost)
        assert res.status == "optimal"
        if res.value == 0:
            pinned.append(q)
    extra = []
    for q in pinned:
        row = [Fraction(0)] * cols
        row[q] = Fraction(1)
        extra.append(row)
    return cols - rank(a + extra)


def decide(tri, kind):
    """Decide existence of an angle structure of the given kind.

    kind is "generalised", "semi" or "strict". The LP route always runs
    and fixes the verdict; the criterion route (vertex links for
    generalised, chi* over vertex solutions for the other two) runs when
    its theorem's hypothesis holds, and any disagreement raises
    CrossCheckError. Returns a Decision carrying the witness or
    certificate, the solution-space dimension when feasible, and the
    route record.
    """
    if kind not in ("generalised", "semi", "strict"):
        raise ValueError("unknown kind %r" % (kind,))
    a, b = angle_matrix(tri)
    t = tri.size
    basis = None
    violated = kind
    if kind == "generalised":
        feasible, x, y = _lp_generalised(tri, a, b)
    elif kind == "semi":
        feasible, x, y = _lp_semi(tri, a, b)
    else:
        feasible, x, y, violated = _lp_strict(tri, a, b)

    # the classification theorems live in the ideal-triangulation
    # setting: closed links and no edge identified with itself in
    # reverse (an inverted edge shifts chi* of a link vector away from
    # the link's Euler characteristic, one unit per inversion)
    links_closed = tri.is_closed
    torus_klein = links_closed and all(
        v.classification in ("torus", "klein") for v in tri.vertices)
    inverted = tri.has_inverted_edge
    criterion = None
    skipped = None
    if kind == "generalised":
        if not links_closed:
            skipped = "some vertex link has boundary"
        elif inverted:
            skipped = "an edge class is identified with itself in reverse"
        else:
            criterion = torus_klein
    else:
        if not torus_klein:
            skipped = "some vertex link is not a torus or Klein bottle"
        elif inverted:
            skipped = "an edge class is identified with itself in reverse"
        else:
            basis = verify_basis(tri)
            verts = enumerate_vertices(tri, basis)
            if kind == "semi":
                criterion = all(chi_star(tri, v.vector) <= 0 for v in verts)
            else:
                criterion = all(
                    chi_star(tri, v.vector) < 0 for v in verts
                    if any(q > 0 for q in v.vector[:3 * t]))
    if criterion is not None and criterion != feasible:
        raise CrossCheckError(
            "%s: LP says %s but the classification criterion says %s"
            % (kind, feasible, criterion))
    agreement = RouteRecord(feasible, criterion, skipped)

    witness = None
    certificate = None
    dimension = None
    if feasible:
        witness = AngleAssignment(tri, x)
        if kind == "semi":
            assert witness.is_semi
            dimension = _semi_dimension(tri, a, b)
        else:
            if kind == "strict":
                assert witness.is_strict
            dimension = 3 * t - rank(a)
            if torus_klein and not inverted:
                assert dimension == t + len(tri.vertices)
    else:
        if basis is None:
            basis = verify_basis(tri)
        certificate = farkas_to_normal(basis, y, violated)
    return Decision(kind, feasible, witness, certificate, dimension,
                    agreement)
