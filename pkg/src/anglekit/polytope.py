"""Vertex solutions of the projective solution space.

The nonnegative vectors of the solution space form a pointed rational
cone. Its extreme rays, scaled to primitive integer vectors, are the
vertex solutions; scaled to coordinate sum 1 they are the vertices of
the projective solution space. The enumerator is a double description
pass over the kernel parametrisation, cross-checkable against a brute
force support enumeration oracle.
"""

from fractions import Fraction
from itertools import combinations

from .linalg import dot, fr, matvec, nullspace, primitive, rank
from .normal import verify_basis


class VertexSolution:
    """An extreme ray of the nonnegative solution cone.

    vector is the primitive integer form, projective the rescaling with
    coordinate sum 1. support_rank is the rank of the kernel
    parametrisation restricted to the zero set; extremality is
    support_rank == dimension - 1.
    """

    def __init__(self, vector, dimension, support_rank):
        self.vector = tuple(int(x) for x in vector)
        total = sum(self.vector)
        self.projective = tuple(Fraction(x, total) for x in self.vector)
        self.support = tuple(i for i, x in enumerate(self.vector) if x != 0)
        self.zero_set = tuple(i for i, x in enumerate(self.vector) if x == 0)
        self.dimension = dimension
        self.support_rank = support_rank

    def __repr__(self):
        return "VertexSolution(%s)" % (list(self.vector),)


def _constraint_rows(basis):
    # row r is the linear functional giving coordinate r of the solution
    # in terms of kernel basis coefficients
    return [list(row) for row in basis._columns]


def _sorted_rows(rows):
    order = sorted(range(len(rows)),
                   key=lambda r: (sum(1 for x in rows[r] if x != 0),
                                  tuple(rows[r])))
    return order


def _initial_cone(rows, order, d):
    chosen = []
    rest = []
    for r in order:
        if len(chosen) < d and rank([rows[i] for i in chosen] + [rows[r]]) > len(chosen):
            chosen.append(r)
        else:
            rest.append(r)
    assert len(chosen) == d, "kernel parametrisation lost rank"
    # rays of {c : R c >= 0} for square invertible R: columns of R^-1
    square = [rows[i] for i in chosen]
    rays = []
    for j in range(d):
        col = nullspace([square[i] for i in range(d) if i != j])
        assert len(col) == 1
        ray = col[0]
        if dot(square[j], ray) < 0:
            ray = [-x for x in ray]
        rays.append(ray)
    return chosen, rest, rays


def _adjacent(p, q, processed, d):
    tight = [row for row in processed if dot(row, p) == 0 and dot(row, q) == 0]
    if len(tight) < d - 2:
        return False
    return rank(tight) == d - 2


def enumerate_vertices(tri, basis=None):
    """All vertex solutions, in a canonical order.

    Double description over the kernel basis: insert the nonnegativity
    of one coordinate at a time (sparsest rows first, ties broken
    lexicographically) and keep extreme rays only, with the algebraic
    rank test for adjacency. Output is sorted by primitive vector, so it
    does not depend on the insertion order.
    """
    if basis is None:
        basis = verify_basis(tri)
    d = basis.dimension
    rows = _constraint_rows(basis)
    order = _sorted_rows(rows)
    chosen, rest, rays = _initial_cone(rows, order, d)
    processed = [rows[i] for i in chosen]
    for r in rest:
        a = rows[r]
        vals = [dot(a, ray) for ray in rays]
        if all(v >= 0 for v in vals):
            processed.append(a)
            continue
        keep = [ray for ray, v in zip(rays, vals) if v >= 0]
        fresh = []
        pos = [(ray, v) for ray, v in zip(rays, vals) if v > 0]
        neg = [(ray, v) for ray, v in zip(rays, vals) if v < 0]
        for rp, vp in pos:
            for rn, vn in neg:
                if d == 2 or _adjacent(rp, rn, processed, d):
                    fresh.append([vp * xn - vn * xp for xp, xn in zip(rp, rn)])
        processed.append(a)
        rays = keep + fresh
    out = {}
    for c in rays:
        x = matvec(rows, c)
        assert all(v >= 0 for v in x) and any(v != 0 for v in x)
        out[tuple(primitive(x))] = True
    result = []
    for vec in sorted(out):
        zero_rows = [rows[i] for i, v in enumerate(vec) if v == 0]
        srank = rank(zero_rows)
        assert srank == d - 1, "double description emitted a non extreme ray"
        result.append(VertexSolution(vec, d, srank))
    return result


def support_enumeration_vertices(tri, basis=None):
    """Brute force oracle: scan maximal zero sets by rank tests.

    Dedup the coordinate functionals up to scale, then every candidate
    extreme ray is the one dimensional kernel of some d-1 of them. Keep
    the sign consistent ones. Exponentially many subsets; fixtures only.
    """
    if basis is None:
        basis = verify_basis(tri)
    d = basis.dimension
    rows = _constraint_rows(basis)
    lines = {}
    for row in rows:
        if all(x == 0 for x in row):
            continue
        p = primitive(row)
        if next(x for x in p if x != 0) < 0:
            p = [-x for x in p]
        lines[tuple(p)] = True
    lines = [list(p) for p in lines]
    found = {}
    for subset in combinations(range(len(lines)), d - 1):
        sub = [lines[i] for i in subset]
        null = nullspace(sub) if sub else nullspace([], ncols=d)
        if len(null) != 1:
            continue
        x = matvec(rows, null[0])
        if all(v >= 0 for v in x) and any(v != 0 for v in x):
            found[tuple(primitive(x))] = True
        elif all(v <= 0 for v in x) and any(v != 0 for v in x):
            found[tuple(primitive([-v for v in x]))] = True
    result = []
    for vec in sorted(found):
        zero_rows = [rows[i] for i, v in enumerate(vec) if v == 0]
        result.append(VertexSolution(vec, d, rank(zero_rows)))
    return result


def is_vertex(tri, s, basis=None):
    """Rank test for extremality of a nonnegative solution vector."""
    if basis is None:
        basis = verify_basis(tri)
    s = [fr(x) for x in s]
    if all(x == 0 for x in s) or any(x < 0 for x in s):
        return False
    if basis.matching and not all(x == 0 for x in matvec(basis.matching, s)):
        return False
    rows = _constraint_rows(basis)
    zero_rows = [rows[i] for i, v in enumerate(s) if v == 0]
    return rank(zero_rows) == basis.dimension - 1
