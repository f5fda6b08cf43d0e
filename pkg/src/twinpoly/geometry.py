"""Exact geometry of the twinned order polytope of a poset pair.

Builds the point configuration of the two ideal lattices (indicator vectors
of the ideals of P, negated indicator vectors of the ideals of Q, and the
origin), decides whether the origin is interior via an exact rational LP,
and computes an irredundant half-space representation with the double
description method.  No floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .posets import enumerate_ideals, ideal_sort_key


class GeometryError(ValueError):
    pass


def rho(subset, d):
    """0/1 indicator vector of a subset of range(d)."""
    return tuple(1 if i in subset else 0 for i in range(d))


def neg(vec):
    return tuple(-x for x in vec)


@dataclass(frozen=True)
class PointConfiguration:
    """The lattice points of the twinned configuration, origin included once.

    Layout: indicator vectors of nonempty ideals of P in canonical ideal
    order, then negated indicators of nonempty ideals of Q, then the origin.
    """

    d: int
    points: tuple
    origin_index: int

    def nonzero_points(self):
        return tuple(
            p for k, p in enumerate(self.points) if k != self.origin_index
        )


def build_omega(p, q):
    """Point configuration of the pair (p, q); raises on dimension mismatch."""
    if p.d != q.d:
        raise GeometryError(f"element counts differ: {p.d} vs {q.d}")
    d = p.d
    px = [rho(s, d) for s in enumerate_ideals(p).nonempty()]
    qy = [neg(rho(s, d)) for s in enumerate_ideals(q).nonempty()]
    points = tuple(px) + tuple(qy) + ((0,) * d,)
    assert len(set(points)) == len(points)
    allones = (1,) * d
    assert allones in points and neg(allones) in points
    cfg = PointConfiguration(d=d, points=points, origin_index=len(points) - 1)
    assert all(
        all(x in (0, 1) for x in pt) or all(x in (0, -1) for x in pt)
        for pt in cfg.nonzero_points()
    )
    return cfg


# ----------------------------------------------------------------------
# exact simplex, standard form: maximize c.x  s.t.  A x = b, x >= 0
# ----------------------------------------------------------------------

def _pivot(rows, obj, basis, r, c):
    piv = rows[r][c]
    rows[r] = [x / piv for x in rows[r]]
    for i, row in enumerate(rows):
        if i != r and row[c]:
            f = row[c]
            rows[i] = [x - f * y for x, y in zip(row, rows[r])]
    f = obj[c]
    if f:
        obj[:] = [x - f * y for x, y in zip(obj, rows[r])]
    basis[r] = c


def _simplex_loop(rows, obj, basis, ncols):
    # Bland's rule on both choices guarantees termination.
    while True:
        enter = next((j for j in range(ncols) if obj[j] > 0), None)
        if enter is None:
            return
        best = None
        for i, row in enumerate(rows):
            if row[enter] > 0:
                ratio = row[-1] / row[enter]
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            raise GeometryError("LP unbounded")  # cannot happen for our LPs
        _pivot(rows, obj, basis, best[1], enter)


def solve_lp_max(a_rows, b_vals, c_vals):
    """Exact two-phase simplex.  Returns (optimal value, solution vector).

    Raises GeometryError("LP infeasible") when no feasible point exists.
    """
    m, n = len(a_rows), len(c_vals)
    rows = []
    for i in range(m):
        row = [Fraction(x) for x in a_rows[i]]
        rhs = Fraction(b_vals[i])
        if rhs < 0:
            row = [-x for x in row]
            rhs = -rhs
        rows.append(row + [rhs])
    # phase 1: artificial variable per row, minimize their sum
    for i in range(m):
        for k in range(m):
            rows[i].insert(n + k, Fraction(1 if k == i else 0))
    basis = [n + i for i in range(m)]
    obj = [Fraction(0)] * (n + m + 1)
    for j in range(n):
        obj[j] = sum(rows[i][j] for i in range(m))
    obj[-1] = sum(rows[i][-1] for i in range(m))
    _simplex_loop(rows, obj, basis, n + m)
    if obj[-1] != 0:
        raise GeometryError("LP infeasible")
    # drive leftover artificials out of the basis, dropping redundant rows
    keep = []
    for i in range(len(rows)):
        if basis[i] >= n:
            c = next((j for j in range(n) if rows[i][j] != 0), None)
            if c is None:
                continue  # redundant constraint
            _pivot(rows, obj, basis, i, c)
        keep.append(i)
    rows = [rows[i] for i in keep]
    basis = [basis[i] for i in keep]
    rows = [row[:n] + row[-1:] for row in rows]
    # phase 2
    obj = [Fraction(x) for x in c_vals] + [Fraction(0)]
    for i, bi in enumerate(basis):
        f = obj[bi]
        if f:
            obj = [x - f * y for x, y in zip(obj, rows[i])]
    _simplex_loop(rows, obj, basis, n)
    x = [Fraction(0)] * n
    for i, bi in enumerate(basis):
        x[bi] = rows[i][-1]
    value = sum(Fraction(c_vals[j]) * x[j] for j in range(n))
    return value, x


@dataclass(frozen=True)
class InteriorCertificate:
    """Strictly positive convex weights on the nonzero points summing to 0.

    Existence of such weights is equivalent to the origin lying in the
    interior of the polytope (the configuration is full-dimensional).
    """

    points: tuple
    weights: tuple

    def __post_init__(self):
        if any(w <= 0 for w in self.weights):
            raise GeometryError("certificate weights must be strictly positive")
        if sum(self.weights) != 1:
            raise GeometryError("certificate weights must sum to one")
        d = len(self.points[0])
        for k in range(d):
            if sum(w * pt[k] for w, pt in zip(self.weights, self.points)) != 0:
                raise GeometryError("certificate does not balance to the origin")


def origin_in_interior(cfg):
    """Certificate that the origin is interior, or None.

    Solves max t s.t. sum(lam_v v) = 0, sum(lam_v) = 1, lam_v >= t over the
    nonzero points, in exact rationals.  The optimum is strictly positive
    exactly when the origin is interior.  Substituting lam_v = mu_v + t
    (mu_v >= 0, t >= 0) puts the problem in standard form; t = 0 is always
    feasible because the all-ones vector appears with both signs.
    """
    pts = cfg.nonzero_points()
    n = len(pts)
    d = cfg.d
    a_rows = []
    for k in range(d):
        a_rows.append([pt[k] for pt in pts] + [sum(pt[k] for pt in pts)])
    a_rows.append([1] * n + [n])
    b_vals = [0] * d + [1]
    c_vals = [0] * n + [1]
    value, x = solve_lp_max(a_rows, b_vals, c_vals)
    if value <= 0:
        return None
    t = x[n]
    weights = tuple(x[j] + t for j in range(n))
    return InteriorCertificate(points=pts, weights=weights)


# ----------------------------------------------------------------------
# half-space representation via double description
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class HalfSpace:
    """Inequality normal . x <= offset with primitive integer data."""

    normal: tuple
    offset: int

    def __post_init__(self):
        if not any(self.normal):
            raise GeometryError("half-space normal must be nonzero")
        if gcd(*map(abs, self.normal), abs(self.offset)) > 1:
            raise GeometryError("half-space data must be primitive")

    def slack(self, pt):
        return self.offset - sum(a * x for a, x in zip(self.normal, pt))


def _primitive(vec):
    g = 0
    for x in vec:
        g = gcd(g, abs(x) if isinstance(x, int) else 0)
        if g == 1:
            break
    if g == 0:
        return tuple(vec)
    return tuple(x // g for x in vec)


def affine_rank(points):
    """Rank of the difference vectors, by exact Gaussian elimination."""
    if len(points) < 2:
        return 0
    base = points[0]
    mat = [[Fraction(x - y) for x, y in zip(pt, base)] for pt in points[1:]]
    rank = 0
    ncols = len(base)
    col = 0
    while col < ncols and rank < len(mat):
        piv = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if piv is None:
            col += 1
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        prow = mat[rank]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                f = mat[r][col] / prow[col]
                mat[r] = [x - f * y for x, y in zip(mat[r], prow)]
        rank += 1
        col += 1
    return rank


def _independent_row_indices(rows, need):
    """Indices of the first `need` linearly independent rows, greedy order."""
    chosen = []
    mat = []
    for idx, row in enumerate(rows):
        cand = mat + [[Fraction(x) for x in row]]
        # re-eliminate; cheap at these sizes
        work = [r[:] for r in cand]
        rank = 0
        for col in range(len(row)):
            piv = next((r for r in range(rank, len(work)) if work[r][col]), None)
            if piv is None:
                continue
            work[rank], work[piv] = work[piv], work[rank]
            prow = work[rank]
            for r in range(len(work)):
                if r != rank and work[r][col]:
                    f = work[r][col] / prow[col]
                    work[r] = [x - f * y for x, y in zip(work[r], prow)]
            rank += 1
        if rank == len(cand):
            chosen.append(idx)
            mat = cand
            if len(chosen) == need:
                return chosen
    return None


def _invert(matrix):
    """Exact inverse of a square Fraction matrix."""
    n = len(matrix)
    aug = [
        [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(matrix)
    ]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        prow = aug[col]
        f = prow[col]
        aug[col] = [x / f for x in prow]
        prow = aug[col]
        for r in range(n):
            if r != col and aug[r][col]:
                g = aug[r][col]
                aug[r] = [x - g * y for x, y in zip(aug[r], prow)]
    return [row[n:] for row in aug]


def _integerize(column):
    denom = 1
    for x in column:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in column]
    return _primitive(ints)


def hull_halfspaces(points):
    """Irredundant facet inequalities of the convex hull of `points`.

    Runs the double description method on the cone of valid inequalities
    {(a, b) : a . v <= b for all v}: its extreme rays are exactly the facet
    inequalities of the hull.  All arithmetic is integer or rational; the
    returned half-spaces carry primitive integer data, sorted
    lexicographically.  Raises GeometryError if the points are not
    full-dimensional.
    """
    pts = list(dict.fromkeys(tuple(p) for p in points))
    d = len(pts[0])
    if affine_rank(pts) != d:
        raise GeometryError("point set is not full-dimensional")
    ineqs = [pt + (-1,) for pt in pts]  # h . (a, b) <= 0 per point
    n = d + 1
    init = _independent_row_indices(ineqs, n)
    assert init is not None  # full-dimensionality guarantees n independent rows
    h_mat = [[Fraction(x) for x in ineqs[i]] for i in init]
    inv = _invert(h_mat)
    # simplicial cone: ray j satisfies h_i . r = 0 for i != j, h_j . r = -1
    rays = []
    tight = []
    init_mask = 0
    for k in init:
        init_mask |= 1 << k
    for j in range(n):
        col = [-inv[i][j] for i in range(n)]
        ray = _integerize(col)
        rays.append(ray)
        tight.append(init_mask & ~(1 << init[j]))
    order = [k for k in range(len(ineqs)) if k not in set(init)]
    processed_mask = init_mask
    for k in order:
        h = ineqs[k]
        vals = [sum(a * b for a, b in zip(h, r)) for r in rays]
        if all(v <= 0 for v in vals):
            processed_mask |= 1 << k
            tight = [
                t | (1 << k) if v == 0 else t for t, v in zip(tight, vals)
            ]
            continue
        plus = [i for i, v in enumerate(vals) if v > 0]
        minus = [i for i, v in enumerate(vals) if v < 0]
        zero = [i for i, v in enumerate(vals) if v == 0]
        new_rays = []
        for ip in plus:
            for im in minus:
                common = tight[ip] & tight[im]
                if common.bit_count() < n - 2:
                    continue
                if any(
                    r not in (ip, im) and common & ~tight[r] == 0
                    for r in range(len(rays))
                ):
                    continue
                combo = [
                    vals[ip] * rm - vals[im] * rp
                    for rp, rm in zip(rays[ip], rays[im])
                ]
                new_rays.append(_primitive(combo))
        processed_mask |= 1 << k
        kept_rays = [rays[i] for i in minus + zero]
        kept_tight = [
            tight[i] | ((1 << k) if i in zero else 0) for i in minus + zero
        ]
        for ray in new_rays:
            if ray in kept_rays:
                continue
            mask = 0
            for idx, hh in enumerate(ineqs):
                if processed_mask >> idx & 1 and sum(
                    a * b for a, b in zip(hh, ray)
                ) == 0:
                    mask |= 1 << idx
            kept_rays.append(ray)
            kept_tight.append(mask)
        rays = kept_rays
        tight = kept_tight
    facets = []
    for ray in rays:
        normal, offset = ray[:-1], ray[-1]
        assert any(normal), "trivial inequality cannot be an extreme ray"
        facets.append(HalfSpace(normal=tuple(normal), offset=offset))
    facets.sort(key=lambda h: (h.normal, h.offset))
    return facets


def contains(hrep, pt):
    """True iff pt satisfies every inequality, non-strictly."""
    return all(h.slack(pt) >= 0 for h in hrep)


def contains_strictly(hrep, pt):
    return all(h.slack(pt) > 0 for h in hrep)


@dataclass
class Polytope:
    """Twinned order polytope: vertex data plus a lazily computed H-rep."""

    d: int
    vertices: tuple
    _hrep: tuple = field(default=None, repr=False)

    @property
    def dim(self):
        rank = affine_rank(self.vertices)
        assert rank == self.d, "twinned polytopes are always full-dimensional"
        return rank

    @property
    def hrep(self):
        if self._hrep is None:
            self._hrep = tuple(hull_halfspaces(self.vertices))
        return self._hrep

    def to_json_dict(self):
        return {
            "d": self.d,
            "vertices": [list(v) for v in self.vertices],
            "facets": [
                {"normal": list(h.normal), "offset": h.offset} for h in self.hrep
            ],
        }


def polytope_from_configuration(cfg):
    """Polytope on the nonzero points (the origin is never a vertex)."""
    return Polytope(d=cfg.d, vertices=cfg.nonzero_points())
