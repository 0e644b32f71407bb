"""Exact geometry in the nonnegative orthant.

Points are plain tuples of ints/Fractions (they hash and compare across the
two types consistently).  Everything lives in the orthant, which buys two
simplifications used throughout:

  * the origin belongs to a simplex iff it is one of its vertices;
  * a simplex meets a coordinate subspace R^I exactly in the face spanned
    by its vertices lying in R^I.

Volumes are only ever needed for simplices lying in axis-parallel coordinate
subspaces, so the k-volume of a k-simplex is computed by dropping the
coordinates that vanish on all vertices and taking a full-dimensional
determinant.  No Gram determinants.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import InvalidRegionError
from .linalg import determinant, rank, solve

Vec = tuple  # tuple of int | Fraction, all >= 0


def vec_sub(a: Vec, b: Vec) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) - Fraction(y) for x, y in zip(a, b))


def coordinate_support(v: Vec) -> frozenset[int]:
    """Indices (0-based) of the nonzero coordinates."""
    return frozenset(i for i, x in enumerate(v) if x != 0)


def is_origin(v: Vec) -> bool:
    return all(x == 0 for x in v)


@dataclass(frozen=True)
class Simplex:
    """A simplex given by its vertices, stored in lexicographic order.

    Construction does not insist on affine independence; degenerate vertex
    sets are accepted and report zero volume, so callers that merely sum
    volumes need no special casing.
    """

    vertices: tuple[Vec, ...]

    def __post_init__(self):
        verts = tuple(sorted(tuple(v) for v in self.vertices))
        if not verts:
            raise InvalidRegionError("simplex needs at least one vertex")
        n = len(verts[0])
        for v in verts:
            if len(v) != n:
                raise InvalidRegionError("mixed ambient dimensions in simplex")
            if any(x < 0 for x in v):
                raise InvalidRegionError(f"vertex {v} leaves the nonnegative orthant")
        if len(set(verts)) != len(verts):
            raise InvalidRegionError("duplicate vertices in simplex")
        object.__setattr__(self, "vertices", verts)

    @property
    def n(self) -> int:
        return len(self.vertices[0])

    @property
    def dim(self) -> int:
        """Combinatorial dimension (vertex count - 1)."""
        return len(self.vertices) - 1

    def edge_matrix(self) -> list[list[Fraction]]:
        base = self.vertices[0]
        return [list(vec_sub(v, base)) for v in self.vertices[1:]]

    @property
    def is_degenerate(self) -> bool:
        return rank(self.edge_matrix()) < self.dim

    def contains_origin(self) -> bool:
        return any(is_origin(v) for v in self.vertices)

    def face_in_subspace(self, members: frozenset[int]) -> tuple[Vec, ...]:
        """Vertices lying in the coordinate subspace R^members (0-based)."""
        return tuple(v for v in self.vertices if coordinate_support(v) <= members)

    def normalized_volume(self) -> Fraction:
        """dim! times the dim-volume, inside the simplex's coordinate subspace.

        Requires the simplex to span an axis-parallel coordinate flat: the
        coordinates that are nonzero somewhere must number exactly dim
        (else: fewer vertices than directions means degenerate, more means
        the volume is not an axis-parallel coordinate-subspace volume and
        is out of scope).
        """
        k = self.dim
        if k == 0:
            return Fraction(1)
        live = sorted(set().union(*[coordinate_support(v) for v in self.vertices]))
        if len(live) < k:
            return Fraction(0)
        if len(live) > k:
            if rank(self.edge_matrix()) < k:
                return Fraction(0)
            raise InvalidRegionError(
                "volume requested for a simplex outside any coordinate subspace"
            )
        base = self.vertices[0]
        edges = [
            [Fraction(v[i]) - Fraction(base[i]) for i in live]
            for v in self.vertices[1:]
        ]
        return abs(determinant(edges))

    def volume(self) -> Fraction:
        return self.normalized_volume() / factorial(self.dim)

    def contains_point(self, point: Vec) -> bool:
        """Exact membership via barycentric coordinates (degenerate: False)."""
        if self.is_degenerate:
            return False
        base = self.vertices[0]
        cols = [vec_sub(v, base) for v in self.vertices[1:]]
        if not cols:
            return tuple(point) == base
        matrix = [[cols[j][i] for j in range(len(cols))] for i in range(self.n)]
        coeffs = solve(matrix, list(vec_sub(point, base)))
        if coeffs is None:
            return False
        # solve() pins nothing here: columns are independent, solution unique
        residual_ok = all(
            sum(matrix[i][j] * coeffs[j] for j in range(len(cols)))
            == Fraction(point[i]) - Fraction(base[i])
            for i in range(self.n)
        )
        if not residual_ok:
            return False
        return all(c >= 0 for c in coeffs) and sum(coeffs) <= 1


def simplex_volume(s: Simplex) -> Fraction:
    """k-volume of a k-simplex (0 for degenerate vertex sets)."""
    return s.volume()


# ---------------------------------------------------------------------------
# Linear feasibility (phase-1 simplex with Bland's rule, exact arithmetic)
# ---------------------------------------------------------------------------


def linear_feasible(rows: list[list[Fraction]], rhs: list[Fraction]) -> bool:
    """Does A x = b admit x >= 0?  Exact phase-1 simplex."""
    m = len(rows)
    if m == 0:
        return True
    n = len(rows[0])
    tableau: list[list[Fraction]] = []
    for row, b in zip(rows, rhs):
        r = [Fraction(v) for v in row]
        bb = Fraction(b)
        if bb < 0:
            r = [-v for v in r]
            bb = -bb
        tableau.append(r + [Fraction(0)] * m + [bb])
    for i in range(m):
        tableau[i][n + i] = Fraction(1)
    basis = [n + i for i in range(m)]
    # reduced costs for the artificial objective (minimize sum of artificials)
    zrow = [Fraction(0)] * (n + m + 1)
    for i in range(m):
        for j in range(n + m + 1):
            zrow[j] -= tableau[i][j]
    for i in range(m):
        zrow[n + i] = Fraction(0)

    while True:
        enter = next((j for j in range(n + m) if zrow[j] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(m):
            if tableau[i][enter] > 0:
                ratio = tableau[i][-1] / tableau[i][enter]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:  # phase-1 objective is bounded below; unreachable
            raise ArithmeticError("phase-1 simplex lost boundedness")
        _, leave = best
        pivot = tableau[leave][enter]
        tableau[leave] = [v / pivot for v in tableau[leave]]
        for i in range(m):
            if i != leave and tableau[i][enter] != 0:
                f = tableau[i][enter]
                tableau[i] = [a - f * b for a, b in zip(tableau[i], tableau[leave])]
        if zrow[enter] != 0:
            f = zrow[enter]
            zrow = [a - f * b for a, b in zip(zrow, tableau[leave])]
        basis[leave] = enter
    return -zrow[-1] == 0


def in_convex_hull(point: Vec, points: list[Vec], plus_orthant: bool = False) -> bool:
    """Membership of point in conv(points) (optionally + nonnegative orthant)."""
    if not points:
        return False
    n = len(point)
    k = len(points)
    slots = k + (n if plus_orthant else 0)
    rows = []
    for i in range(n):
        row = [Fraction(points[j][i]) for j in range(k)]
        if plus_orthant:
            row += [Fraction(1) if t == i else Fraction(0) for t in range(n)]
        rows.append(row)
    rows.append([Fraction(1)] * k + [Fraction(0)] * (slots - k))
    rhs = [Fraction(x) for x in point] + [Fraction(1)]
    return linear_feasible(rows, rhs)


def extreme_points(points) -> list[Vec]:
    """Vertices of conv(points), in lexicographic order."""
    pts = sorted(set(tuple(p) for p in points))
    out = []
    for i, p in enumerate(pts):
        others = pts[:i] + pts[i + 1 :]
        if not others or not in_convex_hull(p, others):
            out.append(p)
    return out


# ---------------------------------------------------------------------------
# Face enumeration and pulling triangulation
# ---------------------------------------------------------------------------


def affine_dim(points) -> int:
    pts = [tuple(p) for p in points]
    if len(pts) <= 1:
        return 0
    return rank([list(vec_sub(p, pts[0])) for p in pts[1:]])


def _chart(points) -> list[tuple[Fraction, ...]]:
    """Affine coordinates of the points inside their own affine hull."""
    base = points[0]
    basis: list[tuple[Fraction, ...]] = []
    for p in points[1:]:
        cand = vec_sub(p, base)
        if rank([list(b) for b in basis] + [list(cand)]) > len(basis):
            basis.append(cand)
    d = len(basis)
    matrix = [[basis[j][i] for j in range(d)] for i in range(len(base))]
    coords = []
    for p in points:
        sol = solve(matrix, list(vec_sub(p, base)))
        if sol is None:
            raise ArithmeticError("point left its own affine hull")
        coords.append(tuple(sol))
    return coords


def polytope_facets(points) -> list[tuple[int, ...]]:
    """Index sets of the facets of conv(points).

    Points must be distinct; they need not all be extreme (non-extreme points
    on a facet's hyperplane are included in that facet's index set).
    Brute force over affinely independent subsets at desk scale.
    """
    pts = [tuple(p) for p in points]
    d = affine_dim(pts)
    if d == 0:
        return []
    coords = _chart(pts)
    if d == 1:
        vals = [c[0] for c in coords]
        lo = min(range(len(pts)), key=lambda i: vals[i])
        hi = max(range(len(pts)), key=lambda i: vals[i])
        return sorted({(lo,), (hi,)})
    from itertools import combinations

    from .linalg import nullspace_vector

    found: set[tuple[int, ...]] = set()
    for subset in combinations(range(len(pts)), d):
        edges = [list(vec_sub(coords[j], coords[subset[0]])) for j in subset[1:]]
        if rank(edges) < d - 1:
            continue
        normal = nullspace_vector(edges)
        if normal is None:
            continue
        offset = sum(w * x for w, x in zip(normal, coords[subset[0]]))
        sides = [sum(w * x for w, x in zip(normal, c)) - offset for c in coords]
        if all(s >= 0 for s in sides) or all(s <= 0 for s in sides):
            face = tuple(i for i, s in enumerate(sides) if s == 0)
            found.add(face)
    return sorted(found)


def pull_triangulate(points, order_key=None) -> list[tuple[Vec, ...]]:
    """Triangulate conv(points) by pulling at the least vertex, recursively.

    Uses only the given points as vertices.  With the same vertex order the
    induced triangulation of any face equals the face's own pulling
    triangulation, so triangulations built facet-by-facet agree on shared
    ridges and assemble into a simplicial complex.
    """
    pts = sorted(set(tuple(p) for p in points), key=order_key)
    d = affine_dim(pts)
    if len(pts) == d + 1:
        return [tuple(pts)]
    apex = pts[0]
    pieces: list[tuple[Vec, ...]] = []
    for face in polytope_facets(pts):
        face_pts = [pts[i] for i in face]
        if apex in face_pts:
            continue
        for cell in pull_triangulate(face_pts, order_key):
            pieces.append(cell + (apex,))
    return pieces
