"""Independent verification routes.

Each oracle recomputes a headline quantity by a method sharing no code
path with the main machinery: volumes by lattice-point counting and
interpolation, triangulation invariance by re-running with a shuffled
vertex order, and Milnor numbers by linear algebra on truncated Jacobian
ideals.  They are deliberately slow and kept to small inputs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iter_product

from .errors import DomainError, StabilizationError
from .geometry import Simplex
from .linalg import determinant, solve
from .newton import newton_number
from .polyhedra import NewtonRegion, SupportSet, gamma_minus, newton_diagram

ORACLE_MAX_DIMENSION = 3
ORACLE_MAX_DEGREE = 8
COLENGTH_MAX_ORDER = 24


@dataclass
class Polynomial:
    """Finite exponent->coefficient map; just enough algebra for oracles."""

    n: int
    coefficients: dict[tuple[int, ...], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for exps, coeff in self.coefficients.items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != self.n or any(e < 0 for e in exps):
                raise DomainError(f"bad exponent vector {exps}")
            coeff = Fraction(coeff)
            if coeff != 0:
                clean[exps] = coeff
        self.coefficients = clean

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    def degree(self) -> int:
        if self.is_zero:
            return -1
        return max(sum(e) for e in self.coefficients)

    def partial(self, i: int) -> "Polynomial":
        out: dict[tuple[int, ...], Fraction] = {}
        for exps, coeff in self.coefficients.items():
            if exps[i] == 0:
                continue
            lowered = tuple(e - 1 if j == i else e for j, e in enumerate(exps))
            out[lowered] = coeff * exps[i]
        return Polynomial(self.n, out)

    def support(self, variables: tuple[str, ...] | None = None) -> SupportSet:
        if self.is_zero:
            raise DomainError("the zero series has no support")
        if variables is None:
            from .polyhedra import default_variables

            variables = default_variables(self.n)
        return SupportSet(variables, tuple(self.coefficients))


def _integer_vertices(simplices) -> None:
    for s in simplices:
        for v in s.vertices:
            for c in v:
                if Fraction(c).denominator != 1:
                    raise DomainError("lattice counting needs integer vertices")


class _FastMembership:
    """Integer Cramer test for a full-dimensional lattice simplex.

    Precomputes the adjugate of the edge matrix so that each point costs a
    few integer dot products: the barycentric numerators must share the
    determinant's sign and sum to at most |det|.
    """

    def __init__(self, simplex: Simplex):
        n = simplex.n
        base = tuple(int(c) for c in simplex.vertices[0])
        cols = [
            [int(v[i]) - base[i] for i in range(n)]
            for v in simplex.vertices[1:]
        ]
        matrix = [[Fraction(cols[j][i]) for j in range(n)] for i in range(n)]
        det = determinant(matrix)
        inverse_rows = []
        for i in range(n):
            rhs = [Fraction(1) if t == i else Fraction(0) for t in range(n)]
            col = solve(matrix, rhs)
            inverse_rows.append(col)
        # solve(matrix, e_j) yields column j of the inverse, so the j-th
        # barycentric functional is det * (that column read across rows)
        self.base = base
        self.sign = 1 if det > 0 else -1
        self.rows = [
            [int(det * inverse_rows[i][j]) for i in range(n)] for j in range(n)
        ]
        self.abs_det = abs(int(det))

    def contains(self, point) -> bool:
        diff = [point[i] - self.base[i] for i in range(len(self.base))]
        total = 0
        for row in self.rows:
            value = self.sign * sum(r * d for r, d in zip(row, diff))
            if value < 0:
                return False
            total += value
        return total <= self.abs_det


def ehrhart_volume(x: NewtonRegion | Simplex) -> Fraction:
    """Top-degree coefficient of the lattice-point counting polynomial.

    Counts lattice points of the dilates k = 1..n+1 of the region,
    interpolates the degree-n counting polynomial exactly, and reads off
    the leading coefficient, which equals the Euclidean volume.  Only for
    small dimensions; counting is exponential.
    """
    region = x if isinstance(x, NewtonRegion) else NewtonRegion(x.n, (x,))
    n = region.n
    if n > ORACLE_MAX_DIMENSION:
        raise DomainError(
            f"lattice counting is capped at dimension {ORACLE_MAX_DIMENSION}"
        )
    if n < 1:
        raise DomainError("lattice counting needs dimension at least 1")
    _integer_vertices(region.simplices)

    counts = []
    for k in range(1, n + 2):
        dilated = [
            Simplex(tuple(tuple(int(c) * k for c in v) for v in s.vertices))
            for s in region.simplices
        ]
        fast = []
        slow = []
        for s in dilated:
            if s.dim == n and not s.is_degenerate:
                fast.append(_FastMembership(s))
            else:
                slow.append(s)
        box = [max(v[i] for s in dilated for v in s.vertices) for i in range(n)]
        count = 0
        for point in iter_product(*(range(int(b) + 1) for b in box)):
            if any(f.contains(point) for f in fast) or any(
                s.contains_point(point) for s in slow
            ):
                count += 1
        counts.append(Fraction(count))

    # Solve the Vandermonde system sum_j c_j k^j = count_k exactly.
    rows = [[Fraction(k) ** j for j in range(n + 1)] for k in range(1, n + 2)]
    coeffs = _solve_square(rows, counts)
    return coeffs[n]


def _solve_square(rows, rhs):
    m = [row[:] + [b] for row, b in zip(rows, rhs)]
    size = len(m)
    for col in range(size):
        pivot = next(r for r in range(col, size) if m[r][col] != 0)
        m[col], m[pivot] = m[pivot], m[col]
        inv = 1 / m[col][col]
        m[col] = [v * inv for v in m[col]]
        for r in range(size):
            if r != col and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    return [m[r][size] for r in range(size)]


def shuffled_newton_number(s: SupportSet, seed: int) -> Fraction:
    """Newton number recomputed with a seeded random triangulation order.

    The pulling order is a shuffle of the diagram vertices instead of the
    lexicographic default; the resulting triangulation differs but the
    number may not.
    """
    diagram = newton_diagram(s)
    verts = sorted({v for facet in diagram.facets for v in facet.vertices})
    rng = random.Random(seed)
    shuffled = list(verts)
    rng.shuffle(shuffled)
    order = {v: i for i, v in enumerate(shuffled)}
    region = gamma_minus(s, vertex_order=order)
    return newton_number(region).total


def _monomials_below(n: int, degree: int) -> list[tuple[int, ...]]:
    out = []
    for exps in iter_product(*(range(degree) for _ in range(n))):
        if sum(exps) < degree:
            out.append(exps)
    return sorted(out)


def _sparse_rank(rows: list[dict[int, Fraction]]) -> int:
    """Rank of sparsely stored rows by incremental elimination.

    Each row is a column->value dict; keeping one pivot row per leading
    column makes the reduction cost scale with the number of nonzero
    entries instead of the full matrix size.
    """
    pivots: dict[int, dict[int, Fraction]] = {}
    count = 0
    for row in rows:
        current = dict(row)
        while current:
            lead = min(current)
            pivot = pivots.get(lead)
            if pivot is None:
                scale = current[lead]
                pivots[lead] = {c: v / scale for c, v in current.items()}
                count += 1
                break
            factor = current[lead]
            for c, v in pivot.items():
                updated = current.get(c, Fraction(0)) - factor * v
                if updated:
                    current[c] = updated
                elif c in current:
                    del current[c]
    return count


def milnor_colength(p: Polynomial) -> int:
    """Milnor number as the colength of the Jacobian ideal.

    For truncation order N, the dimension of the quotient of polynomials
    of degree < N by the truncated span of all monomial multiples of the
    partial derivatives is computed by exact rank; the value climbs and
    settles at the Milnor number.  Three equal consecutive values are
    required before the answer is trusted; hitting the order cap suggests
    a non-isolated critical point.
    """
    if p.n > ORACLE_MAX_DIMENSION:
        raise DomainError(
            f"colength computation is capped at dimension {ORACLE_MAX_DIMENSION}"
        )
    if p.degree() > ORACLE_MAX_DEGREE:
        raise DomainError(
            f"colength computation is capped at degree {ORACLE_MAX_DEGREE}"
        )
    partials = [p.partial(i) for i in range(p.n)]
    if all(g.is_zero for g in partials):
        raise DomainError("all partial derivatives vanish identically")

    history: list[int] = []
    for order in range(2, COLENGTH_MAX_ORDER + 1):
        monomials = _monomials_below(p.n, order)
        index = {mono: i for i, mono in enumerate(monomials)}
        rows: list[dict[int, Fraction]] = []
        for g in partials:
            if g.is_zero:
                continue
            for alpha in monomials:
                row: dict[int, Fraction] = {}
                for exps, coeff in g.coefficients.items():
                    shifted = tuple(a + e for a, e in zip(alpha, exps))
                    if sum(shifted) < order:
                        col = index[shifted]
                        updated = row.get(col, Fraction(0)) + coeff
                        if updated:
                            row[col] = updated
                        elif col in row:
                            del row[col]
                if row:
                    rows.append(row)
        colength = len(monomials) - _sparse_rank(rows)
        history.append(colength)
        if len(history) >= 3 and history[-1] == history[-2] == history[-3]:
            return history[-1]
    raise StabilizationError(
        f"colength still moving at truncation order {COLENGTH_MAX_ORDER};"
        " the critical point may not be isolated"
    )
