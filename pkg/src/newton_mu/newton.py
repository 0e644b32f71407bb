"""Newton numbers of regions, factorization, and difference decomposition.

The Newton number of a region X in the nonnegative orthant is the
alternating sum over coordinate subsets I of |I|! V_|I|(X^I), where X^I is
the part of X inside the subspace spanned by the coordinates in I (the
empty subset contributes 1 exactly when the origin lies in X).  For a
union of simplices all sharing the same minimal "full-supporting" subset I
and the same base face in R^I, the number factors through the projection
that kills the I coordinates; both routes are computed and compared.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    ContainmentError,
    DomainError,
    FormulaMismatchError,
    InvalidRegionError,
    NotQuasiConvenientError,
)
from .geometry import Simplex, Vec, in_convex_hull, pull_triangulate
from .polyhedra import (
    NewtonRegion,
    SupportSet,
    all_subsets,
    check_dimension,
    drop_coordinates,
    gamma_minus,
    is_quasi_convenient,
    newton_diagram,
    project,
    validate_region,
)


@dataclass(frozen=True)
class NewtonTerm:
    subset: frozenset[int]
    sign: int
    factorial_volume: Fraction

    @property
    def contribution(self) -> Fraction:
        return self.sign * self.factorial_volume


@dataclass(frozen=True)
class NewtonReport:
    n: int
    terms: tuple[NewtonTerm, ...]
    total: Fraction


def newton_number(x: NewtonRegion) -> NewtonReport:
    """Alternating-sum Newton number with one term per coordinate subset."""
    check_dimension(x.n)
    validate_region(x)
    vols = x.subset_volumes()
    terms = []
    total = Fraction(0)
    for I in all_subsets(x.n):
        sign = (-1) ** (x.n - len(I))
        term = NewtonTerm(I, sign, vols[I])
        terms.append(term)
        total += term.contribution
    return NewtonReport(x.n, tuple(terms), total)


def full_supporting_subsets(s: Simplex) -> list[frozenset[int]]:
    """Coordinate subsets I such that exactly |I|+1 vertices of s lie in R^I.

    For a nondegenerate top-dimensional simplex these are the subsets whose
    subspace meets s in a full |I|-dimensional face; they are closed under
    intersection, so a unique minimal one exists.
    """
    if s.dim != s.n or s.is_degenerate:
        raise DomainError("full-supporting subsets need a nondegenerate top-dimensional simplex")
    out = []
    for I in all_subsets(s.n):
        if len(s.face_in_subspace(I)) == len(I) + 1:
            out.append(I)
    return out


def minimal_full_supporting(s: Simplex) -> frozenset[int]:
    subs = full_supporting_subsets(s)
    smallest = frozenset(range(s.n))
    for I in subs:
        smallest &= I
    if smallest not in subs:
        raise InvalidRegionError(
            "full-supporting subsets are not intersection-closed for this simplex"
        )
    return smallest


@dataclass(frozen=True)
class FactoredResult:
    total: Fraction
    subset: frozenset[int]
    face_volume: Fraction
    projected_total: Fraction | None
    route: str


def newton_number_factored(z: NewtonRegion | Simplex) -> FactoredResult:
    """Newton number via the base-face/projection factorization.

    Every simplex must share one minimal full-supporting subset I and one
    base face in R^I; then nu(z) = |I|! V(z^I) * nu(projection of z along I).
    The direct alternating sum is always computed as well; disagreement is
    a hard error.  Inputs whose projections collapse fall back to the
    direct route (reported in the result).
    """
    region = z if isinstance(z, NewtonRegion) else NewtonRegion(z.n, (z,))
    check_dimension(region.n)
    if region.contains_origin():
        raise DomainError("factored route needs a region avoiding the origin")
    for s in region.simplices:
        if s.dim != region.n or s.is_degenerate:
            raise DomainError("factored route needs nondegenerate top-dimensional simplices")
    direct = newton_number(region).total

    mins = {minimal_full_supporting(s) for s in region.simplices}
    if len(mins) != 1:
        raise InvalidRegionError(
            "pieces disagree on the minimal full-supporting subset: "
            + ", ".join(str(sorted(i + 1 for i in m)) for m in sorted(mins, key=sorted))
        )
    I = next(iter(mins))
    faces = {s.face_in_subspace(I) for s in region.simplices}
    if len(faces) != 1:
        raise InvalidRegionError("pieces do not share one base face in the subspace")
    face = next(iter(faces))
    face_volume = Simplex(face).normalized_volume()

    if len(I) == region.n:
        total = face_volume
        if total != direct:
            raise FormulaMismatchError(
                "factored and direct Newton numbers disagree",
                {"factored": str(total), "direct": str(direct)},
            )
        return FactoredResult(total, I, face_volume, None, "factored")

    projected = []
    collapsed = False
    for s in region.simplices:
        image = drop_coordinates(project(s, I), I)
        if len(image.vertices) != region.n - len(I) + 1 or image.is_degenerate:
            collapsed = True
            break
        projected.append(image)
    if not collapsed and len(set(projected)) != len(projected):
        collapsed = True
    if collapsed:
        return FactoredResult(direct, I, face_volume, None, "direct")

    proj_region = NewtonRegion(region.n - len(I), tuple(projected))
    projected_total = newton_number(proj_region).total
    total = face_volume * projected_total
    if total != direct:
        raise FormulaMismatchError(
            "factored and direct Newton numbers disagree",
            {"factored": str(total), "direct": str(direct)},
        )
    return FactoredResult(total, I, face_volume, projected_total, "factored")


@dataclass(frozen=True)
class DecompositionPiece:
    minimal_subset: frozenset[int]
    base_face: tuple[Vec, ...]
    region: NewtonRegion
    total: Fraction


def _removal_shells(outer: SupportSet, inner: SupportSet) -> list[Simplex]:
    """Triangulated difference of the regions under two nested diagrams.

    Starting from the union support (same diagram as the inner one), the
    points missing from the outer support are removed one at a time; each
    removal frees the cone from the removed point over the strictly visible
    facets of the new diagram.  Points already absorbed contribute nothing.
    """
    cur = set(outer.points) | set(inner.points)
    extras = sorted(set(inner.points) - set(outer.points))
    shells: list[Simplex] = []
    for apex in extras:
        cur.remove(apex)
        diagram = newton_diagram(SupportSet(outer.variables, tuple(sorted(cur))))
        for facet in diagram.facets:
            value = sum(w * Fraction(c) for w, c in zip(facet.inner_normal, apex))
            if value < facet.offset:
                for cell in pull_triangulate(facet.vertices):
                    shells.append(Simplex(cell + (apex,)))
    return shells


def decompose_difference(x: NewtonRegion, y: NewtonRegion) -> list[DecompositionPiece]:
    """Split X \\ Y into groups sharing one minimal subset and base face.

    Both regions must be quasi-convenient and nested (Y inside X).  For
    regions built from supports the difference is triangulated by removal
    shells; explicit regions must already share a common refinement.  The
    grouped Newton numbers must add up to nu(X) - nu(Y); any gap is a hard
    error rather than a silently wrong decomposition.
    """
    if x.n != y.n:
        raise DomainError("regions live in different ambient dimensions")
    check_dimension(x.n)
    for label, region in (("outer", x), ("inner", y)):
        ok, reason = is_quasi_convenient(region)
        if not ok:
            raise NotQuasiConvenientError(f"{label} region: {reason}")

    if x.source is not None and y.source is not None:
        for p in x.source.points:
            if not in_convex_hull(p, list(y.source.points), plus_orthant=True):
                raise ContainmentError(
                    f"outer support point {p} lies above the inner diagram;"
                    " the inner region is not contained in the outer one"
                )
        simplices = _removal_shells(x.source, y.source)
    else:
        missing = [s for s in y.simplices if s not in set(x.simplices)]
        if missing:
            raise ContainmentError(
                "explicit regions must share a common refinement"
                f" (inner simplex {missing[0].vertices} is not a piece of the outer region)"
            )
        simplices = [s for s in x.simplices if s not in set(y.simplices)]

    groups: dict[tuple, list[Simplex]] = {}
    for s in simplices:
        I = minimal_full_supporting(s)
        face = s.face_in_subspace(I)
        key = (len(I), tuple(sorted(I)), face)
        groups.setdefault(key, []).append(s)

    pieces = []
    for (size, members, face) in sorted(groups):
        region = NewtonRegion(x.n, tuple(groups[(size, members, face)]))
        total = newton_number(region).total
        pieces.append(DecompositionPiece(frozenset(members), face, region, total))

    gap = newton_number(x).total - newton_number(y).total - sum(
        (p.total for p in pieces), Fraction(0)
    )
    if gap != 0:
        raise FormulaMismatchError(
            "decomposition does not add up to the Newton-number difference",
            {"gap": str(gap)},
        )
    return pieces


@dataclass(frozen=True)
class VanishingReport:
    total: Fraction
    unit_axes: tuple[int, ...]
    necessary_consistent: bool
    sufficient_axis: int | None
    sufficient_consistent: bool
    extremal_applicable: bool
    extremal_consistent: bool | None


def vanishing_check(x: NewtonRegion, complement_convex: bool | None = None) -> VanishingReport:
    """Test the vanishing criteria for the Newton number of a region.

    Necessary: nu = 0 forces some unit vector among the vertices.
    Sufficient: a unit-vector vertex whose coordinate vanishes on every
    other vertex forces nu = 0.  When the orthant complement of the region
    is convex (always true for regions under a diagram; override with the
    flag for explicit regions) the necessary condition is two-sided.
    """
    report = newton_number(x)
    nu = report.total
    verts = x.vertex_set
    unit_axes = []
    for j in range(x.n):
        ej = tuple(1 if i == j else 0 for i in range(x.n))
        if ej in verts:
            unit_axes.append(j)
    necessary_consistent = not (nu == 0 and not unit_axes)

    sufficient_axis = None
    for j in unit_axes:
        ej = tuple(1 if i == j else 0 for i in range(x.n))
        if all(v[j] == 0 for v in verts if v != ej):
            sufficient_axis = j
            break
    sufficient_consistent = sufficient_axis is None or nu == 0

    applicable = complement_convex if complement_convex is not None else x.source is not None
    extremal_consistent = ((nu == 0) == bool(unit_axes)) if applicable else None
    return VanishingReport(
        nu,
        tuple(unit_axes),
        necessary_consistent,
        sufficient_axis,
        sufficient_consistent,
        bool(applicable),
        extremal_consistent,
    )


def region_for_support(s: SupportSet) -> NewtonRegion:
    """Convenience wrapper: the region under the diagram of a support."""
    return gamma_minus(s)
