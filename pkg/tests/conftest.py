"""Seeded generators shared across the test suite.

Every generator takes an explicit ``random.Random`` so each test controls
its own seed; nothing here reads global state.  Expected values in the
tests are frozen constants: computed through an independent route first
(lattice counting, Jacobian colength, hand triangulation, or a closed
form) and only then asserted against the library.
"""

from __future__ import annotations

import random
from fractions import Fraction

from newton_mu.geometry import Simplex
from newton_mu.newton import minimal_full_supporting
from newton_mu.polyhedra import (
    NewtonRegion,
    SupportSet,
    region_from_simplices,
    support,
)

# ---------------------------------------------------------------------------
# convenient supports and nested pairs


def random_convenient_support(
    rng: random.Random, n: int, max_exp: int = 6, extras: int = 2
) -> SupportSet:
    """A support with a pure power on every axis plus a few mixed points."""
    pts = []
    for i in range(n):
        v = [0] * n
        v[i] = rng.randint(1, max_exp)
        pts.append(tuple(v))
    for _ in range(rng.randint(0, extras)):
        v = tuple(rng.randint(0, 3) for _ in range(n))
        if any(v):
            pts.append(v)
    return support(pts)


def random_nested_pair(
    rng: random.Random, n: int
) -> tuple[SupportSet, SupportSet]:
    """(outer, inner) supports with the inner region contained in the outer.

    Adding points only grows the upper region, so the region under the
    enlarged support is contained in the region under the original one.
    """
    outer = random_convenient_support(rng, n)
    extra = []
    for _ in range(rng.randint(1, 3)):
        v = tuple(rng.randint(0, 4) for _ in range(n))
        if any(v):
            extra.append(v)
    inner = support(list(outer.points) + extra)
    return outer, inner


# ---------------------------------------------------------------------------
# random simplices away from the origin


def random_offorigin_simplex(
    rng: random.Random, n: int, max_coord: int = 9
) -> NewtonRegion:
    """A nondegenerate n-simplex with integer coordinates avoiding O.

    Coordinates are biased toward zero so the minimal full-supporting
    subset varies across draws.
    """
    while True:
        verts = []
        for _ in range(n + 1):
            v = tuple(
                0 if rng.random() < 0.45 else rng.randint(1, max_coord)
                for _ in range(n)
            )
            verts.append(v)
        if len(set(verts)) != n + 1 or any(not any(v) for v in verts):
            continue
        s = Simplex(tuple(verts))
        if s.is_degenerate:
            continue
        if s.contains_point((0,) * n):
            continue
        return region_from_simplices([s])


def forced_minimal_simplex(
    rng: random.Random, n: int, size: int
) -> NewtonRegion:
    """A single n-simplex whose minimal full-supporting subset has ``size``.

    The base face places ``size + 1`` vertices with strictly positive
    coordinates exactly on the chosen axes; the remaining vertices are
    strictly positive on every complementary axis, which rules out any
    smaller full-supporting subset.
    """
    idx = sorted(rng.sample(range(n), size))
    comp = [i for i in range(n) if i not in idx]
    while True:
        verts = []
        for _ in range(size + 1):
            v = [0] * n
            for i in idx:
                v[i] = rng.randint(1, 6)
            verts.append(tuple(v))
        for _ in range(n - size):
            v = [0] * n
            for i in comp:
                v[i] = rng.randint(1, 6)
            for i in idx:
                v[i] = rng.randint(0, 4)
            verts.append(tuple(v))
        if len(set(verts)) != n + 1:
            continue
        s = Simplex(tuple(verts))
        if s.is_degenerate:
            continue
        assert set(minimal_full_supporting(s)) == set(idx)
        return region_from_simplices([s])


def fan_union(rng: random.Random, n: int, size: int) -> NewtonRegion:
    """A union of simplices sharing one base face, fanned in two directions.

    All pieces share a base simplex supported exactly on ``size`` axes and
    sweep consecutive rays of a strictly convex fan in the two remaining
    coordinates, so interiors are disjoint and every piece has the same
    minimal full-supporting subset and base face.
    """
    if n - size != 2:
        raise ValueError("fan construction needs a two-dimensional complement")
    idx = sorted(rng.sample(range(n), size))
    comp = [i for i in range(n) if i not in idx]
    while True:
        base = []
        for _ in range(size + 1):
            v = [0] * n
            for i in idx:
                v[i] = rng.randint(1, 5)
            base.append(tuple(v))
        if len(set(base)) != size + 1:
            continue
        squashed = Simplex(tuple(tuple(b[i] for i in idx) for b in base))
        if not squashed.is_degenerate:
            break
    pieces_count = rng.randint(2, 3)
    rays = []
    for k in range(1, pieces_count + 2):
        c = rng.randint(1, 3)
        v = [0] * n
        v[comp[0]] = c * k
        v[comp[1]] = c * (pieces_count + 2 - k)
        rays.append(tuple(v))
    simplices = [
        Simplex(tuple(base + [rays[t], rays[t + 1]]))
        for t in range(pieces_count)
    ]
    for s in simplices:
        assert set(minimal_full_supporting(s)) == set(idx)
    return region_from_simplices(simplices)


# ---------------------------------------------------------------------------
# four-variable single-term deformation fixtures
#
# Three families in which dropping one diagram vertex leaves the Newton
# number unchanged, one per vanishing pattern of the dropped vertex, and
# controls where it changes.  Values frozen from independent runs.


def family_with_case_i(m: int) -> SupportSet:
    return support(
        [(3, 0, 0, 0), (0, 3, 0, 0), (0, 0, 5, 0), (1, 0, 0, 5), (0, 2, 1, 1), (0, 0, 0, m)]
    )


def family_with_case_ii(m: int) -> SupportSet:
    return support(
        [
            (3, 0, 0, 0),
            (0, 3, 0, 0),
            (0, 0, 5, 0),
            (1, 0, 0, 5),
            (0, 1, 0, 5),
            (0, 0, 1, 6),
            (0, 0, 0, m),
        ]
    )


def family_with_case_iii(m: int) -> SupportSet:
    return support(
        [
            (2, 0, 0, 0),
            (0, 5, 0, 0),
            (0, 0, 6, 0),
            (0, 1, 0, 6),
            (0, 0, 2, 5),
            (0, 0, 0, 8),
            (0, 0, 0, m),
        ]
    )


FAMILY_FIXTURES = (
    # (support builder, dropped vertex, m values, expected case,
    #  expected witness, frozen nu for both family members)
    (family_with_case_i, (0, 2, 1, 1), range(8, 13), "i", (1, 0, 0, 5), 104),
    (family_with_case_ii, (0, 0, 1, 6), range(8, 13), "ii", (0, 1, 0, 5), 104),
    (family_with_case_iii, (0, 0, 0, 8), range(9, 13), "iii", (0, 1, 0, 6), 130),
)


def brieskorn_support(p: int, q: int) -> SupportSet:
    return support([(p, 0), (0, q)])


def rational(x) -> Fraction:
    return Fraction(x)
