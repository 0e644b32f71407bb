"""Acceptance gate: ten end-to-end criteria, all at zero tolerance.

Each test prints one PASS/FAIL line (run with ``pytest -s`` to see them
on success; they always appear on failure).  Region collectors are
memoized so the vanishing criterion can sweep exactly the regions the
earlier criteria generated.
"""

import math
import random
from contextlib import contextmanager
from fractions import Fraction
from functools import cache

from conftest import (
    FAMILY_FIXTURES,
    brieskorn_support,
    fan_union,
    forced_minimal_simplex,
    random_convenient_support,
    random_nested_pair,
    random_offorigin_simplex,
)
from newton_mu.bounds import milnor_lower_bound, stabilized_region
from newton_mu.coefficients import elementary_symmetric, f_coeff
from newton_mu.family import FamilyStep, family_difference, negligible_truncation_check
from newton_mu.higher import DegreeTuple, axis_simplex_r_newton, r_newton_factored, r_newton_number
from newton_mu.newton import newton_number, newton_number_factored
from newton_mu.oracles import (
    Polynomial,
    ehrhart_volume,
    milnor_colength,
    shuffled_newton_number,
)
from newton_mu.polyhedra import (
    axis_simplex_region,
    gamma_minus,
    is_quasi_convenient,
    region_from_simplices,
    standard_modification,
    support,
)

INTERCEPTS = (
    Fraction(1),
    Fraction(2),
    Fraction(3),
    Fraction(4),
    Fraction(5),
    Fraction(5, 2),
)


@contextmanager
def criterion(num, label):
    try:
        yield
    except BaseException:
        print(f"CRITERION {num:2d}: FAIL - {label}")
        raise
    else:
        print(f"CRITERION {num:2d}: PASS - {label}")


def nu(region):
    return newton_number(region).total


# ---------------------------------------------------------------------------
# memoized region collectors (shared between their criterion and criterion 8)


@cache
def axis_law_regions():
    out = []
    for n in (1, 2, 3, 4):
        for a in INTERCEPTS:
            out.append((n, a, axis_simplex_region((a,) * n)))
    return tuple(out)


@cache
def brieskorn_cases():
    out = []
    for p in range(2, 8):
        for q in range(2, 8):
            s = brieskorn_support(p, q)
            out.append((p, q, s, gamma_minus(s)))
    return tuple(out)


@cache
def family_cases():
    out = []
    for builder, apex, ms, case, witness, frozen_nu in FAMILY_FIXTURES:
        for m in ms:
            step = FamilyStep(builder(m), apex)
            out.append((step, m, case, witness, frozen_nu))
    return tuple(out)


@cache
def factorization_regions():
    rng = random.Random(20260814)
    out = []
    for _ in range(200):
        n = rng.choice([1, 2, 3, 4, 5])
        out.append(random_offorigin_simplex(rng, n))
    return tuple(out)


@cache
def admissible_unions():
    rng = random.Random(99)
    out = []
    for _ in range(100):
        n = rng.choice([4, 5])
        r = rng.choice([2, 3])
        if rng.random() < 0.6:
            size = rng.randint(1, n - 1)
            region = forced_minimal_simplex(rng, n, size)
        else:
            region = fan_union(rng, n, n - 2)
        d = tuple(rng.randint(1, 3) for _ in range(r))
        out.append((region, r, d))
    return tuple(out)


@cache
def reduction_regions():
    rng = random.Random(606)
    out = []
    for _ in range(100):
        n = rng.choice([1, 2, 3, 4])
        s = random_convenient_support(rng, n)
        out.append(gamma_minus(s))
    return tuple(out)


@cache
def nested_region_pairs():
    rng = random.Random(707)
    out = []
    for _ in range(100):
        n = rng.choice([1, 2, 3, 4])
        outer_s, inner_s = random_nested_pair(rng, n)
        degrees = []
        for r in range(1, n + 1):
            degrees.append(tuple(rng.randint(1, 3) for _ in range(r)))
        out.append((gamma_minus(outer_s), gamma_minus(inner_s), tuple(degrees)))
    return tuple(out)


# ---------------------------------------------------------------------------
# criteria


def test_criterion_01_axis_simplex_law():
    with criterion(1, "nu of the axis simplex is (a-1)^n"):
        for n, a, region in axis_law_regions():
            assert nu(region) == (a - 1) ** n, (n, a)


def test_criterion_02_plane_curve_equality_chain():
    with criterion(2, "two-variable pure powers: nu, colength, and certificate agree"):
        for p, q, s, region in brieskorn_cases():
            expected = (p - 1) * (q - 1)
            assert nu(region) == expected, (p, q)
            mu = milnor_colength(
                Polynomial(2, {(p, 0): Fraction(1), (0, q): Fraction(1)})
            )
            assert mu == expected, (p, q)
            cert = milnor_lower_bound(s, (p, q), oracle_mu=mu)
            assert cert.verdict is True, (p, q)
            assert cert.bound == cert.nu_value == expected, (p, q)


# frozen vertex sets of the freed simplex, one per vanishing pattern; the
# fifth vertex is always the deepest pure power (0, 0, 0, m)
DELTA_BASES = {
    "i": {(0, 3, 0, 0), (0, 0, 5, 0), (1, 0, 0, 5), (0, 2, 1, 1)},
    "ii": {(0, 0, 5, 0), (1, 0, 0, 5), (0, 1, 0, 5), (0, 0, 1, 6)},
    "iii": {(2, 0, 0, 0), (0, 1, 0, 6), (0, 0, 2, 5), (0, 0, 0, 8)},
}


def test_criterion_03_deformation_fixtures():
    with criterion(3, "four-variable deformation fixtures keep nu across the step"):
        for step, m, case, witness, frozen_nu in family_cases():
            delta = family_difference(step)
            expected = DELTA_BASES[case] | {(0, 0, 0, m)}
            assert {tuple(v) for v in delta.vertices} == expected, (case, m)
            assert nu(region_from_simplices([delta])) == 0, (case, m)
            verdict = negligible_truncation_check(step)
            assert verdict.case == case, (case, m)
            assert verdict.witness == witness, (case, m)
            assert verdict.nu_f0 == verdict.nu_f1 == frozen_nu, (case, m)
            assert verdict.equal is True, (case, m)


def test_criterion_04_factorization_agreement():
    with criterion(4, "factored nu equals direct nu on 200 random simplices"):
        failures = []
        for region in factorization_regions():
            direct = nu(region)
            factored = newton_number_factored(region).total
            if direct != factored:
                failures.append((region.simplices[0].vertices, direct, factored))
        for entry in failures:
            print("factorization mismatch:", entry)
        assert not failures
        assert len(factorization_regions()) == 200


def test_criterion_05_order_r_branches():
    with criterion(5, "every order-r factorization branch equals the restricted sum"):
        mismatches = []
        seen_branches = {}
        for region, r, d in admissible_unions():
            dt = DegreeTuple(r, d)
            try:
                fac = r_newton_factored(region, dt)
            except Exception as exc:  # a branch/direct gap raises
                mismatches.append((region.simplices[0].vertices, r, d, str(exc)))
                continue
            direct = r_newton_number(region, dt).total
            if fac.total != direct or fac.route != "factored":
                mismatches.append(
                    (region.simplices[0].vertices, r, d, fac.total, direct, fac.route)
                )
                continue
            seen_branches[fac.branch] = seen_branches.get(fac.branch, 0) + 1
        for entry in mismatches:
            print("order-r mismatch:", entry)
        assert not mismatches
        assert len(seen_branches) == 4, seen_branches
        assert sum(seen_branches.values()) == 100


def test_criterion_06_first_order_reduction():
    with criterion(6, "order-1 degree-1 value equals nu on 100 supports"):
        for region in reduction_regions():
            assert (
                r_newton_number(region, DegreeTuple(1, (1,))).total == nu(region)
            )


def test_criterion_07_monotonicity_nonnegativity():
    with criterion(7, "nested regions: nu and every order-r value are monotone and nonnegative"):
        for outer, inner, degrees in nested_region_pairs():
            assert nu(outer) >= nu(inner) >= 0
            for d in degrees:
                dt = DegreeTuple(len(d), d)
                vo = r_newton_number(outer, dt).total
                vi = r_newton_number(inner, dt).total
                assert vo >= vi >= 0, (outer.n, d)


def test_criterion_08_vanishing_forces_unit_vertex():
    with criterion(8, "nu = 0 on an origin-containing region forces a unit vertex"):
        regions = []
        regions.extend(region for _, _, region in axis_law_regions())
        regions.extend(region for _, _, _, region in brieskorn_cases())
        for step, _, _, _, _ in family_cases():
            regions.append(gamma_minus(step.f0))
            regions.append(gamma_minus(step.f1))
        regions.extend(factorization_regions())
        regions.extend(region for region, _, _ in admissible_unions())
        regions.extend(reduction_regions())
        for outer, inner, _ in nested_region_pairs():
            regions.append(outer)
            regions.append(inner)

        checked = zeros = 0
        for region in regions:
            # the vanishing statement assumes the region is a disk through
            # the origin in every coordinate subspace; skip regions that
            # do not qualify (for example the off-origin simplices above)
            ok, _ = is_quasi_convenient(region)
            if not ok:
                continue
            checked += 1
            if nu(region) == 0:
                zeros += 1
                units = {
                    tuple(1 if i == j else 0 for i in range(region.n))
                    for j in range(region.n)
                }
                assert units & set(region.vertex_set), region.simplices
        assert checked >= 300
        assert zeros >= 1


def test_criterion_09_oracle_cross_checks():
    with criterion(9, "lattice counting, reshuffling, and colength agree with nu"):
        # volumes by dilation counting on 50 random integer regions
        rng = random.Random(909)
        for _ in range(50):
            n = rng.choice([1, 2, 3])
            region = gamma_minus(random_convenient_support(rng, n, max_exp=4))
            top = region.subset_volumes()[frozenset(range(n))]
            assert ehrhart_volume(region) * math.factorial(n) == top

        # triangulation-order invariance on every named fixture
        fixtures = [s for _, _, s, _ in brieskorn_cases()]
        for builder, apex, ms, _, _, _ in FAMILY_FIXTURES:
            step = FamilyStep(builder(min(ms)), apex)
            fixtures.append(step.f1)
            fixtures.append(step.f0)
        fixtures.append(support([(3, 0), (1, 1), (0, 2)]))
        mixed = support([(2, 1), (0, 4)])
        fixtures.append(standard_modification(mixed, 5))
        for s in fixtures:
            canonical = nu(gamma_minus(s))
            for seed in range(1, 21):
                assert shuffled_newton_number(s, seed) == canonical, s

        # colength equality through stabilization
        mu = milnor_colength(Polynomial(2, {(2, 1): Fraction(1), (0, 4): Fraction(1)}))
        assert mu == 5
        _, stabilized_nu, m = stabilized_region(mixed)
        assert m is not None and stabilized_nu == 5
        cert = milnor_lower_bound(mixed, (Fraction(8, 3), 4), oracle_mu=mu)
        assert cert.verdict is True
        assert cert.nu_value == cert.bound == 5  # the bound is attained


def test_criterion_10_axis_closed_form():
    with criterion(10, "order-r value of the axis simplex matches the closed form"):
        rng = random.Random(1010)
        for n in range(1, 5):
            vectors = [(a,) * n for a in INTERCEPTS]
            for _ in range(8):
                vectors.append(
                    tuple(rng.choice(INTERCEPTS) for _ in range(n))
                )
            for a in vectors:
                region = axis_simplex_region(a)
                for r in range(1, n + 1):
                    if 3**r <= 27:
                        dss = [
                            tuple(ds)
                            for ds in _all_degree_tuples(r)
                        ]
                    else:
                        dss = [
                            tuple(rng.randint(1, 3) for _ in range(r))
                            for _ in range(27)
                        ]
                    for d in dss:
                        dt = DegreeTuple(r, d)
                        direct = r_newton_number(region, dt).total
                        closed = sum(
                            (
                                (-1) ** (n - s)
                                * f_coeff(s, r, d)
                                * elementary_symmetric(s, a)
                            )
                            for s in range(r, n + 1)
                        ) + (-1) ** (n - r + 1)
                        assert direct == closed == axis_simplex_r_newton(dt, a), (
                            n,
                            a,
                            r,
                            d,
                        )
        # with unit degrees the weights collapse to binomial coefficients
        for r in range(1, 5):
            for s in range(r, 7):
                assert f_coeff(s, r, (1,) * r) == math.comb(s - 1, r - 1)


def _all_degree_tuples(r):
    import itertools

    return itertools.product((1, 2, 3), repeat=r)
