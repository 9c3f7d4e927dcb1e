"""Tests for exact root counting, the numerical root finder, sign data,
and the coefficient-space region classifier."""

import math
import random
from fractions import Fraction

import pytest

from szego import (
    BOUNDARY_OR_UNCERTAIN,
    INSIDE,
    OUTSIDE,
    Poly,
    aberth_roots,
    cluster_roots,
    hurwitz_determinants,
    is_hyperbolic,
    kernel_backend,
    region_membership,
    sign_changes,
    square_free_decomposition,
    sturm_count,
    taylor_window_bound,
)


def _rand_poly(rng, deg, bound=6):
    coeffs = [Fraction(rng.randint(-bound, bound), rng.randint(1, 4)) for _ in range(deg)]
    coeffs.append(Fraction(rng.randint(1, bound)))
    return Poly(coeffs)


def test_backend_reports_a_known_name():
    assert kernel_backend() in ("compiled", "python")


def test_sturm_count_worked():
    p = Poly.from_roots([1, 2, 3])
    assert sturm_count(p) == 3
    assert sturm_count(p, Fraction(0), Fraction(1)) == 1  # root at 1 included
    assert sturm_count(p, Fraction(1), Fraction(2)) == 1  # root at 1 excluded
    assert sturm_count(p, Fraction(1), Fraction(3)) == 2
    assert sturm_count(p, Fraction(4), None) == 0
    assert sturm_count(Poly([1, 0, 1])) == 0


def test_sturm_half_open_endpoint_convention():
    x = Poly.x()
    assert sturm_count(x, Fraction(-1), Fraction(0)) == 1
    assert sturm_count(x, Fraction(0), Fraction(1)) == 0
    p = Poly.from_roots([0, 1])
    assert sturm_count(p, Fraction(0), Fraction(1)) == 1
    assert sturm_count(p, Fraction(-1), Fraction(0)) == 1
    assert sturm_count(p, None, Fraction(0)) == 1
    assert sturm_count(p, Fraction(0), None) == 1


def test_sturm_count_with_multiplicity():
    p = Poly.from_roots([1, 1, -2])
    assert sturm_count(p) == 2
    assert sturm_count(p, multiplicity=True) == 3
    q = Poly.from_roots([Fraction(1, 2)] * 4)
    assert sturm_count(q, Fraction(0), None) == 1
    assert sturm_count(q, Fraction(0), None, multiplicity=True) == 4


def test_sturm_count_validation():
    with pytest.raises(ValueError):
        sturm_count(Poly.zero())
    with pytest.raises(ValueError):
        sturm_count(Poly([0.5, 1]))
    with pytest.raises(ValueError):
        sturm_count(Poly.x(), Fraction(1), Fraction(1))
    assert sturm_count(Poly([7])) == 0


def test_sturm_count_random_against_planted_roots():
    rng = random.Random(31)
    for _ in range(40):
        roots = sorted(Fraction(rng.randint(-20, 20), rng.randint(1, 6)) for _ in range(rng.randint(1, 5)))
        p = Poly.from_roots(roots)
        lo = Fraction(rng.randint(-8, 0))
        hi = lo + Fraction(rng.randint(1, 10))
        expected = len({r for r in roots if lo < r <= hi})
        assert sturm_count(p, lo, hi) == expected, roots


def test_square_free_decomposition():
    p = Poly.from_roots([1, 1, -2])
    assert square_free_decomposition(p) == [(Poly([2, 1]), 1), (Poly([-1, 1]), 2)]
    assert square_free_decomposition(Poly.from_roots([3])) == [(Poly([-3, 1]), 1)]
    assert square_free_decomposition(Poly([5])) == []
    # scaling does not matter
    assert square_free_decomposition(p * 7) == square_free_decomposition(p)


def test_is_hyperbolic():
    h = is_hyperbolic(Poly.from_roots([1, 2]))
    assert h.hyperbolic and h.distinct
    h = is_hyperbolic(Poly.from_roots([1, 1]))
    assert h.hyperbolic and not h.distinct
    h = is_hyperbolic(Poly([1, 0, 1]))
    assert not h.hyperbolic
    assert not bool(h)
    assert is_hyperbolic(Poly([4])).hyperbolic


def _match(roots, expected, tol):
    # order by nearest match; the finder's sort key is unstable for
    # conjugate pairs whose real parts differ only by rounding
    left = list(roots)
    for e in expected:
        best = min(left, key=lambda z: abs(z - e))
        assert abs(best - e) < tol, (e, best)
        left.remove(best)
    assert not left


def test_aberth_simple_quadratic():
    roots = aberth_roots(Poly([1, 0, 1]), tol=1e-12)
    _match(roots, [1j, -1j], 1e-10)


def test_aberth_boundary_cubic():
    # x^3 - 2x^2 + x/3 - 2/3 = (x - 2)(x^2 + 1/3)
    p = Poly([Fraction(-2, 3), Fraction(1, 3), -2, 1])
    _match(aberth_roots(p), [-1j / math.sqrt(3), 1j / math.sqrt(3), 2 + 0j], 1e-8)


def test_aberth_double_root_clusters():
    roots = aberth_roots(Poly([36, 12, 1]))  # (x + 6)^2
    # a double root is located to about sqrt(tol); cluster accordingly
    clusters = cluster_roots(roots, rel_tol=1e-4)
    assert len(clusters) == 1
    center, mult = clusters[0]
    assert mult == 2
    assert abs(center + 6) < 1e-5


def test_aberth_strips_exact_zero_roots():
    roots = aberth_roots(Poly([0, 0, 2, 1]))  # x^2 (x + 2)
    assert abs(roots[0] + 2) < 1e-10
    assert roots[1] == 0j and roots[2] == 0j  # exact, not approximate


def test_aberth_degree_one_and_validation():
    assert aberth_roots(Poly([2, 3])) == (-2 / 3 + 0j,)
    with pytest.raises(ValueError):
        aberth_roots(Poly([5]))


def test_aberth_vieta_sums():
    rng = random.Random(32)
    for _ in range(25):
        p = _rand_poly(rng, rng.randint(2, 7))
        roots = aberth_roots(p)
        n = p.degree
        s = sum(roots)
        prod = 1 + 0j
        for z in roots:
            prod *= z
        scale = max(1.0, max(abs(z) for z in roots)) ** n
        assert abs(s + complex(p.coeff(n - 1) / p.lead)) < 1e-8 * max(1.0, abs(s))
        assert abs(prod - (-1) ** n * complex(p.coeff(0) / p.lead)) < 1e-8 * scale


def test_cluster_roots_groups_nearby_points():
    pts = [1.0 + 0j, 1.0 + 1e-9j, -3.0 + 0j]
    clusters = cluster_roots(pts)
    assert [m for _, m in clusters] == [1, 2]
    assert cluster_roots([]) == []


def test_sign_changes():
    assert sign_changes([1, -1, -1, 1]) == 2
    assert sign_changes([0, 1, 2, 1]) == 0
    assert sign_changes([1, 0, -1]) == 1  # zeros are skipped
    assert sign_changes([]) == 0
    assert sign_changes([Fraction(1, 2), Fraction(-1, 3)]) == 1


def test_taylor_window_bound_worked():
    assert taylor_window_bound(Poly([-1, 1])) == 3
    assert taylor_window_bound(Poly([1, -2, 1])) == 6
    assert taylor_window_bound(Poly.monomial(5)) == 6
    # normalization first: scaling does not change the window
    assert taylor_window_bound(Poly([-2, 2])) == 3
    with pytest.raises(ValueError):
        taylor_window_bound(Poly.zero())


def test_taylor_window_bound_tail_is_positive():
    from szego import ExpPoly

    rng = random.Random(33)
    for _ in range(30):
        p = _rand_poly(rng, rng.randint(1, 5))
        bound = taylor_window_bound(p)
        f = ExpPoly(p.monic())
        tail = [f.gamma(j) for j in range(bound, bound + 15)]
        assert all(v > 0 for v in tail), (p, bound)


def test_taylor_window_catches_all_sign_changes():
    # e^x (x-1)^2 has Taylor numerators j^2 - 3j + 1
    from szego import ExpPoly

    p = Poly([1, -2, 1])
    bound = taylor_window_bound(p)
    f = ExpPoly(p)
    window = [f.gamma(j) for j in range(bound + 1)]
    assert window == [1, -1, -1, 1, 5, 11, 19]
    assert sign_changes(window) == 2


def test_hurwitz_determinants_worked():
    # (x+1)(x+2)(x+3): minors 6, 60, 360, all positive (stable)
    p = Poly([6, 11, 6, 1])
    assert hurwitz_determinants(p) == [6, 60, 360]
    with pytest.raises(ValueError):
        hurwitz_determinants(Poly([1, -1]))  # negative leading coefficient
    with pytest.raises(ValueError):
        hurwitz_determinants(Poly.zero())


def test_region_membership_strict_interior():
    # (x-1)(x-2)(x-3): all roots strictly right, alternating signs
    v = region_membership([Fraction(-6), Fraction(11), Fraction(-6)])
    assert v.in_sign_cone and v.hyperbolic
    assert v.right_halfplane == INSIDE
    assert v.witness_roots is None  # decided by exact minors


def test_region_membership_strict_exterior():
    # (x-2)(x+1): one root on each side
    v = region_membership([Fraction(-1), Fraction(-2)])
    assert v.right_halfplane == OUTSIDE
    assert not v.in_sign_cone


def test_region_membership_boundary():
    # (x - 2)(x^2 + 1/3): an imaginary-axis pair
    v = region_membership([Fraction(-2), Fraction(1, 3), Fraction(-2, 3)])
    assert v.right_halfplane == BOUNDARY_OR_UNCERTAIN
    assert v.witness_roots is not None
    assert not v.hyperbolic


def test_region_membership_near_boundary_family():
    # x^3 - 2x^2 + b x + (b - 1): verdict flips as b crosses 1/3
    def vec(b):
        return [Fraction(-2), b, b - 1]

    assert region_membership(vec(Fraction(2, 5))).right_halfplane == INSIDE
    assert region_membership(vec(Fraction(3, 10))).right_halfplane == OUTSIDE


def test_region_membership_outside_with_zero_minor():
    # (x+1)(x^2+1): a left root plus an imaginary pair forces refinement
    v = region_membership([Fraction(1), Fraction(1), Fraction(1)])
    assert v.right_halfplane == OUTSIDE
    assert v.witness_roots is not None


def test_region_containments_random():
    # hyperbolic + sign cone implies the closed half-plane region, which
    # in turn implies the sign cone
    rng = random.Random(34)
    checked = 0
    for _ in range(200):
        n = rng.randint(1, 4)
        c = [Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(n)]
        v = region_membership(c)
        if v.hyperbolic and v.in_sign_cone:
            assert v.right_halfplane in (INSIDE, BOUNDARY_OR_UNCERTAIN)
            checked += 1
        if v.right_halfplane == INSIDE:
            assert v.in_sign_cone
    assert checked > 0
