"""Seeded verification suites for the composition laws and their
consequences: sign-cone invariance, root localization, Taylor-sign
counting, iterated-transform asymptotics, half-plane non-invariance,
and the perturbation experiments.

Every check returns a CheckReport.  Failures carry exact inputs (as
rational strings) so a reported counterexample can be replayed; a
numerical-tolerance artifact is then distinguishable from a genuine
one.  Per-trial random streams are derived as seed:check:trial, so
reports are reproducible and independent of execution order.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
import platform
import random
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .decompose import (
    MONIC,
    NORMALIZED,
    decompose_exp,
    decompose_poly,
    decomposition_map,
    localization_intervals,
)
from .exact import binomial, format_rational
from .poly import ExpPoly, Poly, falling_factorial_transform
from .roots import (
    INSIDE,
    OUTSIDE,
    aberth_roots,
    cluster_roots,
    is_hyperbolic,
    kernel_backend,
    region_membership,
    sign_changes,
    sturm_count,
    taylor_window_bound,
)
from .ssc import (
    SscContext,
    compose,
    composition_factor,
    derivative_identities_hold,
    exp_compose,
)

__all__ = [
    "CheckReport",
    "check_cone_finite",
    "check_cone_exp",
    "check_interval_localization",
    "check_taylor_sign_rule",
    "check_integer_intervals",
    "check_transform_positivity",
    "check_alternation_iteration",
    "check_eventual_hyperbolicity",
    "check_halfplane_not_invariant",
    "check_sign_experiments",
    "check_hyperbolization",
    "check_derivative_identities",
    "check_root_multiplicity",
    "available_checks",
    "run_suite",
    "reports_payload",
    "payload_csv_rows",
    "write_reports_json",
    "write_reports_csv",
]


@dataclass
class CheckReport:
    check_id: str
    trials: int
    failures: list
    seed: int
    elapsed: float
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_payload(self) -> dict:
        # elapsed stays out of the payload so serialization is
        # byte-stable for a fixed seed; timings live in report metadata
        return {
            "check_id": self.check_id,
            "trials": self.trials,
            "passed": self.passed,
            "failures": self.failures,
            "notes": self.notes,
            "seed": self.seed,
        }


def _rng(seed: int, salt: str) -> random.Random:
    # string seeds are hashed with sha512, stable across platforms
    return random.Random(f"{seed}:{salt}")


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


def _fmt(values) -> list[str]:
    return [format_rational(Fraction(v)) for v in values]


def _rand_fraction(rng: random.Random, bound: int = 10, max_den: int = 8) -> Fraction:
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(-bound * den, bound * den), den)


def _rand_nonneg(rng: random.Random, bound: int = 10, max_den: int = 8) -> Fraction:
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(0, bound * den), den)


def _rand_positive(rng: random.Random, bound: int = 10, max_den: int = 8) -> Fraction:
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(1, bound * den), den)


def _rand_nonzero(rng: random.Random, bound: int = 6, max_den: int = 8) -> Fraction:
    v = Fraction(0)
    while v == 0:
        v = _rand_fraction(rng, bound, max_den)
    return v


def _rand_poly(rng: random.Random, deg: int, bound: int = 6) -> Poly:
    coeffs = [_rand_fraction(rng, bound) for _ in range(deg)]
    return Poly(coeffs + [_rand_nonzero(rng, bound)])


def _rand_monic(rng: random.Random, deg: int, bound: int = 6) -> Poly:
    return Poly([_rand_fraction(rng, bound) for _ in range(deg)] + [Fraction(1)])


def _cone_point(rng: random.Random, n: int, bound: int = 10) -> tuple[Fraction, ...]:
    # coordinates (-1)^i u_i with u_i >= 0: the alternating-sign cone
    return tuple((-1) ** i * _rand_nonneg(rng, bound) for i in range(1, n + 1))


def _max_matching(edges: list[list[int]], n_right: int) -> int:
    """Maximum bipartite matching size (Kuhn augmenting paths)."""
    match_right = [-1] * n_right

    def augment(i: int, seen: list[bool]) -> bool:
        for j in edges[i]:
            if not seen[j]:
                seen[j] = True
                if match_right[j] == -1 or augment(match_right[j], seen):
                    match_right[j] = i
                    return True
        return False

    size = 0
    for i in range(len(edges)):
        if augment(i, [False] * n_right):
            size += 1
    return size


# -- sign-cone invariance -----------------------------------------------------


def check_cone_finite(n: int, k: int, trials: int = 500, seed: int = 42) -> CheckReport:
    """The factor-offset image of a cone point stays in the cone, with
    equality on the boundary exactly when the constant term vanishes."""
    t0 = time.perf_counter()
    check_id = f"cone_finite[n={n},k={k}]"
    failures: list = []
    for t in range(trials):
        rng = _rng(seed, f"{check_id}:{t}")
        c = list(_cone_point(rng, n))
        kind = t % 3
        if kind == 1:
            c[n - 1] = Fraction(0)  # constant-term hyperplane
        elif kind == 2 and n >= 2:
            c[rng.randrange(n - 1)] = Fraction(0)  # cone face, constant free
        sigma = decompose_poly(c, n, k, want_roots=False).sigma
        in_cone = all((-1) ** j * sigma[j - 1] >= 0 for j in range(1, n + 1))
        const_ok = sigma[-1] == c[-1]
        strict_ok = c[-1] == 0 or all(
            (-1) ** j * sigma[j - 1] > 0 for j in range(1, n + 1)
        )
        if not (in_cone and const_ok and strict_ok):
            failures.append(
                {
                    "trial": t,
                    "c": _fmt(c),
                    "sigma": _fmt(sigma),
                    "in_cone": in_cone,
                    "constant_preserved": const_ok,
                    "strictly_interior_when_constant_nonzero": strict_ok,
                }
            )
    return CheckReport(check_id, trials, failures, seed, time.perf_counter() - t0)


def check_cone_exp(m: int, trials: int = 500, seed: int = 42) -> CheckReport:
    """Exp-mode analog of check_cone_finite, monic convention."""
    t0 = time.perf_counter()
    check_id = f"cone_exp[m={m}]"
    failures: list = []
    for t in range(trials):
        rng = _rng(seed, f"{check_id}:{t}")
        c = list(_cone_point(rng, m))
        kind = t % 3
        if kind == 1:
            c[m - 1] = Fraction(0)
        elif kind == 2 and m >= 2:
            c[rng.randrange(m - 1)] = Fraction(0)
        sigma = decompose_exp(c, MONIC, want_roots=False).sigma
        in_cone = all((-1) ** j * sigma[j - 1] >= 0 for j in range(1, m + 1))
        const_ok = sigma[-1] == c[-1]
        strict_ok = c[-1] == 0 or all(
            (-1) ** j * sigma[j - 1] > 0 for j in range(1, m + 1)
        )
        if not (in_cone and const_ok and strict_ok):
            failures.append(
                {
                    "trial": t,
                    "c": _fmt(c),
                    "sigma": _fmt(sigma),
                    "in_cone": in_cone,
                    "constant_preserved": const_ok,
                    "strictly_interior_when_constant_nonzero": strict_ok,
                }
            )
    return CheckReport(check_id, trials, failures, seed, time.perf_counter() - t0)


# -- root localization --------------------------------------------------------


def check_interval_localization(
    n: int,
    k: int,
    trials: int = 500,
    seed: int = 42,
    tol: float = 1e-8,
    nu_min: int = 0,
) -> CheckReport:
    """Planting nu positive roots forces at least nu factor offsets to be
    negative and to occupy pairwise distinct localization windows."""
    t0 = time.perf_counter()
    check_id = f"interval_localization[n={n},k={k}]"
    intervals = localization_intervals(n, k)
    last = len(intervals) - 1  # the unbounded-below window
    failures: list = []
    notes: list = []
    for t in range(trials):
        rng = _rng(seed, f"{check_id}:{t}")
        nu = rng.randint(nu_min, n)
        pos: list[Fraction] = []
        while len(pos) < nu:
            r = _rand_positive(rng, 6)
            if r not in pos:
                pos.append(r)
        core = Poly.from_roots(pos) if pos else Poly.one()
        rest = n - nu
        while rest > 0:
            if rest >= 2 and rng.random() < 0.5:
                # x^2 + p x + q with p, q >= 0 has no positive root
                core = core * Poly([_rand_nonneg(rng, 6), _rand_nonneg(rng, 6), Fraction(1)])
                rest -= 2
            else:
                core = core * Poly([_rand_nonneg(rng, 6), Fraction(1)])
                rest -= 1
        audited = sturm_count(core, Fraction(0), None)
        if audited != nu:
            failures.append(
                {
                    "trial": t,
                    "stage": "construction audit",
                    "core": _fmt(core.coeffs),
                    "expected_positive_roots": nu,
                    "observed": audited,
                }
            )
            continue
        c = tuple(reversed(core.coeffs[:-1]))
        roots = decompose_poly(c, n, k, want_roots=True).roots
        scale = max(1.0, max(abs(z) for z in roots))
        neg = [z.real for z in roots if abs(z.imag) <= tol * scale and z.real < 0]
        edges = []
        for a in neg:
            edges.append(
                [
                    s
                    for s, (lo, hi) in enumerate(intervals)
                    if (lo is None or a >= float(lo) - tol) and a <= float(hi) + tol
                ]
            )
        matched = _max_matching(edges, len(intervals))
        if matched < nu:
            failures.append(
                {
                    "trial": t,
                    "core": _fmt(core.coeffs),
                    "planted_positive_roots": _fmt(pos),
                    "offsets": [[z.real, z.imag] for z in roots],
                    "expected_distinct_windows": nu,
                    "matched": matched,
                }
            )
        elif nu > 0:
            bounded_only = [[s for s in row if s != last] for row in edges]
            if _max_matching(bounded_only, len(intervals)) < nu:
                notes.append({"trial": t, "note": "unbounded window required"})
    return CheckReport(
        check_id, trials, failures, seed, time.perf_counter() - t0, notes
    )


def _planted_hyperbolic(rng: random.Random, m: int, bound: int = 2) -> Poly:
    """Monic product of linear factors, repeats allowed, roots nonzero."""
    roots: list[Fraction] = []
    for _ in range(m):
        if roots and rng.random() < 0.25:
            roots.append(rng.choice(roots))
        else:
            r = _rand_positive(rng, bound, 4)
            roots.append(r if rng.random() < 0.6 else -r)
    return Poly.from_roots(roots)


def check_taylor_sign_rule(m: int, trials: int = 500, seed: int = 42) -> CheckReport:
    """Taylor numerators of e^x * P show at least as many sign changes as
    P has positive roots (with multiplicity); the window bound is final."""
    t0 = time.perf_counter()
    check_id = f"taylor_sign_rule[m={m}]"
    failures: list = []
    for t in range(trials):
        rng = _rng(seed, f"{check_id}:{t}")
        if t % 2 == 0:
            p = _rand_monic(rng, m)
        else:
            p = _planted_hyperbolic(rng, m)
        kpos = sturm_count(p, Fraction(0), None, multiplicity=True)
        bound = taylor_window_bound(p)
        f = ExpPoly(p)
        gam = [f.gamma(j) for j in range(bound + 11)]
        observed = sign_changes(gam[: bound + 1])
        tail_positive = gam[bound] > 0
        window_stable = sign_changes(gam) == observed
        if not (observed >= kpos and tail_positive and window_stable):
            failures.append(
                {
                    "trial": t,
                    "p": _fmt(p.coeffs),
                    "positive_roots": kpos,
                    "sign_changes": observed,
                    "window": bound,
                    "tail_positive": tail_positive,
                    "window_stable": window_stable,
                }
            )
    return CheckReport(check_id, trials, failures, seed, time.perf_counter() - t0)


def check_integer_intervals(
    m: int, trials: int = 500, seed: int = 42, tol: float = 1e-8
) -> CheckReport:
    """Sign changes of the Taylor numerators force that many factor
    offsets into pairwise distinct unit windows [-l-1, -l]."""
    t0 = time.perf_counter()
    check_id = f"integer_intervals[m={m}]"
    failures: list = []
    notes: list = []
    for t in range(trials):
        rng = _rng(seed, f"{check_id}:{t}")
        if t % 2 == 0:
            p = _rand_monic(rng, m)
            while p.constant == 0:
                p = _rand_monic(rng, m)
        else:
            p = _planted_hyperbolic(rng, m)
        bound = taylor_window_bound(p)
        f = ExpPoly(p)
        kchanges = sign_changes([f.gamma(j) for j in range(bound + 1)])
        c = tuple(reversed(p.coeffs[:-1]))
        roots = decompose_exp(c, MONIC, want_roots=True).roots
        scale = max(1.0, max(abs(z) for z in roots)) if roots else 1.0
        neg = [z.real for z in roots if abs(z.imag) <= tol * scale and z.real < 0]
        nmax = max((int(math.ceil(-a)) for a in neg), default=0)
        edges = [
            [l for l in range(nmax + 1) if -l - 1 - tol <= a <= -l + tol]
            for a in neg
        ]
        matched = _max_matching(edges, nmax + 1)
        if matched < kchanges:
            failures.append(
                {
                    "trial": t,
                    "p": _fmt(p.coeffs),
                    "sign_changes": kchanges,
                    "offsets": [[z.real, z.imag] for z in roots],
                    "matched": matched,
                }
            )
        else:
            for center, count in cluster_roots([complex(a, 0.0) for a in neg]):
                if count > 1:
                    notes.append(
                        {
                            "trial": t,
                            "note": "repeated offset at a window endpoint",
                            "value": center.real,
                            "count": count,
                        }
                    )
    return CheckReport(
        check_id, trials, failures, seed, time.perf_counter() - t0, notes
    )


# -- falling-factorial transform ----------------------------------------------


def check_transform_positivity(
    trials: int = 500, seed: int = 42, degree_max: int = 5
) -> CheckReport:
    """All-positive-roots input (repeats allowed) transforms to a
    polynomial with all roots real, positive, and distinct."""
    t0 = time.perf_counter()
    check_id = "transform_positivity"
    failures: list = []
    for t in range(trials):
        rng = _rng(seed, f"{check_id}:{t}")
        deg = rng.randint(1, degree_max)
        roots: list[Fraction] = []
        for _ in range(deg):
            if roots and rng.random() < 0.3:
                roots.append(rng.choice(roots))
            else:
                roots.append(_rand_positive(rng, 6))
        p = Poly.from_roots(roots)
        q = falling_factorial_transform(p)
        hyp = is_hyperbolic(q)
        positive = sturm_count(q, Fraction(0), None) == q.degree
        if not (hyp.hyperbolic and hyp.distinct and positive):
            failures.append(
                {
                    "trial": t,
                    "roots": _fmt(roots),
                    "image": _fmt(q.coeffs),
                    "hyperbolic": hyp.hyperbolic,
                    "distinct": hyp.distinct,
                    "all_positive": positive,
                }
            )
    return CheckReport(check_id, trials, failures, seed, time.perf_counter() - t0)


def check_alternation_iteration(p: Poly, max_nu: int = 10000) -> CheckReport:
    """Under iteration of the transform the signs of the coefficients of
    x^n..x^1 eventually alternate and keep alternating, while the ratio
    of consecutive coefficient magnitudes grows without bound.

    Records the onset nu0 of the first 21-step alternating run; inside
    the run it asserts the exact linear decrement of the subleading
    coefficient, the exact invariance of the constant term, and strict
    growth of every magnitude ratio over the last 10 steps.
    """
    t0 = time.perf_counter()
    check_id = "alternation_iteration"
    if not p.is_exact or p.degree < 2:
        raise ValueError("need an exact polynomial of degree >= 2")
    n = p.degree
    lead = p.lead
    const = p.constant
    sub0 = p.coeff(n - 1)
    step = lead * binomial(n, 2)  # exact per-iteration drop of c_1

    failures: list = []
    notes: list = []
    history: list[list[Fraction]] = []
    run_start: Optional[int] = None
    nu0: Optional[int] = None
    q = p
    for nu in range(max_nu + 1):
        cs = [q.coeff(n - s) for s in range(n + 1)]  # c_0 .. c_n
        if cs[n] != const:
            failures.append(
                {
                    "p": _fmt(p.coeffs),
                    "nu": nu,
                    "stage": "constant term drifted",
                    "observed": format_rational(cs[n]),
                    "expected": format_rational(const),
                }
            )
            break
        if cs[1] != sub0 - nu * step:
            failures.append(
                {
                    "p": _fmt(p.coeffs),
                    "nu": nu,
                    "stage": "subleading decrement law",
                    "observed": format_rational(cs[1]),
                    "expected": format_rational(sub0 - nu * step),
                }
            )
            break
        alternating = all(
            _sgn(a) != 0 and _sgn(a) == -_sgn(b)
            for a, b in zip(cs[: n - 1], cs[1:n])
        ) and _sgn(cs[n - 1]) != 0
        if alternating:
            if run_start is None:
                run_start = nu
            history.append(cs)
            if nu - run_start == 20:
                nu0 = run_start
                break
        else:
            run_start = None
            history = []
        q = falling_factorial_transform(q)
    if nu0 is None:
        if not failures:
            failures.append(
                {
                    "p": _fmt(p.coeffs),
                    "max_nu": max_nu,
                    "expected": "a 21-step alternating sign run",
                    "observed": "none",
                }
            )
    else:
        notes.append({"nu0": nu0})
        for s in range(1, n):
            ratios = [abs(cs[s] / cs[s - 1]) for cs in history]
            window = ratios[-11:]
            if not all(x < y for x, y in zip(window, window[1:])):
                failures.append(
                    {
                        "p": _fmt(p.coeffs),
                        "nu0": nu0,
                        "stage": f"ratio growth at position {s}",
                        "ratios": _fmt(window),
                    }
                )
    return CheckReport(check_id, 1, failures, 0, time.perf_counter() - t0, notes)


def check_eventual_hyperbolicity(p: Poly, max_nu: int = 10000) -> CheckReport:
    """Iterating the transform eventually yields real distinct roots,
    with the count of positive ones dictated by the constant term."""
    t0 = time.perf_counter()
    check_id = "eventual_hyperbolicity"
    if not p.is_exact or p.degree < 1:
        raise ValueError("need an exact polynomial of degree >= 1")
    n = p.degree
    parity = (-1) ** n * p.constant * p.lead  # sign of the root product
    if parity > 0:
        want_pos, want_zero_root = n, False
    elif parity < 0:
        want_pos, want_zero_root = n - 1, False
    else:
        want_pos, want_zero_root = n - 1, True

    failures: list = []
    notes: list = []
    q = p
    found: Optional[int] = None
    for nu in range(max_nu + 1):
        hyp = is_hyperbolic(q)
        if hyp.hyperbolic and hyp.distinct:
            pos = sturm_count(q, Fraction(0), None)
            zero_ok = (q.constant == 0) == want_zero_root
            if pos == want_pos and zero_ok:
                found = nu
                break
        q = falling_factorial_transform(q)
    if found is None:
        failures.append(
            {
                "p": _fmt(p.coeffs),
                "max_nu": max_nu,
                "expected_positive_roots": want_pos,
                "persistent_zero_root": want_zero_root,
                "observed": "no qualifying iterate",
            }
        )
    else:
        notes.append({"nu": found})
    return CheckReport(check_id, 1, failures, 0, time.perf_counter() - t0, notes)


def _merge_cases(
    check_id: str,
    reports: Sequence[CheckReport],
    seed: int,
    t0: float,
) -> CheckReport:
    failures: list = []
    notes: list = []
    for i, rep in enumerate(reports):
        for f in rep.failures:
            failures.append({"case": i, **f})
        for nt in rep.notes:
            notes.append({"case": i, **nt})
    return CheckReport(
        check_id, len(reports), failures, seed, time.perf_counter() - t0, notes
    )


def suite_alternation_iteration(
    trials: int = 20, seed: int = 42, max_nu: int = 10000
) -> CheckReport:
    """Fixed interesting inputs plus random monic polynomials."""
    t0 = time.perf_counter()
    check_id = "alternation_iteration"
    cases = [Poly([1, 3, 1]), Poly([1, 1, 0, 1]), Poly([-2, 0, 1, 1])]
    for t in range(trials):
        rng = _rng(seed, f"{check_id}:case:{t}")
        cases.append(_rand_monic(rng, rng.randint(2, 4), 5))
    reports = [check_alternation_iteration(p, max_nu) for p in cases]
    return _merge_cases(check_id, reports, seed, t0)


def suite_eventual_hyperbolicity(
    trials: int = 20, seed: int = 42, max_nu: int = 10000
) -> CheckReport:
    """Fixed inputs (including a persistent zero root) plus random ones."""
    t0 = time.perf_counter()
    check_id = "eventual_hyperbolicity"
    cases = [Poly([1, -1, 1]), Poly([1, 1, 0, 1]), Poly([0, -2, 0, 1])]
    for t in range(trials):
        rng = _rng(seed, f"{check_id}:case:{t}")
        p = _rand_monic(rng, rng.randint(2, 4), 5)
        if t % 5 == 4:
            p = Poly([Fraction(0)] + list(p.coeffs))  # plant a zero root
        cases.append(p)
    reports = [check_eventual_hyperbolicity(p, max_nu) for p in cases]
    return _merge_cases(check_id, reports, seed, t0)


# -- half-plane non-invariance ------------------------------------------------


def check_halfplane_not_invariant(trials: int = 100, seed: int = 42) -> CheckReport:
    """The exp factor map does not preserve the right-half-plane region:
    near the witness coefficient point both verdicts occur."""
    t0 = time.perf_counter()
    check_id = "halfplane_not_invariant"
    failures: list = []

    # (i) exact image of cubics with one real and one imaginary root pair
    for t in range(trials):
        rng = _rng(seed, f"{check_id}:{t}")
        d = _rand_fraction(rng, 8)
        lam = _rand_fraction(rng, 8)
        c = (-d, lam, -d * lam)
        sigma = decompose_exp(c, MONIC, want_roots=False).sigma
        expected = (-d - 3, lam + d + 2, -d * lam)
        if sigma != expected:
            failures.append(
                {
                    "trial": t,
                    "d": format_rational(d),
                    "lambda": format_rational(lam),
                    "sigma": _fmt(sigma),
                    "expected": _fmt(expected),
                }
            )

    # (ii) the witness lies on the source and image surfaces
    a, b = Fraction(-2), Fraction(1, 3)
    w3 = a * b
    if w3 != Fraction(-2, 3) or w3 != (a + 3) * (b + a + 1):
        failures.append(
            {
                "stage": "witness surfaces",
                "ab": format_rational(a * b),
                "image_surface": format_rational((a + 3) * (b + a + 1)),
            }
        )

    # (iii) scan the image surface through the witness: both verdicts occur
    inside = outside = uncertain = 0
    for i in range(-20, 21):
        bb = b + Fraction(i, 200)
        cvec = (a, bb, (a + 3) * (bb + a + 1))
        verdict = region_membership(cvec).right_halfplane
        if verdict == INSIDE:
            inside += 1
        elif verdict == OUTSIDE:
            outside += 1
        else:
            uncertain += 1
    if not (inside > 0 and outside > 0):
        failures.append(
            {
                "stage": "scan",
                "inside": inside,
                "outside": outside,
                "uncertain": uncertain,
            }
        )
    notes = [{"scan_inside": inside, "scan_outside": outside, "scan_uncertain": uncertain}]
    return CheckReport(
        check_id, trials, failures, seed, time.perf_counter() - t0, notes
    )


# -- perturbation experiments -------------------------------------------------


def check_sign_experiments(
    k_values: Sequence[int] = (1, 2, 3, 4, 5, 6),
    eps: Fraction = Fraction(1, 100),
    seed: int = 42,
) -> CheckReport:
    """Exact self-composition identities and their eps-perturbations.

    Perturbing a conjugate factor pair keeps the composition real (it is
    computed exactly as a rational polynomial) and pushes every root off
    the imaginary axis into the open left half line / half plane.
    """
    t0 = time.perf_counter()
    check_id = "sign_experiments"
    eps = Fraction(eps)
    failures: list = []

    def fail(k, part, **extra):
        failures.append({"k": k, "part": part, **extra})

    for k in k_values:
        nk = k + 2
        ctx = SscContext(nk)
        shell = Poly([1, 1]) ** (k + 1)
        base = Poly([1, 1]) ** k

        # exact identity: factor with a zero root, composed with itself
        a1 = shell * Poly.x()
        want1 = base * Poly.x() * Poly([Fraction(1, nk), 1])
        got1 = compose(a1, a1, ctx)
        if got1 != want1:
            fail(k, "zero-root identity", got=_fmt(got1.coeffs), want=_fmt(want1.coeffs))

        # exact identity: factor with a positive root, composed with itself
        a2 = shell * Poly([-1, 1])
        want2 = base * Poly([1, Fraction(-2 * k, nk), 1])
        got2 = compose(a2, a2, ctx)
        if got2 != want2:
            fail(k, "positive-root identity", got=_fmt(got2.coeffs), want=_fmt(want2.coeffs))

        # conjugate perturbation of the zero-root factor: coefficientwise
        # |u_j + i eps v_j|^2 / C(nk, j), an exact rational polynomial
        pert = Poly(
            [
                (a1.coeff(j) ** 2 + eps**2 * shell.coeff(j) ** 2) / binomial(nk, j)
                for j in range(nk + 1)
            ]
        )
        zplus = shell * Poly([complex(0.0, float(eps)), 1])
        zminus = shell * Poly([complex(0.0, -float(eps)), 1])
        numeric = compose(zplus, zminus, ctx)
        drift = max(
            abs(numeric.coeff(j) - complex(pert.coeff(j))) for j in range(nk + 1)
        )
        if drift > 1e-12 * max(1.0, max(abs(complex(v)) for v in pert.coeffs)):
            fail(k, "perturbed cross-check", drift=drift)
        quot, rem = divmod(pert, base)
        if not rem.is_zero or quot.degree != 2:
            fail(k, "forced multiplicity at -1", remainder=_fmt(rem.coeffs))
        elif not (
            quot.constant != 0
            and sturm_count(quot, None, Fraction(0)) == 2
        ):
            fail(k, "perturbed quadratic roots", quadratic=_fmt(quot.coeffs))
        if any(z.real >= 0 for z in aberth_roots(pert)):
            fail(
                k,
                "perturbed numeric half-plane",
                roots=[[z.real, z.imag] for z in aberth_roots(pert)],
            )

    # exp analog: e^x(x+1) composed with itself, then the conjugate pair
    f1 = Poly([1, 1])
    got_exp = exp_compose(ExpPoly(f1), ExpPoly(f1))
    if got_exp.poly != Poly([1, 3, 1]):
        fail(None, "exp identity", got=_fmt(got_exp.poly.coeffs))
    gneg = exp_compose(ExpPoly(Poly([-1, 1])), ExpPoly(Poly([-1, 1])))
    if gneg.poly != Poly([1, -1, 1]):
        fail(None, "exp sign-flipped identity", got=_fmt(gneg.poly.coeffs))
    pert_exp = Poly([1 + eps**2, 3, 1])
    if not (
        sturm_count(pert_exp, None, Fraction(0)) == 2 and pert_exp.constant != 0
    ):
        fail(None, "exp perturbed negativity", quadratic=_fmt(pert_exp.coeffs))
    numeric_exp = exp_compose(
        ExpPoly(Poly([complex(1.0, float(eps)), 1])),
        ExpPoly(Poly([complex(1.0, -float(eps)), 1])),
    ).poly
    drift_exp = max(
        abs(numeric_exp.coeff(j) - complex(pert_exp.coeff(j))) for j in range(3)
    )
    if drift_exp > 1e-12:
        fail(None, "exp perturbed cross-check", drift=drift_exp)

    # all-positive offsets compose to an all-negative-roots polynomial
    for k in k_values:
        rng = _rng(seed, f"{check_id}:positive:{k}")
        n = rng.randint(2, 4)
        kk = rng.randint(1, 3)
        total = n + kk
        avals = [_rand_positive(rng, 6) for _ in range(n)]
        pol = composition_factor(n, kk, avals[0])
        for av in avals[1:]:
            pol = compose(pol, composition_factor(n, kk, av), SscContext(total))
        neg_count = sturm_count(pol, None, Fraction(0), multiplicity=True)
        if not (pol.constant != 0 and neg_count == total):
            fail(
                k,
                "positive offsets",
                offsets=_fmt(avals),
                composed=_fmt(pol.coeffs),
                negative_roots=neg_count,
            )

    return CheckReport(
        check_id, len(list(k_values)), failures, seed, time.perf_counter() - t0
    )


# -- exploratory: iterated hyperbolization ------------------------------------


def check_hyperbolization(
    n: int = 2,
    k: int = 1,
    nu_max: int = 400,
    trials: int = 50,
    seed: int = 42,
) -> CheckReport:
    """Exploratory: iterate the finite affine map on cone points and
    record how fast iterates become hyperbolic; exactly verify the
    two-coefficient exp closed form and its first hyperbolic index."""
    t0 = time.perf_counter()
    check_id = f"hyperbolization[n={n},k={k}]"
    failures: list = []
    notes: list = []

    amap = decomposition_map("finite", n=n, k=k)
    first = []
    unresolved = 0
    for t in range(trials):
        rng = _rng(seed, f"{check_id}:{t}")
        vec = _cone_point(rng, n, 6)
        found = None
        for nu in range(nu_max + 1):
            core = Poly(list(reversed(vec)) + [Fraction(1)])
            if is_hyperbolic(core).hyperbolic:
                found = nu
                break
            vec = amap.apply(vec)
        if found is None:
            unresolved += 1
        else:
            first.append(found)
    notes.append(
        {
            "stage": "finite iteration",
            "resolved": len(first),
            "unresolved_within_nu_max": unresolved,
            "max_first_hyperbolic": max(first) if first else None,
        }
    )

    emap = decomposition_map("exp", m=2, convention=NORMALIZED)
    cap = 2000
    for t in range(trials):
        rng = _rng(seed, f"{check_id}:exp:{t}")
        aa = _rand_fraction(rng, 8)
        bb = _rand_positive(rng, 5)
        s0 = next(
            (s for s in range(cap + 1) if (aa - s * bb) ** 2 >= 4 * bb), None
        )
        vec = (aa, bb)
        s_iter = None
        closed_ok = True
        for s in range(cap + 1):
            if vec != (aa - s * bb, bb):
                closed_ok = False
                failures.append(
                    {
                        "trial": t,
                        "stage": "exp closed form",
                        "a": format_rational(aa),
                        "b": format_rational(bb),
                        "s": s,
                        "observed": _fmt(vec),
                        "expected": _fmt((aa - s * bb, bb)),
                    }
                )
                break
            if is_hyperbolic(Poly([Fraction(1), vec[0], vec[1]])).hyperbolic:
                s_iter = s
                break
            vec = emap.apply(vec)
        if closed_ok and (s0 is None or s_iter != s0):
            failures.append(
                {
                    "trial": t,
                    "stage": "first hyperbolic index",
                    "a": format_rational(aa),
                    "b": format_rational(bb),
                    "closed_form": s0,
                    "iterated": s_iter,
                }
            )
    return CheckReport(
        check_id, trials, failures, seed, time.perf_counter() - t0, notes
    )


# -- composition calculus -----------------------------------------------------


def check_derivative_identities(trials: int = 500, seed: int = 42) -> CheckReport:
    """Both exact differentiation identities of the composition hold on
    random operands."""
    t0 = time.perf_counter()
    check_id = "derivative_identities"
    failures: list = []
    for t in range(trials):
        rng = _rng(seed, f"{check_id}:{t}")
        n = rng.randint(2, 6)
        a = _rand_poly(rng, n)
        bdeg = n if rng.random() < 0.7 else rng.randint(1, n)
        b = _rand_poly(rng, bdeg)
        if not derivative_identities_hold(a, b, SscContext(n)):
            failures.append(
                {
                    "trial": t,
                    "ambient": n,
                    "a": _fmt(a.coeffs),
                    "b": _fmt(b.coeffs),
                }
            )
    return CheckReport(check_id, trials, failures, seed, time.perf_counter() - t0)


def check_root_multiplicity(trials: int = 500, seed: int = 42) -> CheckReport:
    """Roots of the operands multiply: orders m_a + m_b - N survive in
    the composition, certified by exact division."""
    t0 = time.perf_counter()
    check_id = "root_multiplicity"
    failures: list = []
    for t in range(trials):
        rng = _rng(seed, f"{check_id}:{t}")
        n = rng.randint(3, 6)
        ma = rng.randint(1, n)
        mb = rng.randint(max(1, n + 1 - ma), n)
        mu = ma + mb - n
        xa = _rand_nonzero(rng, 5)
        xb = _rand_nonzero(rng, 5)
        a = Poly.from_roots([xa] * ma) * _rand_poly(rng, n - ma)
        b = Poly.from_roots([xb] * mb) * _rand_poly(rng, n - mb)
        composed = compose(a, b, SscContext(n))
        rem = composed % Poly([xa * xb, 1]) ** mu
        if not rem.is_zero:
            failures.append(
                {
                    "trial": t,
                    "ambient": n,
                    "orders": [ma, mb],
                    "a": _fmt(a.coeffs),
                    "b": _fmt(b.coeffs),
                    "expected_root": format_rational(-xa * xb),
                    "remainder": _fmt(rem.coeffs),
                }
            )
    return CheckReport(check_id, trials, failures, seed, time.perf_counter() - t0)


# -- suite runner -------------------------------------------------------------


_REGISTRY: dict[str, Callable[..., CheckReport]] = {
    "cone_finite": check_cone_finite,
    "cone_exp": check_cone_exp,
    "interval_localization": check_interval_localization,
    "taylor_sign_rule": check_taylor_sign_rule,
    "integer_intervals": check_integer_intervals,
    "transform_positivity": check_transform_positivity,
    "alternation_iteration": suite_alternation_iteration,
    "eventual_hyperbolicity": suite_eventual_hyperbolicity,
    "halfplane_not_invariant": check_halfplane_not_invariant,
    "sign_experiments": check_sign_experiments,
    "hyperbolization": check_hyperbolization,
    "derivative_identities": check_derivative_identities,
    "root_multiplicity": check_root_multiplicity,
}


def available_checks() -> list[str]:
    return sorted(_REGISTRY)


def _cell_specs(trials: int, seed: int, tol: float = 1e-8) -> list[tuple[str, str, tuple]]:
    # iteration-heavy checks get a reduced trial count; each of their
    # trials runs hundreds of transform steps
    iter_trials = max(4, trials // 25)
    explore_trials = max(5, trials // 10)
    return [
        ("cone_finite[n=1,k=2]", "cone_finite", (1, 2, trials, seed)),
        ("cone_finite[n=2,k=1]", "cone_finite", (2, 1, trials, seed)),
        ("cone_finite[n=3,k=2]", "cone_finite", (3, 2, trials, seed)),
        ("cone_finite[n=4,k=3]", "cone_finite", (4, 3, trials, seed)),
        ("cone_exp[m=1]", "cone_exp", (1, trials, seed)),
        ("cone_exp[m=2]", "cone_exp", (2, trials, seed)),
        ("cone_exp[m=4]", "cone_exp", (4, trials, seed)),
        ("interval_localization[n=2,k=1]", "interval_localization", (2, 1, trials, seed, tol)),
        ("interval_localization[n=3,k=2]", "interval_localization", (3, 2, trials, seed, tol)),
        ("interval_localization[n=2,k=3]", "interval_localization", (2, 3, trials, seed, tol)),
        ("taylor_sign_rule[m=2]", "taylor_sign_rule", (2, trials, seed)),
        ("taylor_sign_rule[m=3]", "taylor_sign_rule", (3, trials, seed)),
        ("taylor_sign_rule[m=5]", "taylor_sign_rule", (5, trials, seed)),
        ("integer_intervals[m=2]", "integer_intervals", (2, trials, seed, tol)),
        ("integer_intervals[m=3]", "integer_intervals", (3, trials, seed, tol)),
        ("integer_intervals[m=4]", "integer_intervals", (4, trials, seed, tol)),
        ("transform_positivity", "transform_positivity", (trials, seed, 5)),
        ("alternation_iteration", "alternation_iteration", (iter_trials, seed)),
        ("eventual_hyperbolicity", "eventual_hyperbolicity", (iter_trials, seed)),
        ("halfplane_not_invariant", "halfplane_not_invariant", (min(trials, 100), seed)),
        ("sign_experiments", "sign_experiments", ((1, 2, 3, 4, 5, 6), Fraction(1, 100), seed)),
        ("hyperbolization[n=2,k=1]", "hyperbolization", (2, 1, 400, explore_trials, seed)),
        ("derivative_identities", "derivative_identities", (trials, seed)),
        ("root_multiplicity", "root_multiplicity", (trials, seed)),
    ]


def _run_cell(spec: tuple[str, str, tuple]) -> CheckReport:
    cell_id, name, args = spec
    report = _REGISTRY[name](*args)
    report.check_id = cell_id
    return report


def run_suite(
    names: Optional[Sequence[str]] = None,
    trials: int = 500,
    seed: int = 42,
    jobs: int = 1,
    tol: float = 1e-8,
) -> list[CheckReport]:
    """Run the registered cells (all, or those matching the given base
    names / cell ids) in deterministic registry order."""
    specs = _cell_specs(trials, seed, tol)
    if names:
        wanted = {n for n in names}
        if "all" not in wanted:
            all_ids = {s[0] for s in specs}
            specs = [
                s
                for s in specs
                if s[0] in wanted or s[1] in wanted or s[0].split("[")[0] in wanted
            ]
            unknown = wanted - all_ids - set(_REGISTRY)
            if unknown:
                raise ValueError(
                    f"unknown checks: {sorted(unknown)}; "
                    f"available: {', '.join(available_checks())}"
                )
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_cell, specs))
    return [_run_cell(s) for s in specs]


# -- report serialization -----------------------------------------------------


def reports_payload(reports: Sequence[CheckReport]) -> dict:
    """JSON document: byte-stable reports plus a volatile metadata block."""
    return {
        "metadata": {
            "generated_at": datetime.now(timezone.utc).isoformat(),
            "python": platform.python_version(),
            "backend": kernel_backend(),
            "elapsed_seconds": {r.check_id: round(r.elapsed, 6) for r in reports},
        },
        "reports": [r.to_payload() for r in reports],
    }


def payload_csv_rows(payload: dict) -> list[list]:
    elapsed = payload.get("metadata", {}).get("elapsed_seconds", {})
    rows: list[list] = [["check_id", "trials", "failures", "seed", "seconds"]]
    for rep in payload["reports"]:
        sec = elapsed.get(rep["check_id"])
        rows.append(
            [
                rep["check_id"],
                rep["trials"],
                len(rep["failures"]),
                rep["seed"],
                "" if sec is None else f"{sec:.3f}",
            ]
        )
    return rows


def _atomic_write(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", text=True)
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_reports_json(reports: Sequence[CheckReport], path: str) -> None:
    payload = reports_payload(reports)
    _atomic_write(path, json.dumps(payload, indent=2, sort_keys=True) + "\n")


def write_reports_csv(reports: Sequence[CheckReport], path: str) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerows(payload_csv_rows(reports_payload(reports)))
    _atomic_write(path, buf.getvalue())
