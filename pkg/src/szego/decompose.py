"""Decomposition of polynomials and of e^x * P into composition factors,
and the affine coefficient maps induced by the factor parameters.

Finite mode: P = (x+1)^k (x^n + c_1 x^{n-1} + ... + c_n) is the
composition of n factors (x+1)^(n+k-1)(x+a_i) at ambient degree n+k.
The map sends (c_1..c_n) to the elementary symmetric values sigma_j of
the a_i.  With beta_s = [x^s]P / C(n+k, s) one has
beta_s = prod_i ((n+k-s) a_i + s) / (n+k), so the monic polynomial
Q(t) = prod_i (t + a_i) satisfies
Q(s/(n+k-s)) = beta_s * (n+k)^n / (n+k-s)^n; interpolating Q exactly at
s = 0..n (nodes strictly increasing, pole at s = n+k avoided) reads off
sigma_j as the coefficient of t^(n-j).

Exp mode: e^x P, P(0) = 1, deg P = m, is the composition of m factors
e^x(1 + x/a_i).  The Taylor numerators gamma_j of e^x P equal Qt(j)
where Qt(t) = prod_i (1 + t/a_i); interpolation at t = 0..m gives the
reciprocal-side symmetric values sigma~_k = [t^k]Qt, and the -a_i are
the roots of the falling-factorial transform of P (the module asserts
that equality as an internal cross-check).  A second, monic convention
(factors written e^x(x + a_i), input monic) is provided along with an
explicit converter; both describe the same factor multiset.

sigma values are exact; the a_i themselves are an optional numerical
enrichment via the root finder.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .exact import binomial, format_rational, parse_rational
from .poly import (
    ExpPoly,
    Poly,
    falling_factorial_transform,
    interpolate,
    inverse_falling_factorial_transform,
)
from .roots import aberth_roots

__all__ = [
    "InternalInconsistencyError",
    "DegreeDeficientError",
    "Decomposition",
    "AffineMap",
    "decompose_poly",
    "decompose_exp",
    "decomposition_map",
    "recompose",
    "padded_core",
    "extract_core",
    "exp_normalized_to_monic",
    "exp_monic_to_normalized",
    "localization_intervals",
    "decomposition_to_json",
    "decomposition_from_json",
]

NORMALIZED = "normalized"
MONIC = "monic"


class InternalInconsistencyError(RuntimeError):
    """A structural identity the theory guarantees failed to hold."""


class DegreeDeficientError(ValueError):
    """Exp-mode normalized input with vanishing top coefficient."""


@dataclass(frozen=True)
class Decomposition:
    """Factor data for one composed polynomial or function.

    sigma holds exact symmetric values: in finite mode the elementary
    symmetric polynomials sigma_j of the factor offsets a_i; in exp
    mode (normalized convention) the same for the reciprocals 1/a_i; in
    exp mode (monic convention) again for the a_i themselves.  roots,
    when present, are the numerically extracted a_i.
    """

    mode: str  # "finite" | "exp"
    sigma: tuple[Fraction, ...]
    n: Optional[int] = None
    k: Optional[int] = None
    m: Optional[int] = None
    convention: Optional[str] = None
    roots: Optional[tuple[complex, ...]] = None


@dataclass(frozen=True)
class AffineMap:
    """Exact affine map c -> M c + offset on coefficient vectors."""

    matrix: tuple[tuple[Fraction, ...], ...]
    offset: tuple[Fraction, ...]

    @property
    def dimension(self) -> int:
        return len(self.offset)

    def apply(self, c: Sequence[Fraction]) -> tuple[Fraction, ...]:
        if len(c) != self.dimension:
            raise ValueError("dimension mismatch")
        vec = [Fraction(x) for x in c]
        return tuple(
            sum((row[j] * vec[j] for j in range(len(vec))), start=off)
            for row, off in zip(self.matrix, self.offset)
        )

    def determinant(self) -> Fraction:
        from .roots import _det

        return _det([list(row) for row in self.matrix])

    @property
    def invertible(self) -> bool:
        return self.determinant() != 0


def padded_core(c: Sequence[Fraction], n: int, k: int) -> Poly:
    """(x+1)^k (x^n + c_1 x^{n-1} + ... + c_n) as an exact Poly."""
    if len(c) != n:
        raise ValueError(f"expected {n} coefficients, got {len(c)}")
    core = Poly([Fraction(x) for x in reversed(c)] + [Fraction(1)])
    return Poly([1, 1]) ** k * core


def extract_core(p: Poly, n: int, k: int) -> tuple[Fraction, ...]:
    """Inverse of padded_core: divide out (x+1)^k, return (c_1..c_n)."""
    q, rem = divmod(p, Poly([1, 1]) ** k)
    if not rem.is_zero or q.degree != n or q.lead != 1:
        raise ValueError("polynomial is not (x+1)^k times a monic degree-n core")
    return tuple(reversed(q.coeffs[:-1]))


def decompose_poly(
    c: Sequence[Fraction], n: int, k: int, *, want_roots: bool = True
) -> Decomposition:
    """Factor-offset data for (x+1)^k (x^n + c_1 x^{n-1} + ... + c_n).

    sigma_j are exact; the map c -> sigma is total and affine.  The
    interpolant for Q is asserted monic, a free end-to-end consistency
    check (its failure would signal an implementation bug, not bad
    input).
    """
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    p = padded_core(c, n, k)
    q = _finite_sigma_poly(p, n, k)
    sigma = tuple(q.coeff(n - j) for j in range(1, n + 1))
    roots = None
    if want_roots:
        roots = tuple(-z for z in aberth_roots(q)) if n >= 1 else ()
    return Decomposition(mode="finite", sigma=sigma, n=n, k=k, roots=roots)


def _finite_sigma_poly(p: Poly, n: int, k: int) -> Poly:
    """Monic Q(t) = prod (t + a_i), interpolated from the coefficients of p."""
    m = n + k
    pts = []
    for s in range(n + 1):
        beta = p.coeff(s) / binomial(m, s)
        value = beta * Fraction(m, m - s) ** n
        pts.append((Fraction(s, m - s), value))
    q = interpolate(pts)
    if q.degree != n or q.lead != 1:
        raise InternalInconsistencyError(
            "factor-offset interpolant is not monic of the right degree"
        )
    return q


def _exp_gamma_poly(p: Poly, m: int) -> Poly:
    """Interpolates the polynomial G with G(j) = gamma_j(e^x p), j = 0..m,
    and cross-checks it against the falling-factorial transform."""
    f = ExpPoly(p)
    g = interpolate([(Fraction(j), f.gamma(j)) for j in range(m + 1)])
    if g != falling_factorial_transform(p):
        raise InternalInconsistencyError(
            "gamma interpolant disagrees with the falling-factorial transform"
        )
    return g


def decompose_exp(
    c: Sequence[Fraction],
    convention: str = NORMALIZED,
    *,
    want_roots: bool = True,
    _require_full_degree: bool = True,
) -> Decomposition:
    """Factor data for e^x * P from the coefficient vector (c_1..c_m).

    normalized: P = 1 + c_1 x + ... + c_m x^m (the natural convention
    for factors e^x(1+x/a)); c_m = 0 is rejected as degree deficient.
    sigma~_k = [t^k] prod(1 + t/a_i).

    monic: P = x^m + c_1 x^{m-1} + ... + c_m (factors read e^x(x+a));
    total in c.  sigma_j = elementary symmetric values of the a_i.  A
    zero entry among the returned roots means the function also has a
    degree-deficient normalized form.
    """
    cvec = [Fraction(x) for x in c]
    m = len(cvec)
    if m < 1:
        raise ValueError("need at least one coefficient")
    if convention == NORMALIZED:
        if _require_full_degree and cvec[-1] == 0:
            raise DegreeDeficientError(
                "degree deficient: top coefficient c_m must be nonzero"
            )
        p = Poly([Fraction(1)] + cvec)
        g = _exp_gamma_poly(p, m)
        if g.constant != 1:
            raise InternalInconsistencyError("gamma_0 must equal 1")
        sigma = tuple(g.coeff(j) for j in range(1, m + 1))
        roots = tuple(-z for z in aberth_roots(g)) if want_roots and g.degree >= 1 else None
        if want_roots and g.degree < 1:
            roots = ()
    else:
        if convention != MONIC:
            raise ValueError(f"unknown convention {convention!r}")
        p = Poly(list(reversed(cvec)) + [Fraction(1)])
        g = _exp_gamma_poly(p, m)
        if g.degree != m or g.lead != 1:
            raise InternalInconsistencyError("transform of a monic input must be monic")
        sigma = tuple(g.coeff(m - j) for j in range(1, m + 1))
        roots = tuple(-z for z in aberth_roots(g)) if want_roots else None
    return Decomposition(
        mode="exp", sigma=sigma, m=m, convention=convention, roots=roots
    )


def recompose(dec: Decomposition):
    """Exact reconstruction from sigma alone (roots never consulted).

    Finite mode returns the full composed Poly of degree n+k; exp modes
    return the ExpPoly.  Round-trips exactly with the decomposers.
    """
    if dec.mode == "finite":
        n, k = dec.n, dec.k
        if n is None or k is None or len(dec.sigma) != n:
            raise ValueError("malformed finite decomposition")
        m = n + k
        # homogenized evaluation avoids the node pole at s = n+k:
        # [x^s]P = C(m,s)/m^n * sum_j sigma_j s^(n-j) (m-s)^j
        sig = (Fraction(1),) + tuple(dec.sigma)
        coeffs = []
        for s in range(m + 1):
            acc = Fraction(0)
            for j, sj in enumerate(sig):
                acc += sj * Fraction(s) ** (n - j) * Fraction(m - s) ** j
            coeffs.append(binomial(m, s) * acc / Fraction(m) ** n)
        return Poly(coeffs)
    if dec.mode == "exp":
        if dec.m is None or len(dec.sigma) != dec.m:
            raise ValueError("malformed exp decomposition")
        if dec.convention == NORMALIZED:
            g = Poly([Fraction(1)] + list(dec.sigma))
        elif dec.convention == MONIC:
            g = Poly(list(reversed(dec.sigma)) + [Fraction(1)])
        else:
            raise ValueError(f"unknown convention {dec.convention!r}")
        return ExpPoly(inverse_falling_factorial_transform(g))
    raise ValueError(f"unknown mode {dec.mode!r}")


def exp_normalized_to_monic(c: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Convention converter: same function e^x P, rescaled to monic P.

    Input (c_1..c_m) with P = 1 + c_1 x + ... + c_m x^m, c_m != 0;
    output (c'_1..c'_m) with P/c_m = x^m + c'_1 x^{m-1} + ... + c'_m.
    A vector reversal plus scaling; the factor multiset is unchanged.
    """
    cvec = [Fraction(x) for x in c]
    if not cvec or cvec[-1] == 0:
        raise DegreeDeficientError("degree deficient: c_m must be nonzero")
    top = cvec[-1]
    full = [Fraction(1)] + cvec  # ascending coefficients of P
    return tuple(v / top for v in reversed(full[:-1]))


def exp_monic_to_normalized(c: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Inverse converter; requires constant term c_m != 0 (else the
    function has P(0) = 0 and no normalized form)."""
    cvec = [Fraction(x) for x in c]
    if not cvec or cvec[-1] == 0:
        raise DegreeDeficientError("no normalized form: constant term is zero")
    const = cvec[-1]
    asc = list(reversed(cvec)) + [Fraction(1)]  # ascending coefficients of P
    return tuple(v / const for v in asc[1:])


_PROBE_SEED = "affine-probe"


def decomposition_map(
    mode: str,
    *,
    n: Optional[int] = None,
    k: Optional[int] = None,
    m: Optional[int] = None,
    convention: str = NORMALIZED,
) -> AffineMap:
    """The exact affine map c -> sigma for the requested decomposition.

    Probed from unit vectors (offset = image of 0, columns = images of
    e_i minus offset) and verified exact at 20 pseudorandom rational
    points; a verification failure raises InternalInconsistencyError
    since it would contradict affinity of the underlying map.
    """
    if mode == "finite":
        if n is None or k is None:
            raise ValueError("finite mode needs n and k")
        dim = n

        def image(vec):
            return decompose_poly(vec, n, k, want_roots=False).sigma

    elif mode == "exp":
        if m is None:
            raise ValueError("exp mode needs m")
        dim = m

        def image(vec):
            return decompose_exp(
                vec, convention, want_roots=False, _require_full_degree=False
            ).sigma

    else:
        raise ValueError(f"unknown mode {mode!r}")

    zero = [Fraction(0)] * dim
    offset = image(zero)
    cols = []
    for i in range(dim):
        e = list(zero)
        e[i] = Fraction(1)
        img = image(e)
        cols.append([img[j] - offset[j] for j in range(dim)])
    matrix = tuple(
        tuple(cols[j][i] for j in range(dim)) for i in range(dim)
    )
    amap = AffineMap(matrix=matrix, offset=tuple(offset))

    rng = random.Random(_PROBE_SEED)
    for _ in range(20):
        probe = [
            Fraction(rng.randint(-60, 60), rng.randint(1, 12)) for _ in range(dim)
        ]
        if amap.apply(probe) != tuple(image(probe)):
            raise InternalInconsistencyError(
                "probed map is not affine; decomposition logic is inconsistent"
            )
    return amap


def localization_intervals(n: int, k: int) -> list[tuple[Optional[Fraction], Fraction]]:
    """Negative-axis intervals that localize real negative factor offsets.

    Index s runs 0..n+k-1; interval s is
    [-(s+1)/(n+k-1-s), -s/(n+k-s)], adjacent intervals sharing an
    endpoint.  At s = n+k-1 the left end degenerates; that interval is
    returned as (None, bound) meaning unbounded below.
    """
    m = n + k
    out: list[tuple[Optional[Fraction], Fraction]] = []
    for s in range(m):
        hi = Fraction(-s, m - s)
        lo = Fraction(-(s + 1), m - 1 - s) if s < m - 1 else None
        out.append((lo, hi))
    return out


# -- JSON interchange ---------------------------------------------------------


def decomposition_to_json(dec: Decomposition) -> dict:
    obj: dict = {
        "mode": dec.mode,
        "sigma": [format_rational(s) for s in dec.sigma],
    }
    if dec.mode == "finite":
        obj["n"] = dec.n
        obj["k"] = dec.k
    else:
        obj["m"] = dec.m
        obj["convention"] = dec.convention
    if dec.roots is not None:
        obj["roots"] = [{"re": z.real, "im": z.imag} for z in dec.roots]
    return obj


def decomposition_from_json(obj: dict) -> Decomposition:
    if not isinstance(obj, dict) or "mode" not in obj or "sigma" not in obj:
        raise ValueError("expected an object with 'mode' and 'sigma'")
    sigma = tuple(parse_rational(s) for s in obj["sigma"])
    roots = None
    if "roots" in obj and obj["roots"] is not None:
        roots = tuple(complex(r["re"], r["im"]) for r in obj["roots"])
    if obj["mode"] == "finite":
        return Decomposition(
            mode="finite", sigma=sigma, n=obj["n"], k=obj["k"], roots=roots
        )
    if obj["mode"] == "exp":
        return Decomposition(
            mode="exp",
            sigma=sigma,
            m=obj["m"],
            convention=obj.get("convention", NORMALIZED),
            roots=roots,
        )
    raise ValueError(f"unknown mode {obj['mode']!r}")
