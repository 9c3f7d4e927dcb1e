"""Schur-Szego composition (SSC) of polynomials and of functions e^x * P.

For polynomials the composition divides coefficientwise products by
binomial weights: with A = sum C(N,j) alpha_j x^j and B likewise,
A*B = sum C(N,j) alpha_j beta_j x^j, so [x^j](A*B) = A_j B_j / C(N,j).
The weight degree N is NOT inferable from the operands: padding a
polynomial with zero leading coefficients changes the formula.  Callers
therefore pass an explicit SscContext carrying N, and composition
requires at least one operand to actually have degree N.

For entire functions f = sum gamma_j x^j / j! of the shape e^x * P the
composition multiplies the gamma sequences.  The result is again of the
shape e^x * R with deg R = deg P + deg Q, and R is recovered exactly
from finitely many gamma products by interpolation plus the inverse
falling-factorial transform; no truncated series arithmetic is used.

Exact rational operands compose exactly; float/complex operands compose
in complex doubles (used by the perturbation experiments).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import binomial
from .poly import (
    ExpPoly,
    Poly,
    falling_factorial_transform,
    interpolate,
    inverse_falling_factorial_transform,
)

__all__ = [
    "AmbientDegreeError",
    "SscContext",
    "compose",
    "composition_factor",
    "exp_compose",
    "exp_composition_factor",
    "exp_factor_step",
    "derivative_identities_hold",
]


class AmbientDegreeError(ValueError):
    """Raised when the composition's weight degree would be ambiguous."""


@dataclass(frozen=True)
class SscContext:
    """Carries the ambient degree N used for the binomial weights.

    N = 0 is permitted (composition of constants is plain multiplication);
    the polynomial theory lives at N >= 1.
    """

    ambient_degree: int

    def __post_init__(self):
        if not isinstance(self.ambient_degree, int) or self.ambient_degree < 0:
            raise ValueError("ambient degree must be a non-negative integer")


def compose(a: Poly, b: Poly, ctx: SscContext) -> Poly:
    """SSC of a and b at the context's ambient degree.

    Commutative and associative for a fixed context.  (x+1)^N is the
    unit.  Exact over rationals; complex-double otherwise.
    """
    n = ctx.ambient_degree
    if a.degree > n or b.degree > n:
        raise ValueError(
            f"operand degree exceeds ambient degree {n}: {a.degree}, {b.degree}"
        )
    if a.coeff(n) == 0 and b.coeff(n) == 0:
        raise AmbientDegreeError(
            "ambiguous ambient degree: no operand has a nonzero coefficient "
            f"at x^{n}"
        )
    return Poly([a.coeff(j) * b.coeff(j) / binomial(n, j) for j in range(n + 1)])


def composition_factor(n: int, k: int, a) -> Poly:
    """The degree n+k factor (x+1)^(n+k-1) (x+a), built coefficientwise.

    [x^s] = C(n+k,s) * ((n+k-s)a + s)/(n+k); the product form is used as
    an independent cross-check in the tests.  The coefficient at x^s
    vanishes exactly when a = -s/(n+k-s).
    """
    if n < 1 or k < 1:
        raise ValueError("composition_factor requires n >= 1 and k >= 1")
    m = n + k
    if isinstance(a, (int, Fraction)):
        a = Fraction(a)
        return Poly(
            [binomial(m, s) * ((m - s) * a + s) / m for s in range(m + 1)]
        )
    return Poly(
        [binomial(m, s) * ((m - s) * complex(a) + s) / m for s in range(m + 1)]
    )


def exp_compose(f: ExpPoly, g: ExpPoly) -> ExpPoly:
    """SSC of e^x*P and e^x*Q: multiplies Taylor numerator sequences.

    gamma_j(result) = gamma_j(f) * gamma_j(g) for every j; the finite
    polynomial part has degree deg P + deg Q and is recovered exactly
    from the first deg P + deg Q + 1 products.
    """
    pf, pg = f.poly, g.poly
    if pf.is_zero or pg.is_zero:
        return ExpPoly(Poly.zero())
    d = pf.degree + pg.degree
    points = [(j, f.gamma(j) * g.gamma(j)) for j in range(d + 1)]
    transformed = interpolate(points)
    return ExpPoly(inverse_falling_factorial_transform(transformed))


def exp_composition_factor(a) -> ExpPoly:
    """The factor e^x (1 + x/a); its Taylor numerators are 1 + j/a."""
    if a == 0:
        raise ValueError("kappa factor undefined at 0")
    if isinstance(a, (int, Fraction)):
        return ExpPoly(Poly([Fraction(1), Fraction(1) / Fraction(a)]))
    return ExpPoly(Poly([1, 1 / complex(a)]))


def exp_factor_step(p: Poly, a) -> Poly:
    """One incremental composition step on the polynomial part:

    composing e^x * p with e^x (1 + x/a) yields e^x * q where
    q = (1 + x/a) p + (x/a) p'.  Must agree exactly with exp_compose.
    """
    if a == 0:
        raise ValueError("kappa factor undefined at 0")
    if isinstance(a, (int, Fraction)):
        inv = Fraction(1) / Fraction(a)
    else:
        inv = 1 / complex(a)
    return p + Poly.x() * (p + p.derivative()) * inv


def _drop_top(p: Poly, n: int) -> Poly:
    """p with its degree-n coefficient removed (degree <= n-1 remains)."""
    return Poly(list(p.coeffs[:n]))


def derivative_identities_hold(a: Poly, b: Poly, ctx: SscContext) -> bool:
    """Checks two exact differentiation identities of the composition.

    With N the ambient degree and S a degree <= N-1 polynomial:
      (A*B)' = (1/N) (A' *_{N-1} B')
      (x S) *_N B = (x/N) (S *_{N-1} B')
    The second identity is evaluated with S = (one operand with its x^N
    term dropped) against the other operand B, which must have degree
    exactly N; operands are swapped if needed to satisfy that.
    """
    n = ctx.ambient_degree
    if n < 1:
        raise ValueError("identities need ambient degree >= 1")
    sub = SscContext(n - 1)

    composed = compose(a, b, ctx)
    first = composed.derivative() == compose(
        a.derivative(), b.derivative(), sub
    ) * Fraction(1, n)

    if b.coeff(n) != 0:
        s_src, full = a, b
    else:
        s_src, full = b, a  # compose() already guaranteed a.coeff(n) != 0
    s = _drop_top(s_src, n)
    left = compose(Poly.x() * s, full, ctx)
    right = Poly.x() * compose(s, full.derivative(), sub) * Fraction(1, n)
    return first and left == right
