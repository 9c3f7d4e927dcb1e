# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled simultaneous root iteration (Aberth-Ehrlich).

Twin of _roots_py.solve; see that module for the algorithm contract.
Keep the two implementations in lockstep when editing either.
"""

import cmath
import math

from libc.stdlib cimport free, malloc

cdef extern from "complex.h":
    double cabs(double complex) nogil


def solve(list coeffs, double tol, int max_iter):
    """All complex roots of sum coeffs[i] x^i (ascending, lead nonzero)."""
    cdef int n = len(coeffs) - 1
    cdef int i, j, it
    if n < 1 or complex(coeffs[n]) == 0:
        raise ValueError("kernel needs degree >= 1 and nonzero leading coefficient")

    cdef double complex *c = <double complex *> malloc((n + 1) * sizeof(double complex))
    cdef double complex *z = <double complex *> malloc(n * sizeof(double complex))
    if c == NULL or z == NULL:
        free(c)
        free(z)
        raise MemoryError()

    cdef double pnorm = 0.0, top = 0.0, radius, bound, mag
    cdef double complex zi, p, dp, ratio, acc, diff, denom
    cdef bint all_done, collision, converged = False
    cdef int iterations = 0

    try:
        for i in range(n + 1):
            c[i] = complex(coeffs[i])
            mag = cabs(c[i])
            if mag > pnorm:
                pnorm = mag
            if i < n and mag > top:
                top = mag
        radius = 1.0 + top / cabs(c[n])

        # equally spaced starts on the Cauchy circle, fixed 0.4 rad phase
        for i in range(n):
            z[i] = radius * cmath.exp(1j * (2.0 * math.pi * i / n + 0.4))

        for it in range(max_iter):
            iterations += 1
            all_done = True
            for i in range(n):
                zi = z[i]
                p = c[n]
                dp = 0
                for j in range(n - 1, -1, -1):
                    dp = dp * zi + p
                    p = p * zi + c[j]
                mag = cabs(zi)
                if mag < 1.0:
                    mag = 1.0
                bound = tol * pnorm * mag ** n
                if cabs(p) <= bound:
                    continue
                all_done = False
                if dp == 0:
                    z[i] = zi + (1e-8 + 1e-8j) * (1.0 + cabs(zi))
                    continue
                ratio = p / dp
                acc = 0
                collision = False
                for j in range(n):
                    if j == i:
                        continue
                    diff = zi - z[j]
                    if diff == 0:
                        collision = True
                        break
                    acc = acc + 1.0 / diff
                if collision:
                    z[i] = zi + (1e-8 + 1e-8j) * (1.0 + cabs(zi))
                    continue
                denom = 1.0 - ratio * acc
                if denom == 0:
                    z[i] = zi - ratio
                else:
                    z[i] = zi - ratio / denom
            if all_done:
                converged = True
                break

        roots = []
        residuals = []
        for i in range(n):
            zi = z[i]
            p = c[n]
            for j in range(n - 1, -1, -1):
                p = p * zi + c[j]
            mag = cabs(zi)
            if mag < 1.0:
                mag = 1.0
            roots.append(complex(z[i]))
            residuals.append(cabs(p) / (pnorm * mag ** n))
        return roots, residuals, iterations, converged
    finally:
        free(c)
        free(z)
