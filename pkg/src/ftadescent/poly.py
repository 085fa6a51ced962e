"""Dense univariate polynomials over Q(i) or over complex doubles.

Coefficients are stored in ascending degree order.  A polynomial is in
*exact* mode when every coefficient is a :class:`GaussianRational` (ints
and Fractions are promoted), otherwise all coefficients become ``complex``.
"""

import math
from dataclasses import dataclass

from .gaussian import GaussianRational

__all__ = [
    "Polynomial", "LocalForm", "ZeroPolynomialError", "DegenerateLocalFormError",
    "binomial", "binomial_row", "evaluate", "taylor_shift", "local_form", "deflate",
    "root_bound", "scale", "DEFAULT_TAU",
]

DEFAULT_TAU = 1e-12


class ZeroPolynomialError(ValueError):
    pass


class DegenerateLocalFormError(ValueError):
    """All shifted coefficients beyond the constant are below threshold."""


def _is_exact(x):
    return GaussianRational.coerce(x) is not None


class Polynomial:
    __slots__ = ("coeffs", "exact")

    def __init__(self, coeffs):
        coeffs = list(coeffs)
        exact = all(_is_exact(c) for c in coeffs)
        if exact:
            coeffs = [GaussianRational.coerce(c) for c in coeffs]
        else:
            coeffs = [complex(c) for c in coeffs]
        # Only exact zeros are trimmed, in both modes.
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "exact", exact)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    def __reduce__(self):
        return (Polynomial, (self.coeffs,))

    @property
    def degree(self):
        """Degree, or -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not self.coeffs

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, j):
        return self.coeffs[j]

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"

    def __call__(self, z):
        return evaluate(self, z)

    def to_complex(self):
        return self if not self.exact else Polynomial([complex(c) for c in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Polynomial([])
        zero = 0 if self.exact and other.exact else 0j
        out = [zero] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(out)

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        n = max(len(self), len(other))
        a = list(self.coeffs) + [0] * (n - len(self))
        b = list(other.coeffs) + [0] * (n - len(other))
        return Polynomial([x + y for x, y in zip(a, b)])

    @classmethod
    def from_roots(cls, roots, leading=1):
        p = cls([leading])
        for r in roots:
            p = p * cls([-r, 1])
        return p


@dataclass(frozen=True)
class LocalForm:
    """P(z0 + w) = c0 + ck*w**k + ..., with ck the first non-negligible term."""

    k: int
    c0: object
    ck: object
    shifted: tuple

    @property
    def q_coeffs(self):
        """Coefficients of Q with P(z0 + w) = c0 + w**k * Q(w)."""
        return self.shifted[self.k:]

    @property
    def alpha(self):
        return self.c0.conjugate() * self.ck


def _require_nonzero(p):
    if p.is_zero:
        raise ZeroPolynomialError("operation undefined for the zero polynomial")


def binomial(n, j):
    """Exact binomial coefficient; raises ValueError when j > n."""
    if j < 0 or n < 0 or j > n:
        raise ValueError(f"binomial({n}, {j}) requires 0 <= j <= n")
    return math.comb(n, j)


def binomial_row(n):
    """[C(n, 0), ..., C(n, n)] by the multiplicative rule C(n, j+1) = C(n, j)(n-j)/(j+1)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    row = [1]
    for j in range(n):
        row.append(row[-1] * (n - j) // (j + 1))
    return row


def evaluate(p, z):
    """Horner evaluation of ``p`` at ``z``."""
    _require_nonzero(p)
    acc = p.coeffs[-1]
    for c in reversed(p.coeffs[:-1]):
        acc = acc * z + c
    return acc


def taylor_shift(p, z0):
    """Coefficients of w -> P(z0 + w), by n rounds of synthetic division."""
    _require_nonzero(p)
    if p.exact and _is_exact(z0):
        z0 = GaussianRational.coerce(z0)
        c = list(p.coeffs)
    else:
        z0 = complex(z0)
        c = [complex(x) for x in p.coeffs]
    n = len(c) - 1
    for i in range(n):
        for j in range(n - 1, i - 1, -1):
            c[j] = c[j] + z0 * c[j + 1]
    return Polynomial(c)


def local_form(p, z0, tau=DEFAULT_TAU):
    """Find the smallest k >= 1 whose shifted coefficient is not negligible.

    For an exact polynomial at an exact point ``tau`` is ignored and the test
    is ``!= 0``; otherwise a coefficient counts when its modulus exceeds
    ``tau`` times the largest shifted modulus.
    """
    _require_nonzero(p)
    if p.degree < 1:
        raise ValueError("local form needs a non-constant polynomial")
    c = list(taylor_shift(p, z0).coeffs)
    if p.exact and _is_exact(z0):
        for k in range(1, len(c)):
            if c[k]:
                return LocalForm(k, c[0], c[k], tuple(c))
        raise DegenerateLocalFormError("exact shifted polynomial is constant")
    c = [complex(x) for x in c]
    cutoff = tau * max(abs(x) for x in c)
    for k in range(1, len(c)):
        if abs(c[k]) > cutoff:
            return LocalForm(k, c[0], c[k], tuple(c))
    raise DegenerateLocalFormError(
        f"polynomial is numerically constant near {z0!r} (tau={tau:g})")


def deflate(p, r):
    """Synthetic division by (z - r): returns (quotient, remainder)."""
    _require_nonzero(p)
    if p.degree < 1:
        raise ValueError("cannot deflate a constant")
    if not p.exact or not _is_exact(r):
        r = complex(r)
        p = p.to_complex()
    n = p.degree
    q = [None] * n
    acc = p.coeffs[n]
    for j in range(n - 1, -1, -1):
        q[j] = acc
        acc = p.coeffs[j] + r * acc
    return Polynomial(q), acc


def root_bound(p):
    """Radius R with every root strictly inside |z| < R.

    R = max(1, sum_{j<n} |a_j| / |a_n|) + 1, so |a_n| R^n exceeds the sum of
    the lower-order terms on |z| = R.
    """
    _require_nonzero(p)
    if p.degree < 1:
        raise ValueError("constant polynomial has no roots to enclose")
    lead = abs(complex(p.coeffs[-1]))
    tail = math.fsum(abs(complex(c)) for c in p.coeffs[:-1])
    return max(1.0, tail / lead) + 1.0


def scale(p):
    """Magnitude scale sum_j |a_j| max(1, R)^j used for relative residuals."""
    r = max(1.0, root_bound(p))
    return math.fsum(abs(complex(c)) * r ** j for j, c in enumerate(p.coeffs))
