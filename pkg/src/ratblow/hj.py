"""Hirzebruch-Jung continued fractions, Wahl chains, and lens space data.

A chain here is a list [b1, ..., bk] of integers, every bi >= 2, encoding
the continued fraction

    p/q = b1 - 1/(b2 - 1/( ... - 1/bk))

and equally a linear plumbing of rational curves with self-intersections
-b1, ..., -bk.  Wahl chains are the strings of n^2/(na - 1); contracting
one admits a rational homology ball replacement, which is what makes the
blow-down bookkeeping in :mod:`ratblow.blowdown` work.

Orientation convention: the boundary of the linear plumbing with weights
-bi is the lens space L(p, q).  The complement side carries the reversed
orientation and is reported as L(p, -q), normalized to L(p, p - q).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .zlinalg import IntMatrix


class HJError(ValueError):
    """Raised on invalid fractions, chains or Wahl parameters."""


def _check_chain(chain):
    chain = [int(b) for b in chain]
    if not chain:
        raise HJError("a chain needs at least one coefficient")
    for b in chain:
        if b < 2:
            raise HJError("chain coefficients must be >= 2, got %d" % b)
    return chain


def _check_fraction(p, q):
    p, q = int(p), int(q)
    if not (0 < q < p):
        raise HJError("need 0 < q < p, got %d/%d" % (p, q))
    if gcd(p, q) != 1:
        raise HJError("%d/%d is not in lowest terms" % (p, q))
    return p, q


@dataclass(frozen=True)
class HJFraction:
    """A fraction p/q with 0 < q < p and gcd(p, q) = 1."""

    p: int
    q: int

    def __post_init__(self):
        _check_fraction(self.p, self.q)

    def __str__(self):
        return "%d/%d" % (self.p, self.q)


@dataclass(frozen=True)
class WahlParams:
    """Parameters (n, a) of the chain of n^2/(na - 1)."""

    n: int
    a: int

    def __post_init__(self):
        if self.n < 2 or not (0 < self.a < self.n) or gcd(self.n, self.a) != 1:
            raise HJError("invalid Wahl parameters (%d, %d)" % (self.n, self.a))

    def fraction(self) -> HJFraction:
        return HJFraction(self.n * self.n, self.n * self.a - 1)


@dataclass(frozen=True)
class LensSpace:
    """L(p, q) tagged with the orientation convention it was computed in.

    ``q`` is kept as given (possibly negative) for display; ``normalized``
    reduces it into [1, p).
    """

    p: int
    q: int
    side: str  # "plumbing-boundary" or "complement-boundary"

    def __post_init__(self):
        if self.p < 2 or gcd(self.q % self.p, self.p) != 1:
            raise HJError("invalid lens space L(%d, %d)" % (self.p, self.q))

    def normalized(self):
        return (self.p, self.q % self.p)

    def __str__(self):
        return "L(%d, %d)" % (self.p, self.q)


@dataclass(frozen=True)
class LensBoundary:
    """Both orientation forms of the boundary of a chain plumbing."""

    plumbing: LensSpace
    complement: LensSpace


@dataclass(frozen=True)
class MeridianData:
    """Meridian coefficients of the chain curves in H_1 of the boundary.

    With alpha the meridian of the first chain curve, the meridian of the
    j-th curve is coefficients[j-1] * alpha, and H_1 = Z/order.
    """

    coefficients: tuple
    order: int


def hj_expand(p, q) -> list:
    """Expand p/q into its Hirzebruch-Jung chain [b1, ..., bk]."""
    p, q = _check_fraction(p, q)
    chain = []
    while q:
        b = -(-p // q)  # ceil(p/q)
        chain.append(b)
        p, q = q, b * q - p
    return chain


def hj_value(chain) -> HJFraction:
    """Evaluate a chain back to its fraction p/q (inverse of hj_expand)."""
    chain = _check_chain(chain)
    num, den = chain[-1], 1
    for b in reversed(chain[:-1]):
        num, den = b * num - den, num
    return HJFraction(num, den)


def wahl_chain(n, a) -> list:
    """The chain of n^2/(na - 1), i.e. the string the pair (n, a) names."""
    w = WahlParams(int(n), int(a))
    f = w.fraction()
    return hj_expand(f.p, f.q)


def recognize_wahl(chain):
    """Return WahlParams (n, a) if the chain is a Wahl chain, else None.

    Only the positive square root is considered since n >= 2 by definition.
    """
    f = hj_value(chain)
    n = isqrt(f.p)
    if n * n != f.p or n < 2:
        return None
    if (f.q + 1) % n:
        return None
    a = (f.q + 1) // n
    if not (0 < a < n) or gcd(n, a) != 1:
        return None
    return WahlParams(n, a)


def meridian_coefficients(chain) -> MeridianData:
    """Coefficients c_j with meridian(curve j) = c_j * alpha in H_1(boundary).

    The recursion is c_1 = 1, c_2 = b_1, c_{j+1} = b_j c_j - c_{j-1}; the
    closing value b_k c_k - c_{k-1} is the order p of H_1.
    """
    chain = _check_chain(chain)
    coeffs = [1]
    prev = 0
    for b in chain[:-1]:
        coeffs.append(b * coeffs[-1] - prev)
        prev = coeffs[-2]
    order = chain[-1] * coeffs[-1] - prev
    if order != hj_value(chain).p:
        raise HJError("meridian recursion does not close")  # pragma: no cover
    if gcd(coeffs[-1], order) != 1:
        raise HJError("far-end meridian fails to generate")  # pragma: no cover
    return MeridianData(coefficients=tuple(coeffs), order=order)


def dual_chain(chain) -> list:
    """Chain of p/(p - q), the orientation-reversed boundary string."""
    f = hj_value(chain)
    return hj_expand(f.p, f.p - f.q)


def lens_boundary(chain) -> LensBoundary:
    """Both orientation forms of the lens space bounding the chain plumbing."""
    f = hj_value(chain)
    return LensBoundary(
        plumbing=LensSpace(f.p, f.q, "plumbing-boundary"),
        complement=LensSpace(f.p, -f.q, "complement-boundary"),
    )


def plumbing_matrix(chain) -> IntMatrix:
    """Tridiagonal intersection matrix: diagonal -b_i, off-diagonal 1."""
    chain = _check_chain(chain)
    k = len(chain)
    rows = []
    for i in range(k):
        row = [0] * k
        row[i] = -chain[i]
        if i > 0:
            row[i - 1] = 1
        if i + 1 < k:
            row[i + 1] = 1
        rows.append(row)
    return IntMatrix.from_rows(rows)


def wahl_extensions(chain):
    """The two blow-up moves that generate all Wahl chains from [4].

    [b1..bk] -> [2, b1..b_{k-1}, bk + 1]  and  [b1..bk] -> [b1 + 1, b2..bk, 2].
    """
    chain = _check_chain(chain)
    left = [2] + chain[:-1] + [chain[-1] + 1]
    right = [chain[0] + 1] + chain[1:] + [2]
    return left, right
