"""Exact polynomial arithmetic in the field-size variable.

Group orders, cuspidal counts, Green degree polynomials and the dimension
polynomial of the free module on m generators.  Everything is exact; degree
evaluations overflow 64 bits quickly, so values are arbitrary precision.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import prod

from . import partitions as pt
from .errors import BadParameters, GuardExceeded
from .labels import Shape, enumerate_labels


class QPoly:
    """Polynomial with exact rational coefficients, sparse by exponent."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        items = coeffs.items() if hasattr(coeffs, "items") else coeffs
        self.coeffs = {int(e): Fraction(c) for e, c in items if c != 0}

    @classmethod
    def const(cls, c):
        return cls({0: c})

    @classmethod
    def monomial(cls, exp, c=1):
        return cls({exp: c})

    def __add__(self, other):
        other = other if isinstance(other, QPoly) else QPoly.const(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, Fraction(0)) + c
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return QPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        other = other if isinstance(other, QPoly) else QPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return QPoly.const(other) - self

    def __mul__(self, other):
        other = other if isinstance(other, QPoly) else QPoly.const(other)
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, Fraction(0)) + c1 * c2
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = QPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        other = other if isinstance(other, QPoly) else QPoly.const(other)
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items())))

    def degree(self):
        return max(self.coeffs, default=-1)

    def divexact(self, other: "QPoly") -> "QPoly":
        """Polynomial division; raises if the remainder is nonzero."""
        rem = dict(self.coeffs)
        out = {}
        de = other.degree()
        if de < 0:
            raise ZeroDivisionError("division by zero polynomial")
        dc = other.coeffs[de]
        while rem:
            e = max(rem)
            if e < de:
                raise ValueError("inexact polynomial division")
            q = rem[e] / dc
            out[e - de] = q
            for oe, oc in other.coeffs.items():
                ne = e - de + oe
                val = rem.get(ne, Fraction(0)) - q * oc
                if val:
                    rem[ne] = val
                else:
                    rem.pop(ne, None)
        return QPoly(out)

    def evaluate(self, x):
        """Exact evaluation; returns an int when the value is integral."""
        val = sum((c * Fraction(x) ** e for e, c in self.coeffs.items()), Fraction(0))
        return int(val) if val.denominator == 1 else val

    def to_json(self) -> dict:
        return {
            "coeffs": {
                str(e): f"{c.numerator}/{c.denominator}"
                for e, c in sorted(self.coeffs.items())
            }
        }

    def __repr__(self):
        if not self.coeffs:
            return "QPoly(0)"
        terms = " + ".join(f"{c}*q^{e}" for e, c in sorted(self.coeffs.items(), reverse=True))
        return f"QPoly({terms})"


def prime_power(q):
    """Return (p, k) with q = p**k, or raise BadParameters."""
    if q < 2:
        raise BadParameters(f"{q} is not a prime power")
    p = 2
    n = q
    while p * p <= n:
        if n % p == 0:
            break
        p += 1
    else:
        p = n
    k = 0
    while n > 1:
        if n % p:
            raise BadParameters(f"{q} is not a prime power")
        n //= p
        k += 1
    return p, k


def gl_order_poly(n) -> QPoly:
    """Order of the general linear group as a polynomial in q."""
    out = QPoly.const(1)
    for i in range(n):
        out = out * (QPoly.monomial(n) - QPoly.monomial(i))
    return out


def gl_order(n, q) -> int:
    return prod(q**n - q**i for i in range(n)) if n else 1


def _mobius(n) -> int:
    if n == 1:
        return 1
    out = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            out = -out
        else:
            p += 1
    return -out if n > 1 else out


@lru_cache(maxsize=None)
def cuspidal_count(d, q) -> int:
    """Number of cuspidals of degree d at field size q (Moebius inversion)."""
    if d < 1:
        raise BadParameters("degree must be positive")
    total = sum(_mobius(d // e) * (q**e - 1) for e in range(1, d + 1) if d % e == 0)
    assert total % d == 0
    return total // d


def psi_poly(n) -> QPoly:
    """prod_{i=1..n} (q^i - 1)."""
    out = QPoly.const(1)
    for i in range(1, n + 1):
        out = out * (QPoly.monomial(i) - 1)
    return out


def degree_poly(shape: Shape) -> QPoly:
    """Green degree polynomial of the irreducible with the given full label.

    The shape here describes a full label at its own norm (the iota entry is
    the padded partition, not a stable tail).
    """
    parts = [(1, shape.iota)] if shape.iota else []
    parts += list(shape.parts)
    n = shape.norm()
    num = psi_poly(n) * QPoly.monomial(sum(d * pt.n_stat(rows) for d, rows in parts))
    den = QPoly.const(1)
    for d, rows in parts:
        for h in pt.hooks(rows):
            den = den * (QPoly.monomial(d * h) - 1)
    return num.divexact(den)


def sum_degree_squares_check(n, q) -> bool:
    """Census identity: sum of class_size * degree^2 over all labels = |G_n|."""
    if n > 5 or q > 5:
        raise GuardExceeded("degree census guard exceeded", n=n, q=q)
    total = 0
    for shape, cls in enumerate_labels(n, q):
        deg = degree_poly(shape).evaluate(q)
        assert isinstance(deg, int)
        total += cls * deg * deg
    return total == gl_order(n, q)


def vic_hom_count(m, n, q) -> int:
    """Number of (injection, complement) pairs from dimension m into n."""
    if not 0 <= m <= n:
        raise BadParameters(f"need 0 <= m <= n, got m={m}, n={n}")
    return q ** (m * (n - m)) * prod(q**n - q**i for i in range(m))


def p_polynomial(m, q) -> QPoly:
    """Polynomial P with P(q^n) = vic_hom_count(m, n, q) for n >= m.

    The variable of the returned polynomial stands for q^n.
    """
    if m < 0:
        raise BadParameters("m must be non-negative")
    out = QPoly.monomial(m, Fraction(1, q ** (m * m)))
    for i in range(m):
        out = out * (QPoly.monomial(1) - q**i)
    return out
