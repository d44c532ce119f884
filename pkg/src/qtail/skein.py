"""Kauffman bracket skein quantities in the variable A.

Polynomials in A are stored as :class:`QPoly` objects whose exponents are
plain integer powers of A.  :func:`a_to_q` converts with q = A^-4, which in
quarter units just negates every exponent.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache

from .conventions import TWIST_SIGN_OF_POSITIVE
from .errors import NotAdmissible, OutOfRange
from .qlaurent import QPoly, exact_div

APoly = QPoly


def a_to_q(p: APoly) -> QPoly:
    return p.invert()


@lru_cache(maxsize=None)
def delta_n(n: int) -> APoly:
    """Delta_n = (-1)^n (A^(2n+2) - A^(-2n-2)) / (A^2 - A^-2), as its telescoped sum."""
    if n < -1:
        raise OutOfRange("Delta_n needs n >= -1")
    if n == -1:
        return QPoly.zero()
    s = (-1) ** n
    return QPoly({2 * n - 4 * i: s for i in range(n + 1)})


@lru_cache(maxsize=None)
def delta_fact(n: int) -> APoly:
    """Delta_n Delta_{n-1} ... Delta_1; empty product for n <= 0."""
    if n < -1:
        raise OutOfRange("Delta_n! needs n >= -1")
    if n <= 0:
        return QPoly.one()
    return delta_fact(n - 1) * delta_n(n)


def admissible(a: int, b: int, c: int) -> bool:
    if min(a, b, c) < 0:
        return False
    return (a + b + c) % 2 == 0 and abs(a - b) <= c <= a + b


def _fact_factors(n: int) -> Counter:
    """Delta_n! as a multiset of Delta indices."""
    return Counter(range(1, n + 1))


@lru_cache(maxsize=None)
def theta_ratio(a: int, b: int, c: int) -> tuple[APoly, APoly]:
    """theta(a, b, c) as (numerator, denominator) with shared Delta factors cancelled.

    The evaluation is a rational function in general (theta(2,2,2) is not
    a Laurent polynomial), so this is the form that always exists.
    """
    if not admissible(a, b, c):
        raise NotAdmissible(f"({a}, {b}, {c}) is not admissible")
    x = (b + c - a) // 2
    y = (a + c - b) // 2
    z = (a + b - c) // 2
    num = Counter()
    for n in (x + y + z, x - 1, y - 1, z - 1):
        num += _fact_factors(n)
    den = Counter()
    for n in (y + z - 1, z + x - 1, x + y - 1):
        den += _fact_factors(n)
    common = num & den
    num, den = num - common, den - common
    top, bottom = QPoly.one(), QPoly.one()
    for i, mult in num.items():
        top = top * delta_n(i) ** mult
    for i, mult in den.items():
        bottom = bottom * delta_n(i) ** mult
    return top, bottom


@lru_cache(maxsize=None)
def theta_coeff(a: int, b: int, c: int) -> APoly:
    """Evaluation of the theta graph with edges colored a, b, c.

    Raises NonDivisible when the value is not a Laurent polynomial; use
    :func:`theta_ratio` for those.
    """
    num, den = theta_ratio(a, b, c)
    return exact_div(num, den)


def gamma_twist(a: int, b: int, c: int, sign: int = 1) -> APoly:
    """Half-twist eigenvalue (-1)^((a+b-c)/2) A^(a+b-c+(a^2+b^2-c^2)/2); sign -1 inverts A."""
    if not admissible(a, b, c):
        raise NotAdmissible(f"({a}, {b}, {c}) is not admissible")
    e = a + b - c + (a * a + b * b - c * c) // 2
    return QPoly.monomial(e if sign > 0 else -e, (-1) ** ((a + b - c) // 2))


def torus2m_bracket(m: int, n: int) -> APoly:
    """Unreduced bracket of the closed 2-strand twist region with m half-twists,
    both strands colored n: sum_j gamma(n, n, 2j)^|m| Delta_{2j}.

    The sign of m is the crossing sign of the braid sigma_1^m.
    """
    if n < 0:
        raise OutOfRange("n must be >= 0")
    if m == 0:
        raise OutOfRange("m must be nonzero")
    sign = TWIST_SIGN_OF_POSITIVE if m > 0 else -TWIST_SIGN_OF_POSITIVE
    total = QPoly.zero()
    for j in range(n + 1):
        total = total + gamma_twist(n, n, 2 * j, sign) ** abs(m) * delta_n(2 * j)
    return total


def torus2m_jones(m: int, N: int) -> QPoly:
    """Reduced colored Jones of the closure of sigma_1^m in q, up to +-q^s."""
    if N < 1:
        raise OutOfRange("N must be >= 1")
    n = N - 1
    return a_to_q(exact_div(torus2m_bracket(m, n), delta_n(n)))
