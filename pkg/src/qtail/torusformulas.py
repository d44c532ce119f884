"""Closed formulas for colored Jones polynomials of torus knots and links.

All of these are known only up to a factor +-q^s, so comparisons go through
canonical forms.  Each formula gives (q^N - 1) J_N as a finite sum; knots
divide exactly, while for links we only ever need the series prefix, and
below q^N the factor q^N - 1 is invisible after canonicalization.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NotCoprime, OutOfRange
from .qlaurent import Q, QPoly, canonical, exact_div, gauss_binomial, qq, series_div
from .series import TruncatedSeries


@dataclass(frozen=True)
class TorusSpec:
    m: int
    p: int

    def __post_init__(self):
        if self.m < 2 or self.p == 0:
            raise OutOfRange("torus spec needs m >= 2 and p != 0")

    @property
    def components(self) -> int:
        return math.gcd(self.m, abs(self.p))


def _qn_minus_one(N: int) -> QPoly:
    return QPoly({Q * N: 1, 0: -1})


def morton_sum(k: int, N: int) -> QPoly:
    """sum_{R=-N+1}^{N} (-1)^R q^(k(R^2-R) + (R^2+R)/2)."""
    return QPoly((Q * (k * (R * R - R) + (R * R + R) // 2), (-1) ** (R % 2))
                 for R in range(-N + 1, N + 1))


def morton_2odd(k: int, N: int, mode: str = "exact") -> QPoly:
    """Colored Jones of the negative (2, 2k+1) torus knot.

    ``exact`` divides the sum by q^N - 1 (a NonDivisible here would mean a
    convention error); ``tail`` returns the canonical sum truncated below q^N.
    """
    if k < 1 or N < 1:
        raise OutOfRange("need k >= 1 and N >= 1")
    s = morton_sum(k, N)
    if mode == "exact":
        return exact_div(s, _qn_minus_one(N))
    if mode == "tail":
        return canonical(s).normalized.truncate(Q * N)
    raise ValueError(f"unknown mode {mode!r}")


def hikami_sum(k: int, Ncolor: int) -> QPoly:
    """sum_{r<Ncolor} q^(k r^2 + (k+1) r + 1) - q^(k r^2 + (k-1) r).

    r runs over Ncolor values; one term fewer leaves an error at depth about
    k (Ncolor-1)^2, which for k = 1, Ncolor = 2 already shows up below q^2.
    """
    terms = []
    for r in range(Ncolor):
        terms.append((Q * (k * r * r + (k + 1) * r + 1), 1))
        terms.append((Q * (k * r * r + (k - 1) * r), -1))
    return QPoly(terms)


def hikami_2even(k: int, Ncolor: int, order: int) -> TruncatedSeries:
    """Canonical series of J_Ncolor for the negative (2, 2k) torus link."""
    if k < 1 or Ncolor < 1:
        raise OutOfRange("need k >= 1 and Ncolor >= 1")
    if Ncolor == 1:
        return TruncatedSeries.of(QPoly.one(), order)
    return TruncatedSeries(order, series_div(hikami_sum(k, Ncolor), _qn_minus_one(Ncolor), order))


def hikami_jones(k: int, Ncolor: int) -> QPoly:
    """J_Ncolor of the negative (2, 2k) torus link by exact division."""
    if k < 1 or Ncolor < 1:
        raise OutOfRange("need k >= 1 and Ncolor >= 1")
    return exact_div(hikami_sum(k, Ncolor), _qn_minus_one(Ncolor))


def psi_exponent(m: int, p: int, s: int, shifted: bool) -> int:
    """4 * psi_{m,p}(r) for r = s/2, or 4 * psi_{m,p}(r + 1/m) when shifted.

    psi_{m,p}(r) = r^2 m p - r p + r m.
    """
    if shifted:
        return p * s * (m * s + 2) + 2 * m * s + 4
    return s * s * m * p - 2 * s * p + 2 * s * m


def psi_sum(m: int, p: int, N: int, direction: str = "head") -> QPoly:
    """sum_r q^psi(r + 1/m) - q^psi(r), r = -(N-1)/2 .. (N-1)/2 in unit steps.

    For p > 0 the displayed sum ("head") is (q^N - 1) J_N(1/q) of the
    positive (m, p) torus knot up to +-q^s; ``tail-side`` substitutes
    q -> 1/q.  A negative p is the mirror knot, so the two directions swap.
    """
    if m < 2 or p == 0:
        raise OutOfRange("need m >= 2 and p != 0")
    if math.gcd(m, abs(p)) != 1:
        raise NotCoprime(f"gcd({m}, {p}) != 1")
    if N < 1:
        raise OutOfRange("N must be >= 1")
    if direction not in ("head", "tail-side"):
        raise ValueError(f"unknown direction {direction!r}")
    ap = abs(p)
    terms = []
    for s in range(-(N - 1), N, 2):  # s = 2r
        terms.append((psi_exponent(m, ap, s, True), 1))
        terms.append((psi_exponent(m, ap, s, False), -1))
    total = QPoly(terms)
    flip = (direction == "tail-side") != (p < 0)
    return total.invert() if flip else total


def psi_jones(m: int, p: int, N: int, mode: str = "exact") -> QPoly:
    """J_N of the (m, p) torus knot (p < 0 for the mirror), up to +-q^s."""
    s = psi_sum(m, p, N, "tail-side")
    if mode == "exact":
        return exact_div(s, _qn_minus_one(N))
    if mode == "tail":
        return canonical(s).normalized.truncate(Q * N)
    raise ValueError(f"unknown mode {mode!r}")


def walk_25(N: int) -> QPoly:
    """Colored Jones of the positive (2,5) torus knot from the two-walk sum."""
    if N < 1:
        raise OutOfRange("N must be >= 1")
    total = QPoly.zero()
    for n in range(N):
        prod = QPoly.one()
        for i in range(n):
            prod = prod * QPoly({0: 1, Q * (N - 1 - i): -1})
        inner = QPoly.zero()
        for k in range(n + 1):
            inner = inner + gauss_binomial(n, k).shift(Q * (n * N + k * (2 * N - 1 - n)))
        total = total + inner * prod
    return total.shift(Q * 2 * (N - 1))


def walk_2odd_tail(k: int, N: int, order: int) -> TruncatedSeries:
    """(q;q)_{N-1} sum q^(sum_j N_j(N_j+1)) / prod_j (q;q)_{n_j} over
    n_1 + ... + n_{k-1} <= N-1, N_j = n_1 + ... + n_j, truncated below q^order.

    Each summand is a polynomial: (q;q)_{N-1} / prod (q;q)_{n_j} is a
    q-multinomial times (q;q)_{N-1-sum n_j}.
    """
    if k < 1 or N < 1:
        raise OutOfRange("need k >= 1 and N >= 1")
    bound = Q * order
    top = qq(N - 1)
    acc = QPoly.zero()

    def walk(depth, used, exp, denom_idx):
        nonlocal acc
        if exp >= order:
            return
        if depth == k - 1:
            den = QPoly.one()
            for n in denom_idx:
                den = den * qq(n)
            acc = acc + exact_div(top, den).truncate(bound - Q * exp).shift(Q * exp)
            return
        for n in range(N - used):
            M = used + n
            walk(depth + 1, M, exp + M * (M + 1), denom_idx + (n,))

    walk(0, 0, 0, ())
    return TruncatedSeries.of(acc, order)
