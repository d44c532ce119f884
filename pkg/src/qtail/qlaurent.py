"""Exact sparse Laurent polynomials in q with quarter-integer exponents.

An exponent is stored as an integer count of quarter units, so ``q^(3/2)``
has exponent 6 and ``q^-1`` has exponent -4.  Coefficients are Python ints.

>>> one_minus_q = QPoly({0: 1, 4: -1})
>>> str(one_minus_q * QPoly({0: 1, 4: 1}))
'1 - q^2'
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from . import kernels
from .errors import DivergentProduct, NonDivisible, NonUnitLeadingTerm, OutOfRange

Q = 4  # quarter units per whole power of q


class QPoly:
    """Immutable element of Z[q^(1/4), q^(-1/4)].

    The mapping is kept zero-free so equal values have equal representations.
    Treat ``_terms`` as read-only; every operation returns a new object.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] | None = None):
        if terms is None:
            d = {}
        elif isinstance(terms, Mapping):
            d = {int(e): int(c) for e, c in terms.items() if c}
        else:
            d = {}
            for e, c in terms:
                s = d.get(int(e), 0) + int(c)
                if s:
                    d[int(e)] = s
                else:
                    d.pop(int(e), None)
        self._terms = d
        self._hash = None

    @classmethod
    def _wrap(cls, d: dict) -> QPoly:
        # d must already be zero-free and owned by the new object
        p = cls.__new__(cls)
        p._terms = d
        p._hash = None
        return p

    @classmethod
    def zero(cls) -> QPoly:
        return cls._wrap({})

    @classmethod
    def one(cls) -> QPoly:
        return cls._wrap({0: 1})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> QPoly:
        return cls._wrap({exp: coeff} if coeff else {})

    @classmethod
    def q(cls, power: int | Fraction = 1, coeff: int = 1) -> QPoly:
        """``coeff * q^power`` with ``power`` a multiple of 1/4."""
        e = Fraction(power) * Q
        if e.denominator != 1:
            raise ValueError(f"q^{power} is not on the quarter lattice")
        return cls.monomial(int(e), coeff)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], start: int = 0) -> QPoly:
        """Build ``sum c_i q^(start+i)`` from a list of whole-power coefficients."""
        return cls({Q * (start + i): c for i, c in enumerate(coeffs) if c})

    # -- inspection -------------------------------------------------------
    @property
    def terms(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self._terms.items()))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coeff(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    @property
    def min_exp(self) -> int:
        return min(self._terms)

    @property
    def max_exp(self) -> int:
        return max(self._terms)

    def lowest(self) -> tuple[int, int]:
        e = self.min_exp
        return e, self._terms[e]

    def coefficients(self, n: int) -> list[int]:
        """Coefficients of q^0, q^1, ..., q^(n-1).

        Raises if a term with a non-integral exponent lies in that window,
        since then there is no honest list of whole-power coefficients.
        """
        out = [0] * n
        for e, c in self._terms.items():
            if 0 <= e < Q * n:
                if e % Q:
                    raise ValueError(f"fractional exponent {Fraction(e, Q)} in coefficient window")
                out[e // Q] = c
        return out

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, int):
            other = QPoly.monomial(0, other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return QPoly._wrap(kernels.poly_add(self._terms, other._terms))

    __radd__ = __add__

    def __neg__(self):
        return QPoly._wrap({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = QPoly.monomial(0, other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return QPoly.zero()
            return QPoly._wrap({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, QPoly):
            return NotImplemented
        return QPoly._wrap(kernels.poly_mul(self._terms, other._terms))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = QPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPoly.monomial(0, other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- transformations --------------------------------------------------
    def shift(self, exp: int) -> QPoly:
        """Multiply by q^(exp/4)."""
        return QPoly._wrap({e + exp: c for e, c in self._terms.items()})

    def invert(self) -> QPoly:
        """Substitute q -> 1/q."""
        return QPoly._wrap({-e: c for e, c in self._terms.items()})

    def scale_exponents(self, factor: int) -> QPoly:
        """Substitute q -> q^factor."""
        return QPoly._wrap({e * factor: c for e, c in self._terms.items()})

    def truncate(self, bound: int) -> QPoly:
        """Drop every term with exponent >= bound (quarter units)."""
        return QPoly._wrap({e: c for e, c in self._terms.items() if e < bound})

    # -- text / JSON ------------------------------------------------------
    def to_json(self) -> dict:
        return {"variable": "q", "terms": [[e, str(c)] for e, c in self.terms]}

    @classmethod
    def from_json(cls, obj: Mapping) -> QPoly:
        if obj.get("variable") != "q":
            raise ValueError("expected variable 'q'")
        return cls((int(e), int(c)) for e, c in obj["terms"])

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.terms:
            mono = _format_power(e)
            mag = abs(c)
            if mono == "1":
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"QPoly({dict(self.terms)!r})"


def _format_power(e: int) -> str:
    if e == 0:
        return "1"
    if e == Q:
        return "q"
    if e % Q == 0:
        return f"q^{e // Q}"
    f = Fraction(e, Q)
    return f"q^({f.numerator}/{f.denominator})"


_MONO_RE = re.compile(r"^\s*([+-]?)\s*(?:q(?:\^\(?\s*([+-]?\d+(?:/\d+)?)\s*\)?)?|1)\s*$")


def qp_arith(op: str, a: QPoly, b: QPoly | None = None) -> QPoly:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    raise ValueError(f"unknown operation {op!r}")


@dataclass(frozen=True)
class SignedMonomial:
    """``sign * q^(exp/4)``."""

    sign: int
    exp: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    @classmethod
    def parse(cls, text: str) -> SignedMonomial:
        """Parse ``q``, ``-q^4``, ``q^(3/2)``, ``-1`` and friends."""
        m = _MONO_RE.match(text.replace("−", "-"))
        if not m:
            raise ValueError(f"cannot parse monomial {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        if text.strip().lstrip("+-").strip() == "1":
            return cls(sign, 0)
        power = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        e = power * Q
        if e.denominator != 1:
            raise ValueError(f"{text!r} is not on the quarter lattice")
        return cls(sign, int(e))

    def as_poly(self) -> QPoly:
        return QPoly.monomial(self.exp, self.sign)

    def __mul__(self, other: SignedMonomial) -> SignedMonomial:
        return SignedMonomial(self.sign * other.sign, self.exp + other.exp)

    def __neg__(self) -> SignedMonomial:
        return SignedMonomial(-self.sign, self.exp)

    def power(self, n: int) -> SignedMonomial:
        return SignedMonomial(self.sign ** (n % 2), self.exp * n)

    def __str__(self):
        return ("-" if self.sign < 0 else "") + _format_power(self.exp)


@dataclass(frozen=True)
class CanonicalForm:
    """``sign * q^(shift/4) * normalized`` reconstructs the original input."""

    normalized: QPoly
    sign: int
    shift: int

    def reconstruct(self) -> QPoly:
        return self.normalized.shift(self.shift) * self.sign

    def prefix(self, n: int) -> list[int]:
        return self.normalized.coefficients(n)


def qp_canonical(p: QPoly) -> CanonicalForm:
    """Normalize so the lowest term sits at q^0 with a positive coefficient."""
    if p.is_zero():
        return CanonicalForm(QPoly.zero(), 1, 0)
    e, c = p.lowest()
    sign = 1 if c > 0 else -1
    return CanonicalForm(p.shift(-e) * sign, sign, e)


canonical = qp_canonical


def qp_agree_mod(a: QPoly, b: QPoly, n: int) -> bool:
    """True iff a and b coincide up to +-q^s modulo q^n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    ca = qp_canonical(a).normalized.truncate(Q * n)
    cb = qp_canonical(b).normalized.truncate(Q * n)
    return ca == cb


agree_mod = qp_agree_mod


def qp_exact_div(num: QPoly, den: QPoly) -> QPoly:
    """Return the Laurent polynomial Q with Q*den == num, or raise NonDivisible."""
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero():
        return QPoly.zero()
    d_low, d_coeff = den.lowest()
    d_span = den.max_exp - d_low
    num_max = num.max_exp
    dterms = den._terms
    rem = dict(num._terms)
    quot = {}
    while rem:
        e = min(rem)
        c = rem[e]
        qe = e - d_low
        if c % d_coeff or qe + d_low + d_span > num_max:
            raise NonDivisible(f"{num} is not divisible by {den}")
        qc = c // d_coeff
        quot[qe] = qc
        for de, dc in dterms.items():
            k = qe + de
            s = rem.get(k, 0) - qc * dc
            if s:
                rem[k] = s
            else:
                rem.pop(k, None)
    return QPoly._wrap(quot)


exact_div = qp_exact_div


def qp_series_div(num: QPoly, den: QPoly, order: int) -> QPoly:
    """Power-series quotient canonical(num)/canonical(den), truncated below q^order."""
    n = qp_canonical(num).normalized
    d = qp_canonical(den).normalized
    if d.is_zero() or d.coeff(0) != 1:
        raise NonUnitLeadingTerm(f"lowest coefficient of {den} is not a unit")
    bound = Q * order
    return _series_quotient(n, d, bound)


series_div = qp_series_div


def _series_quotient(n: QPoly, d: QPoly, bound: int) -> QPoly:
    # d has constant term exactly 1
    rem = {e: c for e, c in n._terms.items() if e < bound}
    dterms = [(e, c) for e, c in d._terms.items() if e < bound]
    quot = {}
    while rem:
        e = min(rem)
        c = rem.pop(e)
        quot[e] = c
        for de, dc in dterms:
            if de == 0:
                continue
            k = e + de
            if k >= bound:
                continue
            s = rem.get(k, 0) - c * dc
            if s:
                rem[k] = s
            else:
                rem.pop(k, None)
    return QPoly._wrap(quot)


def series_inverse(p: QPoly, order: int) -> QPoly:
    """1/p as a power series below q^order; p must have constant term 1."""
    if p.coeff(0) != 1 or p.min_exp < 0:
        raise NonUnitLeadingTerm(f"{p} has no unit constant term")
    return _series_quotient(QPoly.one(), p, Q * order)


INF = math.inf


def pochhammer(a: SignedMonomial, k, order: int | None = None,
               base: SignedMonomial | None = None) -> QPoly:
    """(a; base)_k = prod_{j<k} (1 - a*base^j); base defaults to q.

    For ``k = INF`` the product is truncated below q^order.
    """
    if base is None:
        base = SignedMonomial(1, Q)
    if k == INF or k is None:
        if order is None:
            raise ValueError("infinite product needs an order")
        if a.exp <= 0 or base.exp <= 0:
            raise DivergentProduct(f"({a}; {base})_inf does not converge")
        bound = Q * order
        result = QPoly.one().truncate(bound)
        factor = a
        while factor.exp < bound:
            result = (result * (QPoly.one() - factor.as_poly())).truncate(bound)
            factor = factor * base
        return result
    if k < 0:
        raise OutOfRange("k must be a natural number or INF")
    if base.exp == Q and base.sign == 1 and a.sign == 1 and a.exp == Q:
        return _qq(k)
    result = QPoly.one()
    factor = a
    for _ in range(k):
        result = result * (QPoly.one() - factor.as_poly())
        factor = factor * base
    return result


@lru_cache(maxsize=None)
def _qq(k: int) -> QPoly:
    # (q;q)_k, the workhorse for binomials and brace factorials
    if k == 0:
        return QPoly.one()
    return _qq(k - 1) * QPoly({0: 1, Q * k: -1})


def qq(k: int) -> QPoly:
    """(q;q)_k."""
    if k < 0:
        raise OutOfRange("k must be >= 0")
    return _qq(k)


@lru_cache(maxsize=None)
def gauss_binomial(n: int, k: int) -> QPoly:
    if not 0 <= k <= n:
        raise OutOfRange(f"binomial ({n} choose {k}) out of range")
    return qp_exact_div(_qq(n), _qq(k) * _qq(n - k))


@lru_cache(maxsize=None)
def brace(m: int, factorial: bool = False) -> QPoly:
    """{m} = q^(m/2) - q^(-m/2), or {m}! = {1}{2}...{m} when factorial is set."""
    if m < 0:
        raise OutOfRange("m must be >= 0")
    if not factorial:
        return QPoly([(2 * m, 1), (-2 * m, -1)])
    if m == 0:
        return QPoly.one()
    return brace(m - 1, True) * brace(m)
