"""Truncated q-series: theta and false theta functions, the Euler function,
and both sides of the Rogers-Ramanujan type identities.

Every constructor returns a :class:`TruncatedSeries` whose polynomial is the
exact prefix of the series below ``q^order``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import DivergentSeries
from .qlaurent import INF, Q, QPoly, SignedMonomial, pochhammer, qq, series_inverse


@dataclass(frozen=True)
class TruncatedSeries:
    order: int
    poly: QPoly

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be >= 1")
        if self.poly and (self.poly.min_exp < 0 or self.poly.max_exp >= Q * self.order):
            raise ValueError("series terms must lie in [0, order)")

    @classmethod
    def of(cls, poly: QPoly, order: int) -> TruncatedSeries:
        return cls(order, poly.truncate(Q * order))

    def coefficients(self) -> list[int]:
        return self.poly.coefficients(self.order)

    def truncate(self, order: int) -> TruncatedSeries:
        return TruncatedSeries.of(self.poly, min(order, self.order))

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        order = min(self.order, other.order)
        return TruncatedSeries.of(self.poly * other.poly, order)

    def to_json(self) -> dict:
        return {"order": self.order, "poly": self.poly.to_json()}

    @classmethod
    def from_json(cls, obj) -> TruncatedSeries:
        return cls(int(obj["order"]), QPoly.from_json(obj["poly"]))

    def __str__(self):
        return f"{self.poly} + O(q^{self.order})"


def _check_args(a: SignedMonomial, b: SignedMonomial):
    if a.exp < 0 or b.exp < 0 or a.exp + b.exp <= 0:
        raise DivergentSeries(f"arguments {a}, {b} do not give a convergent q-series")


def _tri(n: int) -> int:
    return n * (n + 1) // 2


def _term(a: SignedMonomial, b: SignedMonomial, ka: int, kb: int) -> tuple[int, int]:
    """(exponent, sign) of a^ka * b^kb."""
    sign = (a.sign ** (ka % 2)) * (b.sign ** (kb % 2))
    return a.exp * ka + b.exp * kb, sign


def _one_sided(a, b, bound, start, swap):
    # sum over k >= start of a^T(k) b^T(k-1), or with the roles of the
    # triangular numbers swapped; exponents are nondecreasing in k >= 0
    terms = []
    k = start
    while True:
        ka, kb = (_tri(k - 1), _tri(k)) if swap else (_tri(k), _tri(k - 1))
        e, s = _term(a, b, ka, kb)
        if e >= bound:
            return terms
        terms.append((e, s))
        k += 1


def theta_f(a: SignedMonomial, b: SignedMonomial, order: int) -> TruncatedSeries:
    """Ramanujan's f(a,b) = sum over all integers k of a^(k(k+1)/2) b^(k(k-1)/2)."""
    _check_args(a, b)
    bound = Q * order
    terms = _one_sided(a, b, bound, 0, swap=False) + _one_sided(a, b, bound, 1, swap=True)
    return TruncatedSeries(order, QPoly(terms))


def theta_f_product(a: SignedMonomial, b: SignedMonomial, order: int) -> TruncatedSeries:
    """f(a,b) through the triple product (-a;ab)_inf (-b;ab)_inf (ab;ab)_inf."""
    _check_args(a, b)
    ab = a * b
    bound = Q * order
    p = pochhammer(-a, INF, order, base=ab) if a.exp > 0 else _finite_start(-a, ab, order)
    p = (p * (pochhammer(-b, INF, order, base=ab) if b.exp > 0 else _finite_start(-b, ab, order)))
    p = (p.truncate(bound) * pochhammer(ab, INF, order, base=ab)).truncate(bound)
    return TruncatedSeries(order, p)


def _finite_start(x: SignedMonomial, base: SignedMonomial, order: int) -> QPoly:
    # (x; base)_inf when x = +-1: first factor is a constant, the rest converge
    head = QPoly.one() - x.as_poly()
    return head * pochhammer(x * base, INF, order, base=base)


def false_theta_psi(a: SignedMonomial, b: SignedMonomial, order: int) -> TruncatedSeries:
    """Psi(a,b) = sum_{k>=0} a^T(k) b^T(k-1) - sum_{k>=1} a^T(k-1) b^T(k)."""
    _check_args(a, b)
    bound = Q * order
    plus = _one_sided(a, b, bound, 0, swap=False)
    minus = [(e, -s) for e, s in _one_sided(a, b, bound, 1, swap=True)]
    return TruncatedSeries(order, QPoly(plus + minus))


def euler_inf(order: int) -> TruncatedSeries:
    """(q;q)_inf."""
    return TruncatedSeries(order, pochhammer(SignedMonomial(1, Q), INF, order))


def _inverse_qq(n: int, order: int) -> QPoly:
    return series_inverse(qq(n).truncate(Q * order), order)


def andrews_gordon_rhs(k: int, order: int, partial_sums: str = "prefix") -> TruncatedSeries:
    """(q;q)_inf * sum q^(N_1^2+...+N_{k-1}^2 + N_1+...+N_{k-1}) / prod (q;q)_{n_i}.

    ``partial_sums="prefix"`` uses N_j = n_1+...+n_j, ``"suffix"`` uses
    N_j = n_j+...+n_{k-1}; the two readings give the same series.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    if partial_sums == "prefix":
        total = _multisum_prefix(k - 1, order, lambda N: N * N + N)
    elif partial_sums == "suffix":
        total = _multisum_suffix(k - 1, order)
    else:
        raise ValueError("partial_sums must be 'prefix' or 'suffix'")
    return TruncatedSeries.of(euler_inf(order).poly * total, order)


def _multisum_prefix(count: int, order: int, weight) -> QPoly:
    """sum over n_1..n_count >= 0 of q^(sum weight(N_j)) / prod (q;q)_{n_j}, N_j cumulative."""
    bound = Q * order
    inv = {}

    def inv_qq(n):
        if n not in inv:
            inv[n] = _inverse_qq(n, order)
        return inv[n]

    acc = {}

    def walk(depth, N, exp, denom):
        if depth == count:
            term = (denom.shift(Q * exp)).truncate(bound)
            for e, c in term._terms.items():
                acc[e] = acc.get(e, 0) + c
            return
        remaining = count - depth
        n = 0
        while True:
            M = N + n
            # later partial sums are >= M, so this bounds the final exponent
            low = exp + remaining * weight(M)
            if low >= order:
                break
            walk(depth + 1, M, exp + weight(M), (denom * inv_qq(n)).truncate(bound))
            n += 1

    walk(0, 0, 0, QPoly.one())
    return QPoly(acc)


def _multisum_suffix(count: int, order: int) -> QPoly:
    # brute-force enumeration with the suffix reading of the partial sums
    bound = Q * order
    top = 0
    while top * top + top < order:
        top += 1
    acc = QPoly.zero()
    for ns in itertools.product(range(top + 1), repeat=count):
        Ns = [sum(ns[j:]) for j in range(count)]
        exp = sum(N * N + N for N in Ns)
        if exp >= order:
            continue
        term = QPoly.one()
        for n in ns:
            term = (term * _inverse_qq(n, order)).truncate(bound)
        acc = acc + term.shift(Q * exp).truncate(bound)
    return acc


def ramanujan_p200(form: str, order: int) -> TruncatedSeries:
    """The three series for Psi(q^3, q).

    ``alternating``: sum (-1)^k q^((k^2+k)/2)
    ``entry9``:      (q;q)_inf   sum q^(k^2+k) / (q;q)_k^2
    ``p200``:        (q;q)_inf^2 sum q^k / (q;q)_k^2
    """
    bound = Q * order
    if form == "alternating":
        terms = []
        k = 0
        while _tri(k) < order:
            terms.append((Q * _tri(k), (-1) ** k))
            k += 1
        return TruncatedSeries(order, QPoly(terms))
    euler = euler_inf(order).poly
    if form == "entry9":
        prefactor, exponent = euler, (lambda k: k * k + k)
    elif form == "p200":
        prefactor, exponent = (euler * euler).truncate(bound), (lambda k: k)
    else:
        raise ValueError(f"unknown form {form!r}")
    acc = QPoly.zero()
    k = 0
    while exponent(k) < order:
        inv = _inverse_qq(k, order)
        acc = acc + (inv * inv).truncate(bound).shift(Q * exponent(k)).truncate(bound)
        k += 1
    return TruncatedSeries.of(prefactor * acc, order)
