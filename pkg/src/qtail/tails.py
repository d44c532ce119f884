"""Heads and tails: the stabilized leading coefficients of canonical J_N.

The tail is read off the q -> 0 end of canonical(J_N(q)); the head is the
tail of J_N(1/q), which for a braid is the tail of its mirror.  Nothing is
assumed about stabilization: every consecutive pair of colors is compared
and the agreement depths are part of the report.

A *source* is anything that maps a color N to J_N, either as an exact
:class:`QPoly` or (for rational link formulas) as a canonical
:class:`TruncatedSeries`.  :func:`braid_source` and :func:`torus_source`
build the standard ones.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable

from .braid import BraidWord, torus_braid
from .errors import MethodMismatch, OutOfRange
from .qlaurent import QPoly, canonical
from .series import TruncatedSeries

METHODS = ("statesum", "skein", "morton", "hikami", "psi", "walk25")


@dataclass(frozen=True)
class Source:
    """A named color -> J_N map."""
    name: str
    fn: Callable = field(compare=False)

    def __call__(self, N: int):
        return self.fn(N)


def braid_source(b: BraidWord, method: str = "statesum", workers: int | None = None) -> Source:
    if method != "statesum":
        raise MethodMismatch(f"method {method!r} needs a torus spec, not a braid")
    from .statesum import jones_statesum
    return Source(f"statesum {b}", lambda N: jones_statesum(b, N, workers))


def torus_source(m: int, p: int, method: str = "statesum", workers: int | None = None) -> Source:
    """Source for the (m, p) torus knot or link; p < 0 is the negative one."""
    from . import skein, torusformulas as tf

    if m < 2 or p == 0:
        raise OutOfRange("torus spec needs m >= 2 and p != 0")
    if method not in METHODS:
        raise MethodMismatch(f"unknown method {method!r}")
    name = f"{method} T({m},{p})"
    if method == "statesum":
        return replace(braid_source(torus_braid(m, p), "statesum", workers), name=name)
    if method == "psi":
        if math.gcd(m, p) != 1:
            raise MethodMismatch(f"psi covers torus knots only; gcd({m}, {p}) != 1")
        return Source(name, lambda N: tf.psi_jones(m, p, N))
    if m != 2:
        raise MethodMismatch(f"method {method!r} only covers 2-strand torus knots and links")
    if method == "skein":
        return Source(name, lambda N: skein.torus2m_jones(p, N))
    if method == "morton":
        if p % 2 == 0 or abs(p) < 3:
            raise MethodMismatch("morton covers (2, 2k+1) torus knots with k >= 1")
        k = (abs(p) - 1) // 2
        if p < 0:
            return Source(name, lambda N: tf.morton_2odd(k, N))
        return Source(name, lambda N: tf.morton_2odd(k, N).invert())
    if method == "hikami":
        if p % 2 or p > 0:
            raise MethodMismatch("hikami covers negative (2, 2k) torus links")
        k = -p // 2
        return Source(name, lambda N: tf.hikami_jones(k, N))
    # walk25
    if p != 5:
        raise MethodMismatch("walk25 covers only the positive (2, 5) torus knot")
    return Source(name, tf.walk_25)


@dataclass(frozen=True)
class TailReport:
    colors: list
    prefixes: list
    agreement: list
    stabilized: TruncatedSeries
    status: str

    def to_json(self) -> dict:
        return {"colors": list(self.colors), "agreement": list(self.agreement),
                "stabilized": self.stabilized.to_json(), "status": self.status}

    @classmethod
    def from_json(cls, obj) -> TailReport:
        st = TruncatedSeries.from_json(obj["stabilized"])
        return cls(list(obj["colors"]), [], list(obj["agreement"]), st, obj["status"])

    def __str__(self):
        lines = [f"status: {self.status}",
                 f"colors: {' '.join(map(str, self.colors))}",
                 f"agreement: {' '.join(map(str, self.agreement))}",
                 f"stabilized: {self.stabilized}"]
        return "\n".join(lines)


def _canonical_prefix(value, n: int, head: bool) -> list[int]:
    if isinstance(value, TruncatedSeries):
        if head:
            raise MethodMismatch("a series-only source has no head")
        if value.order < n:
            raise OutOfRange(f"series order {value.order} is below the requested {n}")
        return value.coefficients()[:n]
    if head:
        value = value.invert()
    return canonical(value).normalized.coefficients(n)


def _depth(a: list[int], b: list[int]) -> int:
    n = min(len(a), len(b))
    for i in range(n):
        if a[i] != b[i]:
            return i
    return n


def _extract(source, colors: list[int], order: int, head: bool, ok_status: str) -> TailReport:
    if order < 1:
        raise OutOfRange("order must be >= 1")
    if not colors:
        raise OutOfRange("no colors to extract from")
    values = [source(N) for N in colors]
    top = colors[-1]
    prefixes = [_canonical_prefix(v, N, head) for v, N in zip(values, colors)]

    agreement = [_depth(prefixes[i], prefixes[i + 1]) for i in range(len(colors) - 1)]
    full = all(d >= N for d, N in zip(agreement, colors))
    if full:
        depth = top
    else:
        depth = min(d for d, N in zip(agreement, colors) if d < N)
    depth = max(1, min(depth, order))  # the constant term 1 is always shared
    status = ok_status if full and agreement else "not_stabilized"
    stabilized = TruncatedSeries(depth, QPoly.from_coeffs(prefixes[-1][:depth]))
    return TailReport(list(colors), prefixes, agreement, stabilized, status)


def _check_nmax(N_max: int):
    if N_max < 1:
        raise OutOfRange("N_max must be >= 1")


def tail_extract(source, N_max: int, order: int) -> TailReport:
    """Tail report from colors 1..N_max.

    Colors N and N+1 are compared on their first N canonical coefficients.
    The stabilized series is cut from J_{N_max} at the verified depth (at
    most ``order``); status is ``stabilized`` only if every pair agrees to
    full depth N.
    """
    _check_nmax(N_max)
    return _extract(source, list(range(1, N_max + 1)), order, False, "stabilized")


def head_extract(source, N_max: int, order: int) -> TailReport:
    """As :func:`tail_extract` after q -> 1/q."""
    _check_nmax(N_max)
    return _extract(source, list(range(1, N_max + 1)), order, True, "stabilized")


def _split(source, N_max: int, order: int, modulus: int, head: bool) -> list[TailReport]:
    if modulus not in (1, 2):
        raise OutOfRange("modulus must be 1 or 2")
    _check_nmax(N_max)
    if modulus == 1:
        return [_extract(source, list(range(1, N_max + 1)), order, head, "stabilized")]
    if N_max < 2:
        raise OutOfRange("N_max too small for a parity split")
    reports = []
    for r in (1, 0):
        colors = [N for N in range(1, N_max + 1) if N % 2 == r]
        reports.append(_extract(source, colors, order, head, "split_by_parity"))
    return reports


def multi_head_extract(source, N_max: int, order: int, modulus: int = 2) -> list[TailReport]:
    """Head reports along residue classes of N mod ``modulus``.

    With modulus 2 the first report is odd N, the second even N, and pairs
    (N, N+2) are compared; a class that stabilizes gets status
    ``split_by_parity``.  Modulus 1 is exactly :func:`head_extract`.
    """
    return _split(source, N_max, order, modulus, True)


def multi_tail_extract(source, N_max: int, order: int, modulus: int = 2) -> list[TailReport]:
    """The tail-side counterpart of :func:`multi_head_extract`."""
    return _split(source, N_max, order, modulus, False)


def tail_product(t1: TruncatedSeries, t2: TruncatedSeries) -> TruncatedSeries:
    """Product of two tails, kept to the smaller order."""
    return t1 * t2
