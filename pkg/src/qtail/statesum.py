"""Reduced colored Jones polynomial from a braid by an R-matrix state sum.

Labels are integers in [0, N-1] on the arcs of the braid.  Every strand but
the leftmost is closed up; the leftmost carries a fixed label at top and
bottom.  Each crossing contributes an R-matrix entry, each closing arc a
factor mu_j, and the total is corrected by the framing factor
q^(w (N^2-1)/4), w the writhe.

The sum is organized as a dynamic program over horizontal levels: for each
top labelling we push a dictionary {labels: weight} through the crossings.
Labels are conserved at each crossing (i + j = k + l), and a position that
no later crossing touches must already carry its top label, so states
violating that are dropped as soon as they appear.
"""
from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from . import kernels
from .braid import BraidWord
from .conventions import R_POWER_OF_POSITIVE
from .errors import OutOfRange
from .qlaurent import QPoly, brace, exact_div


@dataclass(frozen=True)
class StateSumConfig:
    N: int
    fixed_label: int = 0
    prune: bool = True

    def __post_init__(self):
        if self.N < 1:
            raise OutOfRange("color N must be >= 1")
        if not 0 <= self.fixed_label < self.N:
            raise OutOfRange(f"fixed label must lie in [0, {self.N - 1}]")


def _bf(m):
    return brace(m, True)


@lru_cache(maxsize=None)
def r_entry(N: int, sign: int, i: int, j: int, k: int, l: int) -> QPoly:
    """Entry (i j / k l) of R (sign +1) or R^-1 (sign -1).

    i, j label the top ends (left, right) and k, l the bottom ends.
    """
    for x in (i, j, k, l):
        if not 0 <= x < N:
            raise OutOfRange(f"label {x} outside [0, {N - 1}]")
    c2 = N - 1  # twice the center (N-1)/2
    if sign > 0:
        m = l - i
        if j - k != m or m < 0 or m > min(N - 1 - i, j):
            return QPoly.zero()
        coeff = exact_div(_bf(l) * _bf(N - 1 - k), _bf(i) * _bf(m) * _bf(N - 1 - j))
        e = -(2 * i - c2) * (2 * j - c2) + 2 * m * (i - j) + m * (m + 1)
        if m % 2:
            coeff = -coeff
    else:
        m = i - l
        if k - j != m or m < 0 or m > min(N - 1 - j, i):
            return QPoly.zero()
        coeff = exact_div(_bf(k) * _bf(N - 1 - l), _bf(j) * _bf(m) * _bf(N - 1 - i))
        e = (2 * i - c2) * (2 * j - c2) + 2 * m * (i - j) - m * (m + 1)
    return coeff.shift(e)


def mu_factor(N: int, j: int) -> QPoly:
    """mu_j = q^(-(2j-N+1)/2)."""
    if not 0 <= j < N:
        raise OutOfRange(f"label {j} outside [0, {N - 1}]")
    return QPoly.monomial(-2 * (2 * j - N + 1))


@lru_cache(maxsize=None)
def _table(N: int, sign: int, prune: bool) -> list:
    """table[i][j] = [(k, l, weight_dict), ...] for the nonzero entries."""
    table = []
    for i in range(N):
        row = []
        for j in range(N):
            cell = []
            if prune:
                # conservation i + j = k + l leaves one free parameter
                pairs = [(k, i + j - k) for k in range(N) if 0 <= i + j - k < N]
            else:
                pairs = list(itertools.product(range(N), repeat=2))
            for k, l in pairs:
                r = r_entry(N, sign, i, j, k, l)
                if r:
                    cell.append((k, l, dict(r._terms)))
            row.append(cell)
        table.append(row)
    return table


def _plan(b: BraidWord, prune: bool):
    """Per crossing: (position, R power, freeze_left, freeze_right)."""
    last = {}
    for t, g in enumerate(b.word):
        a = abs(g) - 1
        last[a] = t
        last[a + 1] = t
    plan = []
    for t, g in enumerate(b.word):
        a = abs(g) - 1
        power = R_POWER_OF_POSITIVE if g > 0 else -R_POWER_OF_POSITIVE
        plan.append((a, power, prune and last[a] == t, prune and last[a + 1] == t))
    return plan


@lru_cache(maxsize=None)
def _prepared(N: int, sign: int, prune: bool):
    """Backend form of the table, or None if its entries overflow int64."""
    try:
        return kernels.prepare_table(_table(N, sign, prune))
    except OverflowError:
        return None


def _steps(b: BraidWord, N: int, prune: bool):
    exact, fast = [], []
    for a, power, fl, fr in _plan(b, prune):
        exact.append((a, _table(N, power, prune), fl, fr))
        fast.append((a, _prepared(N, power, prune), fl, fr))
    if any(step[1] is None for step in fast):
        fast = None
    return fast, exact


def _sum_for_tops(b: BraidWord, N: int, prune: bool, tops: list) -> dict:
    fast, exact = _steps(b, N, prune)
    total = {}
    for top in tops:
        w = kernels.run_top_checked(top, fast, exact)
        if not w:
            continue
        mu = 0
        for lab in top[1:]:
            mu += -2 * (2 * lab - N + 1)
        for e, c in w.items():
            total[e + mu] = total.get(e + mu, 0) + c
    return total


def _worker_count(workers):
    if workers is not None:
        return max(1, int(workers))
    env = os.environ.get("QTAIL_THREADS")
    if env:
        n = int(env)
        if n < 1:
            raise ValueError("QTAIL_THREADS must be a positive integer")
        return n
    return 1


def jones_statesum(b: BraidWord, cfg: StateSumConfig | int, workers: int | None = None) -> QPoly:
    """Reduced colored Jones polynomial J_N of the closure of b.

    ``cfg`` may be a bare color N.  ``workers`` (or ``QTAIL_THREADS``) splits
    the top labellings across processes; the result does not depend on it.
    """
    if isinstance(cfg, int):
        cfg = StateSumConfig(cfg)
    N = cfg.N
    if N == 1:
        return QPoly.one()
    tops = [(cfg.fixed_label,) + rest for rest in itertools.product(range(N), repeat=b.strands - 1)]
    n = min(_worker_count(workers), len(tops))
    if n <= 1:
        total = _sum_for_tops(b, N, cfg.prune, tops)
    else:
        chunks = [tops[i::n] for i in range(n)]
        total = {}
        with ProcessPoolExecutor(max_workers=n) as ex:
            futures = [ex.submit(_sum_for_tops, b, N, cfg.prune, c) for c in chunks]
            for f in futures:
                for e, c in f.result().items():
                    total[e] = total.get(e, 0) + c
    # R-matrix powers determine the framing correction
    w = sum(R_POWER_OF_POSITIVE if g > 0 else -R_POWER_OF_POSITIVE for g in b.word)
    frame = w * (N * N - 1)
    return QPoly({e + frame: c for e, c in total.items() if c})


def link24_formula(N: int) -> QPoly:
    """Closed double sum for the (2,-4) torus link obtained from sigma_1^-4 with
    fixed label 0: only states with labels (0, j), (j, 0), (j-l, l), (j, 0)
    survive."""
    if N < 1:
        raise OutOfRange("N must be >= 1")
    c2 = N - 1
    total = QPoly.zero()
    for j in range(N):
        for l in range(j + 1):
            num = _bf(N - 1 - l) * _bf(j) * _bf(N - 1)
            den = _bf(N - 1 - j) * _bf(l) * _bf(j - l) * _bf(N - 1 - j + l)
            # 4 * exponent of the displayed monomial
            e = (-2 * (2 * j - c2) - 3 * (2 * j - c2) * c2 - 2 * (l - j + 1) * (j - l)
                 + (2 * (j - l) - c2) * (2 * l - c2))
            total = total + exact_div(num, den).shift(e)
    return total.shift(4 * (1 - N * N))
