"""Brute-force Kauffman bracket of a braid closure.

This is the independent check on the R-matrix state sum at N = 2.  It never
touches the R-matrix code: it enumerates all 2^c smoothings, counts loops
with a union-find, and works with plain ``Counter`` polynomials in A.

Conventions: for a positive crossing (letter +i, both strands oriented the
same way) the A-smoothing is the oriented one, so a positive curl picks up
-A^3.  The Jones polynomial is (-A^3)^(-writhe) <D> with q = A^(-4).
"""
from collections import Counter
from itertools import product

from .braid import BraidWord, writhe
from .qlaurent import QPoly


def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _loops(b: BraidWord, vertical: tuple) -> int:
    n, L = b.strands, len(b.word)
    # node (t, p): position p just above crossing t; level L wraps to level 0
    def node(t, p):
        return (t % L if L else 0) * n + p

    size = max(L, 1) * n
    parent = list(range(size))

    def union(x, y):
        rx, ry = _find(parent, x), _find(parent, y)
        if rx != ry:
            parent[rx] = ry

    if L == 0:
        return n
    for t, g in enumerate(b.word):
        a = abs(g) - 1
        for p in range(n):
            if p not in (a, a + 1):
                union(node(t, p), node(t + 1, p))
        if vertical[t]:
            union(node(t, a), node(t + 1, a))
            union(node(t, a + 1), node(t + 1, a + 1))
        else:
            union(node(t, a), node(t, a + 1))
            union(node(t + 1, a), node(t + 1, a + 1))
    return len({_find(parent, x) for x in range(size)})


def bracket(b: BraidWord) -> Counter:
    """<closure(b)> as a Counter {A-exponent: coeff}, normalized to <O> = 1."""
    d = Counter({2: -1, -2: -1})
    total = Counter()
    for choice in product((True, False), repeat=len(b.word)):
        # choice[t] True means the A-smoothing at crossing t
        vertical = tuple(c == (g > 0) for c, g in zip(choice, b.word))
        na = sum(choice)
        loops = _loops(b, vertical)
        term = Counter({na - (len(b.word) - na): 1})
        for _ in range(loops - 1):
            term = _mul(term, d)
        total.update(term)
    return Counter({e: c for e, c in total.items() if c})


def _mul(x: Counter, y: Counter) -> Counter:
    out = Counter()
    for e1, c1 in x.items():
        for e2, c2 in y.items():
            out[e1 + e2] += c1 * c2
    return out


def jones_bracket(b: BraidWord) -> QPoly:
    """Jones polynomial of closure(b) in q = A^(-4), from the bracket."""
    w = writhe(b)
    frame = Counter({-3 * w: (-1) ** (w % 2)})
    v = _mul(frame, bracket(b))
    # A^k = q^(-k/4): the exponent in quarter units is -k
    return QPoly({-e: c for e, c in v.items() if c})
