"""Braid words, their text syntax, and combinatorial properties of closures.

A braid is written ``"<strands>: g1 g2 ..."`` where ``+i`` is the generator
sigma_i (a positive crossing between strands i and i+1) and ``-i`` its
inverse.  Letters are read top to bottom.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from importlib import resources

from .errors import BraidRangeError, BraidSyntaxError, NotAKnot


@dataclass(frozen=True)
class BraidWord:
    strands: int
    word: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(int(g) for g in self.word))
        if self.strands < 1:
            raise BraidRangeError("a braid needs at least one strand")
        for g in self.word:
            if g == 0 or abs(g) >= self.strands:
                raise BraidRangeError(f"letter {g} out of range for {self.strands} strands")

    def __str__(self):
        return format_braid(self)

    def __len__(self):
        return len(self.word)


_HEADER = re.compile(r"^\s*(\d+)\s*:(.*)$", re.S)
_LETTER = re.compile(r"^[+-]?\d+$")


def parse_braid(text: str) -> BraidWord:
    m = _HEADER.match(text)
    if not m:
        raise BraidSyntaxError(f"expected '<strands>: letters', got {text!r}")
    letters = []
    for tok in m.group(2).split():
        if not _LETTER.match(tok):
            raise BraidSyntaxError(f"malformed letter {tok!r}")
        g = int(tok)
        if g == 0:
            raise BraidRangeError("letter 0 is not a generator")
        letters.append(g)
    return BraidWord(int(m.group(1)), tuple(letters))


def format_braid(b: BraidWord) -> str:
    if not b.word:
        return f"{b.strands}:"
    return f"{b.strands}: " + " ".join(str(g) for g in b.word)


def writhe(b: BraidWord) -> int:
    return sum(1 if g > 0 else -1 for g in b.word)


def permutation(b: BraidWord) -> tuple[int, ...]:
    """perm[i] is the bottom position reached by the strand starting at top position i."""
    where = list(range(b.strands))  # where[p] = starting strand now at position p
    for g in b.word:
        i = abs(g) - 1
        where[i], where[i + 1] = where[i + 1], where[i]
    perm = [0] * b.strands
    for pos, start in enumerate(where):
        perm[start] = pos
    return tuple(perm)


def cycles(perm: tuple[int, ...]) -> list[list[int]]:
    seen = set()
    out = []
    for s in range(len(perm)):
        if s in seen:
            continue
        cyc = []
        while s not in seen:
            seen.add(s)
            cyc.append(s)
            s = perm[s]
        out.append(cyc)
    return out


def braid_props(b: BraidWord) -> dict:
    perm = permutation(b)
    return {"writhe": writhe(b), "permutation": perm, "components": len(cycles(perm))}


def components(b: BraidWord) -> int:
    return len(cycles(permutation(b)))


def torus_braid(m: int, p: int) -> BraidWord:
    """(sigma_1 ... sigma_{m-1})^|p| on m strands, every letter with the sign of p."""
    if m < 2:
        raise BraidRangeError("torus braids need m >= 2")
    if p == 0:
        raise BraidRangeError("p must be nonzero")
    s = 1 if p > 0 else -1
    return BraidWord(m, tuple(s * i for _ in range(abs(p)) for i in range(1, m)))


def connected_sum(b1: BraidWord, b2: BraidWord) -> BraidWord:
    """Braid whose closure is closure(b1) # closure(b2).

    b2 is placed to the right of b1 sharing b1's last strand.
    """
    if components(b1) != 1 or components(b2) != 1:
        raise NotAKnot("connected sums are only defined here for knots")
    shift = b1.strands - 1
    word = b1.word + tuple(g + shift if g > 0 else g - shift for g in b2.word)
    return BraidWord(b1.strands + b2.strands - 1, word)


def mirror_braid(b: BraidWord) -> BraidWord:
    return BraidWord(b.strands, tuple(-g for g in b.word))


def is_torus_2(b: BraidWord) -> bool:
    return b.strands == 2 and len(set(b.word)) == 1


def gcd_components(m: int, p: int) -> int:
    return math.gcd(m, abs(p))


def load_named_braids() -> dict[str, BraidWord]:
    """Read the bundled ``braids.txt`` (``name = <braid>`` lines, ``#`` comments)."""
    text = resources.files("qtail").joinpath("data/braids.txt").read_text()
    out = {}
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        name, _, braid = line.partition("=")
        out[name.strip()] = parse_braid(braid.strip())
    return out
