"""Colored Jones polynomials from braids, their heads and tails, and the
q-series identities they produce."""
from .qlaurent import (
    CanonicalForm,
    QPoly,
    SignedMonomial,
    agree_mod,
    brace,
    canonical,
    exact_div,
    gauss_binomial,
    pochhammer,
    series_div,
)

__version__ = "0.1.0"

__all__ = [
    "CanonicalForm",
    "QPoly",
    "SignedMonomial",
    "agree_mod",
    "brace",
    "canonical",
    "exact_div",
    "gauss_binomial",
    "pochhammer",
    "series_div",
]
