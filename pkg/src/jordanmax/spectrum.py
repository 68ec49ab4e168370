"""Spectrum of homogeneous polynomials with a one-dimensional singular locus.

For f homogeneous of degree d in n + 1 variables whose projective
hypersurface has isolated singular points y_i with exponents alpha_{i,j},

    Sp(f, 0) = (sum_{l=1}^{d-1} t^{l/d})^(n+1)
               - sum_{i,j} t^{alpha'_{i,j}} sum_{l=0}^{d-1} t^{l/d},

with alpha' = (floor(alpha d) + 1)/d.  Adding h^(d+k) for a generic linear
form h contributes sum_{i,j} t^{alpha''_{i,j}(k)} sum_{l=0}^{d+k-1} t^{l/(d+k)},
alpha''(k) = (k alpha + floor(alpha d) + 1)/(d + k).
"""

from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import PreconditionError

__all__ = [
    "SpectrumPoly",
    "alpha_prime",
    "alpha_dprime",
    "geometric_sum",
    "spectrum_homogeneous",
    "spectrum_yomdin",
    "parse_exponents",
]


class SpectrumPoly:
    """Finitely supported Z-valued function on Q, written as sum m_e t^e."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        acc: Counter = Counter()
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, m in items:
            acc[Fraction(e)] += int(m)
        self._terms = {e: m for e, m in acc.items() if m}

    @classmethod
    def monomial(cls, e, m: int = 1) -> "SpectrumPoly":
        return cls({Fraction(e): m})

    @property
    def terms(self) -> dict[Fraction, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def __getitem__(self, e) -> int:
        return self._terms.get(Fraction(e), 0)

    def __eq__(self, other):
        if isinstance(other, SpectrumPoly):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "SpectrumPoly") -> "SpectrumPoly":
        return SpectrumPoly(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self):
        return SpectrumPoly({e: -m for e, m in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return SpectrumPoly({e: m * other for e, m in self._terms.items()})
        acc: Counter = Counter()
        for e1, m1 in self._terms.items():
            for e2, m2 in other._terms.items():
                acc[e1 + e2] += m1 * m2
        return SpectrumPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = SpectrumPoly.monomial(0)
        for _ in range(k):
            out = out * self
        return out

    def shift(self, by) -> "SpectrumPoly":
        by = Fraction(by)
        return SpectrumPoly({e + by: m for e, m in self._terms.items()})

    def total(self) -> int:
        return sum(self._terms.values())

    def is_symmetric(self, center) -> bool:
        """m(e) == m(center - e) for every exponent."""
        c = Fraction(center)
        return all(self[c - e] == m for e, m in self._terms.items())

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, m in self.items():
            parts.append(f"{m}*t^{e}")
        return " + ".join(parts)


def alpha_prime(alpha, d: int) -> Fraction:
    if d < 1:
        raise PreconditionError(f"degree must be positive, got {d}")
    alpha = Fraction(alpha)
    return Fraction(math.floor(alpha * d) + 1, d)


def alpha_dprime(alpha, d: int, k: int) -> Fraction:
    if d < 1:
        raise PreconditionError(f"degree must be positive, got {d}")
    if k < 0:
        raise PreconditionError(f"k must be non-negative, got {k}")
    alpha = Fraction(alpha)
    return (k * alpha + math.floor(alpha * d) + 1) / (d + k)


def geometric_sum(start: int, stop: int, denom: int) -> SpectrumPoly:
    """sum_{l=start}^{stop} t^{l/denom}."""
    return SpectrumPoly({Fraction(l, denom): 1 for l in range(start, stop + 1)})


def spectrum_homogeneous(n: int, d: int, exponents: Iterable = ()) -> SpectrumPoly:
    if n < 1:
        raise PreconditionError(f"n must be at least 1, got {n}")
    if d < 2:
        raise PreconditionError(f"degree must be at least 2, got {d}")
    main = geometric_sum(1, d - 1, d) ** (n + 1)
    ring = geometric_sum(0, d - 1, d)
    corr = SpectrumPoly()
    for alpha in exponents:
        corr = corr + SpectrumPoly.monomial(alpha_prime(alpha, d)) * ring
    return main - corr


def spectrum_yomdin(n: int, d: int, k: int, exponents: Iterable = ()) -> SpectrumPoly:
    """Sp(f + h^(d+k), 0)."""
    if k < 0:
        raise PreconditionError(f"k must be non-negative, got {k}")
    exponents = [Fraction(x) for x in exponents]
    out = spectrum_homogeneous(n, d, exponents)
    ring = geometric_sum(0, d + k - 1, d + k)
    for alpha in exponents:
        out = out + SpectrumPoly.monomial(alpha_dprime(alpha, d, k)) * ring
    return out


def parse_exponents(text: str) -> list[Fraction]:
    """'1,1,1' or '1/2, 5/6' -> exact rationals."""
    out = []
    for part in text.replace(";", ",").split(","):
        part = part.strip()
        if not part:
            continue
        try:
            out.append(Fraction(part))
        except (ValueError, ZeroDivisionError):
            raise PreconditionError(f"cannot read exponent '{part}'") from None
    return out
