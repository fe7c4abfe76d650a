"""Weights of sl(n) in shifted coordinates, with exact rational entries.

A weight is stored as the coordinate vector of lambda+rho in the epsilon
basis.  Because the epsilon_i sum to zero, two coordinate vectors that
differ by a common additive constant describe the same weight; equality and
hashing go through a canonical representative whose last entry is 0.

No floating point is used anywhere: entries are ``fractions.Fraction``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import LengthMismatchError, ParseError

Rational = Fraction

_TOKEN = re.compile(r"^[+-]?\d+(\.\d+)?$|^[+-]?\d+/\d+$")


def parse_rational(token: str) -> Fraction:
    """Parse an integer, a fraction ``a/b`` or an exact decimal ``d.ddd``.

    >>> parse_rational("3.5")
    Fraction(7, 2)
    >>> parse_rational("-11/10")
    Fraction(-11, 10)
    """
    token = token.strip()
    if not _TOKEN.match(token):
        raise ParseError(f"not a rational token: {token!r}")
    try:
        return Fraction(token)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator: {token!r}") from None


def parse_weight(text: str) -> "Weight":
    """Parse a comma-separated lambda+rho coordinate vector."""
    parts = text.split(",")
    if len(parts) == 1 and not parts[0].strip():
        raise ParseError("empty weight")
    return Weight(parse_rational(p) for p in parts)


class Weight:
    """Coordinates of lambda+rho, considered modulo a common constant shift."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable[Fraction | int]):
        entries = tuple(Fraction(e) for e in entries)
        if not entries:
            raise ValueError("a weight needs at least one entry")
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("Weight is immutable")

    @property
    def n(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> Fraction:
        return self.entries[i]

    def __repr__(self) -> str:
        return f"Weight({', '.join(str(e) for e in self.entries)})"

    def canonicalize(self) -> "Weight":
        """The shift-equivalent representative whose last entry is 0."""
        c = self.entries[-1]
        if c == 0:
            return self
        return Weight(e - c for e in self.entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Weight):
            return NotImplemented
        if self.n != other.n:
            return False
        return self.canonicalize().entries == other.canonicalize().entries

    def __hash__(self) -> int:
        return hash(self.canonicalize().entries)

    def is_integral(self) -> bool:
        """True iff all pairwise entry differences are integers."""
        first = self.entries[0]
        return all((e - first).denominator == 1 for e in self.entries)

    def is_antidominant(self) -> bool:
        """True iff integrally comparable entries weakly increase."""
        es = self.entries
        for i in range(len(es)):
            for j in range(i + 1, len(es)):
                if (es[i] - es[j]).denominator == 1 and es[i] > es[j]:
                    return False
        return True

    def shift(self, c: Fraction | int) -> "Weight":
        return Weight(e + c for e in self.entries)

    def to_strings(self) -> list[str]:
        return [str(e) for e in self.entries]


class PQContext:
    """The signature (p, q) of su(p,q); pairs with weights of length p+q."""

    __slots__ = ("p", "q")

    def __init__(self, p: int, q: int):
        if p < 1 or q < 1:
            raise ValueError("p and q must be positive")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    def __setattr__(self, name, value):
        raise AttributeError("PQContext is immutable")

    @property
    def n(self) -> int:
        return self.p + self.q

    def __repr__(self) -> str:
        return f"PQContext(p={self.p}, q={self.q})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, PQContext):
            return NotImplemented
        return (self.p, self.q) == (other.p, other.q)

    def __hash__(self) -> int:
        return hash((self.p, self.q))

    def check(self, w: Weight) -> None:
        if self.n != w.n:
            raise LengthMismatchError(
                f"weight has {w.n} entries but p+q={self.n}",
                weight_length=w.n, p=self.p, q=self.q,
            )


def pq_dominance_violation(w: Weight, ctx: PQContext) -> tuple[int, int] | None:
    """First pair (i, j), 1-based, violating (p,q)-dominance, or None.

    Dominance requires entries to strictly decrease with integer gaps within
    positions 1..p and within positions p+1..p+q; adjacent pairs suffice.
    """
    ctx.check(w)
    es = w.entries
    for lo, hi in ((0, ctx.p), (ctx.p, ctx.n)):
        for i in range(lo, hi - 1):
            d = es[i] - es[i + 1]
            if d.denominator != 1 or d <= 0:
                return (i + 1, i + 2)
    return None


def is_pq_dominant(w: Weight, ctx: PQContext) -> bool:
    return pq_dominance_violation(w, ctx) is None


def add_z_zeta(w: Weight, ctx: PQContext, z: Fraction | int) -> Weight:
    """Add z to the first p entries (z times the weight with p ones, q zeros)."""
    ctx.check(w)
    z = Fraction(z)
    return Weight(
        e + z if i < ctx.p else e for i, e in enumerate(w.entries)
    )
