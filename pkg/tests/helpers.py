"""Shared construction helpers for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from gkdim import BallSignature, PQContext, Weight


def signature_from_balls(balls: str) -> BallSignature:
    """Run-length signature of a ball line like 'wwbwb'."""
    runs = [0]
    expect_white = True
    for ball in balls:
        is_white = ball == "w"
        if is_white == expect_white:
            runs[-1] += 1
        else:
            runs.append(1)
            expect_white = is_white
    if expect_white:  # line ended on a white run: trailing black run is 0
        runs.append(0)
    if len(runs) < 2:
        runs.append(0)
    return BallSignature(runs)


def weight_from_pattern(
    colors: tuple[str, ...], ties: frozenset[int], base: int = 0
) -> tuple[Weight, PQContext]:
    """A canonical integral (p,q)-dominant weight realizing a ball line.

    ``colors`` is the line left to right ('b'/'w'); ``ties`` holds indices i
    where ball i (white) shares its value with ball i+1 (black).  Values
    descend by 1 except across a tie.
    """
    values = [base]
    for i in range(1, len(colors)):
        step = 0 if (i - 1) in ties else 1
        values.append(values[-1] - step)
    blacks = [v for v, c in zip(values, colors) if c == "b"]
    whites = [v for v, c in zip(values, colors) if c == "w"]
    ctx = PQContext(len(blacks), len(whites))
    return Weight(blacks + whites), ctx


def all_patterns(n: int):
    """Every (ball line, tie set) pattern for integral (p,q)-dominant
    weights of rank n, over all splits p+q=n with p, q >= 1.

    Any such weight sorts into one of these lines with ties exactly at
    white-black adjacencies, so the patterns cover all value tuples from a
    fixed integer window.
    """
    for p in range(1, n):
        for black_positions in combinations(range(n), p):
            colors = tuple(
                "b" if i in black_positions else "w" for i in range(n)
            )
            adjacencies = [
                i
                for i in range(n - 1)
                if colors[i] == "w" and colors[i + 1] == "b"
            ]
            for r in range(1 << len(adjacencies)):
                ties = frozenset(
                    adjacencies[k]
                    for k in range(len(adjacencies))
                    if r >> k & 1
                )
                yield colors, ties


def random_dominant_weight(
    rng: random.Random,
    n: int,
    *,
    integral: bool = True,
    max_gap: int = 3,
) -> tuple[Weight, PQContext]:
    """A random (p,q)-dominant weight; cross-shift optionally non-integral."""
    p = rng.randint(1, n - 1)
    q = n - p
    start = Fraction(rng.randint(-5, 5))
    if not integral:
        start += Fraction(1, rng.choice([2, 3, 7]))
    blacks = [start]
    for _ in range(p - 1):
        blacks.append(blacks[-1] - rng.randint(1, max_gap))
    whites = [Fraction(rng.randint(-5, 5))]
    for _ in range(q - 1):
        whites.append(whites[-1] - rng.randint(1, max_gap))
    return Weight(blacks + whites), PQContext(p, q)


def random_tilde_weight(
    rng: random.Random, n: int, max_gap: int = 3
) -> tuple[Weight, PQContext]:
    """A random integral (p,q)-dominant weight whose first entry equals its
    last (the base point of the z-line)."""
    p = rng.randint(1, n - 1)
    q = n - p
    c = rng.randint(-4, 4)
    blacks = [c]
    for _ in range(p - 1):
        blacks.append(blacks[-1] - rng.randint(1, max_gap))
    whites_rev = [c]
    for _ in range(q - 1):
        whites_rev.append(whites_rev[-1] + rng.randint(1, max_gap))
    whites = list(reversed(whites_rev))
    return Weight(blacks + whites), PQContext(p, q)
