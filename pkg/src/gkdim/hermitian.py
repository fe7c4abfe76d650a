"""GK dimensions and associated varieties for su(p,q) highest weights.

A (p,q)-dominant weight has strictly decreasing integer-gap entries within
positions 1..p (black) and p+1..p+q (white).  In the integral case the
insertion tableau has at most two columns, GKdim = m(n-m) with m the second
column length, and m is computed four independent ways: straight insertion,
the two-at-a-time deletion recursion, the white/black ball signature with
its pair-removal count, and the v-exponent in the xy=v rewriting algebra.
In the non-integral case GKdim = pq.  Orbit data: dim of the k-th orbit
closure is k(n-k), and the orbit index is m, or min(p,q) when non-integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .dimension import gk_dimension
from .errors import (
    DomainError,
    NotIntegralError,
    NotPQDominantError,
    OutsideUnitaryIntervalError,
)
from .weights import PQContext, Weight, add_z_zeta, pq_dominance_violation


def _require_pq_dominant(w: Weight, ctx: PQContext) -> None:
    bad = pq_dominance_violation(w, ctx)
    if bad is not None:
        raise NotPQDominantError(
            f"entries {bad[0]} and {bad[1]} violate (p,q)-dominance",
            i=bad[0], j=bad[1], p=ctx.p, q=ctx.q,
        )


def _require_integral(w: Weight, ctx: PQContext) -> None:
    if (w.entries[0] - w.entries[ctx.p]).denominator != 1:
        raise NotIntegralError(
            "weight is not integral across the (p,q) split",
            i=1, j=ctx.p + 1,
        )


class BallSignature:
    """Alternating white/black run lengths (a1, b1, ..., ar, br).

    Interior runs are positive; only the leading white run and trailing
    black run may vanish.
    """

    __slots__ = ("runs",)

    def __init__(self, runs: Iterable[int]):
        rs = tuple(int(x) for x in runs)
        if len(rs) < 2 or len(rs) % 2:
            raise ValueError("signature needs even length 2r with r >= 1")
        if any(x < 0 for x in rs):
            raise ValueError("run lengths must be nonnegative")
        if any(x == 0 for x in rs[1:-1]):
            raise ValueError("interior run lengths must be positive")
        object.__setattr__(self, "runs", rs)

    def __setattr__(self, name, value):
        raise AttributeError("BallSignature is immutable")

    @property
    def white_runs(self) -> tuple[int, ...]:
        return self.runs[0::2]

    @property
    def black_runs(self) -> tuple[int, ...]:
        return self.runs[1::2]

    @property
    def white_total(self) -> int:
        return sum(self.white_runs)

    @property
    def black_total(self) -> int:
        return sum(self.black_runs)

    def balls(self) -> tuple[str, ...]:
        """The line of balls, 'w'/'b', left to right."""
        out: list[str] = []
        for k, run in enumerate(self.runs):
            out.extend(("w" if k % 2 == 0 else "b") * run)
        return tuple(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BallSignature):
            return NotImplemented
        return self.runs == other.runs

    def __hash__(self) -> int:
        return hash(self.runs)

    def __repr__(self) -> str:
        return f"BallSignature{self.runs}"


def xi_signature(w: Weight, ctx: PQContext) -> BallSignature:
    """The run-length signature of an integral (p,q)-dominant weight.

    Runs are counted inductively: the first white run holds the whites >= the
    top black, each black run the blacks below the previous white run but
    above the next white, and so on; a white tied with a black counts to the
    white's left.  Equivalently: sort the entries decreasingly, whites before
    blacks on ties, and read off run lengths.
    """
    _require_pq_dominant(w, ctx)
    _require_integral(w, ctx)
    blacks = w.entries[: ctx.p]
    whites = w.entries[ctx.p :]
    p, q = ctx.p, ctx.q

    a1 = sum(1 for x in whites if x >= blacks[0])
    if a1 < q:
        b1 = sum(1 for x in blacks if x > whites[a1])
    else:
        b1 = p
    runs = [a1, b1]
    wi, bi = a1, b1
    while True:
        if bi > p:
            a_next = 0
        elif bi == p:
            a_next = sum(1 for x in whites[wi:] if x < blacks[p - 1])
        else:
            a_next = sum(
                1 for x in whites[wi:] if blacks[bi] <= x < blacks[bi - 1]
            )
        wj = wi + a_next
        if wj > q:
            b_next = 0
        elif wj == q:
            b_next = sum(1 for x in blacks[bi:] if x <= whites[q - 1])
        else:
            assert wj >= 1  # a leading empty white run only happens once
            b_next = sum(
                1 for x in blacks[bi:] if whites[wj] < x <= whites[wj - 1]
            )
        if a_next == 0 and b_next == 0:
            break
        runs.extend((a_next, b_next))
        wi, bi = wj, bi + b_next
    sig = BallSignature(runs)
    assert sig.white_total == q and sig.black_total == p
    return sig


def ball_model_m(xi: BallSignature) -> int:
    """Removable adjacent white-black pairs, by the run recursion
    G_{k+1} = G_k + min(a_1+...+a_{k+1} - G_k, b_{k+1}), G_1 = min(a1, b1)."""
    a = xi.white_runs
    b = xi.black_runs
    g = min(a[0], b[0])
    total_a = a[0]
    for k in range(1, len(a)):
        total_a += a[k]
        g += min(total_a - g, b[k])
    return g


def ball_model_m_by_simulation(xi: BallSignature) -> int:
    """Removable adjacent white-black pairs by literal repeated removal."""
    removed = 0
    stack: list[str] = []
    for ball in xi.balls():
        if ball == "b" and stack and stack[-1] == "w":
            stack.pop()
            removed += 1
        else:
            stack.append(ball)
    return removed


def second_column_by_deletion(w: Weight, ctx: PQContext) -> list[Fraction]:
    """Second-column entries of the insertion tableau, top to bottom,
    via the deletion recursion.

    While the joined sequence is not strictly decreasing, one black and at
    least one white entry are deleted; the emitted entry is the lowest
    surviving white bound (the k-th white when the last black fits below
    white k, the last white when even it is too big)."""
    _require_pq_dominant(w, ctx)
    _require_integral(w, ctx)
    blacks = list(w.entries[: ctx.p])
    whites = list(w.entries[ctx.p :])
    column: list[Fraction] = []
    while blacks and whites and blacks[-1] <= whites[0]:
        if blacks[-1] <= whites[-1]:
            column.append(whites[-1])
            del whites[-1]
            del blacks[-1]
        else:
            k = sum(1 for x in whites if x >= blacks[-1])
            column.append(whites[k - 1])
            del whites[k - 1 :]
            del blacks[-1]
    return column


@dataclass(frozen=True)
class AlgebraWord:
    """A word in the letters x, y with nonnegative exponents."""

    factors: tuple[tuple[str, int], ...]

    def __init__(self, factors: Iterable[tuple[str, int]]):
        fs = tuple((str(l), int(e)) for l, e in factors)
        if any(l not in ("x", "y") or e < 0 for l, e in fs):
            raise ValueError("factors must be ('x'|'y', exponent >= 0)")
        object.__setattr__(self, "factors", fs)

    @classmethod
    def from_signature(cls, xi: BallSignature) -> "AlgebraWord":
        """x^{a1} y^{b1} ... x^{ar} y^{br}: white balls as x, black as y."""
        letters = ("x", "y")
        return cls((letters[k % 2], run) for k, run in enumerate(xi.runs))


@dataclass(frozen=True)
class NormalForm:
    """The canonical form v^m y^s x^t in the algebra with relation xy = v."""

    v_exp: int
    y_exp: int
    x_exp: int


def algebra_normal_form(word: AlgebraWord) -> NormalForm:
    """Rewrite a word to v^m y^s x^t by contracting adjacent xy into v.

    >>> algebra_normal_form(AlgebraWord([("x", 3), ("y", 2), ("x", 1),
    ...     ("y", 1), ("x", 1), ("y", 1), ("x", 1)]))
    NormalForm(v_exp=4, y_exp=0, x_exp=2)
    """
    m = s = t = 0
    for letter, e in word.factors:
        if letter == "x":
            t += e
        else:
            c = min(t, e)
            m += c
            t -= c
            s += e - c
    return NormalForm(v_exp=m, y_exp=s, x_exp=t)


_REWRITES = (("wbb", "bwb"), ("wwb", "wbw"))


def ball_transform_equivalent(xi1: BallSignature, xi2: BallSignature) -> bool:
    """Whether xi2 is reachable from xi1 by the two local ball moves
    (wbb <-> bwb and wwb <-> wbw at any position)."""
    if (xi1.white_total, xi1.black_total) != (xi2.white_total, xi2.black_total):
        raise DomainError(
            "signatures have different ball counts",
            counts1=(xi1.white_total, xi1.black_total),
            counts2=(xi2.white_total, xi2.black_total),
        )
    start = "".join(xi1.balls())
    goal = "".join(xi2.balls())
    seen = {start}
    frontier = [start]
    while frontier:
        if goal in seen:
            return True
        nxt = []
        for state in frontier:
            for a, b in _REWRITES:
                for pat, rep in ((a, b), (b, a)):
                    i = state.find(pat)
                    while i != -1:
                        new = state[:i] + rep + state[i + 3 :]
                        if new not in seen:
                            seen.add(new)
                            nxt.append(new)
                        i = state.find(pat, i + 1)
        frontier = nxt
    return goal in seen


@dataclass(frozen=True)
class HermitianReport:
    p: int
    q: int
    integral: bool
    m: int
    second_column: tuple[Fraction, ...] | None
    xi: BallSignature | None
    gk_dimension: int
    orbit_index: int
    orbit_dimension: int

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "integral": self.integral,
            "m": self.m,
            "second_column": (
                None
                if self.second_column is None
                else [str(e) for e in self.second_column]
            ),
            "xi": None if self.xi is None else list(self.xi.runs),
            "gk_dimension": self.gk_dimension,
            "orbit_index": self.orbit_index,
            "orbit_dimension": self.orbit_dimension,
        }


def gk_pq(w: Weight, ctx: PQContext) -> HermitianReport:
    """GK dimension and orbit data of a (p,q)-dominant weight.

    Integral case: m is computed from the insertion tableau and from the
    ball model, which must agree.  Non-integral case: GKdim = pq and the
    orbit index is min(p,q).
    """
    _require_pq_dominant(w, ctx)
    n = ctx.n
    if (w.entries[0] - w.entries[ctx.p]).denominator == 1:
        tab = gk_dimension(w).tableaux[0]
        second = tab.column(2)
        xi = xi_signature(w, ctx)
        m = ball_model_m(xi)
        if m != len(second):
            raise RuntimeError(
                f"tableau and ball model disagree: {len(second)} vs {m}"
            )
        return HermitianReport(
            p=ctx.p, q=ctx.q, integral=True, m=m,
            second_column=second, xi=xi,
            gk_dimension=m * (n - m), orbit_index=m,
            orbit_dimension=m * (n - m),
        )
    r = min(ctx.p, ctx.q)
    return HermitianReport(
        p=ctx.p, q=ctx.q, integral=False, m=r,
        second_column=None, xi=None,
        gk_dimension=ctx.p * ctx.q, orbit_index=r,
        orbit_dimension=r * (n - r),
    )


def associated_variety(w: Weight, ctx: PQContext) -> tuple[int, int]:
    """(orbit index, orbit dimension) of the associated variety closure."""
    report = gk_pq(w, ctx)
    return report.orbit_index, report.orbit_dimension


@dataclass(frozen=True)
class UnitaryInterval:
    """Unitarity region on the line z -> weight + z*(1,..,1,0,..,0):
    all real z up to max(p', q') plus the integers up to p'+q'-1."""

    p_prime: int
    q_prime: int

    @property
    def threshold_real(self) -> int:
        return max(self.p_prime, self.q_prime)

    @property
    def threshold_int(self) -> int:
        return self.p_prime + self.q_prime - 1

    def contains(self, z: Fraction | int) -> bool:
        z = Fraction(z)
        if z <= self.threshold_real:
            return True
        return z.denominator == 1 and z <= self.threshold_int

    def to_json(self) -> dict:
        return {
            "p_prime": self.p_prime,
            "q_prime": self.q_prime,
            "threshold_real": self.threshold_real,
            "threshold_int": self.threshold_int,
        }


def unitary_interval(tilde_w: Weight, ctx: PQContext) -> UnitaryInterval:
    """Thresholds from the head/tail runs of consecutive integers.

    p' counts how many leading entries descend by exactly 1; q' the same for
    the trailing entries of the white half.  Requires a (p,q)-dominant
    weight with first entry equal to last.
    """
    _require_pq_dominant(tilde_w, ctx)
    _require_integral(tilde_w, ctx)
    es = tilde_w.entries
    if es[0] != es[-1]:
        raise DomainError(
            "first and last entries must coincide",
            first=str(es[0]), last=str(es[-1]),
        )
    p_prime = 1
    while p_prime < ctx.p and es[p_prime - 1] - es[p_prime] == 1:
        p_prime += 1
    q_prime = 1
    while q_prime < ctx.q and es[-q_prime - 1] - es[-q_prime] == 1:
        q_prime += 1
    return UnitaryInterval(p_prime=p_prime, q_prime=q_prime)


def unitary_gkdim(tilde_w: Weight, ctx: PQContext, z: Fraction | int) -> int:
    """GK dimension at a unitary point z, by the closed form; cross-checked
    against the full computation on the shifted weight."""
    interval = unitary_interval(tilde_w, ctx)
    z = Fraction(z)
    if not interval.contains(z):
        raise OutsideUnitaryIntervalError(
            f"z={z} is outside the unitary interval",
            z=str(z), **interval.to_json(),
        )
    p, q, n = ctx.p, ctx.q, ctx.n
    if z.denominator != 1:
        value = p * q
    elif z < max(p, q):
        value = p * q
    else:
        value = int(z + 1) * int(n - z - 1)
    actual = gk_pq(add_z_zeta(tilde_w, ctx, z), ctx).gk_dimension
    if actual != value:
        raise RuntimeError(
            f"closed form {value} disagrees with direct computation {actual}"
        )
    return value


def gkdim_series(
    tilde_w: Weight, ctx: PQContext, z_from: int, z_to: int
) -> list[tuple[int, int]]:
    """(z, GKdim) for integer z in [z_from, z_to].

    The values are guaranteed weakly decreasing in z and, for integral
    weights, zero beyond the gap threshold; both are asserted.
    """
    _require_pq_dominant(tilde_w, ctx)
    if z_from > z_to:
        raise DomainError("empty range", z_from=z_from, z_to=z_to)
    series = [
        (z, gk_pq(add_z_zeta(tilde_w, ctx, z), ctx).gk_dimension)
        for z in range(z_from, z_to + 1)
    ]
    values = [g for _, g in series]
    if any(values[i] < values[i + 1] for i in range(len(values) - 1)):
        raise RuntimeError(f"series is not weakly decreasing: {values}")
    if (tilde_w.entries[0] - tilde_w.entries[ctx.p]).denominator == 1:
        threshold = tilde_w.entries[ctx.p] - tilde_w.entries[ctx.p - 1] + 1
        if any(g != 0 for z, g in series if z > threshold):
            raise RuntimeError(f"nonzero value beyond threshold {threshold}")
    return series
