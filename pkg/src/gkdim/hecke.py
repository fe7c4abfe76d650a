"""Hecke algebra of S_n over Z[v, v^-1] and the definitional a-function.

The algebra is generated by T_w with T_w T_w' = T_{ww'} when lengths add and
(T_s + v^-1)(T_s - v) = 0.  The Kazhdan-Lusztig basis element C_w is the
unique bar-invariant element congruent to T_w modulo sum of v^-1 Z[v^-1] T_y.
Writing C_x C_y = sum_z h_{x,y,z} C_z, the a-function is

    a(z) = max over x, y of deg h_{x,y,z}.

This module computes a(z) literally from that definition.  It exists as an
independent small-rank oracle for the tableau-based a-value, so nothing here
may depend on Robinson-Schensted theory.  Ranks are gated by a configurable
bound (default 5): the full structure-constant table for S_5 is the hot path
and is built once per rank through the kernel selected in ``kernels``.
"""

from __future__ import annotations

import threading
from functools import lru_cache
from typing import Mapping

import numpy as np

from . import kernels
from .errors import RankBoundError
from .laurent import LaurentPoly
from .permutations import Permutation

DEFAULT_RANK_BOUND = 5

_V = LaurentPoly({1: 1})
_VINV = LaurentPoly({-1: 1})
_V_MINUS_VINV = LaurentPoly({1: 1, -1: -1})


class HeckeElement:
    """A finite Z[v,v^-1]-linear combination of the T_w basis of S_n."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Permutation, LaurentPoly] = ()):
        cleaned = {w: p for w, p in dict(terms).items() if p}
        if any(w.n != n for w in cleaned):
            raise ValueError("terms of mixed rank")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("HeckeElement is immutable")

    @classmethod
    def t(cls, w: Permutation) -> "HeckeElement":
        return cls(w.n, {w: LaurentPoly.one()})

    @classmethod
    def zero(cls, n: int) -> "HeckeElement":
        return cls(n)

    def coeff(self, w: Permutation) -> LaurentPoly:
        return self.terms.get(w, LaurentPoly.zero())

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        if self.n != other.n:
            raise ValueError("size mismatch")
        out = dict(self.terms)
        for w, p in other.terms.items():
            out[w] = out.get(w, LaurentPoly.zero()) + p
        return HeckeElement(self.n, out)

    def __neg__(self) -> "HeckeElement":
        return HeckeElement(self.n, {w: -p for w, p in self.terms.items()})

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + (-other)

    def scale(self, c: LaurentPoly | int) -> "HeckeElement":
        if isinstance(c, int):
            c = LaurentPoly({0: c})
        return HeckeElement(self.n, {w: p * c for w, p in self.terms.items()})

    def __mul__(self, other: "HeckeElement") -> "HeckeElement":
        return multiply(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        if not self.terms:
            return f"HeckeElement(n={self.n}, 0)"
        parts = [
            f"({p})*T{w.one_line}"
            for w, p in sorted(
                self.terms.items(), key=lambda t: (t[0].length(), t[0].one_line)
            )
        ]
        return " + ".join(parts)


def _left_mul_gen(i: int, elt: HeckeElement) -> HeckeElement:
    """T_{s_i} * elt."""
    out: dict[Permutation, LaurentPoly] = {}

    def add(w, p):
        out[w] = out.get(w, LaurentPoly.zero()) + p

    for w, p in elt.terms.items():
        sw = w.s_times(i)
        add(sw, p)
        if sw.length() < w.length():
            add(w, p * _V_MINUS_VINV)
    return HeckeElement(elt.n, out)


def _right_mul_gen(elt: HeckeElement, i: int) -> HeckeElement:
    """elt * T_{s_i}."""
    out: dict[Permutation, LaurentPoly] = {}

    def add(w, p):
        out[w] = out.get(w, LaurentPoly.zero()) + p

    for w, p in elt.terms.items():
        ws = w.times_s(i)
        add(ws, p)
        if ws.length() < w.length():
            add(w, p * _V_MINUS_VINV)
    return HeckeElement(elt.n, out)


def multiply(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    """The bilinear product determined by the defining relations."""
    if a.n != b.n:
        raise ValueError("size mismatch")
    result = HeckeElement.zero(a.n)
    for x, px in a.terms.items():
        part = b
        for i in reversed(x.reduced_word()):
            part = _left_mul_gen(i, part)
        result = result + part.scale(px)
    return result


def bar_involution(a: HeckeElement) -> HeckeElement:
    """The ring involution with v -> v^-1 and T_w -> (T_{w^-1})^-1."""
    result = HeckeElement.zero(a.n)
    for w, p in a.terms.items():
        # (T_{w^-1})^-1 = T_{s_1}^-1 ... T_{s_k}^-1 along a reduced word of w,
        # and T_s^-1 = T_s + (v^-1 - v).
        part = HeckeElement.t(Permutation.identity(a.n))
        for i in reversed(w.reduced_word()):
            part = _left_mul_gen(i, part) - part.scale(_V_MINUS_VINV)
        result = result + part.scale(p.bar())
    return result


def _check_rank(n: int, rank_bound: int) -> None:
    if n > rank_bound:
        raise RankBoundError(
            f"oracle limited to rank {rank_bound}, got n={n}",
            n=n, rank_bound=rank_bound,
        )


@lru_cache(maxsize=None)
def _kl_element(w: Permutation) -> HeckeElement:
    n = w.n
    descents = w.right_descents()
    if not descents:
        return HeckeElement.t(w)
    i = descents[-1]
    shorter = _kl_element(w.times_s(i))
    # C_{w'} C_s in the T basis, with C_s = T_s + v^-1.
    d = _right_mul_gen(shorter, i) + shorter.scale(_VINV)
    # Strip constant terms at shorter elements, longest first, so the result
    # is congruent to T_w modulo strictly negative powers of v.
    for length in range(w.length() - 1, -1, -1):
        for y in [y for y in d.terms if y.length() == length]:
            c = d.terms[y][0]
            if c:
                d = d - _kl_element(y).scale(c)
    assert d.coeff(w) == LaurentPoly.one()
    assert all(p.only_negative_exponents() for y, p in d.terms.items() if y != w)
    return d


def kl_basis_element(
    w: Permutation, *, rank_bound: int = DEFAULT_RANK_BOUND
) -> HeckeElement:
    """The Kazhdan-Lusztig basis element C_w (bar-invariant, and congruent
    to T_w modulo strictly negative v-powers)."""
    _check_rank(w.n, rank_bound)
    return _kl_element(w)


def kl_expand(elt: HeckeElement) -> dict[Permutation, LaurentPoly]:
    """Coefficients of elt in the KL basis (triangular elimination)."""
    out: dict[Permutation, LaurentPoly] = {}
    rest = elt
    while rest.terms:
        w = max(rest.terms, key=lambda p: (p.length(), p.one_line))
        c = rest.terms[w]
        out[w] = c
        rest = rest - _kl_element(w).scale(c)
    return out


def mu_value(y: Permutation, w: Permutation) -> int:
    """Coefficient of v^-1 in the T_y coordinate of C_w (0 if absent)."""
    return _kl_element(w).coeff(y)[-1]


# --- bulk structure-constant degrees -------------------------------------
#
# Writing R_y for the matrix [h_{x,y,z}]_{x,z}, the expansions
#   C_x C_s   = (v + v^-1) C_x                      if xs < x
#   C_x C_s   = C_{xs} + sum_{zs<z} mu(z,x) C_z     if xs > x
# give R_{y's} = R_{y'} R_s - sum_{zs<z} mu(z,y') R_z, so the whole table
# follows from matrix products against the sparse R_s.  Matrices are stored
# as dense int64 arrays (degree, x, z) plus the exponent of slice 0; the
# products run through kernels.polymat_matmul.


class _PolyMat:
    __slots__ = ("arr", "off")

    def __init__(self, arr: np.ndarray, off: int):
        self.arr = arr
        self.off = off

    def trimmed(self) -> "_PolyMat":
        nz = [d for d in range(self.arr.shape[0]) if self.arr[d].any()]
        if not nz:
            return _PolyMat(self.arr[:1] * 0, 0)
        lo, hi = nz[0], nz[-1] + 1
        return _PolyMat(np.ascontiguousarray(self.arr[lo:hi]), self.off + lo)

    def add_scaled(self, other: "_PolyMat", c: int) -> "_PolyMat":
        lo = min(self.off, other.off)
        hi = max(self.off + self.arr.shape[0], other.off + other.arr.shape[0])
        n = self.arr.shape[1]
        out = np.zeros((hi - lo, n, n), dtype=np.int64)
        out[self.off - lo : self.off - lo + self.arr.shape[0]] += self.arr
        out[other.off - lo : other.off - lo + other.arr.shape[0]] += c * other.arr
        return _PolyMat(out, lo)

    def matmul(self, other: "_PolyMat") -> "_PolyMat":
        arr = kernels.polymat_matmul(self.arr, other.arr)
        return _PolyMat(arr, self.off + other.off)


def _all_perms_by_length(n: int) -> list[Permutation]:
    from itertools import permutations as iperm

    perms = [Permutation(p) for p in iperm(range(1, n + 1))]
    perms.sort(key=lambda p: (p.length(), p.one_line))
    return perms


_table_lock = threading.Lock()


@lru_cache(maxsize=None)
def _a_table(n: int) -> dict[tuple[int, ...], int]:
    with _table_lock:
        return _build_a_table(n)


def _build_a_table(n: int) -> dict[tuple[int, ...], int]:
    perms = _all_perms_by_length(n)
    index = {w: k for k, w in enumerate(perms)}
    size = len(perms)

    # mu pairs, grouped by the longer element
    mu: dict[Permutation, list[tuple[Permutation, int]]] = {w: [] for w in perms}
    for w in perms:
        cw = _kl_element(w)
        for y, p in cw.terms.items():
            if y != w and p[-1]:
                mu[w].append((y, p[-1]))

    # right multiplication by C_s, one sparse matrix per generator
    r_s: list[_PolyMat] = []
    for i in range(1, n):
        arr = np.zeros((3, size, size), dtype=np.int64)  # exponents -1, 0, 1
        for x in perms:
            xi = index[x]
            xs = x.times_s(i)
            if xs.length() < x.length():
                arr[0, xi, xi] += 1
                arr[2, xi, xi] += 1
            else:
                arr[1, xi, index[xs]] += 1
                for z, m in mu[x]:
                    if z.times_s(i).length() < z.length():
                        arr[1, xi, index[z]] += m
        r_s.append(_PolyMat(arr, -1).trimmed())

    identity = np.eye(size, dtype=np.int64)[None, :, :]
    r: list[_PolyMat | None] = [None] * size
    r[0] = _PolyMat(np.ascontiguousarray(identity), 0)
    for k, w in enumerate(perms):
        if r[k] is not None:
            continue
        i = w.right_descents()[-1]
        shorter = w.times_s(i)
        acc = r[index[shorter]].matmul(r_s[i - 1])
        for z, m in mu[shorter]:
            if z.times_s(i).length() < z.length():
                acc = acc.add_scaled(r[index[z]], -m)
        r[k] = acc.trimmed()

    best = np.full(size, -1, dtype=np.int64)
    for mat in r:
        depth = mat.arr.shape[0]
        col_any = (mat.arr != 0).any(axis=1)  # (degree, z)
        degs = np.where(col_any, np.arange(depth)[:, None] + mat.off, -1)
        best = np.maximum(best, degs.max(axis=0))
    return {w.one_line: int(best[index[w]]) for w in perms}


def a_function_definitional(
    z: Permutation, *, rank_bound: int = DEFAULT_RANK_BOUND
) -> int:
    """max deg h_{x,y,z} over all x, y, straight from the KL basis."""
    _check_rank(z.n, rank_bound)
    return _a_table(z.n)[z.one_line]
