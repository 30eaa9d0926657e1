"""Brute-force Hodge Laplacian on polynomial forms of the unit sphere S^n.

Independent check of the closed-form sphere spectra. A p-form on S^n is stored
as its tangential ambient representative sum f_I dx^I on R^(n+1) whose
coefficients are reduced modulo |x|^2 - 1 (x_0^2 is rewritten as
1 - x_1^2 - ... - x_n^2). With nu = x the unit normal:

    d_S w   = T(d w),            T(w) = w - x^b ^ (i_x w)
    *_S w   = (-1)^p i_x (*_E w)
    delta_S = (-1)^(n(p+1)+1) *_S d_S *_S

All of these have integer coefficients, so the Laplacian acts by an integer
matrix on the span of T(m dx^I) over monomials m of bounded degree. That span
is rotation invariant, hence Laplacian invariant. Each coordinate reflection
commutes with the Laplacian, which splits the problem into 2^(n+1) small
parity sectors. Eigenvalues are proposed in floating point and then certified
with exact integer ranks: the kernel dimensions must add up to the sector
dimension.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from fractions import Fraction
from math import gcd
from typing import Dict, Tuple

import numpy as np

Mono = Tuple[int, ...]
Key = Tuple[Tuple[int, ...], Mono]
Form = Dict[Key, int]


def _add(out: Form, key: Key, c: int):
    if c:
        v = out.get(key, 0) + c
        if v:
            out[key] = v
        else:
            out.pop(key, None)


def _reduce_mono(mono: Mono):
    """Expand a monomial modulo x_0^2 = 1 - sum_{i>0} x_i^2; yields (mono, coeff)."""
    if mono[0] < 2:
        yield mono, 1
        return
    base = list(mono)
    base[0] -= 2
    yield from _reduce_mono(tuple(base))
    for i in range(1, len(mono)):
        m = list(base)
        m[i] += 2
        for r, c in _reduce_mono(tuple(m)):
            yield r, -c


def normalize(w: Form) -> Form:
    out: Form = {}
    for (idx, mono), c in w.items():
        for r, k in _reduce_mono(mono):
            _add(out, (idx, r), c * k)
    return out


def _wedge_index(i: int, idx: tuple[int, ...]):
    """dx_i ^ dx^idx = sign * dx^new."""
    if i in idx:
        return 0, idx
    pos = sum(1 for j in idx if j < i)
    return (-1) ** pos, tuple(sorted(idx + (i,)))


def _mul_x(mono: Mono, i: int) -> Mono:
    m = list(mono)
    m[i] += 1
    return tuple(m)


def contract_x(w: Form) -> Form:
    out: Form = {}
    for (idx, mono), c in w.items():
        for pos, i in enumerate(idx):
            _add(out, (idx[:pos] + idx[pos + 1:], _mul_x(mono, i)), c * (-1) ** pos)
    return out


def wedge_x(w: Form) -> Form:
    out: Form = {}
    for (idx, mono), c in w.items():
        for i in range(len(mono)):
            s, new = _wedge_index(i, idx)
            if s:
                _add(out, (new, _mul_x(mono, i)), c * s)
    return out


def ambient_d(w: Form) -> Form:
    out: Form = {}
    for (idx, mono), c in w.items():
        for i, e in enumerate(mono):
            if e == 0:
                continue
            s, new = _wedge_index(i, idx)
            if s:
                m = list(mono)
                m[i] -= 1
                _add(out, (new, tuple(m)), c * e * s)
    return out


def _perm_sign(seq) -> int:
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def ambient_star(w: Form, dim: int) -> Form:
    out: Form = {}
    for (idx, mono), c in w.items():
        comp = tuple(j for j in range(dim) if j not in idx)
        _add(out, (comp, mono), c * _perm_sign(idx + comp))
    return out


def tangential(w: Form) -> Form:
    out = dict(w)
    for k, c in wedge_x(contract_x(w)).items():
        _add(out, k, -c)
    return normalize(out)


class SphereForms:
    """Operators on polynomial forms of the unit sphere S^n."""

    def __init__(self, n: int):
        self.n = n
        self.dim = n + 1

    def d(self, w: Form) -> Form:
        return tangential(ambient_d(w))

    def star(self, w: Form, p: int) -> Form:
        out = contract_x(ambient_star(w, self.dim))
        if p % 2:
            out = {k: -c for k, c in out.items()}
        return normalize(out)

    def codiff(self, w: Form, p: int) -> Form:
        if p == 0:
            return {}
        n = self.n
        sgn = (-1) ** (n * (p + 1) + 1)
        t = self.star(w, p)
        t = self.d(t)
        t = self.star(t, n - p + 1)
        return {k: sgn * c for k, c in t.items()}

    def laplacian(self, w: Form, p: int) -> Form:
        out: Form = {}
        if p > 0:
            for k, c in self.d(self.codiff(w, p)).items():
                _add(out, k, c)
        if p < self.n:
            for k, c in self.codiff(self.d(w), p + 1).items():
                _add(out, k, c)
        return out


def _monomials(nvars: int, max_degree: int):
    """Reduced monomials (x_0 exponent at most 1) of total degree <= max_degree."""
    for total in range(max_degree + 1):
        for combo in itertools.combinations_with_replacement(range(nvars), total):
            m = [0] * nvars
            for i in combo:
                m[i] += 1
            if m[0] <= 1:
                yield tuple(m)


def _sector(idx, mono) -> tuple[int, ...]:
    return tuple((e + (i in idx)) % 2 for i, e in enumerate(mono))


def exact_rank(rows: list[list[int]]) -> int:
    """Rank over Q by fraction-free elimination with gcd row normalisation."""
    m = [list(r) for r in rows if any(r)]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pr = m[rank]
        for i in range(rank + 1, len(m)):
            a = m[i][col]
            if a:
                b = pr[col]
                row = [b * x - a * y for x, y in zip(m[i], pr)]
                g = 0
                for x in row:
                    g = gcd(g, x)
                if g > 1:
                    row = [x // g for x in row]
                m[i] = row
        rank += 1
        if rank == len(m):
            break
    return rank


def _sector_spectrum(span: list[Form], images: list[Form]) -> dict[int, int]:
    keys = sorted({k for w in span + images for k in w})
    col = {k: i for i, k in enumerate(keys)}

    def vec(w):
        v = [0] * len(keys)
        for k, c in w.items():
            v[col[k]] = c
        return v

    s_rows = [vec(w) for w in span]
    d_rows = [vec(w) for w in images]
    dim = exact_rank(s_rows)
    if dim == 0:
        return {}
    s = np.array(s_rows, dtype=float)
    dm = np.array(d_rows, dtype=float)
    _, sv, vt = np.linalg.svd(s, full_matrices=False)
    q = vt[:dim]
    a, b = s @ q.T, dm @ q.T
    if np.abs(dm - b @ q).max() > 1e-6 * max(1.0, np.abs(dm).max()):
        raise ArithmeticError("polynomial form space is not Laplacian invariant")
    op = np.linalg.lstsq(a, b, rcond=None)[0]
    guesses = sorted({int(round(x.real)) for x in np.linalg.eigvals(op)})
    mults = {}
    for lam in guesses:
        rows = [[x - lam * y for x, y in zip(dr, sr)] for dr, sr in zip(d_rows, s_rows)]
        k = dim - exact_rank(rows)
        if k:
            mults[lam] = k
    if sum(mults.values()) != dim:
        raise ArithmeticError("eigenvalue certificate failed: kernels do not fill the space")
    return mults


def _invariant_sector(key: tuple[int, ...], signs) -> bool:
    """T(m dx^I) picks up prod s_i^(key_i) under x_i -> s_i x_i."""
    return signs is None or sum(k for k, s in zip(key, signs) if s == -1) % 2 == 0


def polynomial_form_spectrum(n: int, p: int, max_degree: int, signs=None) -> dict[int, int]:
    """Certified Laplace spectrum on the span of T(m dx^I), deg m <= max_degree.

    With `signs` (a diagonal involution of R^(n+1)) only invariant forms are kept.
    """
    sf = SphereForms(n)
    sectors: dict[tuple, list[Form]] = defaultdict(list)
    for idx in itertools.combinations(range(n + 1), p):
        for mono in _monomials(n + 1, max_degree):
            w = tangential({(idx, mono): 1})
            if w:
                sectors[_sector(idx, mono)].append(w)
    total: dict[int, int] = {}
    for key in sorted(sectors):
        if not _invariant_sector(key, signs):
            continue
        span = sectors[key]
        images = [sf.laplacian(w, p) for w in span]
        for lam, m in _sector_spectrum(span, images).items():
            total[lam] = total.get(lam, 0) + m
    return dict(sorted(total.items()))


def brute_force_sphere_spectrum(n: int, p: int, bound: int, start_degree: int = 1,
                                max_degree: int = 12, signs=None) -> dict[int, int]:
    """Multiplicities of eigenvalues <= bound, grown until three consecutive degrees agree.

    Three rather than two because an involution filter can make every other
    degree contribute nothing new.
    """
    history: list[dict[int, int]] = []
    for deg in range(start_degree, max_degree + 1):
        spec = {lam: m for lam, m in polynomial_form_spectrum(n, p, deg, signs).items() if lam <= bound}
        history.append(spec)
        if len(history) >= 3 and history[-1] == history[-2] == history[-3]:
            return spec
    raise ArithmeticError("polynomial degree limit reached before stabilisation")


def as_fraction_spectrum(spec: dict[int, int]) -> dict[Fraction, int]:
    return {Fraction(k): v for k, v in spec.items()}
