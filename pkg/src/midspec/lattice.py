"""Exact integer/rational linear algebra used by the flat-torus code.

Matrices are lists of lists of Fraction (or int). Nothing here uses floats.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Iterator, Optional, Sequence

Matrix = list[list[Fraction]]


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(a: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*a)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a: Sequence[Sequence], v: Sequence) -> list:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def dot(u: Sequence, v: Sequence):
    return sum(x * y for x, y in zip(u, v))


def quad(q: Sequence[Sequence], v: Sequence):
    return dot(v, matvec(q, v))


def ldl(q: Sequence[Sequence]) -> tuple[list[Fraction], Matrix]:
    """Return (d, u) with q = u^T diag(d) u, u unit upper triangular.

    Raises ValueError when q is not positive definite.
    """
    n = len(q)
    d: list[Fraction] = [Fraction(0)] * n
    u: Matrix = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for i in range(n):
        di = Fraction(q[i][i]) - sum(d[k] * u[k][i] ** 2 for k in range(i))
        if di <= 0:
            raise ValueError("matrix is not positive definite")
        d[i] = di
        for j in range(i + 1, n):
            u[i][j] = (Fraction(q[i][j]) - sum(d[k] * u[k][i] * u[k][j] for k in range(i))) / di
    return d, u


def is_positive_definite(q: Sequence[Sequence]) -> bool:
    try:
        ldl(q)
    except ValueError:
        return False
    return True


def inverse(a: Sequence[Sequence]) -> Matrix:
    """Gauss-Jordan inverse over the rationals."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            raise ValueError("singular matrix")
        m[c], m[p] = m[p], m[c]
        piv = m[c][c]
        m[c] = [x / piv for x in m[c]]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [row[n:] for row in m]


def determinant(a: Sequence[Sequence]) -> Fraction:
    n = len(a)
    m = [[Fraction(x) for x in row] for row in a]
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return det


def smith_normal_form(a: Sequence[Sequence[int]]):
    """Smith normal form of an integer matrix.

    Returns (s, u, v) with s = u @ a @ v, u and v unimodular, s diagonal with
    nonnegative entries d_1 | d_2 | ... followed by zeros.
    """
    s = [[int(x) for x in row] for row in a]
    rows, cols = len(s), len(s[0]) if s else 0
    u = identity(rows)
    v = identity(cols)

    def swap_rows(i, j):
        s[i], s[j] = s[j], s[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for m in (s, v):
            for row in m:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, k):  # row_dst += k * row_src
        s[dst] = [x + k * y for x, y in zip(s[dst], s[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, k):
        for m in (s, v):
            for row in m:
                row[dst] += k * row[src]

    t = 0
    while t < min(rows, cols):
        nz = [(abs(s[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if s[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            done = True
            for i in range(t + 1, rows):
                if s[i][t]:
                    q = s[i][t] // s[t][t]
                    add_row(i, t, -q)
                    if s[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, cols):
                if s[t][j]:
                    q = s[t][j] // s[t][t]
                    add_col(j, t, -q)
                    if s[t][j]:
                        swap_cols(t, j)
                        done = False
            if not done:
                continue
            # divisibility of the remaining block
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                        if s[i][j] % s[t][t]), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if s[t][t] < 0:
            s[t] = [-x for x in s[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return s, u, v


def integer_inverse(a: Sequence[Sequence[int]]) -> list[list[int]]:
    inv = inverse(a)
    out = [[int(x) for x in row] for row in inv]
    if any(x.denominator != 1 for row in inv for x in row):
        raise ValueError("matrix is not unimodular")
    return out


def _floor_sqrt_bound(x: Fraction) -> int:
    """An integer K >= sqrt(x) (x >= 0)."""
    if x <= 0:
        return 0
    return isqrt(x.numerator // x.denominator + 1) + 1


def enumerate_short(q: Sequence[Sequence], bound, shift: Optional[Sequence] = None
                    ) -> Iterator[tuple[tuple[int, ...], Fraction]]:
    """All integer x with q[x + shift] <= bound, with the exact value.

    Fincke-Pohst style descent over an exact LDL^T factorization; candidate
    ranges are padded and then filtered exactly, so the output is complete.
    """
    bound = Fraction(bound)
    n = len(q)
    d, u = ldl(q)
    s = [Fraction(0)] * n if shift is None else [Fraction(x) for x in shift]
    x = [0] * n

    def rec(i: int, remaining: Fraction, acc: Fraction):
        if i < 0:
            yield tuple(x), acc
            return
        c = s[i] + sum(u[i][j] * (x[j] + s[j]) for j in range(i + 1, n))
        k = _floor_sqrt_bound(remaining / d[i])
        centre = -c
        lo = (centre.numerator // centre.denominator) - k
        for xi in range(lo, lo + 2 * k + 3):
            t = d[i] * (xi + c) ** 2
            if t <= remaining:
                x[i] = xi
                yield from rec(i - 1, remaining - t, acc + t)
        x[i] = 0

    yield from rec(n - 1, bound, Fraction(0))
