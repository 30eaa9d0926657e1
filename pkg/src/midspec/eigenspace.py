"""Direct eigenspace enumeration for flat quotients.

A second, independent route to invariant multiplicities. The eigenspace of
the torus Laplacian on p-forms at 4 pi^2 q is spanned by e^(2 pi i mu.x) dx^I
with mu^T G^-1 mu = q. The involution x -> A x + b pulls these back to
e^(2 pi i mu.b) e^(2 pi i (A^T mu).x) (Lambda^p A^T) dx^I, so the invariant
dimension is the rank of (I + P)/2 for an explicit finite matrix P. Dual
vectors are found by a plain box search, not by the lattice enumerator.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

import numpy as np

from .flat import FlatQuotient


def _box_vectors(q: FlatQuotient, value: Fraction) -> list[tuple[int, ...]]:
    n = q.dim
    ginv = np.array([[float(x) for x in row] for row in q.lattice.dual_gram], dtype=float)
    g = np.array([[float(x) for x in row] for row in q.lattice.gram], dtype=float)
    # |mu_i| <= sqrt(q * G_ii) by Cauchy-Schwarz in the dual metric
    radius = [int(math.floor(math.sqrt(float(value) * g[i, i]) + 1e-9)) + 1 for i in range(n)]
    dual = q.lattice.dual_gram
    out = []
    for mu in itertools.product(*(range(-r, r + 1) for r in radius)):
        if float(np.dot(mu, ginv @ mu)) > float(value) + 1:
            continue
        exact = sum(mu[i] * dual[i][j] * mu[j] for i in range(n) for j in range(n))
        if exact == value:
            out.append(tuple(mu))
    return out


def _exterior_matrix(a: np.ndarray, p: int) -> tuple[np.ndarray, list[tuple[int, ...]]]:
    n = a.shape[0]
    idx = list(itertools.combinations(range(n), p))
    m = np.zeros((len(idx), len(idx)))
    for r, i in enumerate(idx):
        for c, j in enumerate(idx):
            m[r, c] = np.linalg.det(a[np.ix_(i, j)]) if p else 1.0
    return m, idx


def invariant_dimension(q: FlatQuotient, p: int, value, parity: int = 1) -> int:
    """Dimension of the (anti-)invariant part of the p-form eigenspace at 4 pi^2 * value."""
    value = Fraction(value)
    tau = q.require_involution()
    vecs = _box_vectors(q, value)
    if not vecs:
        return 0
    pos = {mu: k for k, mu in enumerate(vecs)}
    a = np.array(tau.linear, dtype=float)
    b = [float(x) for x in tau.translation]
    # pullback of dx_i is sum_j A_ij dx_j; on p-forms the matrix is Lambda^p A
    ext, _ = _exterior_matrix(a, p)
    nf = ext.shape[0]
    dim = len(vecs) * nf
    perm = np.zeros((dim, dim), dtype=complex)
    at = np.array(tau.linear, dtype=int).T
    for mu, k in pos.items():
        image = tuple(int(x) for x in at @ np.array(mu))
        phase = np.exp(2j * np.pi * float(np.dot(mu, b)))
        kk = pos[image]
        # column block k (source e_mu dx_I) lands in row block kk with Lambda^p A acting on I
        perm[kk * nf:(kk + 1) * nf, k * nf:(k + 1) * nf] = phase * ext.T
    proj = (np.eye(dim) + parity * perm) / 2
    return int(np.linalg.matrix_rank(proj, tol=1e-8))


def eigenspace_dimension(q: FlatQuotient, p: int, value) -> int:
    return len(_box_vectors(q, Fraction(value))) * math.comb(q.dim, p)
