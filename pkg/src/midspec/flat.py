"""Flat tori and their quotients by a single affine involution.

A torus is R^n / L, recorded by the Gram matrix G of a basis of L. Points
and maps are written in lattice coordinates, so the torus is R^n / Z^n and
an involution x -> A x + b has integer A. Laplace eigenfunctions on p-forms
are exp(2 pi i mu.x) dx^I for mu in Z^n, with eigenvalue 4 pi^2 mu^T G^-1 mu.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Optional, Sequence

from . import lattice as la
from .core import (BadDegree, Eigenvalue, SpectrumError, SpectrumSegment,
                   as_fraction, fraction_str)


class CutoffNotFlat(SpectrumError):
    pass


class NoInvolution(SpectrumError):
    pass


class InvalidDescriptor(SpectrumError):
    pass


def _frac_matrix(rows) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(as_fraction(x) for x in row) for row in rows)


@dataclass(frozen=True)
class Lattice:
    gram: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        g = _frac_matrix(self.gram)
        n = len(g)
        if n < 1 or any(len(r) != n for r in g):
            raise InvalidDescriptor("gram must be a non-empty square matrix")
        if any(g[i][j] != g[j][i] for i in range(n) for j in range(n)):
            raise InvalidDescriptor("gram must be symmetric")
        if not la.is_positive_definite(g):
            raise InvalidDescriptor("gram must be positive definite")
        object.__setattr__(self, "gram", g)

    @property
    def rank(self) -> int:
        return len(self.gram)

    @classmethod
    def diagonal(cls, *squares) -> "Lattice":
        n = len(squares)
        return cls(tuple(tuple(as_fraction(squares[i]) if i == j else Fraction(0)
                               for j in range(n)) for i in range(n)))

    @classmethod
    def cubic(cls, n: int) -> "Lattice":
        return cls.diagonal(*([1] * n))

    @functools.cached_property
    def dual_gram(self) -> tuple[tuple[Fraction, ...], ...]:
        return _frac_matrix(la.inverse(self.gram))

    def covolume_squared(self) -> Fraction:
        return la.determinant(self.gram)


@dataclass(frozen=True)
class AffineInvolution:
    linear: tuple[tuple[int, ...], ...]
    translation: tuple[Fraction, ...]

    def __post_init__(self):
        a = tuple(tuple(int(x) for x in row) for row in self.linear)
        b = tuple(as_fraction(x) % 1 for x in self.translation)
        n = len(a)
        if any(len(r) != n for r in a) or len(b) != n:
            raise InvalidDescriptor("linear part and translation have inconsistent sizes")
        if la.matmul(a, a) != la.identity(n):
            raise InvalidDescriptor("linear part does not square to the identity")
        ab = la.matvec(a, b)
        if any((x + y).denominator != 1 for x, y in zip(ab, b)):
            raise InvalidDescriptor("A b + b is not integral; the torus map is not an involution")
        object.__setattr__(self, "linear", a)
        object.__setattr__(self, "translation", b)

    @property
    def dim(self) -> int:
        return len(self.linear)

    def det(self) -> int:
        return int(la.determinant(self.linear))

    def plus_dimension(self) -> int:
        """Dimension of the +1 eigenspace of the linear part."""
        tr = sum(self.linear[i][i] for i in range(self.dim))
        return (self.dim + tr) // 2

    def exterior_trace(self, p: int) -> int:
        """Trace of the induced map on the p-th exterior power."""
        r = self.plus_dimension()
        s = self.dim - r
        return sum((-1) ** j * comb(s, j) * comb(r, p - j) for j in range(0, p + 1))


def is_orientation_reversing(tau: AffineInvolution) -> bool:
    return tau.det() == -1


@dataclass(frozen=True)
class FlatQuotient:
    lattice: Lattice
    involution: Optional[AffineInvolution] = None
    label: str = ""

    def __post_init__(self):
        tau = self.involution
        if tau is None:
            return
        if tau.dim != self.lattice.rank:
            raise InvalidDescriptor("involution and lattice dimensions differ")
        a, g = tau.linear, self.lattice.gram
        if la.matmul(la.matmul(la.transpose(a), g), a) != [list(r) for r in g]:
            raise InvalidDescriptor("involution is not an isometry of the lattice metric")

    @property
    def dim(self) -> int:
        return self.lattice.rank

    def require_involution(self) -> AffineInvolution:
        if self.involution is None:
            raise NoInvolution(f"{self.label or 'space'} has no involution")
        return self.involution

    # JSON descriptor -------------------------------------------------------
    def to_json(self) -> dict:
        d = {"kind": "flat", "rank": self.dim,
             "gram": [[fraction_str(x) for x in row] for row in self.lattice.gram],
             "label": self.label}
        if self.involution is not None:
            d["involution"] = {"A": [list(r) for r in self.involution.linear],
                               "b": [fraction_str(x) for x in self.involution.translation]}
        return d

    @classmethod
    def from_json(cls, d: dict) -> "FlatQuotient":
        try:
            gram = d["gram"]
            if "rank" in d and int(d["rank"]) != len(gram):
                raise InvalidDescriptor("rank does not match gram size")
            inv = d.get("involution")
            tau = None
            if inv is not None:
                tau = AffineInvolution(tuple(tuple(r) for r in inv["A"]),
                                       tuple(as_fraction(x) for x in inv["b"]))
            return cls(Lattice(_frac_matrix(gram)), tau, d.get("label", ""))
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            if isinstance(exc, InvalidDescriptor):
                raise
            raise InvalidDescriptor(f"bad flat descriptor: {exc}") from exc

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


# --- lattice sums ---------------------------------------------------------

@functools.lru_cache(maxsize=256)
def _dual_vectors(dual_gram: tuple, bound: Fraction) -> tuple[tuple[tuple[int, ...], Fraction], ...]:
    return tuple(la.enumerate_short(dual_gram, bound))


def dual_vectors(lat: Lattice, bound) -> tuple[tuple[tuple[int, ...], Fraction], ...]:
    """Every mu in Z^n with mu^T G^-1 mu <= bound, paired with that norm."""
    return _dual_vectors(lat.dual_gram, Fraction(bound))


def _flat_bound(cutoff: Eigenvalue) -> Fraction:
    if cutoff.plain != 0:
        raise CutoffNotFlat(f"flat spectra need a pure 4pi^2 cutoff, got {cutoff}")
    return cutoff.pi2


def _check_degree(p: int, n: int):
    if not 0 <= p <= n:
        raise BadDegree(f"degree {p} outside 0..{n}")


def representation_counts(lat: Lattice, bound) -> dict[Fraction, int]:
    counts: dict[Fraction, int] = {}
    for _, q in dual_vectors(lat, bound):
        counts[q] = counts.get(q, 0) + 1
    return counts


def torus_p_spectrum(lat: Lattice, p: int, cutoff: Eigenvalue, label: str = "") -> SpectrumSegment:
    bound = _flat_bound(cutoff)
    _check_degree(p, lat.rank)
    fibre = comb(lat.rank, p)
    counts = {Eigenvalue.flat(q): fibre * c for q, c in representation_counts(lat, bound).items()}
    return SpectrumSegment.from_counts(counts, cutoff, p, label or f"torus(n={lat.rank})")


def _phase_sign(mu: Sequence[int], b: Sequence[Fraction]) -> int:
    t = 2 * sum(m * x for m, x in zip(mu, b))
    if t.denominator != 1:
        raise SpectrumError("phase of a fixed dual vector is not real")  # excluded by the involution law
    return -1 if t.numerator % 2 else 1


def eigenspace_traces(q: FlatQuotient, p: int, bound) -> dict[Fraction, tuple[int, int]]:
    """{norm: (dim H, trace of tau^*)} on each p-form eigenspace with norm <= bound."""
    tau = q.require_involution()
    _check_degree(p, q.dim)
    a_t = la.transpose(tau.linear)
    fibre = comb(q.dim, p)
    ext = tau.exterior_trace(p)
    out: dict[Fraction, list[int]] = {}
    for mu, nrm in dual_vectors(q.lattice, bound):
        slot = out.setdefault(nrm, [0, 0])
        slot[0] += fibre
        if tuple(la.matvec(a_t, mu)) == mu:
            slot[1] += ext * _phase_sign(mu, tau.translation)
    return {k: (v[0], v[1]) for k, v in out.items()}


def quotient_p_spectrum(q: FlatQuotient, p: int, cutoff: Eigenvalue,
                        parity: str = "invariant", label: str = "") -> SpectrumSegment:
    """Spectrum on tau-invariant (or anti-invariant) p-forms via the trace formula."""
    if parity not in ("invariant", "anti_invariant"):
        raise ValueError("parity must be 'invariant' or 'anti_invariant'")
    bound = _flat_bound(cutoff)
    sign = 1 if parity == "invariant" else -1
    counts = {}
    for nrm, (dim, tr) in eigenspace_traces(q, p, bound).items():
        twice = dim + sign * tr
        if twice % 2 or twice < 0:
            raise SpectrumError(f"trace parity failure at {nrm}: dim {dim}, trace {tr}")
        counts[Eigenvalue.flat(nrm)] = twice // 2
    space = label or q.label or "flat quotient"
    if parity == "anti_invariant":
        space += " (anti-invariant)"
    return SpectrumSegment.from_counts(counts, cutoff, p, space)


def p_spectrum(q: FlatQuotient, p: int, cutoff: Eigenvalue) -> SpectrumSegment:
    """Torus spectrum, or invariant-form spectrum when an involution is present."""
    if q.involution is None:
        return torus_p_spectrum(q.lattice, p, cutoff, q.label)
    return quotient_p_spectrum(q, p, cutoff, "invariant")


# --- fixed sets -------------------------------------------------------------

@dataclass(frozen=True)
class FixedSetSummary:
    dimension: int
    component_count: int
    component_volume_squared: Fraction
    isolated_point_count: int
    direction_basis: tuple[tuple[int, ...], ...] = field(default=())

    @property
    def total_volume_squared(self) -> Fraction:
        """(count * sqrt(radicand))^2 -- all components are translates of each other."""
        return self.component_count ** 2 * self.component_volume_squared

    def total_volume(self) -> float:
        return self.component_count * float(self.component_volume_squared) ** 0.5

    def to_json(self) -> dict:
        return {"dimension": self.dimension, "component_count": self.component_count,
                "component_volume_squared": fraction_str(self.component_volume_squared),
                "total_volume_squared": fraction_str(self.total_volume_squared),
                "isolated_point_count": self.isolated_point_count}


def fixed_set(q: FlatQuotient) -> FixedSetSummary:
    """Solve A x + b = x (mod Z^n) through the Smith form of A - I."""
    tau = q.require_involution()
    n = q.dim
    m = [[tau.linear[i][j] - int(i == j) for j in range(n)] for i in range(n)]
    s, u, v = la.smith_normal_form(m)
    diag = [s[i][i] for i in range(n)]
    r = sum(1 for x in diag if x)
    c = la.matvec(u, tau.translation)
    # coordinates beyond the rank are free; they must see an integral shift
    if any(Fraction(c[i]).denominator != 1 for i in range(r, n)):
        return FixedSetSummary(-1, 0, Fraction(0), 0)
    count = 1
    for x in diag[:r]:
        count *= abs(x)
    dim = n - r
    kernel = [tuple(v[i][j] for i in range(n)) for j in range(r, n)]
    if dim == 0:
        return FixedSetSummary(0, count, Fraction(1), count, ())
    g = q.lattice.gram
    k_gram = [[la.dot(ki, la.matvec(g, kj)) for kj in kernel] for ki in kernel]
    return FixedSetSummary(dim, count, la.determinant(k_gram), 0, tuple(kernel))


def image_index(tau: AffineInvolution) -> int:
    """Index of (A - I) Z^n inside its saturation: product of the Smith invariants."""
    n = tau.dim
    m = [[tau.linear[i][j] - int(i == j) for j in range(n)] for i in range(n)]
    s, _, _ = la.smith_normal_form(m)
    out = 1
    for i in range(n):
        if s[i][i]:
            out *= s[i][i]
    return out


# --- displacement lengths ----------------------------------------------------

def _lattice_basis(generators: list[list[Fraction]]) -> list[list[Fraction]]:
    """Z-basis of the lattice spanned by rational generator vectors."""
    den = 1
    for gvec in generators:
        for x in gvec:
            den = den * x.denominator // _gcd(den, x.denominator)
    ints = [[int(x * den) for x in gvec] for gvec in generators]
    cols = la.transpose(ints)  # n x k, generators as columns
    s, u, _ = la.smith_normal_form(cols)
    uinv = la.integer_inverse(u)
    basis = []
    for i in range(min(len(s), len(s[0]))):
        if s[i][i]:
            basis.append([Fraction(uinv[row][i] * s[i][i], den) for row in range(len(uinv))])
    return basis


def _gcd(a: int, b: int) -> int:
    from math import gcd
    return gcd(a, b)


def displacement_length_spectrum(q: FlatQuotient, length_cutoff) -> list[tuple[Fraction, int]]:
    """Squared displacement lengths <= cutoff^2 with element counts.

    Translations contribute |lambda|^2. Each element (A, b + lambda) contributes
    the squared norm of the projection of b + lambda onto the fixed directions of
    A, i.e. (v + A v)/2; elements are counted up to conjugation by translations.
    """
    length_cutoff = as_fraction(length_cutoff)
    if length_cutoff <= 0:
        raise SpectrumError("length cutoff must be positive")
    r2 = length_cutoff ** 2
    g = q.lattice.gram
    counts: dict[Fraction, int] = {}
    for lam, nrm in la.enumerate_short(g, r2):
        if nrm:
            counts[nrm] = counts.get(nrm, 0) + 1
    tau = q.involution
    if tau is not None:
        n = q.dim
        a = tau.linear

        def proj(vec):
            av = la.matvec(a, vec)
            return [(x + y) / 2 for x, y in zip(vec, av)]

        gens = [proj([Fraction(int(i == j)) for i in range(n)]) for j in range(n)]
        gens = [gv for gv in gens if any(gv)]
        classes = image_index(tau)
        shift = proj(list(tau.translation))
        if gens:
            basis = _lattice_basis(gens)
            # coordinates of the shift are not needed: enumerate c with |shift + B c|^2 <= r2
            bg = [[la.dot(bi, la.matvec(g, bj)) for bj in basis] for bi in basis]
            # write shift = B s0 + w with w orthogonal to span(B); shift lies in span(B)
            s0 = _solve_in_span(basis, shift, g)
            for _, nrm in la.enumerate_short(bg, r2, s0):
                if nrm:
                    counts[nrm] = counts.get(nrm, 0) + classes
        else:
            nrm = la.quad(g, shift)
            if nrm and nrm <= r2:
                counts[nrm] = counts.get(nrm, 0) + classes
    return sorted(counts.items())


def _solve_in_span(basis, vec, g) -> list[Fraction]:
    """Coordinates of vec in the given basis (vec must lie in its span)."""
    bg = [[la.dot(bi, la.matvec(g, bj)) for bj in basis] for bi in basis]
    rhs = [la.dot(bi, la.matvec(g, vec)) for bi in basis]
    coords = la.matvec(la.inverse(bg), rhs)
    back = [sum(c * bi[k] for c, bi in zip(coords, basis)) for k in range(len(vec))]
    if back != list(vec):
        raise SpectrumError("translation projection is not in the fixed span")
    return coords


def shortest_displacement(q: FlatQuotient, length_cutoff, involution_part_only: bool = False
                          ) -> Optional[Fraction]:
    """Smallest squared displacement, optionally only among non-translation elements."""
    if involution_part_only:
        if q.involution is None:
            return None
        full = dict(displacement_length_spectrum(q, length_cutoff))
        plain = dict(displacement_length_spectrum(FlatQuotient(q.lattice), length_cutoff))
        extra = [k for k in full if full[k] != plain.get(k, 0)]
        return min(extra) if extra else None
    spec = displacement_length_spectrum(q, length_cutoff)
    return spec[0][0] if spec else None


# --- the named surfaces built from one torus ----------------------------------

def square_family(kind: str, lat: Optional[Lattice] = None) -> FlatQuotient:
    """Quotients of a 2-torus by the involutions used for the surface examples.

    kind: 'torus', 'klein' (glide), 'cylinder' (reflection), 'mobius'
    (coordinate swap) or 'pillow' (minus identity).
    """
    lat = lat or Lattice.cubic(2)
    half = Fraction(1, 2)
    table = {
        "torus": None,
        "klein": AffineInvolution(((1, 0), (0, -1)), (half, Fraction(0))),
        "cylinder": AffineInvolution(((1, 0), (0, -1)), (Fraction(0), Fraction(0))),
        "mobius": AffineInvolution(((0, 1), (1, 0)), (Fraction(0), Fraction(0))),
        "pillow": AffineInvolution(((-1, 0), (0, -1)), (Fraction(0), Fraction(0))),
    }
    if kind not in table:
        raise ValueError(f"unknown surface kind {kind!r}")
    return FlatQuotient(lat, table[kind], kind)


def diagonal_involution(signs: Sequence[int], translation: Optional[Sequence] = None
                        ) -> AffineInvolution:
    n = len(signs)
    a = tuple(tuple(int(signs[i]) if i == j else 0 for j in range(n)) for i in range(n))
    b = tuple(as_fraction(x) for x in (translation or [0] * n))
    return AffineInvolution(a, b)


def product_with_torus(q: FlatQuotient, extra_dim: int) -> FlatQuotient:
    """q x (cubical torus of dimension extra_dim), the involution acting trivially on the new factor."""
    n = q.dim + extra_dim
    g = [[Fraction(0)] * n for _ in range(n)]
    for i in range(q.dim):
        for j in range(q.dim):
            g[i][j] = q.lattice.gram[i][j]
    for i in range(q.dim, n):
        g[i][i] = Fraction(1)
    tau = None
    if q.involution is not None:
        a = [[int(i == j) for j in range(n)] for i in range(n)]
        for i in range(q.dim):
            for j in range(q.dim):
                a[i][j] = q.involution.linear[i][j]
        b = list(q.involution.translation) + [Fraction(0)] * extra_dim
        tau = AffineInvolution(tuple(map(tuple, a)), tuple(b))
    return FlatQuotient(Lattice(tuple(map(tuple, g))), tau, f"{q.label} x T^{extra_dim}")
