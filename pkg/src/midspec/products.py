"""Spectra of Riemannian products: eigenvalues add, multiplicities multiply."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .core import (BadDegree, Eigenvalue, SpectrumError, SpectrumSegment,
                   eigenvalue_compare)
from .flat import FlatQuotient, p_spectrum
from .sphere import Length, RoundSphere, projective_p_spectrum, sphere_p_spectrum


class IncompleteFactor(SpectrumError):
    pass


@dataclass(frozen=True)
class GradedSpectrum:
    """Segments for every degree 0..dim of one closed space, sharing a cutoff."""

    segments: Mapping[int, SpectrumSegment]
    dim: int
    label: str = ""

    def __post_init__(self):
        if sorted(self.segments) != list(range(self.dim + 1)):
            raise SpectrumError("a graded spectrum needs every degree 0..dim")
        cutoffs = {s.cutoff for s in self.segments.values()}
        if len(cutoffs) != 1:
            raise SpectrumError("all degrees must share one cutoff")

    @property
    def cutoff(self) -> Eigenvalue:
        return self.segments[0].cutoff

    def euler_characteristic(self) -> int:
        return sum((-1) ** p * s.multiplicity(Eigenvalue()) for p, s in self.segments.items())


def graded_flat(q: FlatQuotient, cutoff: Eigenvalue) -> GradedSpectrum:
    return GradedSpectrum({p: p_spectrum(q, p, cutoff) for p in range(q.dim + 1)}, q.dim,
                          q.label or "flat")


def graded_sphere(s: RoundSphere, cutoff: Eigenvalue) -> GradedSpectrum:
    return GradedSpectrum({p: sphere_p_spectrum(s, p, cutoff) for p in range(s.dim + 1)}, s.dim,
                          f"S^{s.dim}")


def graded_projective(s: RoundSphere, cutoff: Eigenvalue) -> GradedSpectrum:
    return GradedSpectrum({p: projective_p_spectrum(s, p, cutoff) for p in range(s.dim + 1)}, s.dim,
                          f"P^{s.dim}")


def kunneth_p_spectrum(m: GradedSpectrum, n: GradedSpectrum, p: int,
                       cutoff: Eigenvalue, label: str = "") -> SpectrumSegment:
    if not 0 <= p <= m.dim + n.dim:
        raise BadDegree(f"degree {p} outside 0..{m.dim + n.dim}")
    for factor in (m, n):
        if eigenvalue_compare(factor.cutoff, cutoff) < 0:
            raise IncompleteFactor(f"factor {factor.label} is only complete up to {factor.cutoff}")
    counts: dict[Eigenvalue, int] = {}
    for i in range(max(0, p - n.dim), min(m.dim, p) + 1):
        for lam, a in m.segments[i].entries:
            if cutoff < lam:
                break
            for mu, b in n.segments[p - i].entries:
                s = lam + mu
                if cutoff < s:
                    break
                counts[s] = counts.get(s, 0) + a * b
    return SpectrumSegment.from_counts(counts, cutoff, p, label or f"{m.label} x {n.label}")


def graded_product(m: GradedSpectrum, n: GradedSpectrum, cutoff: Eigenvalue) -> GradedSpectrum:
    dim = m.dim + n.dim
    label = f"{m.label} x {n.label}"
    return GradedSpectrum({p: kunneth_p_spectrum(m, n, p, cutoff, label) for p in range(dim + 1)},
                          dim, label)


def product_shortest_length(factor_lengths: Sequence[Length]) -> Length:
    """A closed geodesic of a product is shortest when it lives in a single factor."""
    if not factor_lengths:
        raise SpectrumError("need at least one factor")
    return min(factor_lengths)
