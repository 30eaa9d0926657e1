"""Hodge spectra of round spheres and of their quotients by diagonal involutions."""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Optional, Sequence

from .core import (BadDegree, Eigenvalue, SpectrumError, SpectrumSegment,
                   as_fraction, fraction_str, halve_multiplicities)


class CutoffNotPlain(SpectrumError):
    pass


class NotMiddleDegree(SpectrumError):
    pass


class NotOrientationReversing(SpectrumError):
    pass


class AntipodalHasNoFixedPoints(SpectrumError):
    pass


@dataclass(frozen=True)
class RoundSphere:
    dim: int
    radius_squared: Fraction = Fraction(1)

    def __post_init__(self):
        r2 = as_fraction(self.radius_squared)
        if self.dim < 1:
            raise SpectrumError("sphere dimension must be >= 1")
        if r2 <= 0:
            raise SpectrumError("radius squared must be positive")
        object.__setattr__(self, "radius_squared", r2)


def coclosed_multiplicity(n: int, p: int, k: int) -> int:
    """Multiplicity of the k-th coclosed p-form eigenvalue (k+p)(k+n-p-1) on the unit S^n."""
    num = (2 * k + n - 1) * factorial(k + n - 1)
    den = factorial(p) * factorial(n - p - 1) * factorial(k - 1) * (k + p) * (k + n - p - 1)
    if num % den:
        raise ArithmeticError(f"non-integral multiplicity for n={n}, p={p}, k={k}")
    return num // den


def coclosed_eigenvalue(n: int, p: int, k: int) -> int:
    return (k + p) * (k + n - p - 1)


def _coclosed_part(n: int, p: int, bound: Fraction, r2: Fraction, out: dict,
                   parity: Optional[int] = None):
    """Add coclosed p-form eigenvalues; with `parity`, keep only indices k with k+p = parity mod 2."""
    if not 0 <= p <= n - 1:
        return
    k = 1
    while True:
        ev = Fraction(coclosed_eigenvalue(n, p, k)) / r2
        if ev > bound:
            return
        if parity is None or (k + p) % 2 == parity:
            key = Eigenvalue.rational(ev)
            out[key] = out.get(key, 0) + coclosed_multiplicity(n, p, k)
        k += 1


def sphere_p_spectrum(s: RoundSphere, p: int, cutoff: Eigenvalue, label: str = "") -> SpectrumSegment:
    """Closed-form p-spectrum: coclosed p-forms, exact forms from coclosed (p-1)-forms, harmonic forms."""
    if not 0 <= p <= s.dim:
        raise BadDegree(f"degree {p} outside 0..{s.dim}")
    if cutoff.pi2 != 0:
        raise CutoffNotPlain(f"sphere spectra need a plain rational cutoff, got {cutoff}")
    bound = cutoff.plain
    counts: dict[Eigenvalue, int] = {}
    if p in (0, s.dim) and bound >= 0:
        counts[Eigenvalue()] = 1
    _coclosed_part(s.dim, p, bound, s.radius_squared, counts)
    _coclosed_part(s.dim, p - 1, bound, s.radius_squared, counts)
    name = label or f"S^{s.dim}(r^2={s.radius_squared})"
    return SpectrumSegment.from_counts(counts, cutoff, p, name)


def projective_p_spectrum(s: RoundSphere, p: int, cutoff: Eigenvalue, label: str = "") -> SpectrumSegment:
    """p-spectrum of RP^n: antipodally invariant forms on S^n, any degree.

    The index-k coclosed p-eigenforms come from homogeneous polynomial forms
    and are antipodally invariant exactly when k + p is even; exact forms
    inherit the parity of their coclosed (p-1) source. The volume form is
    invariant only for odd n.
    """
    if not 0 <= p <= s.dim:
        raise BadDegree(f"degree {p} outside 0..{s.dim}")
    if cutoff.pi2 != 0:
        raise CutoffNotPlain(f"sphere spectra need a plain rational cutoff, got {cutoff}")
    bound = cutoff.plain
    counts: dict[Eigenvalue, int] = {}
    if bound >= 0 and (p == 0 or (p == s.dim and s.dim % 2 == 1)):
        counts[Eigenvalue()] = 1
    _coclosed_part(s.dim, p, bound, s.radius_squared, counts, parity=0)
    _coclosed_part(s.dim, p - 1, bound, s.radius_squared, counts, parity=0)
    name = label or f"P^{s.dim}(r^2={s.radius_squared})"
    return SpectrumSegment.from_counts(counts, cutoff, p, name)


@dataclass(frozen=True)
class SphericalQuotient:
    sphere: RoundSphere
    signs: Optional[tuple[int, ...]] = None
    label: str = ""

    def __post_init__(self):
        if self.signs is None:
            return
        sg = tuple(int(x) for x in self.signs)
        if len(sg) != self.sphere.dim + 1 or any(x not in (1, -1) for x in sg):
            raise SpectrumError("signs must be n+1 entries of +1/-1")
        if -1 not in sg:
            raise SpectrumError("involution must be nontrivial")
        object.__setattr__(self, "signs", sg)

    @property
    def plus_count(self) -> int:
        return 0 if self.signs is None else self.signs.count(1)

    @property
    def kind(self) -> str:
        if self.signs is None:
            return "sphere"
        minus = self.signs.count(-1)
        if minus == len(self.signs):
            return "projective"
        if minus == 1:
            return "hemisphere"
        return f"orbifold({self.plus_count})"

    def is_orientation_reversing(self) -> bool:
        return self.signs is not None and self.signs.count(-1) % 2 == 1

    def to_json(self) -> dict:
        d = {"kind": "sphere", "dim": self.sphere.dim,
             "radius_squared": fraction_str(self.sphere.radius_squared), "label": self.label}
        if self.signs is not None:
            d["signs"] = list(self.signs)
        return d

    @classmethod
    def from_json(cls, d: dict) -> "SphericalQuotient":
        try:
            s = RoundSphere(int(d["dim"]), as_fraction(d.get("radius_squared", "1")))
            signs = d.get("signs")
            return cls(s, tuple(signs) if signs is not None else None, d.get("label", ""))
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise SpectrumError(f"bad sphere descriptor: {exc}") from exc

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def sign_pattern(n: int, plus: int) -> tuple[int, ...]:
    """diag(-1,...,-1, 1,...,1) on R^(n+1) with `plus` trailing +1 entries."""
    return tuple([-1] * (n + 1 - plus) + [1] * plus)


def quotient_middle_spectrum(q: SphericalQuotient, cutoff: Eigenvalue) -> SpectrumSegment:
    n = q.sphere.dim
    if n % 2:
        raise NotMiddleDegree(f"S^{n} has no middle degree")
    if not q.is_orientation_reversing():
        raise NotOrientationReversing(f"{q.kind} involution preserves orientation")
    m = n // 2
    full = sphere_p_spectrum(q.sphere, m, cutoff)
    label = q.label or f"{q.kind} of S^{n}(r^2={q.sphere.radius_squared})"
    if q.kind.startswith("orbifold"):
        label += f"; singular set dim {sphere_singular_set_dimension(q)}"
    return halve_multiplicities(full).relabel(label)


def sphere_singular_set_dimension(q: SphericalQuotient) -> int:
    if q.signs is None:
        raise SpectrumError("no involution")
    if q.kind == "projective":
        raise AntipodalHasNoFixedPoints("the antipodal map acts freely")
    return q.plus_count - 1


# --- lengths ----------------------------------------------------------------

@functools.total_ordering
@dataclass(frozen=True)
class Length:
    """The length pi_coeff * pi * sqrt(radicand)."""

    pi_coeff: Fraction
    radicand: Fraction

    def __post_init__(self):
        object.__setattr__(self, "pi_coeff", as_fraction(self.pi_coeff))
        object.__setattr__(self, "radicand", as_fraction(self.radicand))
        if self.pi_coeff <= 0 or self.radicand <= 0:
            raise SpectrumError("lengths must be positive")

    def _square(self) -> Fraction:
        return self.pi_coeff ** 2 * self.radicand

    def __eq__(self, other) -> bool:
        return isinstance(other, Length) and self._square() == other._square()

    def __hash__(self) -> int:
        return hash(self._square())

    def __lt__(self, other: "Length") -> bool:
        return self._square() < other._square()

    def __float__(self) -> float:
        import math
        return float(self.pi_coeff) * math.pi * float(self.radicand) ** 0.5

    def __str__(self) -> str:
        return f"{self.pi_coeff}*pi*sqrt({self.radicand})"


def shortest_closed_geodesic(space: str, radius_squared) -> Length:
    if space == "sphere":
        return Length(Fraction(2), radius_squared)
    if space == "projective":
        return Length(Fraction(1), radius_squared)
    raise SpectrumError(f"no closed-geodesic formula for {space!r}")
