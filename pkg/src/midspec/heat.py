"""Leading heat-expansion data and the degree-0 distinguisher."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Optional, Union

from .core import (BadDegree, ComparisonOutcome, Eigenvalue, SpectrumError,
                   SpectrumSegment, compare_segments, fraction_str)
from .flat import FlatQuotient, fixed_set, p_spectrum
from .sphere import SphericalQuotient


class UnsupportedSpace(SpectrumError):
    pass


class NonPositiveTime(SpectrumError):
    pass


def c_coefficient(n: int, p: int) -> int:
    """Coefficient of vol(boundary) in the t^(1/2) heat invariant on p-forms."""
    if not 0 <= p <= n:
        raise BadDegree(f"degree {p} outside 0..{n}")
    return comb(n - 1, p) - (comb(n - 1, p - 1) if p >= 1 else 0)


@dataclass(frozen=True)
class Volume:
    """coeff * pi**pi_power * sqrt(radicand)."""

    coeff: Fraction
    pi_power: int = 0
    radicand: Fraction = Fraction(1)

    def __float__(self) -> float:
        return float(self.coeff) * math.pi ** self.pi_power * math.sqrt(self.radicand)

    def scaled(self, k) -> "Volume":
        return Volume(self.coeff * Fraction(k), self.pi_power, self.radicand)

    def __str__(self) -> str:
        s = str(self.coeff)
        if self.pi_power:
            s += f"*pi^{self.pi_power}"
        if self.radicand != 1:
            s += f"*sqrt({self.radicand})"
        return s

    def to_json(self) -> dict:
        return {"coeff": fraction_str(self.coeff), "pi_power": self.pi_power,
                "radicand": fraction_str(self.radicand), "approx": float(self)}


def sphere_volume(n: int, radius_squared: Fraction) -> Volume:
    """vol S^n(r) = 2 pi^((n+1)/2) / Gamma((n+1)/2) * r^n."""
    r2 = Fraction(radius_squared)
    if n % 2 == 0:
        m = n // 2
        dfact = 1
        for k in range(1, 2 * m, 2):
            dfact *= k
        coeff = Fraction(2 ** (m + 1), dfact)
        return Volume(coeff, m, r2 ** n)
    m = (n + 1) // 2
    return Volume(Fraction(2, math.factorial(m - 1)), m, r2 ** n)


@dataclass(frozen=True)
class HeatCoefficients:
    n: int
    p: int
    a0: Volume
    a_half_coeff: int
    volume: Volume
    boundary_volume: Optional[Volume]
    notes: str = ""

    def to_json(self) -> dict:
        return {"n": self.n, "p": self.p, "volume": self.volume.to_json(),
                "a0": self.a0.to_json(), "c(p)": self.a_half_coeff,
                "boundary_volume": None if self.boundary_volume is None else self.boundary_volume.to_json(),
                "notes": self.notes}


Space = Union[FlatQuotient, SphericalQuotient]


def volume_term(space: Space, p: int) -> HeatCoefficients:
    """Volume, a_0 = binom(n, p) vol and c(p) with the boundary volume when there is one."""
    if isinstance(space, FlatQuotient):
        n = space.dim
        vol = Volume(Fraction(1), 0, space.lattice.covolume_squared())
        boundary = None
        notes = "closed flat torus"
        if space.involution is not None:
            vol = vol.scaled(Fraction(1, 2))
            fs = fixed_set(space)
            notes = f"quotient by an involution; fixed set of dimension {fs.dimension}"
            if fs.dimension == n - 1:
                boundary = Volume(Fraction(fs.component_count), 0, fs.component_volume_squared)
            elif fs.dimension >= 0:
                notes += " (singular strata, not a boundary)"
    elif isinstance(space, SphericalQuotient):
        n = space.sphere.dim
        r2 = space.sphere.radius_squared
        vol = sphere_volume(n, r2)
        boundary = None
        notes = space.kind
        if space.signs is not None:
            vol = vol.scaled(Fraction(1, 2))
            if space.kind == "hemisphere":
                boundary = sphere_volume(n - 1, r2)
    else:
        raise UnsupportedSpace(f"no volume formula for {type(space).__name__}")
    if not 0 <= p <= n:
        raise BadDegree(f"degree {p} outside 0..{n}")
    return HeatCoefficients(n, p, vol.scaled(comb(n, p)), c_coefficient(n, p), vol, boundary, notes)


def truncated_heat_trace(s: SpectrumSegment, t: float) -> tuple[float, str]:
    """Partial heat trace over the segment; the true trace is strictly larger."""
    if not t > 0:
        raise NonPositiveTime(f"t must be positive, got {t}")
    total = math.fsum(m * math.exp(-float(ev) * t) for ev, m in s.entries)
    note = f"partial sum over eigenvalues <= {s.cutoff}; the full trace exceeds this value"
    return total, note


def heat_curve_csv(s: SpectrumSegment, times: Iterable[float]) -> str:
    lines = ["t,value"]
    for t in times:
        v, _ = truncated_heat_trace(s, t)
        lines.append(f"{t!r},{v!r}")
    return "\n".join(lines) + "\n"


def zero_spectrum_first_difference(a: FlatQuotient, b: FlatQuotient,
                                   cutoff: Eigenvalue) -> ComparisonOutcome:
    return compare_segments(p_spectrum(a, 0, cutoff), p_spectrum(b, 0, cutoff), exclude_zero=False)
