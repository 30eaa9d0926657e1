"""Exact eigenvalues, spectrum segments and segment comparison.

Eigenvalues live in the two-dimensional rational space spanned by 1 and 4*pi**2.
Equality is coefficient-wise; ordering of mixed values is decided with a
certified rational enclosure of pi that is refined until the sign is known.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

RationalLike = Union[int, Fraction, str]


class SpectrumError(ValueError):
    """Base class for contract violations in this package."""


class OddMultiplicity(SpectrumError):
    def __init__(self, eigenvalue: "Eigenvalue", multiplicity: int):
        super().__init__(f"multiplicity {multiplicity} at {eigenvalue} is odd")
        self.eigenvalue = eigenvalue
        self.multiplicity = multiplicity


class DegreeMismatch(SpectrumError):
    pass


class BadDegree(SpectrumError):
    pass


def as_fraction(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot read {x!r} as an exact rational")


def fraction_str(x: Fraction) -> str:
    """Serialize as 'num/den' (always with a denominator)."""
    return f"{x.numerator}/{x.denominator}"


# --- certified enclosure of pi --------------------------------------------

def _arctan_inv_bounds(x: int, terms: int) -> tuple[Fraction, Fraction]:
    # alternating series with decreasing terms: consecutive partial sums bracket arctan(1/x)
    s = Fraction(0)
    prev = s
    for k in range(terms + 1):
        prev = s
        s += Fraction((-1) ** k, (2 * k + 1) * x ** (2 * k + 1))
    return (min(prev, s), max(prev, s))


@functools.lru_cache(maxsize=None)
def pi_interval(terms: int) -> tuple[Fraction, Fraction]:
    """Rational bounds lo < pi < hi from Machin's formula."""
    a_lo, a_hi = _arctan_inv_bounds(5, terms)
    b_lo, b_hi = _arctan_inv_bounds(239, terms)
    return 16 * a_lo - 4 * b_hi, 16 * a_hi - 4 * b_lo


def _sign_of(plain: Fraction, pi2: Fraction) -> int:
    """Sign of plain + pi2 * 4 pi^2."""
    if pi2 == 0:
        return (plain > 0) - (plain < 0)
    if plain == 0:
        return 1 if pi2 > 0 else -1
    if (plain > 0) == (pi2 > 0):
        return 1 if plain > 0 else -1
    terms = 4
    while True:
        lo, hi = pi_interval(terms)
        a = plain + pi2 * 4 * lo * lo
        b = plain + pi2 * 4 * hi * hi
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        terms *= 2


@functools.total_ordering
@dataclass(frozen=True)
class Eigenvalue:
    """The real number ``plain + pi2 * 4*pi**2`` with rational coefficients."""

    plain: Fraction = Fraction(0)
    pi2: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "plain", as_fraction(self.plain))
        object.__setattr__(self, "pi2", as_fraction(self.pi2))

    @classmethod
    def flat(cls, q: RationalLike) -> "Eigenvalue":
        return cls(Fraction(0), as_fraction(q))

    @classmethod
    def rational(cls, q: RationalLike) -> "Eigenvalue":
        return cls(as_fraction(q), Fraction(0))

    @classmethod
    def parse(cls, text: str) -> "Eigenvalue":
        """Read ``'50xPI2'`` / ``'1/4xPI2'`` (multiples of 4 pi^2) or a plain rational."""
        t = text.strip().replace(" ", "")
        if t.lower().endswith("xpi2"):
            return cls.flat(Fraction(t[:-4]))
        return cls.rational(Fraction(t))

    def __add__(self, other: "Eigenvalue") -> "Eigenvalue":
        return Eigenvalue(self.plain + other.plain, self.pi2 + other.pi2)

    def __sub__(self, other: "Eigenvalue") -> "Eigenvalue":
        return Eigenvalue(self.plain - other.plain, self.pi2 - other.pi2)

    def scaled(self, factor: RationalLike) -> "Eigenvalue":
        f = as_fraction(factor)
        return Eigenvalue(self.plain * f, self.pi2 * f)

    def sign(self) -> int:
        return _sign_of(self.plain, self.pi2)

    def __lt__(self, other: "Eigenvalue") -> bool:
        return eigenvalue_compare(self, other) < 0

    def is_zero(self) -> bool:
        return self.plain == 0 and self.pi2 == 0

    def __float__(self) -> float:
        import math
        return float(self.plain) + float(self.pi2) * 4 * math.pi ** 2

    def __str__(self) -> str:
        if self.pi2 == 0:
            return str(self.plain)
        if self.plain == 0:
            return f"{self.pi2}*4pi^2"
        return f"{self.plain}+{self.pi2}*4pi^2"

    def to_json(self) -> dict:
        return {"plain": fraction_str(self.plain), "pi2": fraction_str(self.pi2)}

    @classmethod
    def from_json(cls, d: dict) -> "Eigenvalue":
        return cls(as_fraction(d["plain"]), as_fraction(d["pi2"]))


ZERO = Eigenvalue()


def eigenvalue_compare(a: Eigenvalue, b: Eigenvalue) -> int:
    """-1, 0 or 1 according to the order of the represented reals."""
    if a.plain == b.plain:
        return (a.pi2 > b.pi2) - (a.pi2 < b.pi2)
    if a.pi2 == b.pi2:
        return (a.plain > b.plain) - (a.plain < b.plain)
    return _sign_of(a.plain - b.plain, a.pi2 - b.pi2)


@dataclass(frozen=True)
class SpectrumSegment:
    """All eigenvalues <= cutoff of one operator, with exact multiplicities."""

    entries: tuple[tuple[Eigenvalue, int], ...]
    cutoff: Eigenvalue
    degree: int
    space: str = ""

    def __post_init__(self):
        entries = tuple((ev, int(m)) for ev, m in self.entries)
        for (a, _), (b, _) in zip(entries, entries[1:]):
            if not a < b:
                raise SpectrumError(f"entries not strictly ascending at {a}, {b}")
        for ev, m in entries:
            if m <= 0:
                raise SpectrumError(f"non-positive multiplicity {m} at {ev}")
            if self.cutoff < ev:
                raise SpectrumError(f"entry {ev} exceeds cutoff {self.cutoff}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_counts(cls, counts: dict, cutoff: Eigenvalue, degree: int,
                    space: str = "") -> "SpectrumSegment":
        """Build from an unordered {Eigenvalue: multiplicity} mapping; drops zeros and values above cutoff."""
        items = [(ev, m) for ev, m in counts.items() if m and not cutoff < ev]
        key = _sort_key([ev for ev, _ in items])
        items.sort(key=lambda em: key(em[0]))
        return cls(tuple(items), cutoff, degree, space)

    def multiplicity(self, ev: Eigenvalue) -> int:
        for e, m in self.entries:
            if e == ev:
                return m
        return 0

    def as_dict(self) -> dict[Eigenvalue, int]:
        return dict(self.entries)

    def eigenvalues(self) -> list[Eigenvalue]:
        return [e for e, _ in self.entries]

    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.entries)

    def truncate(self, cutoff: Eigenvalue) -> "SpectrumSegment":
        if self.cutoff < cutoff:
            raise SpectrumError("cannot truncate above the segment's own cutoff")
        return SpectrumSegment(tuple((e, m) for e, m in self.entries if not cutoff < e),
                               cutoff, self.degree, self.space)

    def relabel(self, space: str) -> "SpectrumSegment":
        return SpectrumSegment(self.entries, self.cutoff, self.degree, space)

    def to_json(self) -> dict:
        return {
            "space": self.space,
            "degree": self.degree,
            "cutoff": self.cutoff.to_json(),
            "complete": True,
            "entries": [dict(e.to_json(), mult=m) for e, m in self.entries],
        }

    @classmethod
    def from_json(cls, d: dict) -> "SpectrumSegment":
        entries = tuple((Eigenvalue.from_json(r), int(r["mult"])) for r in d["entries"])
        return cls(entries, Eigenvalue.from_json(d["cutoff"]), int(d["degree"]), d.get("space", ""))


class _SortKey:
    __slots__ = ("ev",)

    def __init__(self, ev: Eigenvalue):
        self.ev = ev

    def __lt__(self, other: "_SortKey") -> bool:
        return eigenvalue_compare(self.ev, other.ev) < 0


def _sort_key(evs: list[Eigenvalue]):
    # one family (pure 4 pi^2 multiples or pure rationals) sorts by a single Fraction
    if all(e.plain == 0 for e in evs):
        return lambda e: e.pi2
    if all(e.pi2 == 0 for e in evs):
        return lambda e: e.plain
    return _SortKey


def sort_eigenvalues(evs: Iterable[Eigenvalue]) -> list[Eigenvalue]:
    evs = list(evs)
    return sorted(evs, key=_sort_key(evs))


def min_eigenvalue(a: Eigenvalue, b: Eigenvalue) -> Eigenvalue:
    return a if eigenvalue_compare(a, b) <= 0 else b


def halve_multiplicities(s: SpectrumSegment) -> SpectrumSegment:
    """Divide every multiplicity by two; the input must be all-even."""
    out = []
    for ev, m in s.entries:
        if m % 2:
            raise OddMultiplicity(ev, m)
        out.append((ev, m // 2))
    return SpectrumSegment(tuple(out), s.cutoff, s.degree, s.space)


def double_multiplicities(s: SpectrumSegment) -> SpectrumSegment:
    return SpectrumSegment(tuple((e, 2 * m) for e, m in s.entries), s.cutoff, s.degree, s.space)


@dataclass(frozen=True)
class Equal:
    up_to: Eigenvalue

    def to_json(self) -> dict:
        return {"outcome": "equal", "up_to": self.up_to.to_json()}


@dataclass(frozen=True)
class FirstDifference:
    at: Eigenvalue
    mult_left: int
    mult_right: int

    def to_json(self) -> dict:
        return {"outcome": "first_difference", "at": self.at.to_json(),
                "mult_left": self.mult_left, "mult_right": self.mult_right}


ComparisonOutcome = Union[Equal, FirstDifference]


def compare_segments(a: SpectrumSegment, b: SpectrumSegment,
                     exclude_zero: bool = False) -> ComparisonOutcome:
    """Compare two segments below the smaller cutoff.

    Returns Equal(min cutoff) or the smallest eigenvalue whose multiplicities
    differ (an absent eigenvalue counts as multiplicity 0).
    """
    if a.degree != b.degree:
        raise DegreeMismatch(f"degrees {a.degree} and {b.degree} differ")
    cut = min_eigenvalue(a.cutoff, b.cutoff)
    da, db = a.as_dict(), b.as_dict()
    keys = {k for k in list(da) + list(db) if not cut < k}
    if exclude_zero:
        keys.discard(ZERO)
    for ev in sort_eigenvalues(keys):
        ma, mb = da.get(ev, 0), db.get(ev, 0)
        if ma != mb:
            return FirstDifference(ev, ma, mb)
    return Equal(cut)
