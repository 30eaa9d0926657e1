"""Right-angled hexagons, pants surfaces and their reflection symmetries.

A closed surface is modelled as the boundary of a thickened graph drawn on a
strip (optionally periodic in u). Every graph vertex carries a pair of pants
(more generally a sphere with deg(v) holes) cut into a front and a back
polygon; every graph edge carries one cuff. Polygon sides alternate between
half-cuffs and seams, seams being the curves where the surface meets the
drawing plane. With zero twists this is an honest hyperbolic pants
decomposition when all vertices are trivalent.

Cells of the surface complex:
    ("v", e, side)      side in "L", "R": where the seams meet cuff e
    ("cuff", e, half)   half in "F", "B"
    ("seam", v, i)      seam in corner i of vertex v (between darts i, i+1)
    ("poly", v, half)

Symmetries are affine maps (u, w) -> (su*u + cu, sw*w) of the strip, possibly
combined with the front/back swap. The genus-(2t+1) template: pants T_j at
(j+1/2, 1/2) and B_j at (j+1/2, -1/2), j mod 2t; leg cuffs join T_j to T_j+1
and B_j to B_j+1; the waist cuff of T_j is glued to that of B_j.
"""

from __future__ import annotations

import json
import math
from collections import defaultdict, deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .core import SpectrumError

ARCSINH_1 = math.asinh(1.0)
HEX_TOL = 1e-9


class NonPositiveSide(SpectrumError):
    pass


class AutomorphismGluingMismatch(SpectrumError):
    pass


class NotInvolutive(SpectrumError):
    pass


class ParameterConstraintViolated(SpectrumError):
    def __init__(self, which: str, detail: str = ""):
        super().__init__(f"constraint violated: {which}" + (f" ({detail})" if detail else ""))
        self.which = which


# --- hexagon trigonometry ----------------------------------------------------

def opposite_side(a: float, b: float, c: float) -> float:
    """Side opposite c in the right-angled hexagon with alternating sides a, b, c."""
    return math.acosh((math.cosh(c) + math.cosh(a) * math.cosh(b)) / (math.sinh(a) * math.sinh(b)))


@dataclass(frozen=True)
class Hexagon:
    """Sides in cyclic order (a, c', b, a', c, b'); x' is opposite x."""

    sides: tuple[float, float, float, float, float, float]

    @property
    def alternating(self) -> tuple[float, float, float]:
        return self.sides[0], self.sides[2], self.sides[4]

    @property
    def opposites(self) -> tuple[float, float, float]:
        """(a', b', c')."""
        return self.sides[3], self.sides[5], self.sides[1]

    def residuals(self) -> tuple[float, float, float]:
        """cosh x - (sinh y sinh z cosh x' - cosh y cosh z) for each alternating side x."""
        a, b, c = self.alternating
        ap, bp, cp = self.opposites
        out = []
        for x, y, z, xp in ((c, a, b, cp), (a, b, c, ap), (b, c, a, bp)):
            out.append(math.cosh(x) - (math.sinh(y) * math.sinh(z) * math.cosh(xp)
                                       - math.cosh(y) * math.cosh(z)))
        # the same identity read from the seam sides
        for x, y, z, xp in ((cp, ap, bp, c), (ap, bp, cp, a), (bp, cp, ap, b)):
            out.append(math.cosh(x) - (math.sinh(y) * math.sinh(z) * math.cosh(xp)
                                       - math.cosh(y) * math.cosh(z)))
        return tuple(out)

    def max_residual(self) -> float:
        return max(abs(r) for r in self.residuals())


def solve_hexagon(alpha: float, gamma: float) -> Hexagon:
    """The right-angled hexagon with alternating sides (alpha, alpha, gamma)."""
    if not (alpha > 0 and gamma > 0):
        raise NonPositiveSide(f"sides must be positive, got alpha={alpha}, gamma={gamma}")
    a = b = float(alpha)
    c = float(gamma)
    ap = opposite_side(b, c, a)
    bp = opposite_side(c, a, b)
    cp = opposite_side(a, b, c)
    h = Hexagon((a, cp, b, ap, c, bp))
    if h.max_residual() > HEX_TOL:
        raise ArithmeticError(f"hexagon identity residual {h.max_residual():.3e}")
    return h


# --- embedded graphs and surface complexes --------------------------------------

@dataclass(frozen=True)
class GraphEdge:
    tail: str
    head: str
    mid: tuple[Fraction, Fraction]
    kind: str = "cuff"


@dataclass
class StripGraph:
    """Graph drawn on the strip; u is taken mod `period` when given."""

    vertices: dict[str, tuple[Fraction, Fraction]]
    edges: dict[str, GraphEdge]
    period: Optional[Fraction] = None

    def wrap(self, u: Fraction) -> Fraction:
        return u % self.period if self.period else u

    def point_key(self, pt) -> tuple[Fraction, Fraction]:
        return (self.wrap(Fraction(pt[0])), Fraction(pt[1]))

    def direction(self, v: str, e: str) -> tuple[float, float]:
        vu, vw = self.vertices[v]
        mu, mw = self.edges[e].mid
        du = mu - vu
        if self.period:
            du = (du + self.period / 2) % self.period - self.period / 2
        return float(du), float(mw - vw)

    def darts(self, v: str) -> list[tuple[str, int]]:
        """Darts out of v as (edge, +1 leaving tail / -1 leaving head), counter-clockwise."""
        out = []
        for name, e in self.edges.items():
            if e.tail == v:
                out.append((name, 1))
            if e.head == v:
                out.append((name, -1))
        out.sort(key=lambda d: math.atan2(*reversed(self.direction(v, d[0]))) % (2 * math.pi))
        return out


def _left_side(dart) -> str:
    return "L" if dart[1] == 1 else "R"


def _right_side(dart) -> str:
    return "R" if dart[1] == 1 else "L"


@dataclass
class SurfaceComplex:
    graph: StripGraph
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        g = self.graph
        self.rotation = {v: g.darts(v) for v in g.vertices}
        cells = []
        bd: dict[tuple, list[tuple]] = {}
        for e in g.edges:
            cells += [("v", e, "L"), ("v", e, "R")]
        for e in g.edges:
            for h in "FB":
                c = ("cuff", e, h)
                cells.append(c)
                bd[c] = [("v", e, "L"), ("v", e, "R")]
        for v, darts in self.rotation.items():
            k = len(darts)
            for i in range(k):
                d0, d1 = darts[i], darts[(i + 1) % k]
                c = ("seam", v, i)
                cells.append(c)
                bd[c] = [("v", d0[0], _left_side(d0)), ("v", d1[0], _right_side(d1))]
        for v, darts in self.rotation.items():
            for h in "FB":
                c = ("poly", v, h)
                cells.append(c)
                sides = []
                for i, d in enumerate(darts):
                    sides += [("cuff", d[0], h), ("seam", v, i)]
                bd[c] = sides
        self.cells = cells
        self.boundary = bd
        self.closure = self._closures()
        self.flags = [(x, y, z) for z in cells if z[0] == "poly"
                      for y in bd[z] for x in bd[y]]
        self.flag_sign = self._orient_flags()

    # topology of the complex -------------------------------------------
    def _closures(self) -> dict[tuple, set]:
        out = {}
        for c in self.cells:
            s = set()
            for y in self.boundary.get(c, []):
                s.add(y)
                s.update(self.boundary.get(y, []))
            out[c] = s
        return out

    def _orient_flags(self) -> dict[tuple, int]:
        by_pair = defaultdict(list)
        for f in self.flags:
            for pair in ((f[0], f[1]), (f[0], f[2]), (f[1], f[2])):
                by_pair[pair].append(f)
        for pair, fl in by_pair.items():
            if len(fl) != 2:
                raise AutomorphismGluingMismatch(f"subdivision edge {pair} is not interior")
        sign = {self.flags[0]: 1}
        queue = deque([self.flags[0]])
        orientable = True
        while queue:
            f = queue.popleft()
            for pair in ((f[0], f[1]), (f[0], f[2]), (f[1], f[2])):
                for g in by_pair[pair]:
                    if g == f:
                        continue
                    if g not in sign:
                        sign[g] = -sign[f]
                        queue.append(g)
                    elif sign[g] == sign[f]:
                        orientable = False
        if len(sign) != len(self.flags):
            raise AutomorphismGluingMismatch("surface is not connected")
        self.orientable = orientable
        return sign

    def euler_characteristic(self) -> int:
        dims = {"v": 0, "cuff": 1, "seam": 1, "poly": 2}
        return sum((-1) ** dims[c[0]] for c in self.cells)

    def genus(self) -> int:
        return (2 - self.euler_characteristic()) // 2

    def cuffs(self) -> list[tuple[str, str]]:
        return [(name, e.kind) for name, e in self.graph.edges.items()]

    def polygons(self) -> list[tuple]:
        return [c for c in self.cells if c[0] == "poly"]

    def gluing_pairs(self) -> list[tuple[tuple, tuple, tuple]]:
        """(polygon, polygon, shared side) for every side shared by two polygons."""
        owners = defaultdict(list)
        for p in self.polygons():
            for side in self.boundary[p]:
                owners[side].append(p)
        out = []
        for side, ps in owners.items():
            if len(ps) != 2:
                raise AutomorphismGluingMismatch(f"side {side} is not shared by two polygons")
            out.append((ps[0], ps[1], side))
        return out

    def to_dot(self) -> str:
        def name(c):
            return f"{c[1]}_{c[2]}"
        lines = ["graph gluing {"]
        for p in self.polygons():
            lines.append(f'  "{name(p)}";')
        for a, b, side in sorted(self.gluing_pairs(), key=str):
            lines.append(f'  "{name(a)}" -- "{name(b)}" [label="{side[0]}:{side[1]}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


# --- automorphisms -------------------------------------------------------------

@dataclass(frozen=True)
class StripMap:
    su: int
    cu: Fraction
    sw: int
    swap: bool

    def apply(self, pt):
        return (self.su * pt[0] + self.cu, self.sw * pt[1])


@dataclass
class SurfaceAutomorphism:
    name: str
    cell_map: dict
    vertex_map: dict = field(default_factory=dict)
    reflects: bool = False

    def __call__(self, cell):
        return self.cell_map[cell]

    def compose(self, other: "SurfaceAutomorphism", name: str = "") -> "SurfaceAutomorphism":
        """self o other."""
        cm = {c: self.cell_map[other.cell_map[c]] for c in other.cell_map}
        vm = {v: self.vertex_map[other.vertex_map[v]] for v in other.vertex_map}
        return SurfaceAutomorphism(name or f"{self.name}o{other.name}", cm, vm,
                                   self.reflects != other.reflects)

    def same_as(self, other: "SurfaceAutomorphism") -> bool:
        return self.cell_map == other.cell_map


def strip_automorphism(s: SurfaceComplex, name: str, m: StripMap) -> SurfaceAutomorphism:
    g = s.graph
    vkey = {g.point_key(p): v for v, p in g.vertices.items()}
    ekey = {g.point_key(e.mid): n for n, e in g.edges.items()}
    try:
        vmap = {v: vkey[g.point_key(m.apply(p))] for v, p in g.vertices.items()}
        emap = {n: ekey[g.point_key(m.apply(e.mid))] for n, e in g.edges.items()}
    except KeyError as exc:
        raise AutomorphismGluingMismatch(f"{name} does not preserve the graph") from exc
    reflect = m.su * m.sw == -1

    def dart_image(v, dart):
        e, sgn = dart
        ee = g.edges[emap[e]]
        tgt = vmap[v]
        if ee.tail == tgt and (ee.head != tgt):
            return (emap[e], 1)
        if ee.head == tgt:
            return (emap[e], -1)
        raise AutomorphismGluingMismatch(f"{name} breaks incidence at {v}")

    cm = {}
    for e, ed in g.edges.items():
        for side in "LR":
            d = (e, 1)
            img = dart_image(ed.tail, d)
            # left of the dart goes to left of the image unless the map reflects
            img_side = _left_side(img) if not reflect else _right_side(img)
            if side == "R":
                img_side = {"L": "R", "R": "L"}[img_side]
            cm[("v", e, side)] = ("v", img[0], img_side)
        for h in "FB":
            cm[("cuff", e, h)] = ("cuff", emap[e], h if not m.swap else {"F": "B", "B": "F"}[h])
    for v, darts in s.rotation.items():
        k = len(darts)
        tgt = s.rotation[vmap[v]]
        if len(tgt) != k:
            raise AutomorphismGluingMismatch(f"{name} changes a vertex degree")
        imgs = [dart_image(v, d) for d in darts]
        pos = [tgt.index(d) for d in imgs]
        step = 1 if not reflect else -1
        if any((pos[(i + 1) % k] - pos[i]) % k != step % k for i in range(k)) and k > 2:
            raise AutomorphismGluingMismatch(f"{name} does not respect the cyclic order at {v}")
        for i in range(k):
            j = pos[i] if not reflect else pos[(i + 1) % k]
            cm[("seam", v, i)] = ("seam", vmap[v], j)
        for h in "FB":
            cm[("poly", v, h)] = ("poly", vmap[v], h if not m.swap else {"F": "B", "B": "F"}[h])
    aut = SurfaceAutomorphism(name, cm, vmap, reflect)
    _check_cellular(s, aut)
    return aut


def _check_cellular(s: SurfaceComplex, a: SurfaceAutomorphism):
    if sorted(map(str, a.cell_map.values())) != sorted(map(str, s.cells)):
        raise AutomorphismGluingMismatch(f"{a.name} is not a bijection on cells")
    for c, bd in s.boundary.items():
        if sorted(map(str, (a(x) for x in bd))) != sorted(map(str, s.boundary[a(c)])):
            raise AutomorphismGluingMismatch(f"{a.name} does not commute with the gluing at {c}")


def identity_automorphism(s: SurfaceComplex) -> SurfaceAutomorphism:
    return SurfaceAutomorphism("id", {c: c for c in s.cells}, {v: v for v in s.graph.vertices})


# --- classification ------------------------------------------------------------

@dataclass(frozen=True)
class Classification:
    involutive: bool
    orientation_reversing: bool
    fixed_point_free: bool
    fixed_circle_count: int
    isolated_fixed_points: int

    def to_json(self) -> dict:
        return dict(self.__dict__)


def _fixed_components(s: SurfaceComplex, a: SurfaceAutomorphism) -> tuple[int, int]:
    fixed = [c for c in s.cells if a(c) == c]
    fset = set(fixed)
    adj = defaultdict(set)
    for c in fixed:
        for y in s.closure[c]:
            if y in fset:
                adj[c].add(y)
                adj[y].add(c)
    seen = set()
    circles = points = 0
    for c in fixed:
        if c in seen:
            continue
        comp = []
        stack = [c]
        seen.add(c)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(comp) == 1:
            points += 1
        else:
            if any(len(adj[x]) != 2 for x in comp):
                raise AutomorphismGluingMismatch(f"fixed set of {a.name} is not a union of circles")
            circles += 1
    return circles, points


def classify_automorphism(s: SurfaceComplex, a: SurfaceAutomorphism) -> Classification:
    _check_cellular(s, a)
    involutive = all(a(a(c)) == c for c in s.cells)
    signs = {s.flag_sign[f] * s.flag_sign[tuple(a(x) for x in f)] for f in s.flags}
    if len(signs) != 1:
        raise AutomorphismGluingMismatch(f"{a.name} has inconsistent orientation behaviour")
    reversing = signs == {-1}
    circles, points = _fixed_components(s, a)
    return Classification(involutive, reversing, circles == 0 and points == 0, circles, points)


@dataclass(frozen=True)
class QuotientTopology:
    orientable: bool
    euler: int
    orbifold_euler: Fraction
    boundary_components: int
    cone_points: int
    genus: int
    crosscap_number: Optional[int]

    def to_json(self) -> dict:
        d = dict(self.__dict__)
        d["orbifold_euler"] = str(self.orbifold_euler)
        return d


def quotient_topology(s: SurfaceComplex, a: SurfaceAutomorphism) -> QuotientTopology:
    """Topology of the quotient via the barycentric subdivision (setwise fixed = pointwise fixed)."""
    cls = classify_automorphism(s, a)
    if not cls.involutive:
        raise NotInvolutive(f"{a.name} is not an involution")

    def orbit(x):
        y = tuple(a(c) for c in x) if isinstance(x[0], tuple) else a(x)
        return min(str(x), str(y))

    cell_orbits = {orbit(c) for c in s.cells}
    pairs = {(x, y) for y in s.cells for x in s.closure[y]}
    pair_orbits = {orbit(p) for p in pairs}
    flag_orbits = {orbit(f) for f in s.flags}
    euler = len(cell_orbits) - len(pair_orbits) + len(flag_orbits)

    by_pair = defaultdict(list)
    for f in s.flags:
        for p in ((f[0], f[1]), (f[0], f[2]), (f[1], f[2])):
            by_pair[p].append(orbit(f))
    adj = defaultdict(set)
    boundary_pairs = []
    for p in pairs:
        f1, f2 = by_pair[p]
        if f1 == f2:
            boundary_pairs.append(p)
        else:
            adj[f1].add(f2)
            adj[f2].add(f1)
    colour = {}
    orientable = True
    for start in flag_orbits:
        if start in colour:
            continue
        colour[start] = 1
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in colour:
                    colour[y] = -colour[x]
                    queue.append(y)
                elif colour[y] == colour[x]:
                    orientable = False
    # boundary circles of the quotient: components of the boundary subcomplex
    bnodes = defaultdict(set)
    for x, y in boundary_pairs:
        bnodes[x].add(y)
        bnodes[y].add(x)
    seen = set()
    bcount = 0
    for n0 in bnodes:
        if n0 in seen:
            continue
        bcount += 1
        stack = [n0]
        seen.add(n0)
        while stack:
            x = stack.pop()
            for y in bnodes[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    orb_euler = Fraction(s.euler_characteristic(), 2)
    if orientable:
        genus = (2 - euler - bcount) // 2
        crosscaps = None
    else:
        crosscaps = 2 - euler - bcount
        genus = crosscaps // 2 if crosscaps % 2 == 0 else crosscaps
    return QuotientTopology(orientable, euler, orb_euler, bcount, cls.isolated_fixed_points,
                            genus, crosscaps)


# --- the surfaces ---------------------------------------------------------------

def _half(x) -> Fraction:
    return Fraction(x) + Fraction(1, 2)


def pants_label(vertex: str, t: int) -> int:
    """Index i of pants Y_i with rho(Y_i) = Y_(i+2t): T_k = Y_2k, B_k = Y_2k+1."""
    k = int(vertex[1:])
    return 2 * k + (vertex[0] == "B")


def build_surface(t: int, alpha: float = 0.8, gamma: float = 0.7) -> SurfaceComplex:
    """Genus 2t+1 surface from 4t pants (template described in the module docstring)."""
    if t < 1:
        raise SpectrumError("t must be a positive integer")
    period = Fraction(2 * t)
    h = Fraction(1, 2)
    verts = {}
    edges = {}
    for j in range(2 * t):
        verts[f"T{j}"] = (_half(j), h)
        verts[f"B{j}"] = (_half(j), -h)
    for j in range(2 * t):
        k = (j + 1) % (2 * t)
        edges[f"w{j}"] = GraphEdge(f"T{j}", f"B{j}", (_half(j), Fraction(0)), "waist")
        edges[f"t{j}"] = GraphEdge(f"T{j}", f"T{k}", (Fraction(j + 1) % period, h), "leg")
        edges[f"b{j}"] = GraphEdge(f"B{j}", f"B{k}", (Fraction(j + 1) % period, -h), "leg")
    return SurfaceComplex(StripGraph(verts, edges, period),
                          {"t": t, "alpha": alpha, "gamma": gamma, "template": "prism"})


def named_automorphisms(s: SurfaceComplex) -> dict[str, SurfaceAutomorphism]:
    """tau_H, tau_V1, tau_V2, tau_P, rho and tau_1..tau_4 (each built from its own strip map)."""
    t = s.params["t"]
    maps = {
        "tauH": StripMap(1, Fraction(0), -1, False),
        "tauV1": StripMap(-1, Fraction(0), 1, False),
        "tauV2": StripMap(-1, Fraction(1), 1, False),
        "tauP": StripMap(1, Fraction(0), 1, True),
        "rho": StripMap(1, Fraction(t), 1, False),
        "tau1": StripMap(-1, Fraction(0), -1, True),
        "tau2": StripMap(1, Fraction(t), 1, True),
        "tau3": StripMap(1, Fraction(t), -1, False),
        "tau4": StripMap(-1, Fraction(1), -1, True),
    }
    return {k: strip_automorphism(s, k, m) for k, m in maps.items()}


def composition_identities(s: SurfaceComplex) -> dict[str, bool]:
    a = named_automorphisms(s)
    return {
        "tau1 = tauH o tauV1 o tauP": a["tau1"].same_as(a["tauH"].compose(a["tauV1"]).compose(a["tauP"])),
        "tau2 = tauP o rho": a["tau2"].same_as(a["tauP"].compose(a["rho"])),
        "tau3 = tauH o rho": a["tau3"].same_as(a["tauH"].compose(a["rho"])),
        "tau4 = tauH o tauV2 o tauP": a["tau4"].same_as(a["tauH"].compose(a["tauV2"]).compose(a["tauP"])),
        "tauH, tauP commute with rho": (
            a["tauH"].compose(a["rho"]).same_as(a["rho"].compose(a["tauH"]))
            and a["tauP"].compose(a["rho"]).same_as(a["rho"].compose(a["tauP"]))),
        "tauH, tauV1, tauP commute": all(
            a[x].compose(a[y]).same_as(a[y].compose(a[x]))
            for x, y in (("tauH", "tauV1"), ("tauH", "tauP"), ("tauV1", "tauP"))),
    }


def ladder_surface(n: int) -> SurfaceComplex:
    """Genus-2n surface: thickened ladder with 2n+1 rungs drawn in the plane."""
    if n < 1:
        raise SpectrumError("n must be >= 1")
    h = Fraction(1, 2)
    verts, edges = {}, {}
    for i in range(2 * n + 1):
        verts[f"T{i}"] = (Fraction(i), h)
        verts[f"B{i}"] = (Fraction(i), -h)
        edges[f"r{i}"] = GraphEdge(f"T{i}", f"B{i}", (Fraction(i), Fraction(0)), "rung")
    for i in range(2 * n):
        edges[f"t{i}"] = GraphEdge(f"T{i}", f"T{i + 1}", (_half(i), h), "rail")
        edges[f"b{i}"] = GraphEdge(f"B{i}", f"B{i + 1}", (_half(i), -h), "rail")
    return SurfaceComplex(StripGraph(verts, edges, None), {"n": n, "template": "ladder"})


def ladder_reflections(s: SurfaceComplex) -> dict[str, SurfaceAutomorphism]:
    n = s.params["n"]
    return {
        "vertical": strip_automorphism(s, "vertical", StripMap(-1, Fraction(2 * n), 1, False)),
        "horizontal": strip_automorphism(s, "horizontal", StripMap(1, Fraction(0), -1, False)),
        "plane": strip_automorphism(s, "plane", StripMap(1, Fraction(0), 1, True)),
    }


# --- lengths -------------------------------------------------------------------

def check_parameters(alpha: float, gamma: float):
    if not alpha < ARCSINH_1:
        raise ParameterConstraintViolated("alpha < arcsinh(1)", f"alpha={alpha}")
    if not gamma < ARCSINH_1:
        raise ParameterConstraintViolated("gamma < arcsinh(1)", f"gamma={gamma}")
    if not gamma < 2 * alpha:
        raise ParameterConstraintViolated("gamma < 2 alpha", f"gamma={gamma}, alpha={alpha}")


def cuff_length(s: SurfaceComplex, edge: str) -> float:
    kind = s.graph.edges[edge].kind
    return 2 * (s.params["gamma"] if kind == "waist" else s.params["alpha"])


def short_geodesic_report(s: SurfaceComplex) -> dict:
    alpha, gamma, t = s.params["alpha"], s.params["gamma"], s.params["t"]
    check_parameters(alpha, gamma)
    cuffs = sorted((cuff_length(s, e), e, k) for e, k in s.cuffs())
    g = s.genus()
    return {
        "genus": g,
        "alpha": alpha, "gamma": gamma, "arcsinh(1)": ARCSINH_1,
        "cuffs": [{"edge": e, "kind": k, "length": ell} for ell, e, k in cuffs],
        "short_cuff_count": sum(1 for ell, _, _ in cuffs if ell <= 2 * ARCSINH_1),
        "bound_3g_minus_3": 3 * g - 3,
        "saturated": len(cuffs) == 3 * g - 3 == 6 * t,
    }


def invariant_cuffs(s: SurfaceComplex, a: SurfaceAutomorphism) -> list[str]:
    """Cuffs mapped onto themselves with their two halves exchanged (half-turn on the circle)."""
    out = []
    for e in s.graph.edges:
        if a(("cuff", e, "F")) == ("cuff", e, "B"):
            out.append(e)
    return out


def injectivity_radius_comparison(t: int, alpha: float, gamma: float) -> dict:
    check_parameters(alpha, gamma)
    s = build_surface(t, alpha, gamma)
    auts = named_automorphisms(s)
    lower = min(2 * alpha, 2 * gamma)
    report = {"t": t, "alpha": alpha, "gamma": gamma, "quotients": {}}
    for i in (1, 2, 3, 4):
        a = auts[f"tau{i}"]
        halves = [cuff_length(s, e) / 2 for e in invariant_cuffs(s, a)]
        entry = {"new_geodesics_from_cuffs": sorted(halves)}
        if halves:
            entry["shortest_known"] = min(min(halves), lower)
        else:
            entry["shortest_lower_bound"] = lower
        report["quotients"][f"S{i}"] = entry
    s4 = report["quotients"]["S4"].get("shortest_known")
    report["S4_new_geodesic"] = s4
    report["margin"] = lower - s4 if s4 is not None else None
    report["S4_strictly_shortest"] = s4 is not None and s4 < lower and all(
        "shortest_known" not in report["quotients"][f"S{i}"] for i in (1, 2, 3))
    return report


def surface_report(t: int, alpha: float = 0.8, gamma: float = 0.7) -> dict:
    """Everything needed to check the hyperbolic surface construction for one t."""
    s = build_surface(t, alpha, gamma)
    auts = named_automorphisms(s)
    hexagon = solve_hexagon(alpha, gamma)
    out = {
        "t": t, "genus": s.genus(), "euler": s.euler_characteristic(), "orientable": s.orientable,
        "polygons": len(s.polygons()),
        "cuff_kinds": {k: sum(1 for _, kk in s.cuffs() if kk == k) for k in ("waist", "leg")},
        "hexagon_sides": list(hexagon.sides), "hexagon_max_residual": hexagon.max_residual(),
        "composition_identities": composition_identities(s),
        "automorphisms": {}, "quotients": {},
    }
    for name, a in auts.items():
        out["automorphisms"][name] = classify_automorphism(s, a).to_json()
        cls = out["automorphisms"][name]
        if cls["involutive"] and name != "rho":
            out["quotients"][name] = quotient_topology(s, a).to_json()
    return out


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, default=str)
