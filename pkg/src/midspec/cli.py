"""Command-line entry point.

Exit codes: 0 success, 1 usage or input error, 2 `compare` found a difference,
3 a scenario was refuted or a certificate hypothesis failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from . import hyperbolic as hyp
from .core import Eigenvalue, Equal, SpectrumError, SpectrumSegment, compare_segments, fraction_str
from .flat import FlatQuotient, displacement_length_spectrum, fixed_set, p_spectrum
from .heat import heat_curve_csv, truncated_heat_trace, volume_term
from .scenarios import (REFUTED, HypothesisFailed, Options, certificate_corollary_1_4,
                        list_scenarios, run_scenario)
from .sphere import (RoundSphere, SphericalQuotient, quotient_middle_spectrum,
                     shortest_closed_geodesic, sphere_p_spectrum, sphere_singular_set_dimension)

EXIT_OK, EXIT_USAGE, EXIT_DIFFERENT, EXIT_REFUTED = 0, 1, 2, 3


def _load_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise SpectrumError(f"cannot read {path}: {exc}") from exc


def load_space(path: str):
    d = _load_json(path)
    kind = d.get("kind")
    if kind == "flat":
        return FlatQuotient.from_json(d)
    if kind == "sphere":
        return SphericalQuotient.from_json(d)
    raise SpectrumError(f"{path}: unknown space kind {kind!r}")


def space_spectrum(space, p: int, cutoff: Optional[Eigenvalue]) -> SpectrumSegment:
    if isinstance(space, FlatQuotient):
        return p_spectrum(space, p, cutoff or Eigenvalue.flat(50))
    cutoff = cutoff or Eigenvalue.rational(60)
    if space.signs is None:
        return sphere_p_spectrum(space.sphere, p, cutoff, space.label)
    if p != space.sphere.dim // 2:
        raise SpectrumError("sphere quotients are only available in the middle degree")
    return quotient_middle_spectrum(space, cutoff)


def segment_csv(s: SpectrumSegment) -> str:
    lines = ["plain,pi2,approx,mult"]
    for ev, m in s.entries:
        lines.append(f"{fraction_str(ev.plain)},{fraction_str(ev.pi2)},{float(ev)!r},{m}")
    return "\n".join(lines) + "\n"


def segment_markdown(s: SpectrumSegment) -> str:
    lines = [f"### {s.space}: degree {s.degree}, complete up to {s.cutoff}", "",
             "| eigenvalue | approx | multiplicity |", "|---|---|---|"]
    for ev, m in s.entries:
        lines.append(f"| {ev} | {float(ev):.6f} | {m} |")
    return "\n".join(lines) + "\n"


def _cutoff(text: Optional[str]) -> Optional[Eigenvalue]:
    if text is None:
        return None
    try:
        return Eigenvalue.parse(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise SpectrumError(f"bad cutoff {text!r}; use e.g. 50xPI2 or 60") from exc


def cmd_spectrum(args) -> int:
    s = space_spectrum(load_space(args.space), args.p, _cutoff(args.cutoff))
    if args.format == "csv":
        sys.stdout.write(segment_csv(s))
    elif args.format == "md":
        sys.stdout.write(segment_markdown(s))
    else:
        print(json.dumps(s.to_json(), indent=2))
    return EXIT_OK


def cmd_compare(args) -> int:
    cutoff = _cutoff(args.cutoff)
    a = space_spectrum(load_space(args.a), args.p, cutoff)
    b = space_spectrum(load_space(args.b), args.p, cutoff)
    out = compare_segments(a, b, exclude_zero=args.exclude_zero)
    print(json.dumps({"a": a.space, "b": b.space, "degree": args.p,
                      "exclude_zero": args.exclude_zero, "outcome": out.to_json()}, indent=2))
    return EXIT_OK if isinstance(out, Equal) else EXIT_DIFFERENT


def cmd_lengths(args) -> int:
    space = load_space(args.space)
    if isinstance(space, FlatQuotient):
        spec = displacement_length_spectrum(space, Fraction(args.max))
        rows = [{"length_squared": fraction_str(l2), "approx": float(l2) ** 0.5, "count": c}
                for l2, c in spec]
        print(json.dumps({"space": space.label, "max": args.max, "displacements": rows}, indent=2))
        return EXIT_OK
    kind = {"sphere": "sphere", "projective": "projective"}.get(space.kind)
    if kind is None:
        raise SpectrumError(f"no closed-geodesic data for {space.kind}")
    ell = shortest_closed_geodesic(kind, space.sphere.radius_squared)
    print(json.dumps({"space": space.kind, "shortest_closed_geodesic": str(ell),
                      "approx": float(ell)}, indent=2))
    return EXIT_OK


def cmd_fixed_set(args) -> int:
    space = load_space(args.space)
    if isinstance(space, FlatQuotient):
        print(json.dumps(fixed_set(space).to_json(), indent=2))
    else:
        print(json.dumps({"kind": space.kind,
                          "singular_set_dimension": sphere_singular_set_dimension(space)}, indent=2))
    return EXIT_OK


def cmd_heat(args) -> int:
    space = load_space(args.space)
    coeffs = volume_term(space, args.p)
    seg = space_spectrum(space, args.p, _cutoff(args.cutoff))
    if args.format == "csv":
        sys.stdout.write(heat_curve_csv(seg, args.t))
        return EXIT_OK
    traces = []
    for t in args.t:
        value, note = truncated_heat_trace(seg, t)
        traces.append({"t": t, "partial_trace": value, "note": note})
    print(json.dumps({"coefficients": coeffs.to_json(), "traces": traces}, indent=2))
    return EXIT_OK


def cmd_scenario(args) -> int:
    if args.action == "list":
        for i in list_scenarios():
            print(i)
        return EXIT_OK
    if not args.id:
        raise SpectrumError("scenario run needs an id (or 'all')")
    opts = Options(cutoff=_cutoff(args.cutoff), exclude_zero=args.exclude_zero,
                   t=args.t, alpha=args.alpha, gamma=args.gamma)
    ids = list_scenarios() if args.id == "all" else [args.id]
    reports = [run_scenario(i, opts) for i in ids]
    if args.format == "md":
        sys.stdout.write("\n".join(r.to_markdown() for r in reports))
    else:
        payload = [r.to_json() for r in reports]
        print(json.dumps(payload if len(payload) > 1 else payload[0], indent=2, sort_keys=True,
                         default=str))
    return EXIT_REFUTED if any(r.verdict == REFUTED for r in reports) else EXIT_OK


def cmd_certify(args) -> int:
    m, t1, t2 = _load_json(args.m), _load_json(args.tau1), _load_json(args.tau2)
    try:
        cert = certificate_corollary_1_4(m, t1, t2)
    except HypothesisFailed as exc:
        print(json.dumps({"failed": exc.item, **exc.certificate.to_json()}, indent=2))
        return EXIT_REFUTED
    print(json.dumps(cert.to_json(), indent=2))
    return EXIT_OK


def cmd_surface(args) -> int:
    if args.format == "dot":
        sys.stdout.write(hyp.build_surface(args.t, args.alpha, args.gamma).to_dot())
        return EXIT_OK
    report = hyp.surface_report(args.t, args.alpha, args.gamma)
    if args.format == "md":
        lines = [f"# Genus {report['genus']} surface (t = {args.t})", "",
                 "| map | involutive | reverses orientation | free | fixed circles |",
                 "|---|---|---|---|---|"]
        for name, c in report["automorphisms"].items():
            lines.append(f"| {name} | {c['involutive']} | {c['orientation_reversing']} | "
                         f"{c['fixed_point_free']} | {c['fixed_circle_count']} |")
        lines += ["", "| quotient | orientable | euler | boundary | genus |", "|---|---|---|---|---|"]
        for name, q in report["quotients"].items():
            lines.append(f"| {name} | {q['orientable']} | {q['euler']} | "
                         f"{q['boundary_components']} | {q['genus']} |")
        print("\n".join(lines))
    else:
        print(hyp.dumps(report))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="midspec", description="Middle-degree Hodge spectra of quotients.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="p-spectrum of a space descriptor")
    p.add_argument("--space", required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--cutoff", help="e.g. 50xPI2 (flat) or 60 (sphere)")
    p.add_argument("--format", choices=("json", "csv", "md"), default="json")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("compare", help="first difference of two p-spectra")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--cutoff")
    p.add_argument("--exclude-zero", action="store_true")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("lengths", help="displacement lengths / shortest closed geodesic")
    p.add_argument("--space", required=True)
    p.add_argument("--max", default="3")
    p.set_defaults(func=cmd_lengths)

    p = sub.add_parser("fixed-set", help="fixed set of the involution")
    p.add_argument("--space", required=True)
    p.set_defaults(func=cmd_fixed_set)

    p = sub.add_parser("heat", help="volume terms and truncated heat traces")
    p.add_argument("--space", required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--t", type=float, nargs="+", required=True)
    p.add_argument("--cutoff")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_heat)

    p = sub.add_parser("scenario", help="run or list the worked examples")
    p.add_argument("action", choices=("run", "list"))
    p.add_argument("id", nargs="?")
    p.add_argument("--cutoff")
    p.add_argument("--exclude-zero", action="store_true")
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--alpha", type=float, default=0.8)
    p.add_argument("--gamma", type=float, default=0.7)
    p.add_argument("--format", choices=("json", "md"), default="json")
    p.set_defaults(func=cmd_scenario)

    p = sub.add_parser("certify", help="check the hypotheses of the quotient isospectrality criterion")
    p.add_argument("--m", required=True)
    p.add_argument("--tau1", required=True)
    p.add_argument("--tau2", required=True)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("surface", help="genus 2t+1 pants surface and its symmetries")
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--alpha", type=float, default=0.8)
    p.add_argument("--gamma", type=float, default=0.7)
    p.add_argument("--format", choices=("json", "md", "dot"), default="json")
    p.set_defaults(func=cmd_surface)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except SpectrumError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
