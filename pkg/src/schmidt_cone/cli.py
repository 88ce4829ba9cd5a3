"""Command-line surface: classification, region emission, verification, witnesses.

JSON answers go to stdout, diagnostics to stderr.  Exit codes: 0 for a
well-formed answered query (including domain answers such as not_a_state),
2 for usage errors, 3 for internal failures or verification inconsistencies.
Scalars parse as decimals or rationals "n/m"; with --exact they are kept as
exact rationals and decisions are exact.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from importlib import resources

from . import classify, geometry, oracles

__all__ = ["main"]


def _parse_scalar(text: str, exact: bool):
    try:
        val = Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        sys.stderr.write(f"error: cannot parse scalar {text!r} (decimal or n/m expected)\n")
        raise SystemExit(2) from e
    return val if exact else float(val)


def _num(v):
    return str(v) if isinstance(v, Fraction) else float(v)


def _emit(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")


def _per_k_payload(per_k) -> list[dict]:
    return [
        {"k": k, "status": v.status, "margin": _num(v.margin)}
        for k, v in enumerate(per_k, start=1)
    ]


def _cmd_classify_map(args) -> int:
    p = _parse_scalar(args.p, args.exact)
    q = _parse_scalar(args.q, args.exact)
    prof = classify.k_positivity_max(args.d, p, q, tol=args.tol)
    _emit(
        {
            "d": args.d,
            "p": _num(p),
            "q": _num(q),
            "max_k": prof.max_k,
            "per_k": _per_k_payload(prof.per_k),
            "mode": "exact" if args.exact else "float",
        }
    )
    return 0


def _cmd_classify_state(args) -> int:
    a = _parse_scalar(args.a, args.exact)
    b = _parse_scalar(args.b, args.exact)
    cls = classify.schmidt_number(args.d, a, b, tol=args.tol)
    _emit(
        {
            "d": args.d,
            "a": _num(a),
            "b": _num(b),
            "schmidt_number": cls.schmidt_number if cls.is_state else "not_a_state",
            "boundary": cls.boundary,
            "per_k": _per_k_payload(cls.per_k),
            "mode": "exact" if args.exact else "float",
        }
    )
    return 0


def _load_style(path: str | None) -> dict:
    if path is None:
        text = resources.files("schmidt_cone").joinpath("svg_style.cfg").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    style = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, _, value = line.partition("=")
        style[key.strip()] = value.strip()
    return style


def _cmd_region(args) -> int:
    if args.kind == "map":
        rb = geometry.map_region_boundary(args.d, args.k, arc_samples=args.samples)
    else:
        rb = geometry.state_region_boundary(args.d, args.k, arc_samples=args.samples)
    if args.format == "json":
        _emit(geometry.region_payload(rb, kind=args.kind, d=args.d, k=args.k))
        return 0
    if args.out is None:
        sys.stderr.write("--out is required for csv/svg output\n")
        return 2
    if args.format == "csv":
        content = geometry.region_csv(rb)
    else:
        content = geometry.region_svg(rb, _load_style(args.style))
    with open(args.out, "w") as fh:
        fh.write(content)
    _emit(
        {
            "written": args.out,
            "format": args.format,
            "segments": max(len(rb.vertices) - 1, 0) + (1 if rb.closed and not rb.arcs else 0),
            "arcs": len(rb.arcs),
        }
    )
    return 0


def _cmd_verify(args) -> int:
    suites = (
        ["tomiyama", "frames", "twirl", "witness", "duality"]
        if args.suite == "all"
        else [args.suite]
    )
    reports = {}
    for name in suites:
        if name == "tomiyama":
            rep = oracles.grid_agreement(
                args.d,
                grid_n=args.grid,
                n_random=args.frames,
                seed=args.seed,
                workers=args.workers,
            )
        elif name == "frames":
            rep = oracles.frame_minima_check(args.d, seed=args.seed)
        elif name == "twirl":
            rep = oracles.twirl_consistency(args.d, n_samples=args.samples, seed=args.seed)
        elif name == "witness":
            rep = oracles.witness_grid_check(args.d, grid_n=min(args.grid, 100))
        elif name == "duality":
            if args.d > 4:
                sys.stderr.write(f"skipping duality suite: d={args.d} above desk scale\n")
                continue
            rep = oracles.duality_sanity(args.d, seed=args.seed)
        reports[name] = rep.to_dict()
    _emit({"d": args.d, "seed": args.seed, "reports": reports})
    if any(r["verdict"] != "consistent" for r in reports.values()):
        return 3
    return 0


def _cmd_witness(args) -> int:
    from .symmetry import InvariantState

    a = _parse_scalar(args.a, exact=False)
    b = _parse_scalar(args.b, exact=False)
    hit = oracles.witness_violation_search(
        InvariantState(args.d, a, b), args.k, arc_samples=args.arc_samples
    )
    if hit is None:
        _emit({"found": False, "d": args.d, "a": a, "b": b, "k": args.k})
    else:
        p, q, val = hit
        _emit({"found": True, "d": args.d, "a": a, "b": b, "k": args.k, "p": p, "q": q, "pairing": val})
    return 0


def _cmd_conic(args) -> int:
    if args.dual:
        conic = geometry.dual_conic(args.d, args.k, exact=True)
        pts = geometry.dual_tangency_points(args.d, args.k, exact=True)
        lines = geometry.dual_tangent_lines(args.d, args.k)
        payload = {
            "d": args.d,
            "k": args.k,
            "dual": True,
            "coefficients": [int(c) for c in conic.coefficients()],
            "classification": conic.classify(),
            "tangency_points": [[str(x), str(y)] for x, y in pts],
            "tangency_points_float": [[float(x), float(y)] for x, y in pts],
            "tangent_lines": [{"nx": h.nx, "ny": h.ny, "c": h.c} for h in lines],
        }
    else:
        conic = geometry.kpos_conic(args.d, args.k, exact=True)
        payload = {
            "d": args.d,
            "k": args.k,
            "dual": False,
            "coefficients": [int(c) for c in conic.coefficients()],
            "classification": conic.classify(),
        }
    _emit(payload)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schmidt-cone",
        description="k-positivity and Schmidt numbers under orthogonal symmetry",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    cm = sub.add_parser("classify-map", help="maximal k-positivity index of the map family")
    cm.add_argument("--d", type=int, required=True)
    cm.add_argument("--p", required=True)
    cm.add_argument("--q", required=True)
    cm.add_argument("--exact", action="store_true")
    cm.add_argument("--tol", type=float, default=classify.BOUNDARY_TOL)
    cm.set_defaults(func=_cmd_classify_map)

    cs = sub.add_parser("classify-state", help="Schmidt number of the state family")
    cs.add_argument("--d", type=int, required=True)
    cs.add_argument("--a", required=True)
    cs.add_argument("--b", required=True)
    cs.add_argument("--exact", action="store_true")
    cs.add_argument("--tol", type=float, default=classify.BOUNDARY_TOL)
    cs.set_defaults(func=_cmd_classify_state)

    rg = sub.add_parser("region", help="emit a region boundary (json/csv/svg)")
    rg.add_argument("kind", choices=["map", "state"])
    rg.add_argument("--d", type=int, required=True)
    rg.add_argument("--k", type=int, required=True)
    rg.add_argument("--samples", type=int, default=64)
    rg.add_argument("--format", choices=["json", "csv", "svg"], default="json")
    rg.add_argument("--out", default=None)
    rg.add_argument("--style", default=None)
    rg.set_defaults(func=_cmd_region)

    vf = sub.add_parser("verify", help="run oracle verification suites")
    vf.add_argument("--suite", choices=["all", "tomiyama", "frames", "twirl", "witness", "duality"], required=True)
    vf.add_argument("--d", type=int, required=True)
    vf.add_argument("--seed", type=int, default=0)
    vf.add_argument("--grid", type=int, default=200)
    vf.add_argument("--frames", type=int, default=200)
    vf.add_argument("--samples", type=int, default=100_000)
    vf.add_argument("--workers", type=int, default=None)
    vf.set_defaults(func=_cmd_verify)

    wt = sub.add_parser("witness", help="search extreme witnesses against a state")
    wt.add_argument("--d", type=int, required=True)
    wt.add_argument("--a", required=True)
    wt.add_argument("--b", required=True)
    wt.add_argument("--k", type=int, required=True)
    wt.add_argument("--arc-samples", type=int, default=256)
    wt.set_defaults(func=_cmd_witness)

    cn = sub.add_parser("conic", help="inspect region conics")
    cn.add_argument("--d", type=int, required=True)
    cn.add_argument("--k", type=int, required=True)
    cn.add_argument("--dual", action="store_true")
    cn.set_defaults(func=_cmd_conic)
    return parser


_SCALAR_FLAGS = {"--p", "--q", "--a", "--b"}


def _merge_negative_scalars(argv: list[str]) -> list[str]:
    # argparse mistakes values like "-1/11" for option flags; fold them into
    # the preceding --p/--q/--a/--b token
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _SCALAR_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    args = build_parser().parse_args(_merge_negative_scalars(list(argv)))
    try:
        return args.func(args)
    except (ValueError, AssertionError, ArithmeticError) as e:
        sys.stderr.write(f"error: {e}\n")
        return 3


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
