"""Command-line entry point.

Subcommands: roots, ar-quiver, poset, to-rpp, from-rpp, jordan, hg, pak,
promotion, verify-genfun, verify-all.  Output is human-readable by default
(grids printed as aligned rows); --json switches to structured
output.  Exit codes: 0 success/verified, 1 verification mismatch, 2 usage
error.  Every randomized command takes --seed and echoes it.
"""

import argparse
import json
import sys

from .arquiver import knit, serialize
from .bijection import from_rpp, poset_of, to_rpp
from .dynamics import check_periodicity, promotion, random_rpp
from .dynkin import coxeter_number, minuscule_vertices, parse_diagram, positive_roots
from .genfun import verify_identity
from .jordan import gen_jf, jordan_to_rpp
from .poset import RPP
from .quiver import (
    canonical_quiver,
    format_dimvec,
    format_repclass,
    parse_dimvec,
    parse_quiver,
    parse_repclass,
)
from .typea import (
    RectShape,
    format_grid,
    grid_of_values,
    hg_build,
    hg_extract,
    pak_map,
    parse_grid,
    values_of_grid,
)
from .verify import run_all


class CliError(ValueError):
    pass


def _print_json(payload):
    print(json.dumps(payload, indent=2, sort_keys=True))


def _rpp_text(rpp):
    items = sorted(rpp.values.items())
    return ",".join(f"{format_dimvec(k)}={v}" for k, v in items)


def _parse_values(text, poset, rank):
    values = {}
    for token in text.split(","):
        key, sep, val = token.partition("=")
        if not sep:
            raise CliError(f"bad filling token {token!r}; use dimvec=value")
        values[parse_dimvec(key, rank)] = int(val)
    missing = set(poset.elements) - set(values)
    if missing:
        raise CliError(f"filling misses {len(missing)} poset elements")
    return values


def _maybe_grid(rpp, q, m):
    if q.diagram.family != "A":
        return None
    return grid_of_values(rpp.values, rpp.poset, q.rank, m)


def cmd_roots(args):
    diagram = parse_diagram(args.diagram)
    roots = sorted(positive_roots(diagram), key=lambda r: (sum(r), r), reverse=True)
    payload = {
        "diagram": str(diagram),
        "count": len(roots),
        "coxeter_number": coxeter_number(diagram),
        "minuscule_vertices": sorted(minuscule_vertices(diagram)),
        "roots": [format_dimvec(r) for r in roots],
    }
    if args.json:
        _print_json(payload)
    else:
        print(f"{diagram}: {len(roots)} positive roots, h={payload['coxeter_number']}, "
              f"minuscule vertices {payload['minuscule_vertices']}")
        for r in payload["roots"]:
            print(" ", r)
    return 0


def cmd_ar_quiver(args):
    q = parse_quiver(args.quiver)
    ar = knit(q)
    if args.json:
        _print_json({
            "quiver": str(q),
            "nodes": [
                {"id": n.nid, "dims": format_dimvec(n.dims), "orbit": n.orbit,
                 "slice": n.position}
                for n in ar.nodes
            ],
            "arrows": sorted(
                [format_dimvec(ar.dims(a)), format_dimvec(ar.dims(b))]
                for a, b in ar.arrows
            ),
            "tau": {
                format_dimvec(ar.dims(a)): format_dimvec(ar.dims(b))
                for a, b in ar.tau.items()
            },
        })
    else:
        print(serialize(ar))
    return 0


def cmd_poset(args):
    q = parse_quiver(args.quiver)
    ar = knit(q)
    poset = poset_of(ar, args.m)
    elems = [
        {
            "dims": format_dimvec(x),
            "dim": poset.annotations[x]["dim"],
            "orbit": poset.annotations[x]["orbit"],
            "position": poset.annotations[x]["position"],
        }
        for x in poset.elements
    ]
    covers = sorted([format_dimvec(a), format_dimvec(b)] for a, b in poset.covers)
    if args.json:
        _print_json({"quiver": str(q), "m": args.m, "elements": elems, "covers": covers})
    else:
        print(f"minuscule poset for Q={q}, m={args.m}: {len(elems)} elements")
        for e in sorted(elems, key=lambda e: (e["orbit"], e["position"])):
            print(f"  {e['dims']} dim={e['dim']} orbit={e['orbit']} pos={e['position']}")
        print("covers:")
        for a, b in covers:
            print(f"  {a} < {b}")
    return 0


def cmd_to_rpp(args):
    q = parse_quiver(args.quiver)
    ar = knit(q)
    rep = parse_repclass(args.rep, q.rank)
    trace = [] if args.trace else None
    rpp = to_rpp(ar, args.m, rep, order_seed=args.seed, trace=trace)
    grid = _maybe_grid(rpp, q, args.m)
    if args.json:
        payload = {
            "quiver": str(q), "m": args.m, "seed": args.seed,
            "values": {format_dimvec(k): v for k, v in rpp.values.items()},
            "weight": rpp.weight(),
        }
        if grid is not None:
            payload["grid"] = grid
        if trace is not None:
            payload["trace"] = [
                {"step": k, "node": format_dimvec(d),
                 "values": {format_dimvec(x): v for x, v in vals.items()}}
                for k, d, vals in trace
            ]
        _print_json(payload)
    else:
        print(f"# seed={args.seed}")
        if trace is not None:
            for k, d, vals in trace:
                snap = ",".join(f"{format_dimvec(x)}={v}" for x, v in sorted(vals.items()))
                print(f"step {k:2d} ({format_dimvec(d)}): {snap}")
        print(_rpp_text(rpp))
        print(f"weight {rpp.weight()}")
        if grid is not None:
            print(format_grid(grid))
    return 0


def cmd_from_rpp(args):
    q = parse_quiver(args.quiver)
    ar = knit(q)
    poset = poset_of(ar, args.m)
    if args.grid:
        values = values_of_grid(parse_grid(args.grid), poset, q.rank, args.m)
    elif args.rpp:
        values = _parse_values(args.rpp, poset, q.rank)
    else:
        raise CliError("from-rpp needs --rpp or --grid")
    rep = from_rpp(ar, args.m, values, order_seed=args.seed)
    if args.json:
        _print_json({
            "quiver": str(q), "m": args.m, "seed": args.seed,
            "rep": {format_dimvec(k): v for k, v in rep.items()},
        })
    else:
        print(f"# seed={args.seed}")
        print(format_repclass(rep) or "(zero representation)")
    return 0


def cmd_jordan(args):
    q = parse_quiver(args.quiver)
    ar = knit(q)
    poset = poset_of(ar, args.m)
    rep = parse_repclass(args.rep, q.rank)
    jd = gen_jf(ar, args.m, rep, seed=args.seed)
    rpp = jordan_to_rpp(jd, poset)
    agrees = None
    if args.check_bijection:
        agrees = rpp.values == to_rpp(ar, args.m, rep).values
    if args.json:
        payload = {
            "quiver": str(q), "m": args.m, "seed": args.seed,
            "jordan_data": {i + 1: list(jd[i]) for i in range(q.rank)},
            "rpp": {format_dimvec(k): v for k, v in rpp.values.items()},
        }
        if agrees is not None:
            payload["agrees_with_bijection"] = agrees
        _print_json(payload)
    else:
        print(f"# seed={args.seed}")
        for i in range(q.rank):
            print(f"lambda^{i + 1} = {list(jd[i])}")
        print(_rpp_text(rpp))
        if agrees is not None:
            print(f"agrees with to-rpp: {'yes' if agrees else 'NO'}")
    if agrees is False:
        return 1
    return 0


def _shape_from_args(args):
    if args.n is None or args.m is None:
        raise CliError("this direction needs --n and --m for the rectangle shape")
    return RectShape.for_vertex(args.n, args.m)


def cmd_hg(args):
    if args.grid:
        grid = parse_grid(args.grid)
        hooks = hg_extract(grid)
        if args.json:
            _print_json({"hooks": {format_dimvec(k): v for k, v in sorted(hooks.items())}})
        else:
            print(format_repclass(hooks) or "(empty multiset)")
        return 0
    if not args.rep:
        raise CliError("hg needs --grid (extract) or --rep (build)")
    shape = _shape_from_args(args)
    hooks = parse_repclass(args.rep, shape.n)
    grid = hg_build(hooks, shape)
    if args.json:
        _print_json({"grid": grid})
    else:
        print(format_grid(grid))
    return 0


def cmd_pak(args):
    if not args.rep:
        raise CliError("pak needs --rep")
    shape = _shape_from_args(args)
    hooks = parse_repclass(args.rep, shape.n)
    grid = pak_map(hooks, shape)
    if args.json:
        _print_json({"grid": grid})
    else:
        print(format_grid(grid))
    return 0


def cmd_promotion(args):
    import random as _random

    q = parse_quiver(args.quiver)
    ar = knit(q)
    poset = poset_of(ar, args.m)
    if args.check_period:
        report = check_periodicity(q, args.m, args.bound, args.trials, args.seed)
        if args.json:
            _print_json({
                "quiver": str(q), "m": args.m, "bound": args.bound,
                "coxeter_number": report.coxeter, "trials": report.trials,
                "failures": report.failures, "passed": report.passed,
                "smaller_periods": report.smaller_periods,
            })
        else:
            print(report)
        return 0 if report.passed else 1
    if args.rpp:
        values = _parse_values(args.rpp, poset, q.rank)
        cur = RPP(poset, values, bound=args.bound)
    else:
        rng = _random.Random(f"promotion|{q}|{args.m}|{args.seed}")
        cur = random_rpp(poset, args.bound, rng)
    steps = args.steps if args.steps is not None else coxeter_number(q.diagram)
    trajectory = [cur]
    for _ in range(steps):
        trajectory.append(promotion(trajectory[-1], q))
    if args.json:
        _print_json({
            "quiver": str(q), "m": args.m, "bound": args.bound, "seed": args.seed,
            "trajectory": [
                {format_dimvec(k): v for k, v in r.values.items()} for r in trajectory
            ],
        })
    else:
        print(f"# seed={args.seed} bound={args.bound}")
        for i, r in enumerate(trajectory):
            print(f"pro^{i}: {_rpp_text(r)}")
    return 0


def cmd_verify_genfun(args):
    name, sep, m_text = args.poset.partition(",")
    if not sep:
        raise CliError("--poset expects DIAGRAM,M such as A3,2")
    diagram = parse_diagram(name)
    m = int(m_text)
    q = canonical_quiver(diagram)
    ar = knit(q)
    report = verify_identity(ar, m, args.bound, enumerate_rpps=not args.skip_enumeration)
    if args.json:
        _print_json({
            "poset": args.poset, "bound": args.bound, "passed": report.passed,
            "product": report.product, "rpp_counts": report.rpp_counts,
            "bijection_counts": report.bijection_counts,
        })
    else:
        print(report)
    return 0 if report.passed else 1


def cmd_verify_all(args):
    results = run_all(seed=args.seed, quick=args.quick, out=print)
    return 0 if all(r.passed for r in results) else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="quiver-rpp",
        description="Quiver representations, minuscule posets and reverse plane partitions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        p.add_argument("--json", action="store_true", help="structured output")
        return p

    p = add("roots", cmd_roots, help="positive roots and minuscule vertices")
    p.add_argument("--diagram", required=True, help="diagram literal, e.g. A4")

    p = add("ar-quiver", cmd_ar_quiver, help="knit the AR quiver")
    p.add_argument("--quiver", required=True, help="e.g. A5:1<2<3<4<5 or D5:2>1,3>2,4>3,5>3")

    p = add("poset", cmd_poset, help="the minuscule poset of (quiver, m)")
    p.add_argument("--quiver", required=True)
    p.add_argument("--m", type=int, required=True)

    p = add("to-rpp", cmd_to_rpp, help="map a representation class to its RPP")
    p.add_argument("--quiver", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--rep", required=True, help="e.g. 11100:4,01100:3")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trace", action="store_true", help="emit every intermediate filling")

    p = add("from-rpp", cmd_from_rpp, help="invert the bijection")
    p.add_argument("--quiver", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--rpp", help="dimvec=value,... filling")
    p.add_argument("--grid", help="type-A grid, rows split by / (e.g. '0 2 3/2 2 3/6 8 10')")
    p.add_argument("--seed", type=int, default=0)

    p = add("jordan", cmd_jordan, help="generic Jordan data of a representation class")
    p.add_argument("--quiver", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--rep", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--check-bijection", action="store_true")

    p = add("hg", cmd_hg, help="Hillman-Grassl: --grid extracts hooks, --rep builds the RPP")
    p.add_argument("--grid")
    p.add_argument("--rep")
    p.add_argument("--n", type=int, help="A_n rank (for --rep)")
    p.add_argument("--m", type=int, help="minuscule vertex = column count (for --rep)")

    p = add("pak", cmd_pak, help="Pak correspondence: multiset of hooks to RPP")
    p.add_argument("--rep", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    p = add("promotion", cmd_promotion, help="promotion trajectories and periodicity")
    p.add_argument("--quiver", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--bound", type=int, required=True, help="entry bound N")
    p.add_argument("--rpp", help="starting filling; random when omitted")
    p.add_argument("--steps", type=int, help="number of promotion steps (default h)")
    p.add_argument("--check-period", action="store_true")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)

    p = add("verify-genfun", cmd_verify_genfun, help="generating-function identity check")
    p.add_argument("--poset", required=True, help="DIAGRAM,M e.g. A3,2")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--skip-enumeration", action="store_true",
                   help="compare product vs bijection only")

    p = add("verify-all", cmd_verify_all, help="run the acceptance criteria")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--quick", action="store_true", help="reduced trial counts")

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (CliError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
