"""Command-line front end.

Instance files are JSON: {"dim": d} plus exactly one of
  "S":       explicit point list,
  "A" / "B": a partition (disjoint point lists),
  "simplex": vertex list, meaning the lattice points of its hull,
  "box":     [lo, hi] corner vectors, meaning the box's lattice points.

Flag files mirror the separating-flag structure with rationals printed
in reduced p/q form.  Exit codes: 0 condition holds / success, 1
condition fails (witness printed), 2 usage or malformed input, 3
unsupported (e.g. dimension above the implemented range).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .catalog import run_catalog
from .conditions import (
    Partition,
    SeparatingFlag,
    check_parallelogram,
    check_ray,
    lex_flag_to_subspace_chain,
    search_flag,
    verify_flag,
)
from .constructions import MinimalTriangle, lemma_triple
from .convexity import (
    classify_holes,
    is_hole_free,
    is_integrally_convex,
    is_k_convex,
    k_convex_hull,
)
from .errors import (
    EmptyInteriorError,
    InstanceFormatError,
    InvalidFlagError,
    LatsepError,
    UnsupportedDimensionError,
)
from .explorer import CONDITIONS, FAMILY_FILTERS, conjecture_hunt, test_equivalence
from .geometry import AffineFunctional, PointSet, box_points, lattice_points_in_conv
from .svgplot import render_svg
from .verdicts import BlockingFlat

EXIT_HOLDS = 0
EXIT_FAILS = 1
EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3


# ---------------------------------------------------------------------------
# parsing

def _point_list(raw, dim: int, where: str) -> list[tuple[int, ...]]:
    if not isinstance(raw, list):
        raise InstanceFormatError(f"field {where!r} must be a list of points")
    pts = []
    for i, entry in enumerate(raw):
        if (
            not isinstance(entry, list)
            or len(entry) != dim
            or not all(isinstance(v, int) for v in entry)
        ):
            raise InstanceFormatError(
                f"field {where!r}, entry {i}: expected a vector of {dim} integers"
            )
        pts.append(tuple(entry))
    return pts


def parse_instance(path: str):
    """Parse an instance file into a Partition or a PointSet."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise InstanceFormatError(f"{path}: {e.strerror or e}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InstanceFormatError(
            f"{path}: line {e.lineno}, column {e.colno}: {e.msg}"
        ) from None
    if not isinstance(data, dict):
        raise InstanceFormatError(f"{path}: top level must be an object")
    dim = data.get("dim")
    if not isinstance(dim, int) or dim < 1:
        raise InstanceFormatError(f"{path}: field 'dim' must be a positive integer")
    keys = [k for k in ("S", "A", "simplex", "box") if k in data]
    if "A" in data or "B" in data:
        if not ("A" in data and "B" in data):
            raise InstanceFormatError(f"{path}: fields 'A' and 'B' must appear together")
        a = _point_list(data["A"], dim, "A")
        b = _point_list(data["B"], dim, "B")
        if not a or not b:
            raise InstanceFormatError(f"{path}: 'A' and 'B' must both be nonempty")
        clash = sorted(set(a) & set(b))
        if clash:
            raise InstanceFormatError(
                f"{path}: 'A' and 'B' overlap, e.g. at {clash[0]}"
            )
        return Partition.of(a, b, dim)
    if keys == ["S"]:
        pts = _point_list(data["S"], dim, "S")
        if not pts:
            raise InstanceFormatError(f"{path}: 'S' must be nonempty")
        return PointSet.of(pts, dim)
    if keys == ["simplex"]:
        verts = _point_list(data["simplex"], dim, "simplex")
        if not verts:
            raise InstanceFormatError(f"{path}: 'simplex' must list vertices")
        return lattice_points_in_conv(PointSet.of(verts, dim))
    if keys == ["box"]:
        box = data["box"]
        if not (isinstance(box, list) and len(box) == 2):
            raise InstanceFormatError(f"{path}: 'box' must be [lo, hi]")
        lo, hi = _point_list(box, dim, "box")
        if any(l > h for l, h in zip(lo, hi)):
            raise InstanceFormatError(f"{path}: 'box' corners are out of order")
        return PointSet.of(box_points(lo, hi), dim)
    raise InstanceFormatError(
        f"{path}: expected exactly one of 'S', 'A'+'B', 'simplex', 'box'"
    )


def _parse_fraction(raw, where: str) -> Fraction:
    try:
        if isinstance(raw, str):
            return Fraction(raw)
        if isinstance(raw, int):
            return Fraction(raw)
    except (ValueError, ZeroDivisionError):
        pass
    raise InstanceFormatError(f"{where}: expected an integer or 'p/q' string")


def parse_flag_file(path: str) -> SeparatingFlag:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as e:
        raise InstanceFormatError(f"{path}: {e.strerror or e}") from None
    except json.JSONDecodeError as e:
        raise InstanceFormatError(
            f"{path}: line {e.lineno}, column {e.colno}: {e.msg}"
        ) from None
    dim = data.get("dim")
    if not isinstance(dim, int) or dim < 1:
        raise InstanceFormatError(f"{path}: field 'dim' must be a positive integer")
    owner = data.get("residual_owner")
    if owner not in ("A", "B", "empty"):
        raise InstanceFormatError(f"{path}: 'residual_owner' must be 'A', 'B' or 'empty'")
    funcs = []
    for i, g in enumerate(data.get("functionals", [])):
        where = f"{path}: functional {i}"
        if not isinstance(g, dict) or "normal" not in g or "offset" not in g:
            raise InstanceFormatError(f"{where}: expected 'normal' and 'offset'")
        if not isinstance(g["normal"], list) or len(g["normal"]) != dim:
            raise InstanceFormatError(f"{where}: 'normal' must have {dim} entries")
        normal = [_parse_fraction(v, where) for v in g["normal"]]
        offset = _parse_fraction(g["offset"], where)
        funcs.append(AffineFunctional.of(normal, offset))
    return SeparatingFlag(dim, tuple(funcs), owner)


def flag_to_json(flag: SeparatingFlag) -> dict:
    return {
        "dim": flag.dim,
        "functionals": [
            {"normal": [str(v) for v in g.normal], "offset": str(g.offset)}
            for g in flag.functionals
        ],
        "residual_owner": flag.residual_owner,
    }


# ---------------------------------------------------------------------------
# formatting

def _fmt_point(p) -> str:
    return "(" + ", ".join(str(v) for v in p) + ")"


def _fmt_points(pts) -> str:
    return " ".join(_fmt_point(p) for p in pts)


def _fmt_functional(g: AffineFunctional) -> str:
    terms = " + ".join(f"{v}*x{i + 1}" for i, v in enumerate(g.normal) if v != 0)
    return f"{terms or '0'} >= {g.offset}"


def _print_flag(flag: SeparatingFlag) -> None:
    print(f"flag with {len(flag.functionals)} level(s), residual owner {flag.residual_owner}")
    for i, g in enumerate(flag.functionals):
        print(f"  level {i + 1}: side A where {_fmt_functional(g)} is strict")
    print("nested subspace chain (smallest first):")
    for anchor, basis in lex_flag_to_subspace_chain(flag):
        dirs = " ".join(_fmt_point(v) for v in basis) or "-"
        print(f"  dim {len(basis)}: anchor {_fmt_point(anchor)} directions {dirs}")
    print("flag json:")
    print(json.dumps(flag_to_json(flag), sort_keys=True))


def _require_partition(obj, what: str) -> Partition:
    if not isinstance(obj, Partition):
        raise InstanceFormatError(f"{what} needs an instance with 'A' and 'B'")
    return obj


def _as_point_set(obj) -> PointSet:
    if isinstance(obj, Partition):
        return obj.union()
    return obj


def _verdict_exit(holds: bool) -> int:
    return EXIT_HOLDS if holds else EXIT_FAILS


# ---------------------------------------------------------------------------
# subcommands

def _cmd_check(args) -> int:
    obj = parse_instance(args.file)
    kind = args.condition
    if kind == "par":
        p = _require_partition(obj, "check par")
        v = check_parallelogram(p, args.k)
        if v.holds:
            print(f"holds: no equal sums of up to {args.k} points per side")
        else:
            w = v.witness
            print(
                f"fails at order {w.order}: {_fmt_points(w.left)} and "
                f"{_fmt_points(w.right)} both sum to {_fmt_point(w.total)}"
            )
        return _verdict_exit(v.holds)
    if kind == "ray":
        p = _require_partition(obj, "check ray")
        v = check_ray(p)
        if v.holds:
            print("holds: on every shared line one side is a prefix or suffix")
        else:
            w = v.witness
            trace = " ".join(
                f"{_fmt_point(q)}:{s}" for q, s in zip(w.trace, w.sides)
            )
            print(
                f"fails on line through {_fmt_point(w.base)} along "
                f"{_fmt_point(w.direction)}: {trace}"
            )
        return _verdict_exit(v.holds)
    if kind == "hole-free":
        s = _as_point_set(obj)
        v = is_hole_free(s)
        if v.holds:
            print("holds: set equals the lattice points of its hull")
        else:
            print(f"fails: missing lattice point {_fmt_point(v.witness.missing)}")
        return _verdict_exit(v.holds)
    if kind == "integrally-convex":
        s = _as_point_set(obj)
        v = is_integrally_convex(s)
        if v.holds:
            print("holds: every local hull matches the global hull")
        else:
            w = v.witness
            print(
                f"fails in cell at {_fmt_point(w.cell)}: vertex "
                f"({', '.join(str(x) for x in w.vertex)}) not locally covered"
            )
        return _verdict_exit(v.holds)
    if kind == "k-convex":
        s = _as_point_set(obj)
        v = is_k_convex(s, args.k)
        if v.holds:
            print(f"holds: {args.k}-convex")
        else:
            w = v.witness
            print(
                f"fails: hull of {_fmt_points(w.subset)} contains "
                f"{_fmt_point(w.missing)}"
            )
        return _verdict_exit(v.holds)
    raise InstanceFormatError(f"unknown check {kind!r}")


def _cmd_separate(args) -> int:
    p = _require_partition(parse_instance(args.file), "separate")
    v = search_flag(p)
    if v.holds:
        _print_flag(v.witness)
        return EXIT_HOLDS
    w: BlockingFlat = v.witness
    dirs = " ".join(_fmt_point(d) for d in w.basis) or "-"
    print("no separating flag exists")
    print(
        f"blocking flat: anchor {_fmt_point(w.anchor)} directions {dirs} "
        f"(every weak separator of the remaining points is constant there)"
    )
    return EXIT_FAILS


def _cmd_verify_flag(args) -> int:
    p = _require_partition(parse_instance(args.file), "verify-flag")
    flag = parse_flag_file(args.flag)
    try:
        ok = verify_flag(p, flag)
    except InvalidFlagError as e:
        print(f"flag structurally invalid: {e}", file=sys.stderr)
        return EXIT_USAGE
    print("flag verifies" if ok else "flag rejected: some point lands on the wrong side")
    return _verdict_exit(ok)


def _cmd_hull(args) -> int:
    s = _as_point_set(parse_instance(args.file))
    hull = k_convex_hull(s, args.k)
    for p in hull.points:
        print(_fmt_point(p))
    return EXIT_HOLDS


def _cmd_holes(args) -> int:
    s = _as_point_set(parse_instance(args.file))
    reports = classify_holes(s)
    for r in reports:
        print(f"hole {_fmt_point(r.hole)} first_k {r.first_k}")
    if not reports:
        print("no holes")
    return EXIT_HOLDS


def _cmd_lemma49(args) -> int:
    s = _as_point_set(parse_instance(args.file))
    if s.dim != 2 or len(s) != 3:
        raise InstanceFormatError("lemma49 needs exactly three points in dimension 2")
    tri = MinimalTriangle(*s.points)
    try:
        b1, b2, b3 = lemma_triple(tri)
    except EmptyInteriorError as e:
        print(f"no interior points: {e}", file=sys.stderr)
        return EXIT_FAILS
    total = tuple(sum(v) for v in zip(*tri.vertices()))
    print(f"vertices {_fmt_points(tri.vertices())} sum {_fmt_point(total)}")
    print(f"triple {_fmt_points((b1, b2, b3))} sum {_fmt_point(tuple(b1[i] + b2[i] + b3[i] for i in range(2)))}")
    return EXIT_HOLDS


def _cmd_catalog(args) -> int:
    report = run_catalog(args.id)
    for line in report.lines():
        print(line)
    n_bad = sum(1 for r in report.results if not r.passed)
    print(f"{len(report.results)} claims, {n_bad} failed")
    return EXIT_HOLDS if report.ok else EXIT_FAILS


def _parse_grid(text: str) -> tuple[int, ...]:
    try:
        dims = tuple(int(v) for v in text.lower().split("x"))
    except ValueError:
        raise InstanceFormatError(f"bad grid spec {text!r}; use e.g. 3x3") from None
    if not dims or any(v < 1 for v in dims):
        raise InstanceFormatError(f"bad grid spec {text!r}; use e.g. 3x3")
    return dims


def _cmd_explore(args) -> int:
    if args.mode == "equivalence":
        report = test_equivalence(
            _parse_grid(args.grid),
            args.family,
            args.left,
            args.right,
            stop_after=args.stop_after,
            jobs=args.jobs,
            checkpoint=args.checkpoint,
            stream=sys.stdout,
        )
        print(
            f"checked {report.sets_checked} sets / {report.partitions_checked} "
            f"partitions: {len(report.violations)} violation(s)"
        )
        return EXIT_HOLDS if report.ok else EXIT_FAILS
    report = conjecture_hunt(
        args.budget,
        seed=args.seed,
        box=args.box,
        max_set_size=args.max_size,
        checkpoint=args.checkpoint,
        stream=sys.stdout,
    )
    print(
        f"samples {report.samples}, admitted {report.admitted_sets}, "
        f"partitions {report.partitions_checked}, "
        f"counterexamples {len(report.counterexamples)}"
    )
    return EXIT_HOLDS if report.ok else EXIT_FAILS


def _cmd_plot(args) -> int:
    obj = parse_instance(args.file)
    if isinstance(obj, Partition):
        a_pts, b_pts = obj.a.points, obj.b.points
    else:
        a_pts, b_pts = obj.points, ()
    funcs = ()
    if args.flag:
        funcs = parse_flag_file(args.flag).functionals
    svg = render_svg(a_pts, b_pts, funcs)
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(svg)
    print(f"wrote {args.output}")
    return EXIT_HOLDS


# ---------------------------------------------------------------------------
# argument wiring

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="latsep",
        description="exact decision procedures for separation and discrete convexity of integer point sets",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    chk = sub.add_parser("check", help="run a single condition check")
    chk_sub = chk.add_subparsers(dest="condition", required=True)
    par = chk_sub.add_parser("par", help="k-parallelogram condition")
    par.add_argument("--k", type=int, default=2)
    par.add_argument("file")
    for name in ("ray", "hole-free", "integrally-convex"):
        c = chk_sub.add_parser(name)
        c.add_argument("file")
    kc = chk_sub.add_parser("k-convex")
    kc.add_argument("--k", type=int, required=True)
    kc.add_argument("file")
    chk.set_defaults(fn=_cmd_check)

    sep = sub.add_parser("separate", help="decide flag separation")
    sep.add_argument("file")
    sep.set_defaults(fn=_cmd_separate)

    vf = sub.add_parser("verify-flag", help="verify a stored flag")
    vf.add_argument("file")
    vf.add_argument("--flag", required=True)
    vf.set_defaults(fn=_cmd_verify_flag)

    hp = sub.add_parser("hull", help="k-convex hull points")
    hp.add_argument("--k", type=int, required=True)
    hp.add_argument("file")
    hp.set_defaults(fn=_cmd_hull)

    ho = sub.add_parser("holes", help="classify holes by first k")
    ho.add_argument("file")
    ho.set_defaults(fn=_cmd_holes)

    lm = sub.add_parser("lemma49", help="equal-sum interior triple of a minimal triangle")
    lm.add_argument("file")
    lm.set_defaults(fn=_cmd_lemma49)

    cat = sub.add_parser("catalog", help="catalog operations")
    cat_sub = cat.add_subparsers(dest="catalog_cmd", required=True)
    cr = cat_sub.add_parser("run")
    cr.add_argument("--id", default=None, help="entry id or fnmatch pattern")
    cat.set_defaults(fn=_cmd_catalog)

    ex = sub.add_parser("explore", help="search harnesses")
    ex_sub = ex.add_subparsers(dest="mode", required=True)
    eq = ex_sub.add_parser("equivalence")
    eq.add_argument("--grid", default="3x3")
    eq.add_argument("--family", default="integrally-convex", choices=FAMILY_FILTERS)
    eq.add_argument("--left", default="parallelogram-2", choices=sorted(CONDITIONS))
    eq.add_argument("--right", default="flag", choices=sorted(CONDITIONS))
    eq.add_argument("--stop-after", type=int, default=None)
    eq.add_argument("--jobs", type=int, default=1)
    eq.add_argument("--checkpoint", default=None)
    cj = ex_sub.add_parser("conjecture")
    cj.add_argument("--budget", type=int, default=100)
    cj.add_argument("--seed", type=int, default=0)
    cj.add_argument("--box", type=int, default=2)
    cj.add_argument("--max-size", type=int, default=12)
    cj.add_argument("--checkpoint", default=None)
    ex.set_defaults(fn=_cmd_explore)

    pl = sub.add_parser("plot", help="render a 2-D instance as SVG")
    pl.add_argument("file")
    pl.add_argument("--flag", default=None)
    pl.add_argument("-o", "--output", required=True)
    pl.set_defaults(fn=_cmd_plot)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except UnsupportedDimensionError as e:
        print(f"unsupported: {e}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (InstanceFormatError, LatsepError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
