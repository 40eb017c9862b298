"""Command-line interface.

Exit codes: 0 success, 2 usage, 3 dominance violation, 4 region violation,
5 internal inconsistency.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from hypkac.errors import HypKacError, InconsistencyError
from hypkac.mult.census import census, check_census, mirror_census, rows_mirror
from hypkac import render
from hypkac.rootlat import RootVec, check_a, roots_in_box
from hypkac.series import (
    Variant,
    classify_L,
    exception_sweep,
    figure_dataset,
    monotonicity_scan,
    principal_tuples,
    series_kind,
    sweep_discrepancies,
)
from hypkac.triple import make_config


def _root(text: str) -> RootVec:
    try:
        s, t = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected s,t with integers, got {text!r}") from None
    return RootVec(s, t)


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected an exact rational like 6 or 13/2, got {text!r}") from None


def _nonneg(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return n


def _emit(text: str) -> None:
    sys.stdout.write(text)


# -- commands -------------------------------------------------------------------


def cmd_roots(args) -> int:
    check_a(args.a)
    roots = [v for v, _ in roots_in_box(args.a, args.smax, args.tmax)]
    _emit(render.roots_table(args.a, roots, args.format))
    return 0


def _classify_records(cfg, root: RootVec | None) -> list[dict]:
    verdicts = [series_kind(cfg, root)] if root is not None else classify_L(cfg)
    return [render.output_record(cfg, v) for v in verdicts]


def cmd_classify(args) -> int:
    cfg = make_config(args.a, args.i, args.j)
    records = _classify_records(cfg, args.root)
    _emit(render.records_csv(records) if args.format == "csv" else render.dumps_records(records))
    return 0


def _mono_lines(shape: str, a_max: int, i_max: int, variant: Variant) -> list[str]:
    rep = monotonicity_scan(shape, range(3, a_max + 1), range(i_max + 1), variant)
    lines = []
    for direction in ("n", "i", "a", "base"):
        bad = rep.violations[direction]
        status = "OK" if not bad else f"{len(bad)} violations"
        lines.append(f"# monotonicity {direction}: checked {rep.checked[direction]}, {status}")
        for v in bad:
            lines.append("#   " + ",".join(render.q(x) if isinstance(x, Fraction) else str(x) for x in v))
    return lines


def cmd_sweep(args) -> int:
    check_a(args.amax)
    variant = Variant(args.variant)
    rows = exception_sweep(args.amax, args.imax, variant, args.shape)
    out = [render.sweep_csv(rows)]
    tuples = principal_tuples(rows)
    out.append(f"# summary: {len(tuples)} unitary_principal tuples: {render.tuple_list(tuples)}\n")
    if variant is Variant.PAIRING:
        star = exception_sweep(args.amax, args.imax, Variant.STAR, args.shape)
        diffs = sweep_discrepancies(star, rows)
        out.append(f"# DISCREPANCY: {len(diffs)} rows differ from star\n")
        out.append("a,i,j,n,s,t,eight_mu_star,kind_star,eight_mu_pairing,kind_pairing\n")
        for s, p in diffs:
            out.append(
                f"{s.a},{s.i},{s.j},{s.n},{s.root.s},{s.root.t},"
                f"{render.q(s.eight_mu)},{s.kind.value},{render.q(p.eight_mu)},{p.kind.value}\n"
            )
        out.append("\n".join(_mono_lines(args.shape, args.amax, args.imax, variant)) + "\n")
    _emit("".join(out))
    return 0


def _run_census(cfg, lmax: Fraction):
    low = census(cfg, lmax)
    high = mirror_census(cfg, -lmax)
    check_census(low)
    check_census(high)
    if not rows_mirror(low.rows, high.rows):
        raise InconsistencyError(f"mirror census is not the reflection of the census for {cfg}")
    return low, high


def _census_text(low, high, fmt: str) -> str:
    if fmt == "json":
        recs = [dict(side=c.side, **r) for c in (low, high) for r in render.census_records(c)]
        body = render.dumps_records(recs)
    else:
        body = render.census_csv(low) + render.census_csv(high).split("\n", 1)[1]
    notes = "".join(f"# note: {n}\n" for n in low.notes)
    ranges = "".join(f"# unknown {k} in [{lo},{hi}]\n" for k, (lo, hi) in sorted(low.ranges.items()))
    return body + notes + ranges + "# conservation: OK\n# mirror: OK\n"


def cmd_census(args) -> int:
    cfg = make_config(args.a, args.i, args.j)
    low, high = _run_census(cfg, args.lmax)
    _emit(_census_text(low, high, args.format))
    return 0


def _write_figure(cfg, out: Path) -> None:
    data = figure_dataset(cfg)
    ext = out.suffix.lower()
    if ext == ".csv":
        out.write_text(render.figure_csv(data))
    elif ext == ".svg":
        out.write_text(render.figure_svg(data))
    elif ext in (".png", ".pdf"):
        from hypkac.plotting import plot_figure

        plot_figure(data, out)
    else:
        raise argparse.ArgumentTypeError(f"unsupported figure format {ext!r}; use .svg, .csv, .png or .pdf")


def cmd_figure(args) -> int:
    cfg = make_config(args.a, args.i, args.j)
    _write_figure(cfg, Path(args.out))
    return 0


def cmd_report(args) -> int:
    """Everything about one configuration: tables on stdout plus files in ``--outdir``."""
    from hypkac.plotting import plot_census

    cfg = make_config(args.a, args.i, args.j)
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    stem = f"a{cfg.a}_i{cfg.i}_j{cfg.j}"
    records = _classify_records(cfg, None)
    low, high = _run_census(cfg, args.lmax)

    files = {
        "classify": outdir / f"{stem}_classify.json",
        "census": outdir / f"{stem}_census.csv",
        "figure_csv": outdir / f"{stem}_figure.csv",
        "figure_svg": outdir / f"{stem}_figure.svg",
        "figure_png": outdir / f"{stem}_figure.png",
        "census_png": outdir / f"{stem}_census.png",
    }
    files["classify"].write_text(render.dumps_records(records))
    files["census"].write_text(render.census_csv(low) + render.census_csv(high).split("\n", 1)[1])
    for key in ("figure_csv", "figure_svg", "figure_png"):
        _write_figure(cfg, files[key])
    plot_census(low, high, files["census_png"])

    out = ["# CLASSIFY\n", render.records_csv(records), "# CENSUS\n", _census_text(low, high, "csv"), "# FILES\n"]
    out += [f"{k},{p}\n" for k, p in files.items()]
    _emit("".join(out))
    return 0


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hypkac", description="Rank-2 hyperbolic Kac-Moody algebras as sl2-modules.")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("roots", help="roots in a box")
    r.add_argument("--a", type=int, required=True)
    r.add_argument("--smax", type=_nonneg, required=True)
    r.add_argument("--tmax", type=_nonneg, required=True)
    r.add_argument("--format", choices=("json", "csv"), default="csv")
    r.set_defaults(func=cmd_roots)

    def config_args(q):
        q.add_argument("--a", type=int, required=True)
        q.add_argument("--i", type=_nonneg, required=True)
        q.add_argument("--j", type=_nonneg, required=True)

    c = sub.add_parser("classify", help="type and series of roots in L")
    config_args(c)
    c.add_argument("--root", type=_root, default=None, help="s,t (in L or -L)")
    c.add_argument("--format", choices=("json", "csv"), default="json")
    c.set_defaults(func=cmd_classify)

    s = sub.add_parser("sweep", help="exception lists over a and i")
    s.add_argument("--amax", type=int, required=True)
    s.add_argument("--imax", type=_nonneg, required=True)
    s.add_argument("--shape", choices=("ij", "ij1"), default="ij")
    s.add_argument("--variant", choices=("star", "pairing"), default="star")
    s.set_defaults(func=cmd_sweep)

    n = sub.add_parser("census", help="lowest/highest-weight module census")
    config_args(n)
    n.add_argument("--lmax", type=_fraction, required=True)
    n.add_argument("--format", choices=("json", "csv"), default="csv")
    n.set_defaults(func=cmd_census)

    f = sub.add_parser("figure", help="point sets as .svg, .csv, .png or .pdf")
    config_args(f)
    f.add_argument("--out", required=True)
    f.set_defaults(func=cmd_figure)

    rp = sub.add_parser("report", help="classification, census and figures for one configuration")
    config_args(rp)
    rp.add_argument("--lmax", type=_fraction, default=Fraction(6))
    rp.add_argument("--outdir", default="report")
    rp.set_defaults(func=cmd_report)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except HypKacError as exc:
        print(f"hypkac: error: {exc}", file=sys.stderr)
        return exc.exit_code
    except argparse.ArgumentTypeError as exc:
        print(f"hypkac: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
