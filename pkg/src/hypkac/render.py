"""Exact, byte-stable serialization: JSON records, CSV tables and the SVG scatter.

Rationals are written as ``"p/q"`` strings (``"p"`` when integral); no float
ever reaches an output stream.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Any, Iterable, Sequence

from hypkac.mult.census import Census, CensusRow
from hypkac.rootlat import RootVec, qform, root_kind
from hypkac.series import FIGURE_LABELS, FigureData, RootType, SeriesVerdict, SweepRow
from hypkac.triple import TripleConfig, k0_pairing, k0_star

RECORD_KEYS = (
    "a",
    "i",
    "j",
    "root",
    "lambda",
    "root_type",
    "k0_star",
    "k0_pairing",
    "eight_mu",
    "kind",
    "kpm_status",
)

PX_PER_UNIT = 40
MARGIN = 40

# draw order is FIGURE_LABELS; later labels sit on top
PALETTE = {
    "imaginary": ("#bbbbbb", 7),
    "real": ("#000000", 5),
    "type_a": ("#1f77b4", 4),
    "type_b": ("#d62728", 4),
    "type_c": ("#2ca02c", 4),
    "roots_of_x": ("#ff7f0e", 6),
}


def q(x: Fraction | int | None) -> str | None:
    if x is None:
        return None
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def output_record(cfg: TripleConfig, verdict: SeriesVerdict) -> dict[str, Any]:
    v = verdict.root
    rec: dict[str, Any] = {
        "a": cfg.a,
        "i": cfg.i,
        "j": cfg.j,
        "root": [v.s, v.t],
        "lambda": q(verdict.lam),
        "root_type": verdict.root_type.value if verdict.root_type else None,
        "k0_star": q(k0_star(cfg)),
        "k0_pairing": q(k0_pairing(cfg, v)) if verdict.root_type is RootType.B else None,
        "eight_mu": q(verdict.eight_mu),
        "kind": verdict.kind.value,
        "kpm_status": str(verdict.kpm_status) if verdict.kpm_status else None,
    }
    if verdict.partner is not None:
        rec["partner"] = [verdict.partner.s, verdict.partner.t]
        rec["undetermined"] = verdict.residual
    return rec


def dumps_records(records: Iterable[dict[str, Any]]) -> str:
    return "".join(json.dumps(r, separators=(", ", ": ")) + "\n" for r in records)


def _csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def records_csv(records: Sequence[dict[str, Any]]) -> str:
    def cell(x):
        if x is None:
            return ""
        if isinstance(x, list):
            return f"{x[0]};{x[1]}"
        return x

    rows = [[cell(r.get(k)) for k in RECORD_KEYS] for r in records]
    return _csv(RECORD_KEYS, rows)


def roots_table(a: int, roots: Iterable[RootVec], fmt: str) -> str:
    rows = [(v.s, v.t, qform(a, v), root_kind(a, v).value) for v in roots]
    if fmt == "csv":
        return _csv(("s", "t", "f", "kind"), rows)
    return dumps_records({"a": a, "root": [s, t], "f": f, "kind": k} for s, t, f, k in rows)


def figure_csv(data: FigureData) -> str:
    return _csv(("label", "s", "t"), ((label, v.s, v.t) for label, v in data.rows()))


def figure_svg(data: FigureData) -> str:
    """Deterministic SVG scatter, 40 px per lattice unit, origin bottom-left."""
    pts = [v for _, v in data.rows()]
    s_max = max([v.s for v in pts] + [1])
    t_max = max([v.t for v in pts] + [1])
    width = s_max * PX_PER_UNIT + 2 * MARGIN + 120
    height = t_max * PX_PER_UNIT + 2 * MARGIN

    def px(v: RootVec) -> tuple[int, int]:
        return MARGIN + v.s * PX_PER_UNIT, height - MARGIN - v.t * PX_PER_UNIT

    cfg = data.cfg
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f"<title>a={cfg.a} i={cfg.i} j={cfg.j}</title>",
        '<rect width="100%" height="100%" fill="#ffffff"/>',
    ]
    x0, y0 = px(RootVec(0, 0))
    x1, y1 = px(RootVec(s_max, t_max))
    out.append(f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}" stroke="#444444" stroke-width="1"/>')
    out.append(f'<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}" stroke="#444444" stroke-width="1"/>')
    for label in FIGURE_LABELS:
        color, r = PALETTE[label]
        out.append(f'<g class="{label}" fill="{color}">')
        for v in data.points[label]:
            cx, cy = px(v)
            out.append(f'<circle cx="{cx}" cy="{cy}" r="{r}"><title>{label} {v}</title></circle>')
        out.append("</g>")
    lx = MARGIN + s_max * PX_PER_UNIT + 30
    for k, label in enumerate(FIGURE_LABELS):
        color, r = PALETTE[label]
        ly = MARGIN + 20 * k
        out.append(f'<circle cx="{lx}" cy="{ly}" r="{r}" fill="{color}"/>')
        out.append(f'<text x="{lx + 12}" y="{ly + 4}" font-size="12" font-family="monospace">{label}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def census_records(c: Census) -> list[dict[str, Any]]:
    def row(r: CensusRow) -> dict[str, Any]:
        return {
            "lambda": q(r.lambda_H),
            "d_H": r.d_H,
            "p_H": [r.p_H.lo, r.p_H.hi],
            "new": [r.new.lo, r.new.hi],
            "new_form": str(r.new_form),
            "conservation": "OK" if r.conserved and r.consistent else "FAIL",
        }

    return [row(r) for r in c.rows]


def census_csv(c: Census) -> str:
    header = ("side", "lambda", "d_H", "p_lo", "p_hi", "new_lo", "new_hi", "new_form", "conservation")
    rows = [
        (c.side, rec["lambda"], rec["d_H"], *rec["p_H"], *rec["new"], rec["new_form"], rec["conservation"])
        for rec in census_records(c)
    ]
    return _csv(header, rows)


def sweep_csv(rows: Sequence[SweepRow]) -> str:
    return _csv(
        ("a", "i", "j", "n", "s", "t", "eight_mu", "kind"),
        ((r.a, r.i, r.j, r.n, r.root.s, r.root.t, q(r.eight_mu), r.kind.value) for r in rows),
    )


def tuple_list(tuples: Iterable[tuple[int, ...]]) -> str:
    return " ".join("(" + ",".join(map(str, t)) + ")" for t in tuples)
