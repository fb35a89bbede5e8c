"""Command-line front end.

Subcommands:

* build   -- construct a quotient quiver and export it as Graphviz DOT;
* hom     -- print one Hom dimension (on the infinite quiver or a quotient);
* cy      -- Calabi-Yau dimension of a labelled algebra, by formula,
             brute force, or both;
* verify  -- run the eligibility grids and write a JSON report.

Exit codes: 0 success / all green, 1 some verification red, 2 bad
flags or coordinates, 3 degenerate quotient, 4 no Serre period found.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .cy import NoQuiverPeriod, cy_brute, formula_candidates
from .dynkin import DynkinType, Family
from .quotient import (
    AdmissibleGroup,
    DegenerateQuotient,
    MalformedLabel,
    QuotientError,
    StableQuiver,
    parse_label,
    stable_quiver_of,
)
from .theorems import eligible_instances, verify_instance
from .zquiver import (
    OutOfChart,
    ZVertex,
    from_chart_a,
    from_chart_d,
    supports_flip,
    tau,
)


def _vertex_id(q: StableQuiver, v: ZVertex) -> str:
    d = q.dynkin
    n = d.rank
    if d.family is Family.D and v.node in (n - 1, n):
        tag = "m" if v.node == n - 1 else "p"
        return f"t{v.t}_n{n - 1}{tag}"
    return f"t{v.t}_n{v.node}"


def export_dot(q: StableQuiver, show_tau: bool = False) -> str:
    lines = ["digraph stable_quiver {"]
    for v in sorted(q.vertices):
        lines.append(f"  {_vertex_id(q, v)};")
    for src, dst in sorted(q.arrows()):
        lines.append(f"  {_vertex_id(q, src)} -> {_vertex_id(q, dst)};")
    if show_tau:
        for v in sorted(q.vertices):
            w = q.canon(tau(v))
            lines.append(
                f"  {_vertex_id(q, v)} -> {_vertex_id(q, w)} [style=dashed, label=tau];"
            )
    lines.append("}")
    return "\n".join(lines) + "\n"


_CHART_RE = re.compile(r"^\((-?\d+),(-?\d+)(?:,([+-]))?\)$")
_CANON_RE = re.compile(r"^(-?\d+):(\d+)$")


def parse_vertex(d: DynkinType, text: str) -> ZVertex:
    text = text.replace(" ", "")
    m = _CANON_RE.match(text)
    if m:
        v = ZVertex(int(m[1]), int(m[2]))
        if v.node not in d.nodes:
            raise ValueError(f"node {v.node} not in {d}")
        return v
    m = _CHART_RE.match(text)
    if m:
        i, j, sign = int(m[1]), int(m[2]), m[3]
        if d.family is Family.A:
            if sign is not None:
                raise ValueError("sign tag only valid for type D")
            return from_chart_a(d, i, j)
        if d.family is Family.D:
            return from_chart_d(d, i, j, sign)
        raise ValueError("chart coordinates are defined for types A and D only")
    raise ValueError(f"cannot parse vertex {text!r}")


def _quiver_from_args(args) -> StableQuiver:
    d = DynkinType(Family(args.type), args.rank)
    if args.flip and not supports_flip(d):
        raise ValueError(f"{d} does not support a flip quotient")
    return StableQuiver(d, AdmissibleGroup(args.circumference, args.flip))


def cmd_build(args) -> int:
    q = _quiver_from_args(args)
    dot = export_dot(q, show_tau=args.show_tau)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(dot)
    else:
        sys.stdout.write(dot)
    return 0


def cmd_hom(args) -> int:
    d = DynkinType(Family(args.type), args.rank)
    x = parse_vertex(d, getattr(args, "from"))
    y = parse_vertex(d, args.to)
    if args.circumference:
        from .homs import hom_dim_quotient

        if args.flip and not supports_flip(d):
            raise ValueError(f"{d} does not support a flip quotient")
        q = StableQuiver(d, AdmissibleGroup(args.circumference, args.flip))
        print(hom_dim_quotient(q, x, y))
    else:
        from .homs import hom_dim_z

        print(hom_dim_z(d, x, y))
    return 0


def cmd_cy(args) -> int:
    label = parse_label(args.label)
    q = stable_quiver_of(label)
    if args.method in ("formula", "both"):
        for c in formula_candidates(label.kind, label.dynkin, label.circumference, label.params):
            extra = f" r={c.r}" if c.r is not None else ""
            print(f"{c.formula_id}: d={c.d} (mod {c.modulus}){extra}")
    if args.method in ("brute", "both"):
        print(f"brute: d={cy_brute(q)}")
    return 0


_THEOREM_GROUPS = {
    "A": ("A1", "A2"),
    "D": ("D1", "D2", "D3"),
    "E": ("E6", "E7", "E8"),
}


def _record(report) -> dict:
    return {
        "label": str(report.instance.label),
        "u": report.instance.u,
        "circumference": report.instance.label.circumference,
        "flip": report.instance.label.flip,
        "cy_formula": [
            {"formula_id": c.formula_id, "d": c.d} for c in report.kr.cy_candidates
        ],
        "cy_brute": report.kr.cy_value,
        "tilting_ok": report.kr.tilting_ok,
        "endo_ok": report.kr.endo_ok,
        "negext_ok": report.kr.negext_ok,
        "shape_ok": report.shape.ok,
        "elapsed_ms": report.elapsed_ms,
    }


def cmd_verify(args) -> int:
    names = _THEOREM_GROUPS[args.theorem] if args.theorem != "all" else tuple(
        t for grp in _THEOREM_GROUPS.values() for t in grp
    )
    records = []
    all_green = True
    for name in names:
        for inst in eligible_instances(name, args.u_max, args.rank_max):
            rep = verify_instance(inst)
            records.append(_record(rep))
            all_green &= rep.all_green and rep.kr.cy_ok
    records.sort(key=lambda r: (r["label"], r["u"]))
    text = json.dumps(records, indent=2)
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0 if all_green else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="starq", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="export a quotient quiver as DOT")
    b.add_argument("--type", required=True, choices=["A", "D", "E"])
    b.add_argument("--rank", required=True, type=int)
    b.add_argument("--circumference", required=True, type=int)
    b.add_argument("--flip", action="store_true")
    b.add_argument("--show-tau", action="store_true")
    b.add_argument("--out")
    b.set_defaults(fn=cmd_build)

    h = sub.add_parser("hom", help="print one Hom dimension")
    h.add_argument("--type", required=True, choices=["A", "D", "E"])
    h.add_argument("--rank", required=True, type=int)
    h.add_argument("--circumference", type=int, default=0)
    h.add_argument("--flip", action="store_true")
    h.add_argument("--from", required=True)
    h.add_argument("--to", required=True)
    h.set_defaults(fn=cmd_hom)

    c = sub.add_parser("cy", help="Calabi-Yau dimension of a labelled algebra")
    c.add_argument("--label", required=True)
    c.add_argument("--method", choices=["formula", "brute", "both"], default="both")
    c.set_defaults(fn=cmd_cy)

    v = sub.add_parser("verify", help="run eligibility grids, write JSON report")
    v.add_argument("--theorem", required=True, choices=["A", "D", "E", "all"])
    v.add_argument("--u-max", required=True, type=int)
    v.add_argument("--rank-max", type=int)
    v.add_argument("--json")
    v.set_defaults(fn=cmd_verify)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except DegenerateQuotient as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except NoQuiverPeriod as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (ValueError, OutOfChart, MalformedLabel, QuotientError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
