"""Problem-description parsing, pipeline orchestration and artifact output.

Subcommands: ``describe``, ``knit``, ``chambers``, ``oracle``, ``report``.
Exit codes: 0 success, 2 input error, 3 consistency failure, 4 resource cap.
Rationals are serialized as "p/q" strings; reruns with the same spec and
seed are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import tempfile
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .arrangement import count_regions, restricted_walls, sign_vectors
from .chambers import ChamberStructure, bounds, enhanced_report, enumerate_chambers, skeleton
from .dynkin import DynkinType, build_diagram
from .errors import (ConfigurationError, ConsistencyError, InternalConsistencyError,
                     InvalidDiagramError, NonterminationError,
                     ResourceBudgetError, SpecError)
from .fixtures import PAPER_ALIASES, resolve_vertex
from .knitting import Configuration, knit
from .mutation import rk_vector

GENERIC_POINT_SAMPLES = 1000

_KNOWN_OPTIONS = {"oracle", "svg", "dot", "seed"}


@dataclass(frozen=True)
class SpecOptions:
    oracle: bool = True
    svg: bool = True
    dot: bool = True
    seed: int = 0


@dataclass(frozen=True)
class ProblemSpec:
    dtype: DynkinType
    retained: Tuple[str, ...]        # canonical labels, slot order
    retained_input: Tuple[str, ...]  # as given (aliases preserved for the echo)
    options: SpecOptions = field(default_factory=SpecOptions)

    def configuration(self) -> Configuration:
        return Configuration(build_diagram(self.dtype), self.retained)


def parse_spec(text: str) -> ProblemSpec:
    """Parse and validate a UTF-8 JSON problem description."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError("malformed-json", f"spec is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise SpecError("malformed-json", "spec must be a JSON object")
    unknown = set(raw) - {"diagram", "retained", "options"}
    if unknown:
        raise SpecError("unknown-field",
                        f"unknown spec field(s): {', '.join(sorted(unknown))}",
                        field=sorted(unknown)[0])
    for key in ("diagram", "retained"):
        if key not in raw:
            raise SpecError("missing-field", f"spec is missing {key!r}", field=key)
    try:
        dtype = DynkinType.parse(str(raw["diagram"]))
    except InvalidDiagramError as exc:
        raise SpecError("unknown-diagram", str(exc), field="diagram") from exc
    if not isinstance(raw["retained"], list) or not raw["retained"]:
        raise SpecError("bad-type", "retained must be a nonempty list", field="retained")
    diagram = build_diagram(dtype)
    retained_input = tuple(str(v) for v in raw["retained"])
    retained = tuple(resolve_vertex(dtype, v) for v in retained_input)
    if len(set(retained)) != len(retained):
        raise SpecError("duplicate-vertex",
                        "retained vertices must be distinct", field="retained")
    for given, label in zip(retained_input, retained):
        if label == "0":
            raise SpecError("extended-vertex",
                            f"retained vertex {given!r} is the extended vertex; "
                            f"it is implicitly retained and may not be listed",
                            field="retained")
        if label not in diagram.delta:
            raise SpecError("unknown-vertex",
                            f"unknown vertex {given!r} for diagram {dtype}",
                            field="retained")
    opts_raw = raw.get("options", {})
    if not isinstance(opts_raw, dict):
        raise SpecError("bad-type", "options must be an object", field="options")
    unknown = set(opts_raw) - _KNOWN_OPTIONS
    if unknown:
        raise SpecError("unknown-field",
                        f"unknown option(s): {', '.join(sorted(unknown))}",
                        field="options")
    defaults = SpecOptions()
    try:
        options = SpecOptions(
            oracle=bool(opts_raw.get("oracle", defaults.oracle)),
            svg=bool(opts_raw.get("svg", defaults.svg)),
            dot=bool(opts_raw.get("dot", defaults.dot)),
            seed=int(opts_raw.get("seed", defaults.seed)),
        )
    except (TypeError, ValueError) as exc:
        raise SpecError("bad-type", f"bad option value: {exc}", field="options") from exc
    return ProblemSpec(dtype, retained, retained_input, options)


def describe(diagram_name: str) -> str:
    """Canonical labelling, multiplicities and adjacency for one diagram."""
    dtype = DynkinType.parse(diagram_name)
    diagram = build_diagram(dtype)
    lines = [f"{dtype}: affine diagram with {len(diagram.vertices)} vertices "
             f"(vertex 0 is the extended vertex)"]
    lines.append(f"{'vertex':>8} {'delta':>5}  neighbors")
    for v in diagram.vertices:
        nbrs = ", ".join(f"{w} (x{m})" if m > 1 else w
                         for w, m in diagram.neighbors[v])
        lines.append(f"{v:>8} {diagram.delta[v]:>5}  {nbrs}")
    if dtype.family == "A" and dtype.rank == 1:
        lines.append("note: the pair 0 - 1 carries a double edge")
    aliases = {a: c for a, c in PAPER_ALIASES.get(str(dtype), {}).items()}
    if aliases:
        pairs = ", ".join(f"{a} = {c}" for a, c in sorted(aliases.items()))
        lines.append(f"module-name aliases: {pairs}")
    return "\n".join(lines) + "\n"


def frac_str(x) -> str:
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


def _covector_text(cov: Sequence[int]) -> str:
    terms = []
    for k, c in enumerate(cov):
        if c == 0:
            continue
        coef = "" if abs(c) == 1 else str(abs(c))
        term = f"{coef}t{k + 1}"
        terms.append(("+" if c > 0 else "-") + term)
    text = "".join(terms)
    return text[1:] if text.startswith("+") else text


def _generic_point_check(structure: ChamberStructure, seed: int) -> dict:
    rng = random.Random(seed)
    r = structure.config.rank
    tested = 0
    while tested < GENERIC_POINT_SAMPLES:
        point = tuple(rng.randint(-997, 997) for _ in range(r))
        if structure.on_wall(point):
            continue
        if structure.locate(point) is None:
            raise ConsistencyError(f"generic point {point} lies in no chamber")
        tested += 1
    return {"seed": seed, "tested": tested, "all_in_exactly_one_chamber": True}


def build_report(spec: ProblemSpec) -> dict:
    """Run the whole pipeline and assemble the report dictionary."""
    config = spec.configuration()
    diagram = config.diagram

    exchange_table = []
    for slot in range(config.rank):
        ex = knit(config, slot)
        exchange_table.append({
            "slot": slot,
            "pivot_vertex": ex.pivot_vertex,
            "b": {v: m for v, m in sorted(ex.b.items())},
            "new_vertex": ex.new_vertex,
            "config_changing": ex.new_vertex != ex.pivot_vertex,
        })

    oracle_block: dict = {"enabled": spec.options.oracle}
    precomputed = None
    if spec.options.oracle:
        arr = restricted_walls(diagram, config.slots)
        whitney = count_regions(arr)
        signs = sign_vectors(arr)
        oracle_block.update({
            "walls": [list(c) for c in arr.covectors],
            "region_count": whitney,
            "sign_vector_count": len(signs),
        })
        if len(signs) != whitney:
            raise ConsistencyError(
                f"oracle disagreement: Whitney count {whitney}, "
                f"{len(signs)} feasible sign vectors"
            )
        precomputed = (arr, whitney)

    structure = enumerate_chambers(config, oracle=spec.options.oracle,
                                   precomputed=precomputed)
    skel = skeleton(structure)
    report_enh = enhanced_report(structure, skel)
    lower, upper = bounds(structure, report_enh)

    if spec.options.oracle:
        oracle_block["count_match"] = structure.n_chambers == oracle_block["region_count"]
        oracle_block["walls_match"] = ([list(c) for c in structure.walls]
                                       == oracle_block["walls"])

    chambers_block = []
    for ch in structure.chambers:
        chambers_block.append({
            "index": ch.index,
            "word": list(ch.word),
            "slots": list(ch.slots),
            "inequalities": [{"covector": list(c), "sign": s}
                             for c, s in ch.inequalities],
            "interior_point": [frac_str(x) for x in ch.interior_point],
            "config": {
                "retained": list(ch.dual_graph.vertices),
                "edges": sorted(list(e) for e in ch.dual_graph.edges),
                "delta": list(ch.dual_graph.delta),
            },
        })

    rk = rk_vector(config)
    report = {
        "input": {
            "diagram": str(spec.dtype),
            "retained": list(spec.retained),
            "retained_input": list(spec.retained_input),
            "options": {"oracle": spec.options.oracle, "svg": spec.options.svg,
                        "dot": spec.options.dot, "seed": spec.options.seed},
        },
        "diagram": {
            "vertices": list(diagram.vertices),
            "delta": {v: diagram.delta[v] for v in diagram.vertices},
            "edges": [[u, v, m] for u, v, m in diagram.edges],
        },
        "rk": list(rk),
        "exchange_table": exchange_table,
        "walls": [list(c) for c in structure.walls],
        "chambers": chambers_block,
        "skeleton": {
            "edges": [{"a": e.a, "b": e.b, "wall": list(e.wall), "slot": e.slot,
                       "config_changing": e.config_changing}
                      for e in skel.edges],
        },
        "config_classes": [{"retained": list(subset), "chambers": count}
                           for subset, count in report_enh.config_classes],
        "counts": {
            "chambers": structure.n_chambers,
            "walls": len(structure.walls),
            "config_classes": report_enh.n_classes,
            "skeleton_edges": len(skel.edges),
        },
        "bounds": {"lower": lower, "upper": upper},
        "oracle": oracle_block,
        "generic_points": _generic_point_check(structure, spec.options.seed),
        "notices": [],
        "files": {"report": "report.json", "dot": None, "svg": None},
    }
    if report["counts"]["chambers"] != report["bounds"]["upper"]:
        raise ConsistencyError("upper bound must equal the chamber count")
    return report


def render_dot(report: dict) -> str:
    """Skeleton graph in DOT, nodes labelled by mutation word, edges by the
    crossing slot; configuration-changing walls are drawn dashed."""
    lines = ["graph skeleton {"]
    lines.append('  graph [label="skeleton of the chamber decomposition"];')
    for ch in report["chambers"]:
        word = "".join(str(s) for s in ch["word"]) or "e"
        lines.append(f'  c{ch["index"]} [label="{word}"];')
    for e in report["skeleton"]["edges"]:
        style = ' style=dashed' if e["config_changing"] else ""
        lines.append(
            f'  c{e["a"]} -- c{e["b"]} [label="nu{e["slot"]} | '
            f'{_covector_text(e["wall"])}"{style}];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def render_svg(report: dict) -> str:
    """Fan diagram of a rank-2 decomposition: one line per wall inside a
    dotted unit circle, with a wall legend."""
    walls = report["walls"]
    radius = 100
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="-160 -130 360 260">',
        f'  <circle cx="0" cy="0" r="{radius}" fill="none" stroke="#999" '
        'stroke-dasharray="3 3"/>',
    ]
    for idx, cov in enumerate(walls):
        c1, c2 = cov
        # direction of the line c1*t1 + c2*t2 = 0 (SVG y points down)
        dx, dy = -c2, c1
        scale = radius / (dx * dx + dy * dy) ** 0.5
        x = dx * scale
        y = -dy * scale
        parts.append(
            f'  <line x1="{x:.4f}" y1="{y:.4f}" x2="{-x:.4f}" y2="{-y:.4f}" '
            f'stroke="#123" stroke-width="1.2"/>'
        )
        parts.append(
            f'  <text x="115" y="{-110 + 16 * idx}" font-size="11" '
            f'font-family="monospace">{_covector_text(cov)} = 0</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _write_atomic(path: str, data: str) -> None:
    directory = os.path.dirname(path) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def run_report(spec: ProblemSpec, out_dir: str) -> dict:
    """Build the report and write report.json (always), skeleton.dot and
    chambers.svg (rank 2 only) under ``out_dir``."""
    report = build_report(spec)
    os.makedirs(out_dir, exist_ok=True)
    if spec.options.dot:
        report["files"]["dot"] = "skeleton.dot"
        _write_atomic(os.path.join(out_dir, "skeleton.dot"), render_dot(report))
    if spec.options.svg:
        if len(spec.retained) == 2:
            report["files"]["svg"] = "chambers.svg"
            _write_atomic(os.path.join(out_dir, "chambers.svg"), render_svg(report))
        else:
            report["notices"].append(
                f"chambers.svg skipped: fan diagrams are drawn only for 2 "
                f"retained curves (this configuration has {len(spec.retained)})"
            )
    _write_atomic(os.path.join(out_dir, "report.json"),
                  json.dumps(report, indent=2, sort_keys=True) + "\n")
    return report


def _read_spec_file(path: str) -> ProblemSpec:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise SpecError("unreadable-spec", f"cannot read spec file: {exc}") from exc
    return parse_spec(text)


def _apply_flag_overrides(spec: ProblemSpec, args: argparse.Namespace) -> ProblemSpec:
    opts = spec.options
    oracle = False if getattr(args, "no_oracle", False) else opts.oracle
    svg = True if getattr(args, "svg", False) else opts.svg
    dot = True if getattr(args, "dot", False) else opts.dot
    seed = args.seed if getattr(args, "seed", None) is not None else opts.seed
    return ProblemSpec(spec.dtype, spec.retained, spec.retained_input,
                       SpecOptions(oracle, svg, dot, seed))


def _cmd_describe(args: argparse.Namespace) -> int:
    sys.stdout.write(describe(args.diagram))
    return 0


def _cmd_knit(args: argparse.Namespace) -> int:
    spec = _apply_flag_overrides(_read_spec_file(args.spec), args)
    config = spec.configuration()
    sys.stdout.write(f"exchange data for {spec.dtype}, slots {list(config.slots)}\n")
    for slot in range(config.rank):
        ex = knit(config, slot)
        btxt = " + ".join(f"{v}^{m}" if m > 1 else v
                          for v, m in sorted(ex.b.items()))
        sys.stdout.write(
            f"  slot {slot} (pivot {ex.pivot_vertex}): "
            f"0 -> {ex.pivot_vertex} -> {btxt} -> {ex.new_vertex} -> 0"
            f"{'   [configuration changes]' if ex.new_vertex != ex.pivot_vertex else ''}\n"
        )
    return 0


def _cmd_oracle(args: argparse.Namespace) -> int:
    spec = _apply_flag_overrides(_read_spec_file(args.spec), args)
    config = spec.configuration()
    arr = restricted_walls(config.diagram, config.slots)
    whitney = count_regions(arr)
    signs = sign_vectors(arr)
    sys.stdout.write(f"restricted arrangement for {spec.dtype}, "
                     f"slots {list(config.slots)}\n")
    for cov in arr.covectors:
        sys.stdout.write(f"  {_covector_text(cov)} = 0\n")
    sys.stdout.write(f"regions (Whitney count): {whitney}\n")
    sys.stdout.write(f"regions (sign vectors):  {len(signs)}\n")
    if whitney != len(signs):
        raise ConsistencyError("oracle methods disagree")
    return 0


def _cmd_chambers(args: argparse.Namespace) -> int:
    spec = _apply_flag_overrides(_read_spec_file(args.spec), args)
    config = spec.configuration()
    structure = enumerate_chambers(config, oracle=spec.options.oracle)
    report_enh = enhanced_report(structure)
    lower, upper = bounds(structure, report_enh)
    sys.stdout.write(f"{structure.n_chambers} chambers, "
                     f"{len(structure.walls)} walls\n")
    for cov in structure.walls:
        sys.stdout.write(f"  wall {_covector_text(cov)} = 0\n")
    sys.stdout.write(f"configurations: {report_enh.n_classes} distinct\n")
    for subset, count in report_enh.config_classes:
        sys.stdout.write(f"  {{{', '.join(subset)}}}: {count} chambers\n")
    sys.stdout.write(f"minimal models: at least {lower}, at most {upper}\n")
    if spec.options.oracle:
        sys.stdout.write(f"oracle count matches: {structure.oracle_count}\n")
    return 0


def _cmd_report(args: argparse.Namespace) -> int:
    spec = _apply_flag_overrides(_read_spec_file(args.spec), args)
    report = run_report(spec, args.out)
    counts = report["counts"]
    sys.stdout.write(
        f"wrote {os.path.join(args.out, 'report.json')}: "
        f"{counts['chambers']} chambers, {counts['walls']} walls, "
        f"bounds ({report['bounds']['lower']}, {report['bounds']['upper']})\n"
    )
    for notice in report["notices"]:
        sys.stdout.write(f"notice: {notice}\n")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knitchambers",
        description="GIT chamber structures of partial crepant resolutions "
                    "of ADE surface singularities, by knitting",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("describe", help="print the canonical labelling")
    p.add_argument("diagram")
    p.set_defaults(func=_cmd_describe)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--spec", required=True, help="problem spec JSON file")
        p.add_argument("--no-oracle", action="store_true",
                       help="skip the arrangement oracle")
        p.add_argument("--svg", action="store_true", help="force SVG output on")
        p.add_argument("--dot", action="store_true", help="force DOT output on")
        p.add_argument("--seed", type=int, default=None,
                       help="seed for the generic-point check")

    p = sub.add_parser("knit", help="exchange data for every slot")
    add_common(p)
    p.set_defaults(func=_cmd_knit)

    p = sub.add_parser("oracle", help="restricted arrangement and region counts")
    add_common(p)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("chambers", help="enumerate the chamber decomposition")
    add_common(p)
    p.set_defaults(func=_cmd_chambers)

    p = sub.add_parser("report", help="full pipeline with file artifacts")
    add_common(p)
    p.add_argument("--out", default=".", help="output directory")
    p.set_defaults(func=_cmd_report)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SpecError as exc:
        sys.stderr.write(f"input error [{exc.code}]: {exc}\n")
        return 2
    except (InvalidDiagramError, ConfigurationError, ValueError) as exc:
        sys.stderr.write(f"input error: {exc}\n")
        return 2
    except (ConsistencyError, InternalConsistencyError) as exc:
        sys.stderr.write(f"consistency failure: {exc}\n")
        return 3
    except (ResourceBudgetError, NonterminationError) as exc:
        sys.stderr.write(f"resource cap: {exc}\n")
        return 4


if __name__ == "__main__":
    sys.exit(main())
