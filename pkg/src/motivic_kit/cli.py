"""Batch command-line front end: every verification as a subcommand.

All output is deterministic (sorted keys, fixed orders), so repeated runs
with the same configuration produce byte-identical bytes.  Exit status 0
means every assertion of the invoked command passed; 1 reports a failed
verification, 2 a bad configuration or input file.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from .artin import solve_coalgebra_morphisms, verify_mcffe
from .finsets import FinDiagram, FinSet, automorphism_group, enumerate_diagrams
from .galois import GSet, equivariant_set_maps, fixed_coalgebra_morphisms
from .hypercube import CubeDiagram, build_kappa, ks_hocolim, punctured_cube_hocolim
from .monad import verify_m_identity
from .resolution import verify_mdffe
from . import artin

DEFAULT_MAX_SIZE = 6


@dataclass
class RunConfig:
    """A parsed invocation: command name, bounds, paths, output format."""
    command: str
    format: str = "table"
    x: int = 0
    y: int = 0
    k: int = 0
    bounds: tuple = ()
    bound: int = 2
    diagram_path: str = ""
    x_path: str = ""
    y_path: str = ""
    components: tuple = ()
    ambient: str = ""
    dim: int = 0
    cross: str = ""
    show_matrices: bool = False
    max_size: int = field(default_factory=lambda: int(
        os.environ.get("MOTIVIC_KIT_MAX_SIZE", DEFAULT_MAX_SIZE)))

    def check_limits(self):
        values = [self.x, self.y, self.k, self.bound, *self.bounds]
        for v in values:
            if v > self.max_size:
                raise ValueError(
                    f"size bound {v} exceeds the safety limit "
                    f"{self.max_size} (override with MOTIVIC_KIT_MAX_SIZE)")


def _emit(config: RunConfig, table_lines, data) -> str:
    if config.format == "json":
        return json.dumps(data, sort_keys=True, indent=2)
    return "\n".join(table_lines)


def _load_json(path: str):
    with open(path) as fh:
        return json.load(fh)


def _cmd_enumerate_diagrams(config: RunConfig):
    classes = enumerate_diagrams(config.k, config.bounds)
    lines = []
    for i, d in enumerate(classes):
        sizes = ",".join(str(s) for s in d.sizes())
        maps = " ".join(str(list(m.values)) for m in d.maps)
        aut = automorphism_group(d).order
        lines.append(f"{i}: sizes={sizes} maps={maps or '-'} |Aut|={aut}")
    lines.append(f"classes: {len(classes)}")
    data = {"k": config.k, "bounds": list(config.bounds),
            "count": len(classes),
            "classes": [d.to_json() for d in classes]}
    return 0, _emit(config, lines, data)


def _check_loaded_sizes(config: RunConfig, sizes):
    for v in sizes:
        if v > config.max_size:
            raise ValueError(
                f"input set of size {v} exceeds the safety limit "
                f"{config.max_size} (override with MOTIVIC_KIT_MAX_SIZE)")


def _cmd_aut(config: RunConfig):
    d = FinDiagram.from_json(_load_json(config.diagram_path))
    _check_loaded_sizes(config, d.sizes())
    group = automorphism_group(d)
    lines = [f"degrees: {','.join(str(n) for n in group.degrees)}",
             f"order: {group.order}",
             f"generators: {len(group.generators)}"]
    for g in group.generators:
        lines.append("  " + " ".join(str(list(c.values)) for c in g.components))
    return 0, _emit(config, lines, group.to_json())


def _cmd_solve_comonoid(config: RunConfig):
    x, y = FinSet(config.x), FinSet(config.y)
    morphisms = solve_coalgebra_morphisms(x, y)
    expected = y.size ** x.size
    ok = len(morphisms) == expected
    lines = [f"morphisms: {len(morphisms)} (expected {expected})"]
    if config.show_matrices:
        for c in morphisms:
            lines.append("  " + json.dumps(c.matrix.to_json()["entries"]))
    lines.append("PASS" if ok else "FAIL")
    data = {"x": config.x, "y": config.y, "count": len(morphisms),
            "expected": expected, "passed": ok}
    if config.show_matrices:
        data["matrices"] = [c.matrix.to_json() for c in morphisms]
    return (0 if ok else 1), _emit(config, lines, data)


def _cmd_galois_fixed(config: RunConfig):
    x = GSet.from_json(_load_json(config.x_path))
    y = GSet.from_json(_load_json(config.y_path))
    _check_loaded_sizes(config, [x.carrier.size, y.carrier.size])
    maps = equivariant_set_maps(x, y)
    fixed = fixed_coalgebra_morphisms(x, y)
    graphs = {artin.graph_matrix(f) for f in maps}
    ok = {c.matrix for c in fixed} == graphs
    lines = [f"equivariant maps: {len(maps)}",
             f"fixed comonoid morphisms: {len(fixed)}",
             "PASS" if ok else "FAIL"]
    data = {"equivariant_maps": len(maps), "fixed_morphisms": len(fixed),
            "passed": ok}
    return (0 if ok else 1), _emit(config, lines, data)


def _cmd_verify_monad(config: RunConfig):
    report = verify_m_identity(config.k, config.bounds)
    lines = []
    for row in report.rows:
        sizes, fibers, values = row.encoding
        lines.append(f"sizes={','.join(str(s) for s in sizes)} "
                     f"maps={list(values)} |Aut|={row.aut_order} "
                     f"wreath={row.wreath_count} "
                     f"preimage={[list(s) for s in row.preimage_sizes]}")
    lines.append(report.summary())
    data = {"k": report.k, "bounds": list(report.bounds),
            "assembled_classes": report.assembled_classes,
            "enumerated_classes": report.enumerated_classes,
            "passed": report.passed,
            "rows": [{"sizes": list(r.encoding[0]),
                      "aut_order": r.aut_order,
                      "wreath": r.wreath_count,
                      "preimage_sizes": [list(s) for s in r.preimage_sizes]}
                     for r in report.rows]}
    return (0 if report.passed else 1), _emit(config, lines, data)


def _cmd_hocolim(config: RunConfig):
    payload = _load_json(config.diagram_path)
    cube = CubeDiagram.from_json(payload)
    if "ambient" in payload:
        from .qlinalg import ChainComplex, QMatrix
        from .hypercube import ChainMap
        ambient = ChainComplex.from_json(payload["ambient"])
        singles = {}
        for key, blocks in payload["ambient_edges"].items():
            s = frozenset(int(v) for v in key.split(","))
            singles[s] = ChainMap(cube.vertices[s], ambient,
                                  {int(q): QMatrix.from_json(m)
                                   for q, m in blocks.items()})
        total = ks_hocolim(ambient, cube, singles)
    else:
        total = punctured_cube_hocolim(cube)
    hom = total.homology_dims()
    lines = [" ".join(f"H{n}={hom[n]}" for n in sorted(hom))]
    data = {"homology": {str(n): hom[n] for n in sorted(hom)},
            "euler_characteristic": int(total.euler_characteristic())}
    return 0, _emit(config, lines, data)


def _cmd_kappa(config: RunConfig):
    diagram = build_kappa(config.components, config.ambient, config.dim)
    if config.cross:
        diagram = diagram.cross_with(config.cross)
    lines = [f"{name}: {expr}" for name, expr in diagram.rows()]
    lines.append(diagram.annotation())
    return 0, _emit(config, lines, diagram.to_json())


def _cmd_verify_mcffe(config: RunConfig):
    report = verify_mcffe(FinSet(config.x), FinSet(config.y))
    line = (f"{report.morphism_count} = {report.setmap_count}, "
            + ("PASS" if report.passed else "FAIL"))
    data = {"x": report.x_size, "y": report.y_size,
            "morphisms": report.morphism_count,
            "set_maps": report.setmap_count, "passed": report.passed}
    return (0 if report.passed else 1), _emit(config, [line], data)


def _cmd_verify_mdffe(config: RunConfig):
    report = verify_mdffe(FinSet(config.x), FinSet(config.y),
                          bound=config.bound,
                          recheck_bound=config.bound + 1)
    lines = [f"equalizer (bound {config.bound}): {report.equalizer_count}",
             f"equalizer (bound {config.bound + 1}): {report.recheck_count}",
             f"transposed comonoid morphisms: {report.transposed_morphism_count}",
             f"set maps: {report.setmap_count}",
             "PASS" if report.passed else "FAIL"]
    data = {"x": report.x_size, "y": report.y_size,
            "equalizer": report.equalizer_count,
            "equalizer_recheck": report.recheck_count,
            "transposed_morphisms": report.transposed_morphism_count,
            "set_maps": report.setmap_count,
            "passed": report.passed}
    return (0 if report.passed else 1), _emit(config, lines, data)


_COMMANDS = {
    "enumerate-diagrams": _cmd_enumerate_diagrams,
    "aut": _cmd_aut,
    "solve-comonoid": _cmd_solve_comonoid,
    "galois-fixed": _cmd_galois_fixed,
    "verify-monad": _cmd_verify_monad,
    "hocolim": _cmd_hocolim,
    "kappa": _cmd_kappa,
    "verify-mcffe": _cmd_verify_mcffe,
    "verify-mdffe": _cmd_verify_mdffe,
}


def run(config: RunConfig):
    """Execute one command; returns (exit status, report text)."""
    try:
        config.check_limits()
        return _COMMANDS[config.command](config)
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        return 2, f"error: {exc}"


def _bounds(text: str) -> tuple:
    return tuple(int(v) for v in text.split(","))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="motivic-kit",
        description="Exact verifications for the matrix calculus on finite sets.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=["table", "json"], default="table")

    p = sub.add_parser("enumerate-diagrams",
                       help="census of diagram classes within bounds")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--bounds", type=_bounds, required=True)
    add_format(p)

    p = sub.add_parser("aut", help="automorphism group of a diagram file")
    p.add_argument("--diagram", dest="diagram_path", required=True)
    add_format(p)

    p = sub.add_parser("solve-comonoid",
                       help="all comonoid morphisms between two sets")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--show-matrices", action="store_true")
    add_format(p)

    p = sub.add_parser("galois-fixed",
                       help="equivariant maps vs group-fixed morphisms")
    p.add_argument("--x", dest="x_path", required=True,
                   help="G-set JSON file")
    p.add_argument("--y", dest="y_path", required=True,
                   help="G-set JSON file")
    add_format(p)

    p = sub.add_parser("verify-monad",
                       help="multiset assembly census against enumeration")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--bounds", type=_bounds, required=True)
    add_format(p)

    p = sub.add_parser("hocolim",
                       help="homology of the total complex of a cube file")
    p.add_argument("--diagram", dest="diagram_path", required=True)
    add_format(p)

    p = sub.add_parser("kappa",
                       help="labeled compactification diagram")
    p.add_argument("--components", type=lambda s: tuple(s.split(",")),
                   required=True)
    p.add_argument("--ambient", required=True)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--cross", default="")
    add_format(p)

    p = sub.add_parser("verify-mcffe",
                       help="comonoid morphisms = set maps")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    add_format(p)

    p = sub.add_parser("verify-mdffe",
                       help="cosimplicial equalizer = set maps")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--bound", type=int, default=2)
    add_format(p)

    return parser


def config_from_args(args) -> RunConfig:
    fields = {k: v for k, v in vars(args).items() if v is not None}
    return RunConfig(**fields)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    status, text = run(config_from_args(args))
    print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
