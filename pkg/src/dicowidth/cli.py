"""Command-line front end.

Exit codes: 0 success / valid, 1 invalid certificate, 2 input error,
3 size cap exceeded.
"""
from __future__ import annotations

import argparse
import os
import re
import sys
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .build import build_path_decomposition, build_tree_decomposition
from .decomposition import (
    DecompositionFormatError,
    PathDecomposition,
    format_path_decomposition,
    format_tree_decomposition,
    parse_decomposition,
    path_decomposition_to_dot,
    tree_decomposition_to_dot,
)
from .digraph import CapExceeded, Digraph, GraphError, digraph_to_dot, induced_subdigraph, parse_edge_list
from .expr import ExprError, Op, binarize, evaluate, format_expr, parse_expr
from .expr.recognize import NotACograph, recognize_di_cograph, strong_component_expression
from .generate import DEFAULT_MIX, EXTENDED_MIX, random_corpus
from .oracle import DEFAULT_CAP, dpw_exact, dtw_bracket
from .verify import verify_path_decomposition, verify_tree_decomposition
from .width import annotate, width_of_digraph

EXIT_OK, EXIT_INVALID, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3

_HEADER = re.compile(r"^\s*\d+\s+\d+\s*$")


@dataclass(frozen=True)
class RunConfig:
    command: str
    inputs: tuple[str, ...]
    output: str | None
    oracle_cap: int
    recognizer_cap: int
    seed: int
    fmt: str
    kind: str


class Failure(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def load_input(path: str):
    """An expression (``.dce`` or expression text) or an edge-list digraph."""
    text = Path(path).read_text(encoding="utf-8")
    first = next((ln.split("#", 1)[0] for ln in text.splitlines() if ln.split("#", 1)[0].strip()), "")
    if path.endswith(".dce") or not _HEADER.match(first):
        return parse_expr(" ".join(ln.split("#", 1)[0] for ln in text.splitlines()))
    return parse_edge_list(text)


def load_graph(path: str) -> Digraph:
    obj = load_input(path)
    return obj if isinstance(obj, Digraph) else evaluate(obj)


def _write(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
        return
    target = Path(output)
    target.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=target.parent, prefix=".tmp-")
    with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    os.replace(tmp, target)


def _graph_certificate(g: Digraph, report) -> PathDecomposition:
    """Path certificate for a general digraph: components concatenated in order."""
    bags = []
    for comp in report.components:
        sub = induced_subdigraph(g, comp.vertices)
        if comp.expr is not None:
            bags.extend(build_path_decomposition(binarize(comp.expr)).bags)
        else:
            bags.extend(dpw_exact(sub, max(len(sub), 1)).decomposition.bags)
    return PathDecomposition(tuple(bags))


def width_report(path: str, cfg: RunConfig) -> str:
    obj = load_input(path)
    lines: list[str] = []
    fields: list[str] = [f"input={path}"]
    if isinstance(obj, Digraph):
        g = obj
        report = width_of_digraph(g, cfg.oracle_cap, cfg.recognizer_cap)
        for i, comp in enumerate(report.components):
            dtw = str(comp.dtw_lower) if comp.dtw_exact else f"[{comp.dtw_lower},{comp.dtw_upper}]"
            members = ",".join(sorted(comp.vertices))
            lines.append(f"component {members} method={comp.method} dpw={comp.dpw} dtw={dtw}")
            fields += [f"component.{i}.vertices={members}", f"component.{i}.method={comp.method}",
                       f"component.{i}.dpw={comp.dpw}", f"component.{i}.dtw={dtw}"]
        dpw = report.dpw
        dtw = str(report.dtw_lower) if report.dtw_exact else f"[{report.dtw_lower},{report.dtw_upper}]"
        make_cert = lambda: _graph_certificate(g, report)  # noqa: E731
    else:
        e = binarize(obj)
        ann = annotate(e)
        g = evaluate(e)
        if cfg.kind == "nodes":
            for node, w in ann.dpw.items():
                lines.append(f"node {format_expr(node)} size={ann.size[node]} dpw={w} dtw={ann.dtw[node]}")
        dpw, dtw = ann.root_dpw, str(ann.root_dtw)
        make_cert = lambda: build_path_decomposition(e, ann)  # noqa: E731
    if cfg.fmt != "structured":
        return "\n".join(lines + [f"dpw={dpw} dtw={dtw}"]) + "\n"
    cert = make_cert()
    verdict = verify_path_decomposition(g, cert)
    if not verdict.valid or verdict.width != dpw:
        raise Failure(EXIT_INVALID, f"{path}: internal certificate failed verification")
    fields += [f"dpw={dpw}", f"dtw={dtw}", "certificate=path"]
    return "\n".join(fields) + "\n" + format_path_decomposition(cert)


def _width_job(args):
    path, cfg = args
    try:
        return path, EXIT_OK, width_report(path, cfg)
    except Failure as exc:
        return path, exc.code, f"error: {exc}\n"
    except CapExceeded as exc:
        return path, EXIT_CAP, f"error: {exc}\n"
    except (OSError, ExprError, GraphError, DecompositionFormatError) as exc:
        return path, EXIT_INPUT, f"error: {exc}\n"


def cmd_width(cfg: RunConfig, jobs: int) -> int:
    work = [(p, cfg) for p in sorted(cfg.inputs)]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_width_job, work))
    else:
        results = [_width_job(w) for w in work]
    out = []
    for path, code, text in results:
        out.append(f"== {path}\n{text}" if len(results) > 1 else text)
    _write("".join(out), cfg.output)
    return max((code for _, code, _ in results), default=EXIT_OK)


def cmd_decompose(cfg: RunConfig) -> int:
    obj = load_input(cfg.inputs[0])
    if isinstance(obj, Digraph):
        raise Failure(EXIT_INPUT, "decompose needs an expression, not an edge list")
    e = binarize(obj)
    ann = annotate(e)
    g = evaluate(e)
    if cfg.kind == "tree":
        dec = build_tree_decomposition(e, ann)
        verdict = verify_tree_decomposition(g, dec)
    else:
        dec = build_path_decomposition(e, ann)
        verdict = verify_path_decomposition(g, dec)
    if not verdict.valid or verdict.width != ann.root_dpw:
        sys.stderr.write("self-verification failed:\n" + verdict.format())
        return EXIT_INVALID
    if cfg.fmt == "dot":
        text = tree_decomposition_to_dot(dec) if cfg.kind == "tree" else path_decomposition_to_dot(dec)
    elif cfg.kind == "tree":
        text = format_tree_decomposition(dec)
    else:
        text = format_path_decomposition(dec)
    if cfg.fmt == "structured":
        text = f"kind={cfg.kind}\nwidth={verdict.width}\n" + text
    _write(text, cfg.output)
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    if len(cfg.inputs) != 2:
        raise Failure(EXIT_INPUT, "verify needs a graph file and a decomposition file")
    g = load_graph(cfg.inputs[0])
    dec = parse_decomposition(Path(cfg.inputs[1]).read_text(encoding="utf-8"))
    if isinstance(dec, PathDecomposition):
        verdict = verify_path_decomposition(g, dec)
    else:
        verdict = verify_tree_decomposition(g, dec)
    _write(verdict.format(), cfg.output)
    return EXIT_OK if verdict.valid else EXIT_INVALID


def cmd_oracle(cfg: RunConfig) -> int:
    obj = load_input(cfg.inputs[0])
    g = obj if isinstance(obj, Digraph) else evaluate(obj)
    result = dpw_exact(g, cfg.oracle_cap)
    bracket = dtw_bracket(g, None if isinstance(obj, Digraph) else obj, cfg.oracle_cap,
                          max(20, len(g)), cfg.recognizer_cap)
    text = (f"dpw={result.width}\ndtw_lower={bracket.lower}\ndtw_upper={bracket.upper}\n"
            f"ordering={' '.join(result.ordering)}\n")
    if cfg.fmt == "structured":
        text += format_path_decomposition(result.decomposition)
    _write(text, cfg.output)
    return EXIT_OK


def cmd_recognize(cfg: RunConfig) -> int:
    g = load_graph(cfg.inputs[0])
    found = recognize_di_cograph(g, cfg.recognizer_cap)
    if isinstance(found, NotACograph):
        _write("not a directed co-graph; witness: " + " ".join(sorted(found.witness)) + "\n", cfg.output)
    else:
        assert evaluate(found) == g
        _write(format_expr(found) + "\n", cfg.output)
    return EXIT_OK


def cmd_condense(cfg: RunConfig) -> int:
    from .digraph import strong_components

    g = load_graph(cfg.inputs[0])
    cond = strong_components(g)
    expr = strong_component_expression(g, cap=cfg.recognizer_cap)
    if evaluate(expr) != g:
        raise Failure(EXIT_INVALID, "condensation expression does not re-evaluate to the input")
    lines = [f"components={len(cond)}"]
    lines += [f"component {i} " + " ".join(sorted(c)) for i, c in enumerate(cond.components)]
    lines += [f"arc {i} {j}" for i, j in sorted(cond.component_arcs)]
    lines.append("expr=" + format_expr(expr))
    _write("\n".join(lines) + "\n", cfg.output)
    return EXIT_OK


def _parse_mix(text: str | None, extended: bool):
    if not text:
        return EXTENDED_MIX if extended else DEFAULT_MIX
    symbols = {"+": Op.UNION, "*": Op.SERIES, "/": Op.ORDER, "du": Op.DIRECTED}
    mix = {}
    for part in text.split(","):
        sym, _, weight = part.partition(":")
        if sym.strip() not in symbols or not weight.strip().isdigit():
            raise Failure(EXIT_INPUT, f"bad operator mix entry {part!r}")
        mix[symbols[sym.strip()]] = int(weight)
    return mix


def cmd_generate(cfg: RunConfig, args) -> int:
    corpus = random_corpus(cfg.seed, args.count, (args.min_size, args.max_size),
                           _parse_mix(args.mix, args.extended), args.max_arity)
    width = max(4, len(str(len(corpus))))
    if cfg.output is None:
        sys.stdout.write("".join(format_expr(e) + "\n" for e in corpus))
        return EXIT_OK
    for i, e in enumerate(corpus):
        _write(format_expr(e) + "\n", os.path.join(cfg.output, f"expr_{i:0{width}d}.dce"))
    return EXIT_OK


def cmd_export_dot(cfg: RunConfig) -> int:
    path = cfg.inputs[0]
    head = Path(path).read_text(encoding="utf-8").lstrip()
    if head.startswith(("pathdecomp", "treedecomp")):
        dec = parse_decomposition(head)
        text = path_decomposition_to_dot(dec) if isinstance(dec, PathDecomposition) else tree_decomposition_to_dot(dec)
    else:
        text = digraph_to_dot(load_graph(path))
    _write(text, cfg.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dicowidth", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", help="write to this file (directory for generate)")
    common.add_argument("--oracle-cap", type=int, default=DEFAULT_CAP)
    common.add_argument("--recognizer-cap", type=int, default=512)
    common.add_argument("--format", dest="fmt", choices=("text", "structured", "dot"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("width", parents=[common], help="dpw and dtw of expressions or edge lists")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--per-node", action="store_true", help="list every expression node")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("decompose", parents=[common], help="certified decomposition of an expression")
    p.add_argument("inputs", nargs=1)
    p.add_argument("--kind", choices=("path", "tree"), default="path")

    p = sub.add_parser("verify", parents=[common], help="check a decomposition against a graph")
    p.add_argument("inputs", nargs=2, metavar=("GRAPH", "DECOMPOSITION"))

    p = sub.add_parser("oracle", parents=[common], help="exact dpw by exhaustive search")
    p.add_argument("inputs", nargs=1)

    p = sub.add_parser("recognize", parents=[common], help="di-co-tree of a digraph, if one exists")
    p.add_argument("inputs", nargs=1)

    p = sub.add_parser("condense", parents=[common], help="strong components and directed-union expression")
    p.add_argument("inputs", nargs=1)

    p = sub.add_parser("generate", parents=[common], help="seeded random expression corpus")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--min-size", type=int, default=1)
    p.add_argument("--max-size", type=int, default=8)
    p.add_argument("--mix", help="operator weights, e.g. '+:2,*:1,/:1' or 'du:2,*:1'")
    p.add_argument("--extended", action="store_true", help="directed unions with random cross arcs")
    p.add_argument("--max-arity", type=int, default=3)

    p = sub.add_parser("export-dot", parents=[common], help="DOT for a graph or decomposition file")
    p.add_argument("inputs", nargs=1)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.oracle_cap < 1 or args.recognizer_cap < 1:
        parser.error("caps must be positive")
    kind = getattr(args, "kind", "path")
    if args.command == "width" and args.per_node:
        kind = "nodes"
    cfg = RunConfig(
        command=args.command,
        inputs=tuple(getattr(args, "inputs", ()) or ()),
        output=args.output,
        oracle_cap=args.oracle_cap,
        recognizer_cap=args.recognizer_cap,
        seed=getattr(args, "seed", 0),
        fmt=args.fmt,
        kind=kind,
    )
    try:
        if cfg.command == "width":
            return cmd_width(cfg, args.jobs)
        if cfg.command == "generate":
            return cmd_generate(cfg, args)
        handler = {
            "decompose": cmd_decompose,
            "verify": cmd_verify,
            "oracle": cmd_oracle,
            "recognize": cmd_recognize,
            "condense": cmd_condense,
            "export-dot": cmd_export_dot,
        }[cfg.command]
        return handler(cfg)
    except Failure as exc:
        sys.stderr.write(f"error: {exc}\n")
        return exc.code
    except CapExceeded as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_CAP
    except (OSError, ExprError, GraphError, DecompositionFormatError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
