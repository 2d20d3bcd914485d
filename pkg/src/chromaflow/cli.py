"""Command-line front end.

Subcommands mirror the library: chromatic tree/clique/wheel, flow
outerplanar/wheel, dual phi, oracle chromatic/flow.  Polynomials print
as one line of ascending decimal coefficients (`poly c0 c1 ... cd`,
zero polynomial as `poly 0`); `--eval t1,t2,...` appends exact
integer evaluations.  Exit codes: 0 ok, 1 domain error, 2 parse or
usage error.  Identical inputs give byte-identical output.
"""

from __future__ import annotations

import argparse
import sys

from .errors import ChromaflowError, ParseError
from .multigraph import MultiGraph
from .oracle import oracle_chromatic, oracle_flow
from .outerplanar import flow_outerplanar
from .polyring import IntPoly
from .vjtree import VertexJoinTree, chromatic_vjtree
from .wheels import (
    PhiString,
    chromatic_clique_join,
    chromatic_wheel_telescoped,
    flow_wheel,
    phi_dual,
)

if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(2_000_000)


class _Parser(argparse.ArgumentParser):
    # argparse's default error handler prints a usage block; the wire
    # contract wants a single machine-parsable line on stderr.
    def error(self, message):
        raise ParseError(message)


def _int_list(text: str, what: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok != ""]
    except ValueError:
        raise ParseError(f"{what} must be a comma-separated integer list, got {text!r}")


def parse_vjt_file(path: str) -> VertexJoinTree:
    """`vjt n` header, n-1 `edge u v` lines, `join v mult` lines.

    Vertices are 1-indexed; `#` starts a comment; repeated join lines
    for one vertex sum their multiplicities.
    """
    n = None
    edges: list[tuple[int, int]] = []
    mult: dict[int, int] = {}
    try:
        fh = open(path, encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror or exc}")
    with fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            tok = line.split()
            try:
                if tok[0] == "vjt" and len(tok) == 2 and n is None:
                    n = int(tok[1])
                elif tok[0] == "edge" and len(tok) == 3 and n is not None:
                    edges.append((int(tok[1]) - 1, int(tok[2]) - 1))
                elif tok[0] == "join" and len(tok) == 3 and n is not None:
                    v, m = int(tok[1]) - 1, int(tok[2])
                    if m < 1:
                        raise ParseError(f"{path}:{lineno}: join multiplicity must be >= 1")
                    mult[v] = mult.get(v, 0) + m
                else:
                    raise ParseError(f"{path}:{lineno}: unrecognized line {line!r}")
            except ValueError:
                raise ParseError(f"{path}:{lineno}: bad integer in {line!r}")
    if n is None:
        raise ParseError(f"{path}: missing 'vjt <n>' header")
    if len(edges) != n - 1:
        raise ParseError(f"{path}: expected {n - 1} edge lines, found {len(edges)}")
    try:
        return VertexJoinTree(n, tuple(edges), mult)
    except ChromaflowError as exc:
        raise ParseError(f"{path}: {exc}")


def parse_gr_file(path: str) -> MultiGraph:
    """DIMACS-like: `p edge n m` header then m `e u v` lines, 1-indexed."""
    header = None
    edges: list[tuple[int, int]] = []
    try:
        fh = open(path, encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror or exc}")
    with fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            tok = line.split()
            try:
                if tok[0] == "p" and len(tok) == 4 and tok[1] == "edge" and header is None:
                    header = (int(tok[2]), int(tok[3]))
                elif tok[0] == "e" and len(tok) == 3 and header is not None:
                    edges.append((int(tok[1]) - 1, int(tok[2]) - 1))
                else:
                    raise ParseError(f"{path}:{lineno}: unrecognized line {line!r}")
            except ValueError:
                raise ParseError(f"{path}:{lineno}: bad integer in {line!r}")
    if header is None:
        raise ParseError(f"{path}: missing 'p edge <n> <m>' header")
    n, m = header
    if len(edges) != m:
        raise ParseError(f"{path}: header promises {m} edges, found {len(edges)}")
    try:
        return MultiGraph(n, edges)
    except ChromaflowError as exc:
        raise ParseError(f"{path}: {exc}")


def format_poly(p: IntPoly) -> str:
    if p.is_zero():
        return "poly 0"
    return "poly " + " ".join(str(c) for c in p.coeffs)


_PARSER = None


def _build_parser() -> _Parser:
    parser = _Parser(prog="chromaflow", description=__doc__)
    common = _Parser(add_help=False)
    common.add_argument("--eval", dest="eval_points", metavar="t1,t2,...",
                        help="also evaluate the polynomial at these integers")

    sub = parser.add_subparsers(dest="command", required=True)

    chromatic = sub.add_parser("chromatic", help="chromatic polynomials")
    csub = chromatic.add_subparsers(dest="subcommand", required=True)
    p = csub.add_parser("tree", parents=[common],
                        help="generalized vertex join tree from a .vjt file")
    p.add_argument("file")
    p = csub.add_parser("clique", parents=[common], help="clique joined to an apex")
    p.add_argument("--n", type=int, required=True, metavar="N")
    p.add_argument("--join", default="", metavar="v1,v2,...",
                   help="1-indexed joined vertices; repeats add multiplicity")
    p = csub.add_parser("wheel", parents=[common], help="generalized wheel from a phi-string")
    p.add_argument("--phi", required=True, metavar="a1,a2,...")

    flow = sub.add_parser("flow", help="flow polynomials")
    fsub = flow.add_subparsers(dest="subcommand", required=True)
    p = fsub.add_parser("outerplanar", parents=[common],
                        help="outerplanar multigraph from a .gr file")
    p.add_argument("file")
    p = fsub.add_parser("wheel", parents=[common], help="generalized wheel from a phi-string")
    p.add_argument("--phi", required=True, metavar="a1,a2,...")

    dual = sub.add_parser("dual", help="duality transforms")
    dsub = dual.add_subparsers(dest="subcommand", required=True)
    p = dsub.add_parser("phi", parents=[common], help="phi-string of the dual wheel")
    p.add_argument("--phi", required=True, metavar="a1,a2,...")

    oracle = sub.add_parser("oracle", help="deletion-contraction reference oracle")
    osub = oracle.add_subparsers(dest="subcommand", required=True)
    for name in ("chromatic", "flow"):
        p = osub.add_parser(name, parents=[common])
        p.add_argument("file")
        p.add_argument("--force", action="store_true",
                       help="override the size guard (may take very long)")

    return parser


def _phi_arg(text: str) -> PhiString:
    return PhiString(tuple(_int_list(text, "--phi")))


def _dispatch(args) -> list[str]:
    cmd = (args.command, args.subcommand)
    if cmd == ("chromatic", "tree"):
        poly = chromatic_vjtree(parse_vjt_file(args.file))
    elif cmd == ("chromatic", "clique"):
        mult: dict[int, int] = {}
        for v in _int_list(args.join, "--join"):
            mult[v - 1] = mult.get(v - 1, 0) + 1
        poly = chromatic_clique_join(args.n, mult)
    elif cmd == ("chromatic", "wheel"):
        poly = chromatic_wheel_telescoped(_phi_arg(args.phi))
    elif cmd == ("flow", "outerplanar"):
        poly = flow_outerplanar(parse_gr_file(args.file))
    elif cmd == ("flow", "wheel"):
        poly = flow_wheel(_phi_arg(args.phi))
    elif cmd == ("dual", "phi"):
        out = phi_dual(_phi_arg(args.phi))
        return ["phi " + ",".join(str(a) for a in out.values)]
    elif cmd == ("oracle", "chromatic"):
        poly = oracle_chromatic(parse_gr_file(args.file), force=args.force, memoize=True)
    elif cmd == ("oracle", "flow"):
        poly = oracle_flow(parse_gr_file(args.file), force=args.force, memoize=True)
    else:  # pragma: no cover - argparse enforces the command set
        raise ParseError(f"unknown command {cmd}")

    lines = [format_poly(poly)]
    if getattr(args, "eval_points", None):
        for t in _int_list(args.eval_points, "--eval"):
            lines.append(f"eval {t} {poly.evaluate(t)}")
    return lines


def run(argv: list[str]) -> int:
    """Execute one command line; returns the exit code."""
    global _PARSER
    if _PARSER is None:
        _PARSER = _build_parser()
    try:
        args = _PARSER.parse_args(argv)
        for line in _dispatch(args):
            print(line)
        return 0
    except ParseError as exc:
        print(f"error: ParseError: {exc}", file=sys.stderr)
        return 2
    except ChromaflowError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
