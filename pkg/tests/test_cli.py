"""Command-line wire contract: formats, exit codes, and file grammars."""

from __future__ import annotations

import subprocess
import sys

import pytest

from chromaflow.cli import format_poly, parse_gr_file, parse_vjt_file, run
from chromaflow.polyring import IntPoly, ZERO


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


VJT_SQUARE = """# two joined ends of a path
vjt 4
edge 1 2
edge 2 3
edge 3 4
join 1 1
join 3 1
"""

GR_C4 = """p edge 4 4
e 1 2
e 2 3
e 3 4
e 4 1
"""


def test_format_poly():
    assert format_poly(ZERO) == "poly 0"
    assert format_poly(IntPoly((0, -2, 1))) == "poly 0 -2 1"


def test_chromatic_tree(tmp_path, capsys):
    path = write(tmp_path, "square.vjt", VJT_SQUARE)
    code, out, err = invoke(capsys, "chromatic", "tree", path)
    assert code == 0 and err == ""
    # (t-1) * ((t-1)^4 + (t-1)): bridge factor times a 4-cycle
    assert out == "poly 0 3 -9 10 -5 1\n"


def test_chromatic_tree_eval(tmp_path, capsys):
    path = write(tmp_path, "square.vjt", VJT_SQUARE)
    code, out, err = invoke(capsys, "chromatic", "tree", path, "--eval", "2,3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("poly ")
    assert lines[1] == "eval 2 2"
    assert lines[2] == "eval 3 36"


def test_chromatic_clique(capsys):
    code, out, _ = invoke(capsys, "chromatic", "clique", "--n", "3", "--join", "1,2")
    assert code == 0
    assert out == "poly 0 -4 8 -5 1\n"  # t(t-1)(t-2)^2
    # repeated vertices are multiplicities; chromatically inert
    code, out2, _ = invoke(
        capsys, "chromatic", "clique", "--n", "3", "--join", "1,2,2"
    )
    assert code == 0 and out2 == out


def test_chromatic_wheel(capsys):
    code, out, _ = invoke(capsys, "chromatic", "wheel", "--phi", "1,1,1,1")
    assert code == 0
    assert out == "poly 0 14 -31 24 -8 1\n"  # t((t-2)^4 + (t-2))


def test_flow_wheel(capsys):
    code, out, _ = invoke(capsys, "flow", "wheel", "--phi", "1,1,1,1")
    assert code == 0
    assert out == "poly 14 -31 24 -8 1\n"


def test_dual_phi_golden(capsys):
    code, out, _ = invoke(
        capsys, "dual", "phi", "--phi", "1,0,1,2,0,0,1,4,0,1,1,0,3,0,0,0"
    )
    assert code == 0
    assert out == "phi 2,1,0,3,1,0,0,0,2,1,2,0,0,4\n"


def test_flow_outerplanar_and_oracle(tmp_path, capsys):
    path = write(tmp_path, "c4.gr", GR_C4)
    code, out, _ = invoke(capsys, "flow", "outerplanar", path)
    assert code == 0 and out == "poly -1 1\n"
    code, out, _ = invoke(capsys, "oracle", "flow", path)
    assert code == 0 and out == "poly -1 1\n"
    code, out, _ = invoke(capsys, "oracle", "chromatic", path)
    assert code == 0 and out == "poly 0 -3 6 -4 1\n"


def test_flow_of_tree_is_zero(tmp_path, capsys):
    path = write(tmp_path, "path.gr", "p edge 3 2\ne 1 2\ne 2 3\n")
    code, out, _ = invoke(capsys, "flow", "outerplanar", path)
    assert code == 0
    assert out == "poly 0\n"


def test_domain_error_exit_1(capsys):
    code, out, err = invoke(capsys, "dual", "phi", "--phi", "0,0")
    assert code == 1 and out == ""
    assert err.startswith("error: NoSpokes: ")
    assert err.count("\n") == 1


def test_not_outerplanar_exit_1(tmp_path, capsys):
    k4 = "p edge 4 6\n" + "".join(
        f"e {i} {j}\n" for i in range(1, 5) for j in range(i + 1, 5)
    )
    path = write(tmp_path, "k4.gr", k4)
    code, out, err = invoke(capsys, "flow", "outerplanar", path)
    assert code == 1
    assert err.startswith("error: NotOuterplanar: ")


def test_parse_error_exit_2(tmp_path, capsys):
    code, _, err = invoke(capsys, "chromatic", "wheel", "--phi", "1,x")
    assert code == 2 and err.startswith("error: ParseError: ")
    code, _, err = invoke(capsys, "chromatic", "bogus")
    assert code == 2 and err.startswith("error: ParseError: ")
    code, _, err = invoke(capsys, "chromatic", "tree", str(tmp_path / "missing.vjt"))
    assert code == 2 and err.startswith("error: ParseError: ")


def test_vjt_file_errors(tmp_path, capsys):
    bad = write(tmp_path, "bad.vjt", "vjt 3\nedge 1 2\n")  # one edge short
    code, _, err = invoke(capsys, "chromatic", "tree", bad)
    assert code == 2 and "error: ParseError:" in err
    bad = write(tmp_path, "bad2.vjt", "vjt 2\nedge 1 5\n")
    code, _, err = invoke(capsys, "chromatic", "tree", bad)
    assert code == 2
    bad = write(tmp_path, "bad3.vjt", "vjt 2\nedge 1 2\nnonsense\n")
    code, _, err = invoke(capsys, "chromatic", "tree", bad)
    assert code == 2 and ":3:" in err  # line-numbered message


def test_gr_file_errors(tmp_path, capsys):
    bad = write(tmp_path, "bad.gr", "p edge 2 1\ne 1 2\ne 1 2\n")  # extra edge line
    code, _, err = invoke(capsys, "flow", "outerplanar", bad)
    assert code == 2 and "error: ParseError:" in err
    bad = write(tmp_path, "bad2.gr", "e 1 2\n")  # missing header
    code, _, err = invoke(capsys, "flow", "outerplanar", bad)
    assert code == 2 and ":1:" in err


def test_parse_helpers_roundtrip(tmp_path):
    t = parse_vjt_file(write(tmp_path, "t.vjt", VJT_SQUARE))
    assert t.n == 4 and t.mult == {0: 1, 2: 1}
    g = parse_gr_file(write(tmp_path, "g.gr", GR_C4))
    assert g.n == 4 and g.m == 4
    loops = parse_gr_file(write(tmp_path, "l.gr", "p edge 1 2\ne 1 1\ne 1 1\n"))
    assert loops.m == 2


def test_join_lines_sum(tmp_path, capsys):
    doubled = VJT_SQUARE + "join 1 2\n"
    path = write(tmp_path, "sum.vjt", doubled)
    code, out, _ = invoke(capsys, "chromatic", "tree", path)
    assert code == 0
    # multiplicity 3 at vertex 1 is chromatically equivalent to 1
    assert out == "poly 0 3 -9 10 -5 1\n"


def test_byte_determinism(tmp_path, capsys):
    path = write(tmp_path, "c4.gr", GR_C4)
    outs = set()
    for _ in range(3):
        _, out, _ = invoke(capsys, "oracle", "chromatic", path, "--eval", "2,3,4")
        outs.add(out)
    assert len(outs) == 1


def test_module_entrypoint_subprocess(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "chromaflow.cli", "chromatic", "wheel",
         "--phi", "1,1,1,1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "poly 0 14 -31 24 -8 1\n"
    proc = subprocess.run(
        [sys.executable, "-m", "chromaflow.cli", "dual", "phi", "--phi", "0"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 1
    assert proc.stderr.startswith("error: NoSpokes: ")
