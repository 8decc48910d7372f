from pathlib import Path

import pytest

from oracles import combine_circuit
from revdecomp.boolfn import Anf, TruthTable, parse_anf
from revdecomp.circuit import Circuit, Line, Permutation, permutation_of
from revdecomp.formats import (
    FormatError,
    parse_function_spec,
    parse_permutation_spec,
    read_real,
    write_function_spec,
    write_permutation_spec,
    write_real,
)
from revdecomp.synth_decomp import synthesize_decomp

DATA = Path(__file__).parent / "data"
GOLDEN = sorted(DATA.glob("*.real"))
GOLDEN = [p for p in GOLDEN if p.name != "truncated.real"]


def canonical(text):
    return [" ".join(line.split()) for line in text.splitlines() if line.strip()]


@pytest.mark.parametrize("path", GOLDEN, ids=lambda p: p.name)
def test_real_golden_round_trip(path):
    text = path.read_text()
    assert canonical(write_real(read_real(text))) == canonical(text)


def test_combine_serialization():
    text = write_real(combine_circuit())
    body = text.split(".begin\n")[1].split(".end")[0].strip()
    assert body == "t3 x1 f1 f0"
    assert read_real(text) == combine_circuit()


def test_constants_header():
    text = "\n".join([
        ".numvars 3",
        ".variables a b c",
        ".constants 0--",
        ".begin",
        "t2 b a",
        ".end",
    ])
    c = read_real(text)
    assert [ln.constant for ln in c.lines] == [0, None, None]


def test_negative_controls_parse():
    c = read_real((DATA / "mixed_polarity.real").read_text())
    gate = c.gates[6]
    assert gate.target == 4 and gate.pos_controls == {1, 3} and gate.neg_controls == {0, 2}
    assert c.lines[3].constant == 0 and c.lines[4].constant == 1 and c.lines[4].garbage


def test_synthesized_circuit_round_trip():
    c, _ = synthesize_decomp(parse_anf(4, "x1*x2*x3*x4 + x2*x4 + x3 + 1"))
    back = read_real(write_real(c))
    assert back == c
    assert permutation_of(back) == permutation_of(c)


@pytest.mark.parametrize(
    "text, lineno, fragment",
    [
        (".numvars 2\n.variables a\n.begin\n.end\n", 2, ".numvars is 2"),
        (".numvars 1\n.variables a\n.begin\nf2 a a\n.end\n", 4, "unknown gate tag"),
        (".numvars 2\n.variables a b\n.begin\nt3 a b\n.end\n", 4, "expects 3 operands"),
        (".numvars 2\n.variables a b\n.begin\nt2 a z\n.end\n", 4, "unknown target"),
        (".numvars 2\n.variables a b\n.constants 0\n.begin\n.end\n", 3, "malformed .constants"),
        (".numvars x\n.variables a\n.begin\n.end\n", 1, "malformed .numvars"),
        (".bogus\n", 1, "unexpected header"),
        (".numvars 1\n.variables a\n.begin\n.end\nt1 a\n", 5, "after .end"),
    ],
)
def test_real_errors_carry_line_numbers(text, lineno, fragment):
    with pytest.raises(FormatError) as info:
        read_real(text)
    assert info.value.lineno == lineno
    assert fragment in str(info.value)


def test_truncated_real():
    with pytest.raises(FormatError):
        read_real((DATA / "truncated.real").read_text())


def test_write_rejects_bad_names():
    with pytest.raises(ValueError):
        write_real(Circuit((Line("-a"),)))


def test_function_spec_round_trip():
    f = parse_function_spec((DATA / "running_example.fn").read_text())
    assert isinstance(f, Anf) and f == parse_anf(3, "x1*x2*x3 + x1*x2 + x2*x3 + x1 + x2 + 1")
    assert parse_function_spec(write_function_spec(f)) == f
    tt = parse_function_spec((DATA / "and2_tt.fn").read_text())
    assert tt == TruthTable(2, [0, 0, 0, 1])
    assert write_function_spec(tt) == "vars 2\ntt 0x8\n"
    # least significant hex digit last
    assert parse_function_spec("vars 3\ntt 51\n") == TruthTable.from_int(3, 0x51)


@pytest.mark.parametrize(
    "text",
    ["", "vars\n", "vars 2\n", "vars 2\nxx 1\n", "vars 2\ntt 0x1ff\n", "vars 2\nanf x3\n", "vars 2\ntt 1\ntt 1\n"],
)
def test_function_spec_errors(text):
    with pytest.raises(FormatError):
        parse_function_spec(text)


def test_permutation_spec():
    p = parse_permutation_spec((DATA / "cnot2.perm").read_text())
    assert p == Permutation(2, (0, 3, 2, 1))
    assert parse_permutation_spec(write_permutation_spec(p)) == p
    for bad in ["perm 2\n0 1 2\n", "perm 2\n0 0 1 2\n", "vars 2\n", "perm 1\n0 x\n"]:
        with pytest.raises(FormatError):
            parse_permutation_spec(bad)
