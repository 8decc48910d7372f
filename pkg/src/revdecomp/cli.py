"""Command-line front end.

Exit codes: 0 success, 1 semantic mismatch, 2 usage or parse error,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import bounds
from .baselines import esop_young_synthesize, mmd_synthesize, young_decompose
from .boolfn import TruthTable, anf_from_tt, tt_from_anf
from .circuit import Circuit, Permutation, permutation_of, verify_realizes
from .formats import (
    FormatError,
    as_truth_table,
    parse_function_spec,
    parse_permutation_spec,
    read_real,
    write_function_spec,
    write_real,
)
from .synth_decomp import REPORT_HEADER, default_plan, implementation_bound, synthesize_decomp

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3
METHODS = ("decomp", "mmd", "esop-young")
BENCH_HEADER = ("method", "n", "trial", "gates", "bound", "within_bound", "lines", "ancilla", "garbage", "verified")
PERM_REPORT_HEADER = ("method", "n", "gates", "bound", "within_bound")


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


@dataclass
class RunConfig:
    command: str
    method: str | None = None
    n_range: tuple[int, int] | None = None
    k: int | None = None
    trials: int = 100
    exhaustive: bool = False
    seed: int = 0
    workers: int = 1
    inputs: tuple[str, ...] = ()
    out: str | None = None
    output_name: str | None = None


def _read(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}", EXIT_USAGE) from None


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _spec_kind(text: str) -> str:
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            return line.split()[0]
    return ""


def _load_spec(path: str):
    text = _read(path)
    kind = _spec_kind(text)
    try:
        if kind == "vars":
            return parse_function_spec(text)
        if kind == "perm":
            return parse_permutation_spec(text)
    except FormatError as exc:
        raise CliError(f"{path}: {exc}", EXIT_USAGE) from None
    raise CliError(f"{path}: expected a 'vars' or 'perm' spec", EXIT_USAGE)


def _csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _output_line(c: Circuit, name: str | None) -> int:
    tagged = [j for j, ln in enumerate(c.lines) if ln.output is not None]
    if name is not None:
        hits = [j for j in tagged if c.lines[j].output == name]
        if len(hits) != 1:
            raise CliError(f"no unique output named {name!r}", EXIT_USAGE)
        return hits[0]
    if len(tagged) == 1:
        return tagged[0]
    hits = [j for j in tagged if c.lines[j].output == "f"]
    if len(hits) == 1:
        return hits[0]
    raise CliError("cannot tell which line is the output; pass --output", EXIT_USAGE)


def _first_difference(a: Permutation, b: Permutation) -> int | None:
    for x, (u, v) in enumerate(zip(a.images, b.images)):
        if u != v:
            return x
    return None


# -- commands ---------------------------------------------------------------


def cmd_convert(cfg: RunConfig) -> int:
    spec = _load_spec(cfg.inputs[0])
    if isinstance(spec, Permutation):
        raise CliError("convert expects a function spec", EXIT_USAGE)
    other = anf_from_tt(spec) if isinstance(spec, TruthTable) else tt_from_anf(spec)
    _emit(write_function_spec(other), cfg.out)
    return EXIT_OK


def _perm_bound(method: str, n: int) -> int | None:
    if method == "mmd":
        return bounds.bound_mmd_mct(n)
    return bounds.bound_esop_total(n)


def _within(gates: int, bound: int | None):
    return "" if bound is None else gates <= bound


def _synthesize_perm(method: str, p: Permutation) -> Circuit:
    return mmd_synthesize(p) if method == "mmd" else esop_young_synthesize(p)


def cmd_synth(cfg: RunConfig) -> int:
    spec = _load_spec(cfg.inputs[0])
    if cfg.method == "decomp":
        if isinstance(spec, Permutation):
            raise CliError("method decomp needs a single-output function spec", EXIT_USAGE)
        f = as_truth_table(spec)
        k = cfg.k
        try:
            plan = default_plan(f.n, k)
        except ValueError as exc:
            raise CliError(str(exc), EXIT_USAGE) from None
        circuit, report = synthesize_decomp(f, plan)
        text = write_real(circuit)
        back = read_real(text)
        check = verify_realizes(back, f, _output_line(back, "f"))
        if not check.ok:
            raise CliError("synthesized circuit failed re-verification", EXIT_INTERNAL)
        report_text = _csv(REPORT_HEADER, [report.csv_row()])
    else:
        if not isinstance(spec, Permutation):
            raise CliError(f"method {cfg.method} needs a permutation spec", EXIT_USAGE)
        circuit = _synthesize_perm(cfg.method, spec)
        text = write_real(circuit)
        if permutation_of(read_real(text)) != spec:
            raise CliError("synthesized circuit failed re-verification", EXIT_INTERNAL)
        bound = _perm_bound(cfg.method, spec.n)
        gates = len(circuit.gates)
        report_text = _csv(
            PERM_REPORT_HEADER,
            [[cfg.method, spec.n, gates, "" if bound is None else bound, _within(gates, bound)]],
        )
    if cfg.out is None or cfg.out == "-":
        sys.stdout.write(text)
        sys.stderr.write(report_text)
    else:
        _emit(text, cfg.out)
        sys.stdout.write(report_text)
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    circuit_path, spec_path = cfg.inputs
    try:
        circuit = read_real(_read(circuit_path))
    except FormatError as exc:
        raise CliError(f"{circuit_path}: {exc}", EXIT_USAGE) from None
    spec = _load_spec(spec_path)
    if isinstance(spec, Permutation):
        if circuit.width != spec.n or any(ln.is_constant for ln in circuit.lines):
            print(f"correct=false\nreason=circuit width {circuit.width} does not match a {spec.n}-line permutation")
            return EXIT_MISMATCH
        got = permutation_of(circuit)
        diff = _first_difference(got, spec)
        print(f"correct={str(diff is None).lower()}\ngate_count={len(circuit.gates)}\nline_count={circuit.width}")
        if diff is not None:
            print(f"first_mismatch={diff} expected={spec(diff)} got={got(diff)}")
            return EXIT_MISMATCH
        return EXIT_OK
    f = as_truth_table(spec)
    out_line = _output_line(circuit, cfg.output_name)
    try:
        report = verify_realizes(circuit, f, out_line)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_USAGE) from None
    print(report.as_text())
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_bounds(cfg: RunConfig) -> int:
    lo, hi = cfg.n_range or (2, 16)
    try:
        rows = bounds.fig3_table(lo, hi)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_USAGE) from None
    _emit(bounds.rows_to_csv(rows), cfg.out)
    return EXIT_OK


# -- bench ------------------------------------------------------------------


def trial_rng(seed: int, n: int, trial: int) -> np.random.Generator:
    """Independent stream per (seed, n, trial), so any trial can be replayed alone."""
    return np.random.default_rng([seed, n, trial])


def _bench_decomp(args) -> list:
    n, k, trial, table = args
    f = TruthTable.from_int(n, table)
    circuit, report = synthesize_decomp(f, default_plan(n, k))
    check = verify_realizes(circuit, f, report.output_line)
    bound = implementation_bound(n, report.k)
    gates = report.gates_measured
    return ["decomp", n, trial, gates, bound, gates <= bound, report.lines, report.ancilla, report.garbage, check.ok]


def _bench_perm(args) -> list:
    method, n, trial, images = args
    p = Permutation(n, images)
    circuit = _synthesize_perm(method, p)
    ok = permutation_of(circuit) == p and circuit.width == n
    if method == "esop-young":
        ok = ok and len(young_decompose(p)) <= 2 * n - 1
    bound = _perm_bound(method, n)
    gates = len(circuit.gates)
    return [method, n, trial, gates, "" if bound is None else bound, _within(gates, bound), circuit.width, 0, 0, ok]


def _bench_jobs(cfg: RunConfig, n: int):
    if cfg.method == "decomp":
        if cfg.exhaustive:
            if n > 4:
                raise CliError("exhaustive decomp sweep is limited to n <= 4", EXIT_USAGE)
            return [(n, cfg.k, t, t) for t in range(1 << (1 << n))]
        jobs = []
        for t in range(cfg.trials):
            bits = trial_rng(cfg.seed, n, t).integers(0, 2, size=1 << n)
            jobs.append((n, cfg.k, t, TruthTable(n, bits).to_int()))
        return jobs
    if cfg.exhaustive:
        if n > 3:
            raise CliError("exhaustive permutation sweep is limited to n <= 3", EXIT_USAGE)
        return [(cfg.method, n, t, perm) for t, perm in enumerate(itertools.permutations(range(1 << n)))]
    return [
        (cfg.method, n, t, tuple(trial_rng(cfg.seed, n, t).permutation(1 << n).tolist()))
        for t in range(cfg.trials)
    ]


def cmd_bench(cfg: RunConfig) -> int:
    if cfg.n_range is None:
        raise CliError("bench needs --n", EXIT_USAGE)
    worker = _bench_decomp if cfg.method == "decomp" else _bench_perm
    rows = []
    for n in range(cfg.n_range[0], cfg.n_range[1] + 1):
        if cfg.method == "decomp" and cfg.k is not None and not 0 <= cfg.k < n:
            raise CliError(f"k={cfg.k} invalid for n={n}", EXIT_USAGE)
        jobs = _bench_jobs(cfg, n)
        if cfg.workers > 1:
            with ProcessPoolExecutor(cfg.workers) as pool:
                rows.extend(pool.map(worker, jobs, chunksize=max(1, len(jobs) // (4 * cfg.workers))))
        else:
            rows.extend(map(worker, jobs))
    ratios = [r[3] / r[4] for r in rows if r[4] not in ("", 0)]
    failures = sum(not r[-1] for r in rows) + sum(r[5] is False for r in rows)
    text = _csv(BENCH_HEADER, rows)
    max_ratio = f"{max(ratios):.6f}" if ratios else ""
    text += f"# trials={len(rows)} failures={failures} max_ratio={max_ratio}\n"
    _emit(text, cfg.out)
    return EXIT_INTERNAL if failures else EXIT_OK


# -- argument parsing -------------------------------------------------------


def _n_range(text: str) -> tuple[int, int]:
    try:
        if "-" in text:
            lo, hi = (int(v) for v in text.split("-", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO-HI, got {text!r}") from None
    if lo > hi or lo < 1:
        raise argparse.ArgumentTypeError(f"bad range {text!r}")
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="revdecomp", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", help="switch a function spec between tt and anf form")
    p.add_argument("spec")
    p.add_argument("--out")

    p = sub.add_parser("synth", help="synthesize a circuit and write it as REAL")
    p.add_argument("spec")
    p.add_argument("--method", choices=METHODS, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--out")
    p.add_argument("--format", choices=["csv"], default="csv")

    p = sub.add_parser("verify", help="check a REAL circuit against a function or permutation spec")
    p.add_argument("circuit")
    p.add_argument("spec")
    p.add_argument("--output", dest="output_name", help="output label of the line to check")

    p = sub.add_parser("bounds", help="tabulate closed-form gate-count bounds as CSV")
    p.add_argument("--n", type=_n_range, default=(2, 16))
    p.add_argument("--out")
    p.add_argument("--format", choices=["csv"], default="csv")

    p = sub.add_parser("bench", help="run verified synthesis sweeps")
    p.add_argument("--method", choices=METHODS, required=True)
    p.add_argument("--n", type=_n_range, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out")
    p.add_argument("--format", choices=["csv"], default="csv")
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    if ns.command == "verify":
        inputs = (ns.circuit, ns.spec)
    elif hasattr(ns, "spec"):
        inputs = (ns.spec,)
    else:
        inputs = ()
    return RunConfig(
        command=ns.command,
        method=getattr(ns, "method", None),
        n_range=getattr(ns, "n", None),
        k=getattr(ns, "k", None),
        trials=getattr(ns, "trials", 100),
        exhaustive=getattr(ns, "exhaustive", False),
        seed=getattr(ns, "seed", 0),
        workers=getattr(ns, "workers", 1),
        inputs=inputs,
        out=getattr(ns, "out", None),
        output_name=getattr(ns, "output_name", None),
    )


COMMANDS = {
    "convert": cmd_convert,
    "synth": cmd_synth,
    "verify": cmd_verify,
    "bounds": cmd_bounds,
    "bench": cmd_bench,
}


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    cfg = config_from_args(ns)
    try:
        return COMMANDS[cfg.command](cfg)
    except CliError as exc:
        print(f"revdecomp: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
