"""Command-line front end.

Subcommands: ``gen`` (emit RCA/KSA netlist JSON), ``stats`` (chain-error
table and exact statistics at a read time, optionally swept over T),
``verify`` (conservativeness, model assumptions, fast-vs-oracle
equality), ``trace`` (time table of one addition), ``chains`` (carry
chains of a pair), ``ec`` (chain-error table only) and ``sweep``
(statistics over a range of read times, CSV-friendly).

Exit code 0 means no errors and no failed verification.  All sampling
takes an explicit ``--seed`` (default 0) so reports are reproducible.
The width gate for exhaustive oracles honors ``PSEUDOADDER_ORACLE_LIMIT``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .analysis import check_conservative, ec_table_sweep, extract_ec_table, verify_assumptions
from .chains import detect_chains
from .generators import KsaDelays, generate_ksa, generate_rca
from .maxerror import max_abs_error
from .model import ChainErrorTable, InputPair
from .netlist import Netlist, as_delay
from .sim import Time, read_output, simulate
from .stats import (
    analyze_table,
    er_avg_fast,
    mse_fast,
    oracle_limit,
    sae_oracle_chains,
    sae_oracle_simulate,
)
from .sweep import PairSweep
from .tables import random_realizable_table


def _parse_time(text: str) -> Time:
    return as_delay(text)


def _parse_delay_list(spec: str, count: int, what: str) -> list:
    """uniform:<d>, a comma list, or file:<path> with a JSON list."""
    if spec.startswith("uniform:"):
        return [as_delay(spec.split(":", 1)[1])] * count
    if spec.startswith("file:"):
        with open(spec.split(":", 1)[1]) as fh:
            values = json.load(fh)
        return [as_delay(v) for v in values]
    values = [as_delay(part) for part in spec.split(",")]
    if len(values) != count:
        raise ValueError(f"{what}: expected {count} delays, got {len(values)}")
    return values


def _load_netlist(path: str) -> Netlist:
    if path == "-":
        return Netlist.from_json(sys.stdin.read())
    with open(path) as fh:
        return Netlist.from_json(fh.read())


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _rows_to_csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()))
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def _stats_row(t: Time, ec: ChainErrorTable) -> dict:
    report = analyze_table(ec)
    mse = report.mse if report.mse is not None else Fraction(0)
    return {
        "T": str(t),
        "sae": report.sae,
        "er_avg_num": report.er_avg.numerator,
        "er_avg_den": report.er_avg.denominator,
        "er_avg": report.er_avg_float,
        "mse_num": mse.numerator,
        "mse_den": mse.denominator,
        "mse": float(mse),
        "max_abs_error": report.max_abs_error,
    }


def _parse_t_range(spec: str, net: Netlist) -> list[Time]:
    """``<start>..<stop>[:<step>]``; ``quiescence`` resolves the stop."""
    body, _, step_text = spec.partition(":")
    start_text, sep, stop_text = body.partition("..")
    if not sep:
        raise ValueError(f"bad T range {spec!r}, expected start..stop[:step]")
    start = _parse_time(start_text)
    if stop_text == "quiescence":
        if net.n <= oracle_limit():
            stop = PairSweep(net, keep=set(net.outputs.values())).quiescence_time()
        else:
            # too wide to sweep every pair: bound by the full-ripple probe
            ripple = InputPair(net.n, (1 << net.n) - 1, 1)
            stop = simulate(net, ripple).quiescence_time()
    else:
        stop = _parse_time(stop_text)
    step = _parse_time(step_text) if step_text else 1
    if step <= 0:
        raise ValueError("step must be positive")
    times: list[Time] = []
    t = start
    while t <= stop:
        times.append(t)
        t = t + step
    return times


def _sweep_rows(net: Netlist, times: list[Time], jobs: int) -> list[dict]:
    if jobs > 1 and len(times) > 1:
        chunks = [times[k::jobs] for k in range(jobs)]
        payload = net.to_json()
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(
                _sweep_worker, [(payload, [str(t) for t in chunk]) for chunk in chunks]
            )
        rows = [row for part in parts for row in part]
        rows.sort(key=lambda r: as_delay(r["T"]))
        return rows
    tables = ec_table_sweep(net, times)
    return [_stats_row(t, tables[t]) for t in times]


def _sweep_worker(args: tuple[str, list[str]]) -> list[dict]:
    payload, time_texts = args
    net = Netlist.from_json(payload)
    times = [as_delay(t) for t in time_texts]
    tables = ec_table_sweep(net, times)
    return [_stats_row(t, tables[t]) for t in times]


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.kind == "rca":
        carry = _parse_delay_list(args.carry_delays, args.n, "--carry-delays")
        sums = _parse_delay_list(args.sum_delays, args.n + 1, "--sum-delays")
        net = generate_rca(args.n, carry, sums)
    else:
        spec = args.delay
        if spec.startswith("file:"):
            with open(spec.split(":", 1)[1]) as fh:
                delays: KsaDelays | int = KsaDelays.from_json_dict(json.load(fh))
        elif spec.startswith("uniform:"):
            delays = as_delay(spec.split(":", 1)[1])
        else:
            delays = as_delay(spec)
        net = generate_ksa(args.n, delays)
    _emit(net.to_json(indent=2) + "\n", args.output)
    return 0


def _cmd_stats(args: argparse.Namespace) -> int:
    net = _load_netlist(args.netlist)
    if args.sweep_T:
        times = _parse_t_range(args.sweep_T, net)
        rows = _sweep_rows(net, times, args.jobs)
        if args.format == "csv":
            _emit(_rows_to_csv(rows), args.output)
        else:
            _emit(json.dumps({"n": net.n, "rows": rows}, indent=2) + "\n", args.output)
        return 0
    t = _parse_time(args.T)
    ec = extract_ec_table(net, t)
    report = analyze_table(ec)
    if args.format == "csv":
        row = {"n": net.n, **_stats_row(t, ec)}
        _emit(_rows_to_csv([row]), args.output)
    else:
        payload = {
            "n": net.n,
            "T": str(t),
            "sign_convention": "true_sum_minus_computed_sum",
            "ec": ec.to_json_dict(),
            "stats": report.to_json_dict(),
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.output)
    return 0


def _cmd_ec(args: argparse.Namespace) -> int:
    net = _load_netlist(args.netlist)
    ec = extract_ec_table(net, _parse_time(args.T))
    _emit(json.dumps(ec.to_json_dict(), indent=2) + "\n", args.output)
    return 0


def _cmd_chains(args: argparse.Namespace) -> int:
    p = InputPair(args.n, args.a, args.b)
    found = [[c.i, c.j] for c in detect_chains(p)]
    if args.format == "csv":
        rows = [{"i": i, "j": j} for i, j in found]
        _emit(_rows_to_csv(rows), args.output)
    else:
        _emit(json.dumps({"n": args.n, "a": args.a, "b": args.b, "chains": found}) + "\n", args.output)
    return 0


def _cmd_trace(args: argparse.Namespace) -> int:
    net = _load_netlist(args.netlist)
    p = InputPair(net.n, args.a, args.b)
    trace = simulate(net, p)
    if args.times:
        times = [_parse_time(x) for x in args.times.split(",")]
    else:
        seen: set[Time] = {0, trace.quiescence_time()}
        for events in trace.transitions.values():
            seen.update(t for t, _ in events)
        times = sorted(seen)
    s_true = p.a + p.b
    rows = []
    for t in times:
        s_prime, c_prime = read_output(trace, net, t)
        rows.append(
            {
                "time": str(t),
                "s_prime": s_prime,
                "error": s_true - s_prime,
                "c_prime": format(c_prime, f"0{net.n + 1}b"),
            }
        )
    if args.format == "csv":
        _emit(_rows_to_csv(rows), args.output)
    else:
        _emit(
            json.dumps(
                {"n": net.n, "a": p.a, "b": p.b, "s": s_true, "rows": rows}, indent=2
            )
            + "\n",
            args.output,
        )
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    net = _load_netlist(args.netlist)
    times = _parse_t_range(args.t_range, net)
    rows = _sweep_rows(net, times, args.jobs)
    if args.format == "json":
        _emit(json.dumps({"n": net.n, "rows": rows}, indent=2) + "\n", args.output)
    else:
        _emit(_rows_to_csv(rows), args.output)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    failures = 0
    lines: list[str] = []

    def record(name: str, ok: bool, detail: str = "") -> None:
        nonlocal failures
        lines.append(f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  {detail}" if detail else ""))
        if not ok:
            failures += 1

    if args.netlist:
        net = _load_netlist(args.netlist)
        t = _parse_time(args.T)
        exhaustive = net.n <= args.exhaustive_n_limit
        if exhaustive:
            conservative = check_conservative(net, t)
        else:
            rng = random.Random(args.seed)
            pairs = [
                InputPair(net.n, rng.randrange(1 << net.n), rng.randrange(1 << net.n))
                for _ in range(args.samples)
            ]
            conservative = check_conservative(net, t, pairs=pairs)
        record(
            "conservative (no spurious carries)",
            conservative.passed,
            f"counterexamples={conservative.counterexamples}" if not conservative.passed else "",
        )
        assumptions = verify_assumptions(net, t, samples=args.samples, seed=args.seed)
        record("commutativity", assumptions.commutative,
               str(assumptions.commutativity_counterexamples[:3]) if not assumptions.commutative else "")
        record("lower-position independence", assumptions.independent,
               str(assumptions.independence_counterexamples[:3]) if not assumptions.independent else "")
        if conservative.passed and assumptions.passed and net.n <= oracle_limit():
            ec = extract_ec_table(net, t)
            fast = analyze_table(ec)
            oracle = sae_oracle_simulate(net, t)
            record(
                "fast statistics equal exhaustive simulation",
                fast.sae == oracle.sae
                and fast.mse == oracle.mse
                and fast.max_abs_error == oracle.max_abs_error,
                f"fast sae={fast.sae} oracle sae={oracle.sae}",
            )

    if args.fast_vs_oracle:
        n = args.n
        if n is None:
            record("fast-vs-oracle", False, "--n is required with --fast-vs-oracle")
        elif n > oracle_limit() and not args.force:
            record(
                "fast-vs-oracle", False,
                f"n={n} above oracle limit {oracle_limit()}; use --force",
            )
        else:
            rng = random.Random(args.seed)
            ok = True
            for _ in range(args.tables):
                ec = random_realizable_table(n, rng)
                oracle = sae_oracle_chains(ec, force=args.force)
                ok &= (
                    er_avg_fast(ec).sae == oracle.sae
                    and mse_fast(ec) == oracle.mse
                    and max_abs_error(ec)[0] == oracle.max_abs_error
                )
            record(f"fast-vs-oracle on {args.tables} random tables (n={n})", ok)

    _emit("\n".join(lines) + "\n", args.output)
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pseudoadder",
        description="Exact error statistics for inaccurate binary adders.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, fmt: bool = True) -> None:
        p.add_argument("-o", "--output", help="write to a file instead of stdout")
        if fmt:
            p.add_argument("--format", choices=("json", "csv"), default="json")

    p_gen = sub.add_parser("gen", help="generate a netlist")
    p_gen.add_argument("kind", choices=("rca", "ksa"))
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--carry-delays", default="uniform:1",
                       help="rca: uniform:<d>, comma list, or file:<path>")
    p_gen.add_argument("--sum-delays", default="uniform:1",
                       help="rca: uniform:<d>, comma list, or file:<path>")
    p_gen.add_argument("--delay", default="uniform:1",
                       help="ksa: uniform:<d> or file:<path> (per-module JSON)")
    add_common(p_gen, fmt=False)
    p_gen.set_defaults(func=_cmd_gen)

    p_stats = sub.add_parser("stats", help="chain errors and exact statistics")
    p_stats.add_argument("--netlist", required=True, help="netlist JSON path or -")
    p_stats.add_argument("-T", default="0", help="read time")
    p_stats.add_argument("--sweep-T", default=None,
                         help="start..stop[:step]; stop may be 'quiescence'")
    p_stats.add_argument("--jobs", type=int, default=1)
    add_common(p_stats)
    p_stats.set_defaults(func=_cmd_stats)

    p_ec = sub.add_parser("ec", help="chain-error table only")
    p_ec.add_argument("--netlist", required=True)
    p_ec.add_argument("-T", default="0")
    add_common(p_ec, fmt=False)
    p_ec.set_defaults(func=_cmd_ec)

    p_chains = sub.add_parser("chains", help="carry chains of one pair")
    p_chains.add_argument("--n", type=int, required=True)
    p_chains.add_argument("-a", type=int, required=True)
    p_chains.add_argument("-b", type=int, required=True)
    add_common(p_chains)
    p_chains.set_defaults(func=_cmd_chains)

    p_trace = sub.add_parser("trace", help="time table of one addition")
    p_trace.add_argument("--netlist", required=True)
    p_trace.add_argument("-a", type=int, required=True)
    p_trace.add_argument("-b", type=int, required=True)
    p_trace.add_argument("--times", default=None, help="comma list; default: all transition times")
    add_common(p_trace)
    p_trace.set_defaults(func=_cmd_trace)

    p_sweep = sub.add_parser("sweep", help="statistics over a range of read times")
    p_sweep.add_argument("--netlist", required=True)
    p_sweep.add_argument("--t-range", required=True, help="start..stop[:step]; stop may be 'quiescence'")
    p_sweep.add_argument("--jobs", type=int, default=1)
    add_common(p_sweep)
    p_sweep.set_defaults(func=_cmd_sweep)

    p_verify = sub.add_parser("verify", help="model checks and oracle comparisons")
    p_verify.add_argument("--netlist", default=None)
    p_verify.add_argument("-T", default="0")
    p_verify.add_argument("--exhaustive-n-limit", type=int, default=8)
    p_verify.add_argument("--samples", type=int, default=128)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--fast-vs-oracle", action="store_true")
    p_verify.add_argument("--n", type=int, default=None)
    p_verify.add_argument("--tables", type=int, default=20)
    p_verify.add_argument("--force", action="store_true",
                          help="override the oracle width limit")
    add_common(p_verify, fmt=False)
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
