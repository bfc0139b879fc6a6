"""Exact error statistics: brute-force oracles and fast chain algorithms.

The oracles enumerate all 2^(2n) input pairs (bit-parallel, but still an
exhaustive enumeration) and are gated by a width limit; the fast paths
work from a chain-error table in quadratic time and are exact for any
table realizable by a conservative pseudo-adder.
"""

from __future__ import annotations

import os
from fractions import Fraction

import numpy as np

from .counting import nu_pair, nu_signed_all, nu_single
from .maxerror import max_abs_error
from .model import (
    CarryChain,
    ChainErrorTable,
    ExactRational,
    OracleLimitError,
    StatsReport,
    all_chains,
)
from .netlist import Netlist
from .sim import Time
from .sweep import PairSweep, operand_arrays

DEFAULT_ORACLE_LIMIT = 10
ORACLE_LIMIT_ENV = "PSEUDOADDER_ORACLE_LIMIT"


def oracle_limit() -> int:
    """Width limit for exhaustive enumeration (env-overridable)."""
    raw = os.environ.get(ORACLE_LIMIT_ENV)
    return int(raw) if raw else DEFAULT_ORACLE_LIMIT


def _check_oracle_width(n: int, force: bool) -> None:
    limit = oracle_limit()
    if n > limit and not force:
        raise OracleLimitError(
            f"exhaustive enumeration over 4^{n} pairs exceeds the width "
            f"limit {limit}; pass force=True or raise {ORACLE_LIMIT_ENV}"
        )


def chain_membership(n: int) -> tuple[list[CarryChain], list[np.ndarray]]:
    """For each chain, the boolean per-pair membership array.

    Index convention matches the sweep engine: ``idx = a + (b << n)``.
    """
    a, b = operand_arrays(n)
    chains = all_chains(n)
    members: list[np.ndarray] = []
    for c in chains:
        m = ((a >> (c.i - 1)) & (b >> (c.i - 1)) & 1).astype(bool)
        for k in range(c.i, c.j):
            m &= (((a >> k) ^ (b >> k)) & 1).astype(bool)
        if c.j < n:
            m &= (((a >> c.j) ^ (b >> c.j)) & 1) == 0
        members.append(m)
    return chains, members


def _oracle_report(
    n: int,
    totals: np.ndarray,
    chains: list[CarryChain] | None = None,
    members: list[np.ndarray] | None = None,
    ec: ChainErrorTable | None = None,
) -> StatsReport:
    pairs = 1 << (2 * n)
    sae = int(np.abs(totals).sum(dtype=np.int64))
    sse = int((totals.astype(np.int64) ** 2).sum(dtype=np.int64))
    report = StatsReport(
        n=n,
        sae=sae,
        er_avg=Fraction(sae, pairs),
        mse=Fraction(sse, pairs),
        max_abs_error=int(np.abs(totals).max(initial=0)),
    )
    if chains is None or members is None or ec is None:
        return report
    # Dominating sign per pair: walk chains by ascending start so the
    # last error-contributing hit wins (largest start = leftmost).
    sign = np.zeros(len(totals), dtype=np.int8)
    for c, m in zip(chains, members):
        e = ec.get(c.i, c.j)
        if e:
            sign[m] = 1 if e > 0 else -1
    nu_p: dict[CarryChain, int] = {}
    nu_m: dict[CarryChain, int] = {}
    for c, m in zip(chains, members):
        nu_p[c] = int((m & (sign == 1)).sum())
        nu_m[c] = int((m & (sign == -1)).sum())
    report.nu_plus = nu_p
    report.nu_minus = nu_m
    report.p_plus = {c: v / pairs for c, v in nu_p.items()}
    report.p_minus = {c: v / pairs for c, v in nu_m.items()}
    return report


def sae_oracle_chains(ec: ChainErrorTable, force: bool = False) -> StatsReport:
    """Ground truth by enumerating pairs through chain detection.

    Every pair's error is the sum of its chains' table entries; the
    report also tallies, per chain, how many generating pairs fall under
    a positive or negative dominating chain.
    """
    _check_oracle_width(ec.n, force)
    chains, members = chain_membership(ec.n)
    totals = np.zeros(1 << (2 * ec.n), dtype=np.int64)
    for c, m in zip(chains, members):
        e = ec.get(c.i, c.j)
        if e:
            totals[m] += e
    return _oracle_report(ec.n, totals, chains, members, ec)


def sae_oracle_simulate(net: Netlist, t: Time, force: bool = False) -> StatsReport:
    """Ground truth by simulating every pair; independent of the chain
    model (no per-chain tallies)."""
    _check_oracle_width(net.n, force)
    sweep = PairSweep(net, keep=set(net.outputs.values()))
    a, b = operand_arrays(net.n)
    totals = (a + b) - sweep.sums_at(t)
    return _oracle_report(net.n, totals)


def chain_sae_contribution(ec_value: int, nu_plus: int, nu_minus: int) -> int:
    """One chain's term in the summed absolute error.

    Each pair generating the chain adds the chain's error multiplied by
    the sign of that pair's dominating chain, hence the signed-count
    difference.
    """
    return ec_value * (nu_plus - nu_minus)


def er_avg_fast(ec: ChainErrorTable) -> StatsReport:
    """Expected absolute error in quadratic time, exactly.

    Assembles the signed per-chain pair counts and sums each chain's
    contribution; valid for tables realizable by a conservative
    pseudo-adder (where the dominating chain fixes the error sign).
    """
    n = ec.n
    pairs = 1 << (2 * n)
    signed = nu_signed_all(ec)
    sae = 0
    nu_p: dict[CarryChain, int] = {}
    nu_m: dict[CarryChain, int] = {}
    for c, e in ec.entries():
        plus, minus = signed[c]
        nu_p[c] = plus
        nu_m[c] = minus
        if e:
            sae += chain_sae_contribution(e, plus, minus)
    return StatsReport(
        n=n,
        sae=sae,
        er_avg=Fraction(sae, pairs),
        nu_plus=nu_p,
        nu_minus=nu_m,
        p_plus={c: float(Fraction(v, pairs)) for c, v in nu_p.items()},
        p_minus={c: float(Fraction(v, pairs)) for c, v in nu_m.items()},
    )


def er_avg_rca(ec: ChainErrorTable) -> ExactRational:
    """Expected absolute error for tables without negative entries.

    Ripple-carry pseudo-adders only lose carries, so every chain error is
    non-negative and the absolute values distribute over the sum; a
    negative entry means this shortcut does not apply and is rejected.
    """
    sae = 0
    for c, e in ec.nonzero():
        if e < 0:
            raise ValueError(
                f"chain {c} has negative error {e}; the no-negative-errors "
                "shortcut does not apply to this table"
            )
        sae += e * nu_single(ec.n, c)
    return Fraction(sae, 1 << (2 * ec.n))


def mse_fast(ec: ChainErrorTable) -> ExactRational:
    """Mean squared error from single and joint chain counts.

    Squares distribute over each pair's chain sum into per-chain squares
    plus cross terms over ordered distinct co-occurring chains; only
    nonzero entries contribute.
    """
    nz = ec.nonzero()
    total = 0
    for c, e in nz:
        total += nu_single(ec.n, c) * e * e
    for x, (c1, e1) in enumerate(nz):
        for c2, e2 in nz[x + 1 :]:
            first, second = (c1, c2) if c1.i < c2.i else (c2, c1)
            if first.j < second.i:
                # ordered distinct pairs: each unordered pair twice
                total += 2 * nu_pair(ec.n, first, second) * e1 * e2
    return Fraction(total, 1 << (2 * ec.n))


def analyze_table(ec: ChainErrorTable) -> StatsReport:
    """Full fast-path report: SAE/Er_avg, MSE, max |error|, tallies."""
    report = er_avg_fast(ec)
    report.mse = mse_fast(ec)
    report.max_abs_error = max_abs_error(ec)[0]
    return report
