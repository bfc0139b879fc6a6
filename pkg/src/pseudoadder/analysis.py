"""Model-level checks and chain-error extraction for netlists.

A netlist read at time T fits the carry-chain error model when (a) the
recovered carries ``c'_k = s'_k ^ a_k ^ b_k`` never exceed the true
carries (no spurious carries) and (b) the position-0 sum bit is not
stale (``s'_0 = a_0 ^ b_0``), since position 0 receives no carry and an
error there cannot be attributed to any chain.  Only then does the sum
of the per-chain errors reproduce every pair's total error.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .chains import canonical_pair, chain_predicate
from .model import (
    CarryChain,
    ChainErrorTable,
    ConservativenessError,
    InputPair,
    all_chains,
    bit,
    reference_add,
)
from .netlist import Netlist
from .sim import SignalTrace, Time, read_output, simulate
from .sweep import PairSweep


@dataclass
class ConservativeReport:
    """Outcome of a no-spurious-carries check at one read time."""

    read_time: Time
    checked: int
    violations: int = 0
    counterexamples: list[tuple[int, int, int]] = field(default_factory=list)
    #: counterexamples are (a, b, position), capped; position 0 flags a
    #: stale low-order sum bit rather than a spurious carry proper.

    @property
    def passed(self) -> bool:
        return self.violations == 0


@dataclass
class AssumptionReport:
    """Commutativity and lower-position-independence verdicts."""

    read_time: Time
    commutative: bool
    independent: bool
    commutativity_counterexamples: list[tuple[int, int]] = field(default_factory=list)
    independence_counterexamples: list[tuple[CarryChain, int, int]] = field(
        default_factory=list
    )

    @property
    def passed(self) -> bool:
        return self.commutative and self.independent


def _pair_violations(p: InputPair, s_prime: int) -> list[int]:
    """Positions where the read violates the conservative model."""
    _, carries = reference_add(p)
    bad = []
    if bit(s_prime, 0) != p.a_bit(0) ^ p.b_bit(0):
        bad.append(0)
    for k in range(1, p.n + 1):
        ck_true = bit(carries, k)
        ak = p.a_bit(k) if k < p.n else 0
        bk = p.b_bit(k) if k < p.n else 0
        ck_prime = bit(s_prime, k) ^ ak ^ bk
        if ck_prime > ck_true:
            bad.append(k)
    return bad


def check_conservative(
    net: Netlist,
    t: Time,
    pairs: list[InputPair] | None = None,
    sweep: PairSweep | None = None,
    max_counterexamples: int = 10,
) -> ConservativeReport:
    """Verify ``c'_k <= c_k`` for every pair (or the given sample) at T.

    With ``pairs=None`` the check is exhaustive over all 4^n pairs using
    the bit-parallel engine; pass a prebuilt sweep to amortize it across
    read times.
    """
    report = ConservativeReport(read_time=t, checked=0)
    if pairs is not None:
        for p in pairs:
            s_prime, _ = read_output(simulate(net, p), net, t)
            for k in _pair_violations(p, s_prime):
                report.violations += 1
                if len(report.counterexamples) < max_counterexamples:
                    report.counterexamples.append((p.a, p.b, k))
        report.checked = len(pairs)
        return report

    sw = sweep if sweep is not None else PairSweep(net, keep=set(net.outputs.values()))
    s_masks = sw.output_masks_at(t)
    true_carries = sw.true_carry_masks()
    a0 = sw.operand_bit_mask("a", 0)
    b0 = sw.operand_bit_mask("b", 0)
    viol_by_pos: dict[int, int] = {}
    stale0 = s_masks[0] ^ a0 ^ b0
    if stale0:
        viol_by_pos[0] = stale0
    for k in range(1, net.n + 1):
        ak = sw.operand_bit_mask("a", k) if k < net.n else 0
        bk = sw.operand_bit_mask("b", k) if k < net.n else 0
        c_prime = s_masks[k] ^ ak ^ bk
        spurious = c_prime & ~true_carries[k] & sw.full
        if spurious:
            viol_by_pos[k] = spurious
    report.checked = sw.pair_count
    report.violations = sum(mask.bit_count() for mask in viol_by_pos.values())
    for k, mask in sorted(viol_by_pos.items()):
        while mask and len(report.counterexamples) < max_counterexamples:
            idx = (mask & -mask).bit_length() - 1
            report.counterexamples.append(
                (idx & ((1 << net.n) - 1), idx >> net.n, k)
            )
            mask &= mask - 1
    return report


def extract_ec_table(net: Netlist, t: Time) -> ChainErrorTable:
    """Measure every chain's error by probing its canonical isolated pair.

    For chain (i, j) the probe is ``a = generate | propagates``,
    ``b = generate``; its true sum is ``2**j`` and the entry is
    ``2**j - s'``.  A probe whose read is not conservative raises
    :class:`ConservativenessError` naming the chain.
    """
    entries: dict[CarryChain, int] = {}
    for c in all_chains(net.n):
        probe = canonical_pair(c, net.n)
        s_prime, _ = read_output(simulate(net, probe), net, t)
        if _pair_violations(probe, s_prime):
            raise ConservativenessError(
                f"probe for chain {c} reads a spurious carry at T={t}", c
            )
        entries[c] = (1 << c.j) - s_prime
    return ChainErrorTable(net.n, entries)


def ec_table_sweep(net: Netlist, times: list[Time]) -> dict[Time, ChainErrorTable]:
    """Extract the chain-error table at several read times, simulating
    each probe only once."""
    probes: list[tuple[CarryChain, InputPair, SignalTrace]] = []
    for c in all_chains(net.n):
        probe = canonical_pair(c, net.n)
        probes.append((c, probe, simulate(net, probe)))
    tables: dict[Time, ChainErrorTable] = {}
    for t in times:
        entries: dict[CarryChain, int] = {}
        for c, probe, trace in probes:
            s_prime, _ = read_output(trace, net, t)
            if _pair_violations(probe, s_prime):
                raise ConservativenessError(
                    f"probe for chain {c} reads a spurious carry at T={t}", c
                )
            entries[c] = (1 << c.j) - s_prime
        tables[t] = ChainErrorTable(net.n, entries)
    return tables


def _random_witness(c: CarryChain, n: int, rng: random.Random) -> InputPair:
    """A random pair generating chain c (free positions randomized)."""
    a = 1 << (c.i - 1)
    b = 1 << (c.i - 1)
    for k in range(c.i, c.j):
        if rng.random() < 0.5:
            a |= 1 << k
        else:
            b |= 1 << k
    if c.j < n and rng.random() < 0.5:
        a |= 1 << c.j
        b |= 1 << c.j
    free = [k for k in range(n) if k < c.i - 1 or k > c.j]
    for k in free:
        bits = rng.randrange(4)
        a |= (bits & 1) << k
        b |= (bits >> 1) << k
    p = InputPair(n, a, b)
    assert chain_predicate(p, c.i, c.j)
    return p


def verify_assumptions(
    net: Netlist,
    t: Time,
    samples: int = 64,
    seed: int = 0,
) -> AssumptionReport:
    """Spot-check the two premises behind per-chain error attribution.

    Commutativity: ``s'(a, b) == s'(b, a)`` for sampled pairs.
    Independence: for sampled chains, the error restricted to the chain's
    bit span matches the canonical probe's error on every sampled witness,
    regardless of the bits outside the chain.  A failure means per-chain
    errors are ill-defined for this netlist and the fast statistics do
    not apply.
    """
    rng = random.Random(seed)
    n = net.n
    report = AssumptionReport(read_time=t, commutative=True, independent=True)

    seeds = [(0, 1), (1, 0), (0, 0)] if n >= 1 else []
    sampled = [
        (rng.randrange(1 << n), rng.randrange(1 << n)) for _ in range(samples)
    ]
    for a, b in seeds + sampled:
        fwd = read_output(simulate(net, InputPair(n, a, b)), net, t)[0]
        rev = read_output(simulate(net, InputPair(n, b, a)), net, t)[0]
        if fwd != rev:
            report.commutative = False
            if len(report.commutativity_counterexamples) < 10:
                report.commutativity_counterexamples.append((a, b))

    chains = all_chains(n)
    rng.shuffle(chains)
    per_chain = max(2, samples // max(1, len(chains)))
    for c in chains[: max(1, min(len(chains), samples))]:
        probe = canonical_pair(c, n)
        s_probe, _ = read_output(simulate(net, probe), net, t)
        expected = _span_error(probe, s_probe, c)
        for _ in range(per_chain):
            w = _random_witness(c, n, rng)
            s_prime, _ = read_output(simulate(net, w), net, t)
            got = _span_error(w, s_prime, c)
            if got != expected:
                report.independent = False
                if len(report.independence_counterexamples) < 10:
                    report.independence_counterexamples.append((c, w.a, w.b))
    return report


def _span_error(p: InputPair, s_prime: int, c: CarryChain) -> int:
    """Error contribution of positions i..j: sum of (s_k - s'_k) 2^k."""
    s_true = p.a + p.b
    return sum(
        (bit(s_true, k) - bit(s_prime, k)) << k for k in range(c.i, c.j + 1)
    )
