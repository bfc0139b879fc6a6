"""Discrete-event simulation of delay-annotated netlists.

Semantics: every gate output is 0 at t=0; operand and constant values are
applied at t=0; whenever a gate's inputs change at time t it re-evaluates
and, if the result differs from its current output, the new value commits
at ``t + delay`` (transport delay, no pulse swallowing).  Reads at time T
take the value of the last transition at or before T.  Acyclicity
guarantees quiescence.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction

from .model import InputPair, bit
from .netlist import Netlist, SOURCE_KINDS, evaluate_gate

Time = int | Fraction


@dataclass
class SignalTrace:
    """Per-gate transition lists ``(time, value)``; implicit 0 before the
    first transition.  Times are strictly increasing per gate and values
    alternate."""

    n: int
    transitions: dict[str, list[tuple[Time, int]]]

    def value_at(self, gate_id: str, t: Time) -> int:
        value = 0
        for when, v in self.transitions[gate_id]:
            if when > t:
                break
            value = v
        return value

    def quiescence_time(self) -> Time:
        """Time of the last transition anywhere (0 for a frozen netlist)."""
        latest: Time = 0
        for events in self.transitions.values():
            if events and events[-1][0] > latest:
                latest = events[-1][0]
        return latest


def simulate(net: Netlist, p: InputPair) -> SignalTrace:
    """Run one input pair to quiescence and record every transition."""
    if p.n != net.n:
        raise ValueError(f"width mismatch: netlist n={net.n}, pair n={p.n}")

    value: dict[str, int] = {g.id: 0 for g in net.gates}
    transitions: dict[str, list[tuple[Time, int]]] = {g.id: [] for g in net.gates}

    heap: list[tuple[Time, int, str, int]] = []
    seq = 0

    def schedule(t: Time, gid: str, v: int) -> None:
        nonlocal seq
        heapq.heappush(heap, (t, seq, gid, v))
        seq += 1

    # t=0: sources take their stimulus values, everything else evaluates
    # once against the all-zero initial state.
    for g in net.gates:
        if g.kind in SOURCE_KINDS:
            schedule(0, g.id, net.source_value(g, p.a, p.b))
        else:
            v = evaluate_gate(g.kind, tuple(0 for _ in g.inputs))
            if v:
                schedule(g.delay, g.id, v)

    while heap:
        now = heap[0][0]
        # Delta cycles: zero-delay fanout settles within the timestamp and
        # only the net value change is recorded as a transition.
        before: dict[str, int] = {}
        while heap and heap[0][0] == now:
            changed: dict[str, int] = {}
            # commits at one instant coalesce; the last scheduled wins
            while heap and heap[0][0] == now:
                _, _, gid, v = heapq.heappop(heap)
                changed[gid] = v
            touched: set[str] = set()
            for gid, v in changed.items():
                if v != value[gid]:
                    before.setdefault(gid, value[gid])
                    value[gid] = v
                    touched.update(net.fanout[gid])
            for gid in touched:
                g = net.by_id[gid]
                v = evaluate_gate(g.kind, tuple(value[s] for s in g.inputs))
                schedule(now + g.delay, gid, v)
        for gid, old in before.items():
            if value[gid] != old:
                transitions[gid].append((now, value[gid]))

    return SignalTrace(net.n, transitions)


def read_output(trace: SignalTrace, net: Netlist, t: Time) -> tuple[int, int]:
    """Sample the sum at time T and recover the implied carries.

    Returns ``(s_prime, c_prime)``: the computed sum assembled from the
    output gates and the carry vector ``c'_k = s'_k ^ a_k ^ b_k`` for
    k = 1..n (bit 0 is the input carry, always 0).  Carry recovery needs
    the operands, which are read back from the trace's input gates.
    """
    if t < 0:
        raise ValueError(f"read time must be non-negative, got {t}")
    s_prime = 0
    for pos, gid in net.outputs.items():
        s_prime |= trace.value_at(gid, t) << pos
    c_prime = 0
    for k in range(1, net.n + 1):
        # bit n of both operands is the fixed zero top bit
        ak = trace.value_at(f"a{k}", t) if k < net.n else 0
        bk = trace.value_at(f"b{k}", t) if k < net.n else 0
        c_prime |= (bit(s_prime, k) ^ ak ^ bk) << k
    return s_prime, c_prime


def computed_sum(net: Netlist, p: InputPair, t: Time) -> int:
    """Convenience: simulate one pair and read the sum at time T."""
    return read_output(simulate(net, p), net, t)[0]
