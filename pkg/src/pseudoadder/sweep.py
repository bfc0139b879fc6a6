"""Bit-parallel simulation of a netlist over every input pair at once.

The trick: index the 4^n input pairs as ``idx = a + (b << n)`` and
represent each signal's value at a point in time as one 4^n-bit integer
(bit idx = the signal's value for that pair).  Operand-bit sources are
periodic 0/1 block patterns, gate logic is plain integer bitwise algebra,
and transport delays turn into waveform time shifts.  One pass over the
gates in topological order yields, for every gate, the full list of
``(time, value-mask)`` transitions: the exact aggregate of what the
event-driven simulator produces pair by pair.

This is the workhorse behind exhaustive oracles and conservativeness
checks; it is cross-validated against :func:`pseudoadder.sim.simulate`
in the test suite.
"""

from __future__ import annotations

from bisect import bisect_right

import numpy as np

from .netlist import GateKind, Netlist, SOURCE_KINDS
from .sim import Time


def _bit_pattern(bitpos: int, index_bits: int) -> int:
    """Mask over 2^index_bits positions whose index has ``bitpos`` set."""
    run = (1 << (1 << bitpos)) - 1
    period = 1 << (bitpos + 1)
    total = 1 << index_bits
    return (run << (1 << bitpos)) * (((1 << total) - 1) // ((1 << period) - 1))


def _eval_mask(kind: GateKind, vals: list[int], full: int) -> int:
    if kind is GateKind.BUF:
        return vals[0]
    if kind is GateKind.NOT:
        return full ^ vals[0]
    if kind is GateKind.AND2:
        return vals[0] & vals[1]
    if kind is GateKind.OR2:
        return vals[0] | vals[1]
    if kind is GateKind.XOR2:
        return vals[0] ^ vals[1]
    if kind is GateKind.MAJ3:
        x, y, z = vals
        return (x & y) | (x & z) | (y & z)
    if kind is GateKind.CONST1:
        return full
    return 0


class Waveform:
    """Piecewise-constant mask over time: ``(time, mask)`` changes, 0 start."""

    __slots__ = ("steps",)

    def __init__(self, steps: list[tuple[Time, int]]):
        self.steps = steps

    def at(self, t: Time) -> int:
        times = [s[0] for s in self.steps]
        k = bisect_right(times, t)
        return self.steps[k - 1][1] if k else 0

    def change_times(self) -> list[Time]:
        return [s[0] for s in self.steps]


class PairSweep:
    """All-pairs waveforms of a netlist's gates."""

    def __init__(self, net: Netlist, keep: set[str] | None = None):
        self.net = net
        self.n = net.n
        self.pair_count = 1 << (2 * net.n)
        self.full = (1 << self.pair_count) - 1
        wanted = keep if keep is not None else {g.id for g in net.gates}
        wanted = set(wanted) | set(net.outputs.values())

        waveforms: dict[str, list[tuple[Time, int]]] = {}
        for gid in net.order:
            gate = net.by_id[gid]
            if gate.kind in SOURCE_KINDS:
                if gate.kind is GateKind.INPUT:
                    operand, k = net.input_bit(gid)
                    bitpos = k if operand == "a" else net.n + k
                    mask = _bit_pattern(bitpos, 2 * net.n)
                elif gate.kind is GateKind.CONST1:
                    mask = self.full
                else:
                    mask = 0
                waveforms[gid] = [(0, mask)] if mask else []
                continue
            ins = [waveforms[s] for s in gate.inputs]
            times: set[Time] = {0}
            for wf in ins:
                times.update(t for t, _ in wf)
            steps: list[tuple[Time, int]] = []
            prev = 0
            for t in sorted(times):
                vals = [_value_at(wf, t) for wf in ins]
                v = _eval_mask(gate.kind, vals, self.full)
                if v != prev:
                    steps.append((t + gate.delay, v))
                    prev = v
            waveforms[gid] = steps

        self._wf = {gid: Waveform(steps) for gid, steps in waveforms.items() if gid in wanted}
        self._quiescence: Time = 0
        for steps in waveforms.values():
            if steps and steps[-1][0] > self._quiescence:
                self._quiescence = steps[-1][0]

    def waveform(self, gate_id: str) -> Waveform:
        return self._wf[gate_id]

    def quiescence_time(self) -> Time:
        return self._quiescence

    def output_change_times(self) -> list[Time]:
        """Sorted times at which any sum bit changes for any pair."""
        times: set[Time] = {0}
        for gid in self.net.outputs.values():
            times.update(self._wf[gid].change_times())
        return sorted(times)

    def output_masks_at(self, t: Time) -> list[int]:
        """One 4^n-bit mask per sum position 0..n at read time t."""
        return [self._wf[self.net.outputs[pos]].at(t) for pos in range(self.n + 1)]

    def sums_at(self, t: Time) -> np.ndarray:
        """Computed sums for every pair at read time t (int64, index a + (b << n))."""
        s = np.zeros(self.pair_count, dtype=np.int64)
        for pos, mask in enumerate(self.output_masks_at(t)):
            if mask:
                s += mask_to_bools(mask, self.pair_count).astype(np.int64) << pos
        return s

    def operand_bit_mask(self, operand: str, k: int) -> int:
        bitpos = k if operand == "a" else self.n + k
        return _bit_pattern(bitpos, 2 * self.n)

    def true_carry_masks(self) -> list[int]:
        """Masks of the correct carries c_0..c_n over all pairs."""
        carries = [0]
        c = 0
        for k in range(self.n):
            ak = self.operand_bit_mask("a", k)
            bk = self.operand_bit_mask("b", k)
            c = (ak & bk) | (ak & c) | (bk & c)
            carries.append(c)
        return carries


def _value_at(steps: list[tuple[Time, int]], t: Time) -> int:
    v = 0
    for when, mask in steps:
        if when > t:
            break
        v = mask
    return v


def mask_to_bools(mask: int, count: int) -> np.ndarray:
    """Unpack a mask integer into a boolean array of the given length."""
    raw = mask.to_bytes((count + 7) // 8, "little")
    bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
    return bits[:count].astype(bool)


def operand_arrays(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Arrays of a and b per pair index (``idx = a + (b << n)``)."""
    idx = np.arange(1 << (2 * n), dtype=np.int64)
    return idx & ((1 << n) - 1), idx >> n
