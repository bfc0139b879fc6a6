"""Synthetic chain-error tables shaped like real pseudo-adder behavior.

A conservative pseudo-adder can only miss carries, so a chain (i, j) can
err in two bit patterns: the end bit reads 0 instead of 1 (+2^j) and any
subset of the propagate positions reads 1 instead of 0 (-2^k each).
Every realizable entry is therefore ``y_j * 2^j - m`` with ``y_j`` in
{0, 1} and ``m`` any value whose set bits lie in positions i..j-1.
Randomized tests must stay inside this shape: the sign of a pair's total
error is only pinned by its dominating chain when each chain's error
lives in the chain's own bit span.
"""

from __future__ import annotations

import random

from .model import CarryChain, ChainErrorTable, all_chains


def is_realizable_error(value: int, c: CarryChain) -> bool:
    """True when the value is a possible error of the chain (i, j)."""
    if value == 0:
        return True
    span = ((1 << c.j) - 1) ^ ((1 << c.i) - 1)  # bits i..j-1
    if value > 0:
        m = (1 << c.j) - value
        return m >= 0 and (m & ~span) == 0
    return (-value & ~span) == 0


def random_realizable_error(
    c: CarryChain, rng: random.Random, nonnegative: bool = False
) -> int:
    """A random error the chain could actually exhibit (possibly zero)."""
    width = c.j - c.i
    m = rng.getrandbits(width) << c.i if width else 0
    if nonnegative:
        return (1 << c.j) - m
    end_failed = rng.random() < 0.5
    return ((1 << c.j) if end_failed else 0) - m


def random_realizable_table(
    n: int,
    rng: random.Random,
    density: float = 0.6,
    nonnegative: bool = False,
) -> ChainErrorTable:
    """Random table with every entry realizable by some conservative adder.

    ``density`` is the probability that a chain errs at all; with
    ``nonnegative=True`` all entries keep the ripple-carry sign.
    """
    entries: dict[CarryChain, int] = {}
    for c in all_chains(n):
        if rng.random() < density:
            entries[c] = random_realizable_error(c, rng, nonnegative=nonnegative)
    return ChainErrorTable(n, entries)
