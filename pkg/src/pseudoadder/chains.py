"""Carry-chain detection and per-pair error decomposition.

A chain (i, j) is present in a pair when position i-1 generates (both
bits 1), positions i..j-1 propagate (bits differ), and the bits agree at
position j.  Chains of one pair never overlap, so a pair's total error
under a conservative pseudo-adder is the sum of its chains' errors, and
the sign of that total is the sign of the leftmost (highest start)
error-contributing chain.
"""

from __future__ import annotations

from .model import CarryChain, ChainErrorTable, ChainSet, InputPair


def detect_chains(p: InputPair) -> ChainSet:
    """All carry chains generated by the pair, ascending by start."""
    n, a, b = p.n, p.a, p.b
    chains: list[CarryChain] = []
    g = 0
    while g < n:
        if (a >> g) & (b >> g) & 1:
            j = g + 1
            # Bits at and above position n are zero, hence equal: j <= n.
            while j < n and ((a >> j) ^ (b >> j)) & 1:
                j += 1
            chains.append(CarryChain(g + 1, j))
            g = j
        else:
            g += 1
    return ChainSet(n, tuple(chains))


def chain_predicate(p: InputPair, i: int, j: int) -> bool:
    """True iff the pair generates exactly the chain (i, j)."""
    CarryChain(i, j).validate(p.n)
    if not (p.a_bit(i - 1) and p.b_bit(i - 1)):
        return False
    for k in range(i, j):
        if p.a_bit(k) == p.b_bit(k):
            return False
    return p.a_bit(j) == p.b_bit(j)


def isolate_chain(c: CarryChain, witness: InputPair, n: int | None = None) -> InputPair:
    """Zero out every position irrelevant to the chain's appearance.

    Positions i-1..j-1 are copied from the witness (which must generate
    the chain), everything else is cleared.  The result generates exactly
    ``{c}``.
    """
    n = witness.n if n is None else n
    if n != witness.n:
        raise ValueError(f"width mismatch: {n} != witness width {witness.n}")
    c.validate(n)
    if not chain_predicate(witness, c.i, c.j):
        raise ValueError(f"witness ({witness.a}, {witness.b}) does not generate {c}")
    mask = ((1 << c.j) - 1) & ~((1 << (c.i - 1)) - 1)
    return InputPair(n, witness.a & mask, witness.b & mask)


def canonical_pair(c: CarryChain, n: int) -> InputPair:
    """The standard probe pair for a chain: all propagate bits on operand a.

    Both operands carry the generate bit at i-1; a additionally carries
    ones at i..j-1.  Its true sum is exactly ``2**j``.
    """
    c.validate(n)
    gen = 1 << (c.i - 1)
    propagate = ((1 << c.j) - 1) & ~((1 << c.i) - 1)
    return InputPair(n, gen | propagate, gen)


def witness_for_chain_set(chains: ChainSet) -> InputPair:
    """An input pair generating exactly the given disjoint chains."""
    a = 0
    b = 0
    for c in chains:
        probe = canonical_pair(c, chains.n)
        a |= probe.a
        b |= probe.b
    p = InputPair(chains.n, a, b)
    assert tuple(detect_chains(p)) == chains.chains
    return p


def decompose_error(
    p: InputPair, ec: ChainErrorTable
) -> tuple[int, list[tuple[CarryChain, int]]]:
    """Split a pair's total error into per-chain contributions.

    Returns ``(total, terms)`` where terms lists every generated chain
    with its table entry (zero entries included).  For any conservative
    pseudo-adder realizing the table, the total equals the true sum minus
    the computed sum.
    """
    if ec.n != p.n:
        raise ValueError(f"width mismatch: table has n={ec.n}, pair has n={p.n}")
    terms = [(c, ec.get(c.i, c.j)) for c in detect_chains(p)]
    return sum(v for _, v in terms), terms


def dominating_chain(p: InputPair, ec: ChainErrorTable) -> CarryChain | None:
    """The leftmost (largest start) generated chain with a nonzero error.

    Its sign equals the sign of the pair's total error; ``None`` when no
    generated chain contributes an error.
    """
    if ec.n != p.n:
        raise ValueError(f"width mismatch: table has n={ec.n}, pair has n={p.n}")
    best: CarryChain | None = None
    for c in detect_chains(p):
        if ec.get(c.i, c.j) != 0:
            best = c  # ascending scan: the last hit has the largest start
    return best
