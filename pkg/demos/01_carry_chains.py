"""Carry chains: where addition errors can live.

A chain (i, j) is an interval of positions that receives a carry:
position i-1 generates one (both operand bits set), positions i..j-1
propagate it (bits differ), and the operand bits agree at j.  If an
adder is read too early, the only thing that can be wrong is how far
each chain's carry made it, so every error decomposes into per-chain
contributions.
"""

import pseudoadder as pa

n = 8
p = pa.InputPair(n, 86, 59)
s, carries = pa.reference_add(p)

print(f"a = {p.a:0{n}b} ({p.a})")
print(f"b = {p.b:0{n}b} ({p.b})")
print(f"s = {s:0{n + 1}b} ({s}), carries c_n..c_0 = {carries:0{n + 1}b}")
print()

chains = pa.detect_chains(p)
print(f"carry chains of this pair: {[(c.i, c.j) for c in chains]}")
for c in chains:
    iso = pa.isolate_chain(c, p)
    print(f"  chain {tuple(c)}: isolated pair (a={iso.a}, b={iso.b}) "
          f"generates exactly {[(d.i, d.j) for d in pa.detect_chains(iso)]}")
print()

# Suppose a pseudo-adder mishandles the two chains by +16 and -96.
ec = pa.ChainErrorTable(n, {pa.CarryChain(2, 4): 16, pa.CarryChain(5, 7): -96})
total, terms = pa.decompose_error(p, ec)
print("chain-error table:", [(tuple(c), v) for c, v in ec.nonzero()])
print(f"decomposed error for (86, 59): total {total}, terms "
      f"{[(tuple(c), v) for c, v in terms]}")

dom = pa.dominating_chain(p, ec)
print(f"dominating (leftmost erring) chain: {tuple(dom)} with error "
      f"{ec.get(dom.i, dom.j)} -> the total's sign is negative, |error| = {abs(total)}")
print()

# Any disjoint set of chains is realizable by some input pair, and the
# chains of any pair are disjoint.  That bijection is what makes the
# fast statistics exact.
cs = pa.ChainSet(n, (pa.CarryChain(1, 2), pa.CarryChain(4, 4), pa.CarryChain(6, 8)))
w = pa.witness_for_chain_set(cs)
print(f"witness for chains {[(c.i, c.j) for c in cs]}: a={w.a}, b={w.b}, "
      f"detected {[(c.i, c.j) for c in pa.detect_chains(w)]}")
