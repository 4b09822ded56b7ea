"""Resolving sets on small graphs.

A landmark set resolves a graph when every vertex has a distinct vector of
distances to the landmarks.  Truncating distances at 2 gives the adjacency
variant, which ignores everything beyond "adjacent or not".
"""

from lexdim import Mode, dimension, generators as gen, is_resolving, representation

# A single endpoint of a path already separates every vertex.
p6 = gen.path(6)
print("dim(P6) =", dimension(p6, Mode.METRIC))
print("  representations from {0}:", [representation(p6, v, [0], Mode.METRIC) for v in range(6)])

# With distances capped at 2, one landmark sees only three values, so more are needed.
k, witness = dimension(p6, Mode.ADJACENCY)
print("adim(P6) =", k, "witness", witness)
for v in range(6):
    print(f"  r2({v}) = {representation(p6, v, witness, Mode.ADJACENCY)}")

# Adjacency dimension of paths and cycles grows like 2n/5.
print("\n n  adim(P_n)  adim(C_n)  (2n+2)//5")
for n in range(4, 14):
    a = dimension(gen.path(n), Mode.ADJACENCY)[0]
    c = dimension(gen.cycle(n), Mode.ADJACENCY)[0]
    print(f"{n:2d}  {a:9d}  {c:9d}  {(2 * n + 2) // 5:9d}")

# Removing a landmark from a basis always breaks resolution.
c9 = gen.cycle(9)
_, basis = dimension(c9, Mode.ADJACENCY)
print("\nC9 adjacency basis", basis, "resolves:", is_resolving(c9, basis, Mode.ADJACENCY))
print("without its last landmark:", is_resolving(c9, basis[:-1], Mode.ADJACENCY))
