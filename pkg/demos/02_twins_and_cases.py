"""Twin classes and the all-ones / all-twos classification.

The metric dimension of G[H] depends on H only through its adjacency
dimension and on whether H's adjacency bases are forced to leave a vertex
adjacent to every landmark (all-ones) or to none of them (all-twos).
"""

from lexdim import all_adjacency_bases, complement, generators as gen, twin_partition

g = gen.complete_multipartite([3, 2, 1, 1])
s = twin_partition(g)
print("K(3,2,1,1) twin classes:")
for cls, kind in zip(s.classes, s.types):
    print(f"  {kind.value}  {cls}")
print(f"  a={s.a} b={s.b} iota={s.iota} iota_K={s.iota_K} iota_N={s.iota_N}")

print("\nH        adim  bases  case             case of complement")
for name, h in [("P2", gen.path(2)), ("P4", gen.path(4)), ("P5", gen.path(5)), ("C3", gen.cycle(3)),
                ("C6", gen.cycle(6)), ("K3", gen.complete(3)), ("E3", gen.empty(3)),
                ("P7", gen.path(7)), ("petersen", gen.petersen())]:
    rep = all_adjacency_bases(h)
    crep = all_adjacency_bases(complement(h))
    print(f"{name:<8} {rep.adim:4d}  {len(rep.bases):5d}  {rep.case.value:<16} {crep.case.value}")
