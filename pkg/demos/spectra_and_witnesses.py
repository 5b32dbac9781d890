"""Spectral and structural properties of the three extremal graphs.

All three are cospectral with characteristic polynomial
x^10 - 5x^8 + 5x^6 - 2x^5 (the 5-cycle's polynomial padded with zeros),
each is isomorphic to its converse, and exactly one of them is both the
line digraph of the digon 5-cycle and a dihedral Cayley graph.
"""

from mooremix import char_poly, cospectral, is_isomorphic
from mooremix.constructions import (
    cayley_dihedral,
    cycle,
    golden_graphs,
    line_digraph_of_cycle_digons,
)

golden = golden_graphs()

print("char poly of C5:        ", char_poly(cycle(5, directed=False)))
for i, g in enumerate(golden):
    print(f"char poly of class {i}:   ", char_poly(g))
print("pairwise cospectral:", all(cospectral(a, b) for a in golden for b in golden))

for i, g in enumerate(golden):
    print(f"class {i} self-converse:", is_isomorphic(g, g.converse()),
          " |Aut| =", g.automorphism_count())

ld = line_digraph_of_cycle_digons(5)
cay = cayley_dihedral(5)
print("line digraph ~ Cayley graph:", is_isomorphic(ld, cay))
for i, g in enumerate(golden):
    print(f"class {i} matches the witnesses:", is_isomorphic(g, cay))
