"""
Coset colourings of Paley graphs
================================

"""

from orthocolour.graphs import complement
from orthocolour.paley import PaleySpec, paley_graph, paley_orthogonal_set, subgroup_Hi, transfer_to_paley

spec = PaleySpec(3, 2)  # q = 81
print(spec.q, paley_graph(spec).edge_count)

# one additive subgroup of order 9
print(sorted(int(x) for x in subgroup_Hi(spec, 0)))

# five mutually orthogonal 9-colourings of the complement
s = paley_orthogonal_set(spec)
print(s.k, s.colour_count)

# QR(81) is self-complementary, so the set moves onto QR(81) itself
moved = transfer_to_paley(spec, s)
print(moved.k, complement(paley_graph(spec)).edge_count == paley_graph(spec).edge_count)
