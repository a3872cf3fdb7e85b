"""
Exact search on small graphs
============================

"""

from orthocolour.graphs import circulant, cycle
from orthocolour.oracle import SearchConfig, exact_orthochromatic, feasible

# the exact solver agrees with the constructions on short cycles
print([exact_orthochromatic(cycle(n)) for n in range(3, 13)])

# C_4 cannot manage with two colours
print(feasible(cycle(4), 2, 2).status)

# three mutually orthogonal colourings of C_9 need four colours
print(exact_orthochromatic(cycle(9), k=3))

# S = {5, 20} falls outside both circulant theorems, yet 5 colours suffice
g = circulant(25, {5, 20})
res = feasible(g, 2, 5, SearchConfig(node_limit=10 ** 6))
print(res.status, res.nodes)
