"""
Orthogonal colourings of cycles
===============================

"""

from orthocolour import orthogonal_lower_bound, verify_orthogonal_set, OrthogonalSet
from orthocolour.cycles import k_orthogonal_cycle, orthogonal_colouring_cycle
from orthocolour.graphs import cycle

# C_9 with three colours: every one of the nine colour pairs appears once
c1, c2 = orthogonal_colouring_cycle(9)
print(list(zip(c1, c2)))

# the colour count meets ceil(sqrt(n)) for every n > 4
for n in (5, 17, 21, 100, 401):
    pair = orthogonal_colouring_cycle(n)
    ok = verify_orthogonal_set(cycle(n), OrthogonalSet(pair))
    print(n, pair[0].colour_count, orthogonal_lower_bound(n), ok)

# C_3 and C_4 are the exceptions: they need three colours
print([pair[0].colour_count for pair in map(orthogonal_colouring_cycle, (3, 4))])

# when ceil(sqrt(n)) = p is prime, many colourings are mutually orthogonal
s = k_orthogonal_cycle(49)
print(s.k, "mutually orthogonal", s.colour_count, "-colourings of C_49")
