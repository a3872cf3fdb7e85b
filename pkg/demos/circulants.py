"""
Circulants on Z_{p^2}
=====================

"""

import random

from orthocolour.circulants import colour_circulant_p2, conflict_sets
from orthocolour.errors import NoConstructionError
from orthocolour.graphs import circulant

# the differences that the fhat map turns into colour clashes
A, B = conflict_sets(5, 1)
print(sorted(A), sorted(B))

# a random 4-regular circulant on 49 vertices gets a 7-colour pair
rng = random.Random(7)
reps = rng.sample([s for s in range(1, 25) if s % 7], 2)
S = set(reps) | {49 - s for s in reps}
c1, c2 = colour_circulant_p2(7, S)
print(sorted(S), c1.colour_count, len(set(zip(c1, c2))) == 49)

# S = {5, 20} meets neither hypothesis
try:
    colour_circulant_p2(5, {5, 20})
except NoConstructionError as exc:
    print(exc)

print(circulant(49, S).edge_count)
